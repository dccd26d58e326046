#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"
#include "groth/series.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace groth {

/// Content of one box of a hook-valued tableau: `row` holds the corner then
/// the arm (weakly increasing), `leg` the entries below the corner (strictly
/// increasing, all larger than the corner).
struct HookEntry {
  std::vector<int> row;
  std::vector<int> leg;
  int arm() const { return static_cast<int>(row.size()) - 1; }
  int min() const { return row.front(); }
  int max() const;
  int count() const { return static_cast<int>(row.size() + leg.size()); }
};

enum class GFamily { SetValued, MultisetValued, HookValued };

/// Boxes in row-major order.
using HookTableau = std::vector<HookEntry>;
using HookCallback = std::function<void(const HookTableau&, const BivarPoly& weight)>;

/// Weight alpha^{a(T)} beta^{b(T)} of a hook-valued tableau.
BivarPoly hook_weight(const HookTableau& t, const Params& p = {});
/// Monomial x^T in n variables.
Exponent hook_monomial(const HookTableau& t, int n);

/// Generating series of one tableau family with entries <= n and at most d
/// entries in total. Set-valued: weight beta^{|T|-|lambda|} (gives G at
/// alpha = 0). Multiset-valued: each box contributes (alpha+beta)^{distinct-1}
/// times alpha^{copies-1} per entry. Hook-valued: alpha^{arms} beta^{legs}.
TruncatedSeries enum_G_tableaux(const Partition& lambda, GFamily family, int n, int d,
                                const Params& p = {}, const HookCallback& cb = nullptr);

/// A rim border tableau: an RPP filling plus, per value, the horizontal
/// adjacencies of its border that are cut.
struct RimBorderTableau {
  SkewShape shape;
  /// filling[r][c] for boxes of the skew shape (0 outside), 0-based.
  std::vector<std::vector<int>> filling;
  /// Rim hooks as lists of 1-based (row, col) boxes.
  std::vector<std::vector<std::pair<int, int>>> hooks;
  std::vector<int> hook_value;
  int inner = 0;
  int wt = 0;
  int ht = 0;
};
using RbtCallback = std::function<void(const RimBorderTableau&, const BivarPoly& weight)>;

/// Boxes of value v lying on the border R_v: no box of value v up-left on
/// the same diagonal.
bool on_border(const std::vector<std::vector<int>>& filling, const SkewShape& s, int r, int c);

/// sum over RBT of shape s with entries <= n of alpha^wt beta^ht (alpha+beta)^in x^T.
TruncatedSeries enum_g_rbt(const SkewShape& s, int n, const Params& p = {}, const RbtCallback& cb = nullptr);
TruncatedSeries enum_g_rbt(const Partition& lambda, int n, const Params& p = {});

/// Univariate polynomial in z as coefficients (index = power of z).
using ZPoly = std::vector<BivarPoly>;
/// beta^{r-b} (alpha+beta)^i z^b (z+alpha)^{c-b} for the stats of s.
ZPoly rbt_single_variable(const SkewShape& s, const Params& p = {});
/// RBT enumeration of s in one variable (all boxes equal), for comparison.
ZPoly rbt_single_variable_enum(const SkewShape& s, const Params& p = {});

/// Re-encode every RBT of shape lambda (entries <= n) as a lattice forest and
/// back, checking that the map is a weight-preserving bijection onto the
/// forests it produces. Returns the number of RBT checked; throws on failure.
long lattice_forest_check(const Partition& lambda, int n);

/// Elegant tableaux of mu/nu: SSYT with row-i entries in [1, i-1].
long enum_elegant(const Partition& mu, const Partition& nu);
/// Sum over elegant tableaux of prod t_i^{#i}.
BivarPoly enum_elegant_weighted(const Partition& mu, const Partition& nu, const std::vector<BivarPoly>& t);

/// Dual hook tableaux of lambda/nu; zero if the diagonals differ.
long enum_dual_hook(const Partition& lambda, const Partition& nu);

/// Signed rim tableaux: RPP without inner parts, tiled into same-letter rim
/// hooks with no two hooks of one letter vertically adjacent; each hook rho
/// weighs (-1)^{ht-1} alpha^{|rho|-1}.
TruncatedSeries enum_rim_tableaux(const Partition& lambda, int n, const BivarPoly& alpha = BivarPoly::alpha());

/// Fillings from {1..n} strictly increasing along rows and columns.
long enum_row_col_strict(const Partition& lambda, int n);

// ---------------------------------------------------------------- lattice paths

enum class Grid { Type1, Type2, Type3 };

struct GridPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Weight of a single step on the given grid (zero when the step is illegal).
BivarPoly step_weight(Grid g, GridPoint from, GridPoint to, const Params& p = {});

struct Endpoints {
  std::vector<GridPoint> sources;
  std::vector<GridPoint> sinks;
};
/// Sources A_i and sinks B_i for mu/nu on the grid, i = 1..l(mu).
/// Type 2 is the Type 1 system sheared by y -> y - x on the right half-plane.
Endpoints path_endpoints(const Partition& mu, const Partition& nu, Grid g);

/// Total weight of single paths between two points (dynamic programming).
BivarPoly single_path_weight(Grid g, GridPoint a, GridPoint b, const Params& p = {});

using PathSystem = std::vector<std::vector<GridPoint>>;
using PathCallback = std::function<void(const PathSystem&, const BivarPoly& weight)>;

/// Sum over vertex-disjoint systems A_i -> B_i of the products of step weights.
BivarPoly enum_path_systems(const Endpoints& e, Grid g, const Params& p = {}, const PathCallback& cb = nullptr);
BivarPoly enum_path_systems(const Partition& mu, const Partition& nu, Grid g, const Params& p = {});

/// Weight of an explicit path given as a start point and a step string over
/// {U, R, D} (up, right, diagonal).
BivarPoly path_weight(Grid g, GridPoint start, const std::string& steps, const Params& p = {});

}  // namespace groth
