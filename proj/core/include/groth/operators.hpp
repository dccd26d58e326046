#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"
#include "groth/series.hpp"
#include "groth/symmetric.hpp"

#include <map>
#include <string>
#include <vector>

namespace groth {

/// Element of the free Z[alpha,beta]-module spanned by partitions.
class PartitionVector {
 public:
  using Map = std::map<Partition, BivarPoly>;
  PartitionVector() = default;
  static PartitionVector basis(const Partition& p, const BivarPoly& c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BivarPoly get(const Partition& p) const;
  void add(const Partition& p, const BivarPoly& c);
  PartitionVector& operator+=(const PartitionVector& o);
  PartitionVector& operator-=(const PartitionVector& o);
  friend PartitionVector operator+(PartitionVector a, const PartitionVector& b) { return a += b; }
  friend PartitionVector operator-(PartitionVector a, const PartitionVector& b) { return a -= b; }
  PartitionVector scaled(const BivarPoly& c) const;
  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
  std::string to_string() const;

 private:
  Map terms_;
};

/// Add (remove) a box in column i when the result is a partition; zero otherwise.
PartitionVector apply_u(int i, const PartitionVector& v);
PartitionVector apply_d(int i, const PartitionVector& v);
/// u_i (1 + (alpha+beta) d_i) - alpha.
PartitionVector apply_deformed(int i, const PartitionVector& v, const Params& p = {});
/// u_i (1 + (alpha+beta) d_i), the undeformed-shift part used by C(x), D(x).
PartitionVector apply_u_hat(int i, const PartitionVector& v, const Params& p = {});

struct RelationReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Check the commutation, local Knuth, duality and diagonal relations of the
/// Schur operators and the two relations of the deformed operators on every
/// partition with |lambda| <= max_size, for column indices up to max_col.
RelationReport verify_relations(int max_size, int max_col, const Params& p = {});

/// C(x_n) ... C(x_1) applied to mu, paired with lambda, truncated at d.
TruncatedSeries skew_G_series(const Partition& lambda, const Partition& mu, int n, int d, const Params& p = {});
/// D(x_n) ... D(x_1) applied to mu, paired with lambda; equals G^(beta,alpha)_{lambda'/mu'}.
TruncatedSeries skew_G_dual_series(const Partition& lambda, const Partition& mu, int n, int d,
                                   const Params& p = {});

/// Exact Schur expansion of <C(x_n)...C(x_1) mu, lambda> up to degree d with
/// no bound on the number of rows (dominant monomials in as many variables as
/// needed, then unitriangular peeling with Kostka numbers).
SchurExpansion schur_expand_G(const Partition& lambda, int d, const Params& p = {},
                              const Partition& mu = Partition{});
/// Same for the D series (G^(beta,alpha)_{lambda'/mu'}).
SchurExpansion schur_expand_G_dual(const Partition& lambda, int d, const Params& p = {},
                                   const Partition& mu = Partition{});

/// Check [C(x), C(y)] = 0 on every basis partition with |mu| <= max_size up to degree d.
bool verify_C_commutation(int max_size, int d, const Params& p = {});

/// <C(x) mu, mu> in one variable up to degree d.
TruncatedSeries boundary_value(const Partition& mu, int d, const Params& p = {});

/// x^{x_power} (1 + beta x)^{num_power} / (1 - alpha x)^{den_power}; all zero
/// and `zero` set when the coefficient vanishes.
struct BranchingCoeff {
  bool zero = true;
  int x_power = 0;
  int num_power = 0;
  int den_power = 0;
  TruncatedSeries series(int d, const Params& p = {}) const;
};
/// Coefficient of G_mu(x_1..x_n) in G_lambda(x_1..x_n, x).
BranchingCoeff branching_coeff_G(const Partition& lambda, const Partition& mu);

}  // namespace groth
