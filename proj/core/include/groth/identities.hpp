#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"
#include "groth/series.hpp"
#include "groth/symmetric.hpp"
#include "groth/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace groth {

// ---------------------------------------------------------------- basis expansions

/// Schur expansion of G^(alpha,beta)_lambda up to degree d (cached).
const SchurExpansion& G_schur(const Partition& lambda, int d, const Params& p = {});
/// Exact Schur expansion of g^(alpha,beta)_lambda: sum_nu f_{lambda/nu} s_nu (cached).
const SchurExpansion& g_schur(const Partition& lambda, const Params& p = {});

SchurExpansion schur_expand_g(const Partition& lambda, const Params& p = {});
/// s_mu = sum_nu f_{nu/mu} G^(-alpha,-beta)_nu; keys of the result index the
/// G^(-alpha,-beta) basis, truncated at |nu| <= d.
SchurExpansion schur_expand_s_in_G(const Partition& mu, int d, const Params& p = {});

/// Coefficients of f in the basis G^(alpha,beta)_nu, |nu| <= d, by peeling the
/// lowest degree first. Keys outside the faithful region of f are skipped.
SchurExpansion expand_in_G_basis(const SchurExpansion& f, int d, const Params& p = {});
/// Coefficients of an exact f in a basis b_nu = s_nu + lower degree terms,
/// peeling the highest degree first.
SchurExpansion expand_top_down(const SchurExpansion& f,
                               const std::function<SchurExpansion(const Partition&)>& basis);

// ---------------------------------------------------------------- Pieri rules

enum class PieriKind {
  GType1Row,  ///< G_(k) G_lambda
  GType1Col,  ///< G_(1^k) G_lambda
  GType2H,    ///< h_k(x/(1+alpha x)) G^(-alpha,-beta)_lambda
  GType2E,    ///< e_k(x/(1+alpha x)) G^(-alpha,-beta)_lambda
  GType3H,    ///< h_k G^(-alpha,-beta)_lambda, coefficient v^k
  GType3E,    ///< e_k G^(-alpha,-beta)_lambda, coefficient vbar^k
  gType1Row,  ///< g_(k) g_mu
  gType1Col,  ///< g_(1^k) g_mu
  gType2H,    ///< h_k g_mu
  gType2E,    ///< e_k g_mu
};

std::string to_string(PieriKind k);
std::optional<PieriKind> pieri_kind_from_string(const std::string& s);
bool is_G_kind(PieriKind k);

/// Coefficient of basis[outer] in generator_k * basis[inner].
BivarPoly pieri_coeff(PieriKind kind, int k, const Partition& outer, const Partition& inner, const Params& p = {});

/// The generator multiplying in a Pieri rule, in the Schur basis (cutoff d for G kinds).
SchurExpansion pieri_generator(PieriKind kind, int k, int d, const Params& p = {});

struct IdentityReport {
  std::string identity;
  std::string instance;
  std::optional<int> degree_checked;  ///< empty for exact identities
  bool pass = false;
  std::string lhs_minus_rhs;          ///< filled when the check fails
};

/// generator_k * basis[inner] against sum over outer of pieri_coeff * basis[outer].
IdentityReport verify_pieri(PieriKind kind, int k, const Partition& inner, int d, const Params& p = {});

/// Closed form of v^k against the alternating vertical-strip sum.
IdentityReport v_decomposition_check(int k, const Partition& mu, const Partition& lambda, const Params& p = {});

/// beta^{r-b} (alpha+beta)^i x^b (x+alpha)^{c-b} if mu in lambda, else 0.
ZPoly g_branch_single(const Partition& lambda, const Partition& mu, const Params& p = {});

// ---------------------------------------------------------------- generators

enum class GeneratorKind { GRow, GCol, gRow, gCol, H, E };
/// G_(k), G_(1^k) (cutoff d), g_(k), g_(1^k) (exact), h^(alpha,beta)_k, e^(alpha,beta)_k (cutoff d).
SchurExpansion generator(GeneratorKind kind, int k, int d, const Params& p = {});

/// 1 + (alpha+beta+t) sum_k G_(k) t^{k-1} against prod (1+beta x)/(1-(alpha+t)x),
/// with t realised as an extra series variable; total degree <= d in n x-variables.
IdentityReport h_series_check(int n, int d, const Params& p = {});
IdentityReport e_series_check(int n, int d, const Params& p = {});
/// e^(alpha,beta)_0 h^(-beta,-alpha)_0 = 1 in n variables.
IdentityReport e0h0_check(int n, int d, const Params& p = {});
/// h^(alpha,beta)_k = h^(alpha,beta)_0 h_k(x/(1-alpha x)) and the e analogue.
IdentityReport h_ratio_check(int k, int n, int d, const Params& p = {});
/// sum_i g_(i)(x) g^(beta,alpha)_(1^{m-i})(-x) = delta_{m,0}.
IdentityReport row_column_inverse_check(int m, const Params& p = {});

// ---------------------------------------------------------------- structure constants

/// G_lambda G_mu in the G basis up to |nu| <= d. `stable` reports that the
/// computation at d+1 added no new terms.
struct StructureConstants {
  SchurExpansion coeffs;
  bool stable = false;
};
StructureConstants structure_constants_G(const Partition& lambda, const Partition& mu, int d, const Params& p = {});
/// g_lambda g_mu in the g basis (exact).
SchurExpansion structure_constants_g(const Partition& lambda, const Partition& mu, const Params& p = {});

// ---------------------------------------------------------------- canonical basis

struct CanonicalTable {
  int k_max = 0;
  /// p[k][i], pp[k][i] for 1 <= i <= k.
  std::vector<std::vector<BivarPoly>> p;
  std::vector<std::vector<BivarPoly>> pp;
  std::vector<SchurExpansion> C;  ///< C[k] in the Schur basis, C[0] unused
  std::vector<std::string> ambiguities;
};
/// Runs the triangular recursion splitting each right-hand side into the
/// parts with larger alpha power and larger beta power.
CanonicalTable canonical_recursion(int k_max);
/// g^(0,beta)_(1^k) in the Schur basis.
SchurExpansion g_beta_column(int k);

/// g^(alpha,beta)_lambda in the basis g^(0,beta)_mu.
SchurExpansion g_in_gbeta_expansion(const Partition& lambda, const Params& p = {});

// ---------------------------------------------------------------- specializations

/// sum_lambda c_lambda s_lambda(1^n).
BivarPoly evaluate_at_ones(const SchurExpansion& f, int n);
/// sum_lambda c_lambda s_lambda(-1, ..., -1).
BivarPoly evaluate_at_minus_ones(const SchurExpansion& f, int n);
/// Closed form for the number of RPP of shape (5,3,2) with entries <= n.
BigInt g532_closed_form(int n);
/// prod over boxes of (n + m - 1 + j - i) / hook(i, j) for the m x k rectangle.
BigInt rectangle_rpp_count(int k, int m, int n);
/// det[C(-n + lambda_i - 1, lambda_i - i + j)].
BigInt row_col_strict_det(const Partition& lambda, int n);
/// det[C(n + lambda'_i - 1, lambda'_i - i + j)].
BigInt rpp_count_det(const Partition& lambda, int n);
/// g_21 g_1 - g_2 g_11.
SchurExpansion giambelli_counterexample(const Params& p = {});

}  // namespace groth
