#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"
#include "groth/series.hpp"
#include "groth/symmetric.hpp"

#include <functional>
#include <vector>

namespace groth {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Division-free determinant by Laplace expansion along rows, memoizing the
/// minors on column subsets (2^n states). `mul` is the ring product; R needs
/// binary +, - and is_zero().
template <class R, class Mul>
R determinant(const Matrix<R>& m, const R& one, Mul mul) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  R zero = one - one;
  std::vector<R> minors(std::size_t{1} << n, zero);
  std::vector<bool> known(std::size_t{1} << n, false);
  minors[0] = one;
  known[0] = true;
  // rows are consumed from the bottom: the subset of size k holds the minor
  // of the last k rows restricted to those columns
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t row = n - k;
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
      R acc = zero;
      bool any = false;
      int pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (std::size_t{1} << j))) continue;
        std::size_t sub = mask & ~(std::size_t{1} << j);
        if (known[sub] && !m[row][j].is_zero() && !minors[sub].is_zero()) {
          R t = mul(m[row][j], minors[sub]);
          acc = (pos % 2) ? acc - t : acc + t;
          any = true;
        }
        ++pos;
      }
      if (any) {
        minors[mask] = acc;
        known[mask] = true;
      }
    }
  }
  std::size_t full = minors.size() - 1;
  return known[full] ? minors[full] : zero;
}

BivarPoly determinant(const Matrix<BivarPoly>& m);
TruncatedSeries determinant(const Matrix<TruncatedSeries>& m, int nvars, int cutoff);
GenPoly determinant(const Matrix<GenPoly>& m, GenPoly::Basis basis, std::optional<int> cutoff);

/// G_lambda(x_1..x_n) from the bialternant formula, truncated at d.
TruncatedSeries bialternant_G(const Partition& lambda, int n, int d, const Params& p = {});
/// Exact quotient by prod_{i<j} (x_i - x_j).
TruncatedSeries exact_divide_by_vandermonde(const TruncatedSeries& num);

enum class JTForm {
  H,       ///< h-entries in x/(1 - alpha x), size max(n, l(lambda))
  E,       ///< e-entries in x/(1 + beta x); the size grows with the cutoff
  EAlpha,  ///< e-entries in x/(1 - alpha x) with conjugate rows, size l(lambda')
};

TruncatedSeries jacobi_trudi_G(const Partition& lambda, int n, int d, JTForm form,
                               const Params& p = {});
/// Same determinant with an explicit matrix size t (for the size study).
TruncatedSeries jacobi_trudi_G_sized(const Partition& lambda, int n, int d, JTForm form, int t,
                                     const Params& p = {});

/// g_lambda from the h-form (JTForm::H) or e-form (JTForm::E) determinant
/// with f-tilde entries. Both forms return g^(alpha,beta)_lambda.
SchurExpansion jacobi_trudi_g(const Partition& lambda, JTForm form = JTForm::H, const Params& p = {});

/// Path-sum entry with a generating series (1-(a+b)t)^{-i}(1-at)^{-(q+1)}.
BivarPoly ftilde_coeff(int i, int p, int q, const Params& par = {});
/// Entry of the positive determinant for f_{mu/nu}; d = diagonal of nu.
BivarPoly f_positive_coeff(int i, int p, int q, int d, const Params& par = {});

enum class FEntries { Positive, Tilde };
BivarPoly f_alpha_beta_det(const Partition& mu, const Partition& nu, FEntries entries = FEntries::Positive,
                           const Params& par = {});

BigInt elegant_count_det(const Partition& mu, const Partition& nu);
BigInt dual_hook_det(const Partition& lambda, const Partition& nu);

/// Family a^{(i)}_{p,q} of ring elements; `support` gives the k-window of the
/// composed middle index for the Cauchy-Binet sum.
template <class R>
using EntryFamily = std::function<R(int i, int p, int q)>;

/// det[ sum_k a^{(i)}_{lambda_i - i, k} b^{(j)}_{k, nu_j - j} ]_{t x t}, k in [kmin, kmax].
BivarPoly cauchy_binet_compose(const EntryFamily<BivarPoly>& a, const EntryFamily<BivarPoly>& b,
                               const Partition& lambda, const Partition& nu, int t, int kmin, int kmax);
/// Explicit middle sum over strictly decreasing index sets
/// {m_1 - 1 > ... > m_t - t} inside [kmin, kmax]:
/// sum det[a^{(i)}_{lambda_i - i, m_j - j}] det[b^{(j)}_{m_i - i, nu_j - j}].
BivarPoly cauchy_binet_middle_sum(const EntryFamily<BivarPoly>& a, const EntryFamily<BivarPoly>& b,
                                  const Partition& lambda, const Partition& nu, int t, int kmin, int kmax);

/// det[ sum_k e_k(t_1..t_{lambda'_i - 1}) e_{lambda'_i - i + j - k} ] in the Schur basis.
SchurExpansion refined_g_jt_schur(const Partition& lambda, const std::vector<BivarPoly>& t);
/// The same element as a polynomial in n variables.
TruncatedSeries refined_g_jt(const Partition& lambda, const std::vector<BivarPoly>& t, int n, int d);

/// Elementary symmetric polynomial e_k of a list of ring elements.
BivarPoly elementary(const std::vector<BivarPoly>& vals, int k);

}  // namespace groth
