#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"
#include "groth/symmetric.hpp"

#include <map>
#include <string>
#include <vector>

namespace groth {

using Exponent = std::vector<int>;

/// Power series in x_1..x_n over Z[alpha, beta], truncated at total degree D.
/// Also used for plain polynomials by choosing D at least the degree.
class TruncatedSeries {
 public:
  TruncatedSeries(int nvars, int cutoff);
  static TruncatedSeries constant(int nvars, int cutoff, const BivarPoly& c);
  /// x_i (1-based).
  static TruncatedSeries variable(int nvars, int cutoff, int i);
  static TruncatedSeries monomial(int nvars, int cutoff, const Exponent& e, const BivarPoly& c);

  int nvars() const { return nvars_; }
  int cutoff() const { return cutoff_; }
  const std::map<Exponent, BivarPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BivarPoly coeff(const Exponent& e) const;

  void add(const Exponent& e, const BivarPoly& c);
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const BivarPoly& c) const;
  TruncatedSeries map_coeffs(const std::function<BivarPoly(const BivarPoly&)>& f) const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Same terms, lower cutoff.
  TruncatedSeries truncated(int d) const;
  /// Set x_i = 0 for i > n and drop those variables.
  TruncatedSeries restrict_vars(int n) const;
  /// Embed in more variables (new ones absent).
  TruncatedSeries extend_vars(int n) const;
  /// Swap x_i and x_{i+1} (1-based i).
  TruncatedSeries swap_vars(int i) const;
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  int nvars_;
  int cutoff_;
  std::map<Exponent, BivarPoly> terms_;
};

/// s_lambda(x_1..x_n) by SSYT enumeration, truncated at d (memoized).
TruncatedSeries schur_polynomial(const Partition& lambda, int n, int d);
/// h_k and e_k in n variables.
TruncatedSeries h_series(int k, int n, int d);
TruncatedSeries e_series(int k, int n, int d);
/// Convert a Schur expansion to a series in n variables.
TruncatedSeries schur_to_series(const SchurExpansion& f, int n, int d);

/// Schur extraction by peeling the lexicographically leading monomial.
/// The result records cutoff D and max_rows = nvars.
SchurExpansion series_to_schur(const TruncatedSeries& f);

/// x_i -> x_i / (1 - c x_i) for every variable, truncated at the cutoff.
TruncatedSeries substitute_rational(const TruncatedSeries& f, const BivarPoly& c);

/// Exact quotient of f by (x_i - x_j) (1-based); the cutoff drops by one.
/// Throws if the division is not exact.
TruncatedSeries divide_by_difference(const TruncatedSeries& f, int i, int j);

}  // namespace groth
