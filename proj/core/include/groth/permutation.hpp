#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"
#include "groth/series.hpp"
#include "groth/symmetric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace groth {

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// w0 = n, n-1, ..., 1.
  static Permutation longest(int n);
  /// Simple transposition s_i in S_n.
  static Permutation simple(int i, int n);

  int size() const { return static_cast<int>(w_.size()); }
  /// w(i), 1-based.
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  /// Inversion count.
  int length() const;
  /// Positions i with w(i) > w(i+1).
  std::vector<int> descents() const;
  bool is_grassmannian() const;
  /// lambda_i = w(d+1-i) - (d+1-i) for the unique descent d; empty for the identity.
  Partition grassmannian_partition() const;
  /// 1^m x w: fixes 1..m and acts as w shifted by m on the rest.
  Permutation shifted(int m) const;
  /// Embed in S_n (n >= size) by fixing the extra points.
  Permutation extended(int n) const;
  /// (u * v)(i) = u(v(i)); sizes are equalized by fixing extra points.
  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Reduced word i_1 ... i_l with w = s_{i_1} ... s_{i_l}, found by repeatedly
  /// splitting off the leftmost right descent (w = (w s_i) s_i).
  std::vector<int> reduced_word() const;
  /// Same construction with the rightmost right descent.
  std::vector<int> reduced_word_rightmost() const;

  std::string to_string() const;

 private:
  std::vector<int> w_;
};

/// Exact polynomial in x_1..x_n (n <= 12, exponents <= 31) over Z[alpha, beta].
class MultivarPoly {
 public:
  static constexpr int kMaxVars = 12;
  static constexpr int kBits = 5;

  explicit MultivarPoly(int nvars = 0);
  static MultivarPoly constant(int nvars, const BivarPoly& c);
  static MultivarPoly monomial(int nvars, const Exponent& e, const BivarPoly& c = 1);
  /// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
  static MultivarPoly staircase(int n);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest total degree, -1 for zero.
  int degree() const;
  BivarPoly coeff(const Exponent& e) const;
  /// Terms as (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<Exponent, BivarPoly>> terms() const;

  void add(const Exponent& e, const BivarPoly& c);
  MultivarPoly& operator+=(const MultivarPoly& o);
  MultivarPoly& operator-=(const MultivarPoly& o);
  friend MultivarPoly operator+(MultivarPoly a, const MultivarPoly& b) { return a += b; }
  friend MultivarPoly operator-(MultivarPoly a, const MultivarPoly& b) { return a -= b; }
  friend MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b);
  MultivarPoly scaled(const BivarPoly& c) const;
  friend bool operator==(const MultivarPoly& a, const MultivarPoly& b);

  /// Embed in more variables.
  MultivarPoly extended(int n) const;
  /// Drop terms of total degree > d.
  MultivarPoly truncated(int d) const;
  /// Series in the first n variables (others set to 0), truncated at d.
  TruncatedSeries to_series(int n, int d) const;

  std::string to_string() const;

  // Packed exponent helpers (public for the operators below).
  using Key = std::uint64_t;
  static Key pack(const Exponent& e);
  static int exponent(Key k, int i) { return static_cast<int>((k >> (kBits * i)) & ((1u << kBits) - 1)); }
  static int key_degree(Key k, int nvars);
  const std::unordered_map<Key, BivarPoly>& packed_terms() const { return terms_; }
  void add_packed(Key k, const BivarPoly& c);

 private:
  int nvars_ = 0;
  std::unordered_map<Key, BivarPoly> terms_;
};

/// (f - s_i f) / (x_i - x_{i+1}), exact.
MultivarPoly divided_difference(int i, const MultivarPoly& f);

/// Where the linear multiplier sits relative to the divided difference.
enum class MultiplierOrder {
  Before,  ///< pi_i f = d_i((1 + c x_{i+1}) f): the Grothendieck operator
  After,   ///< pi_i f = d_i(f) (1 + c x_{i+1})
};

/// Grothendieck operator with multiplier (1 - x_{i+1}) (classical) or
/// (1 + (alpha+beta) x_{i+1}) (deformed).
MultivarPoly pi_operator(int i, const MultivarPoly& f, bool deformed, const Params& p = {},
                         MultiplierOrder order = MultiplierOrder::Before);

/// pi along `word`, applying the rightmost letter first. Terms whose degree
/// cannot come back to <= max_degree in the remaining steps are dropped.
MultivarPoly apply_pi_word(const std::vector<int>& word, MultivarPoly f, bool deformed, const Params& p = {},
                           std::optional<int> max_degree = std::nullopt);

/// pi_{w^{-1} w0} applied to the staircase, using `word` for w^{-1} w0 when given.
MultivarPoly grothendieck_poly(const Permutation& w, bool deformed, const Params& p = {},
                               const std::optional<std::vector<int>>& word = std::nullopt,
                               std::optional<int> max_degree = std::nullopt);

struct StableLimit {
  TruncatedSeries series;      ///< G^(alpha,beta)_w in nvars variables, truncated at D
  SchurExpansion schur;        ///< its Schur expansion (max_rows = nvars)
  int m_used = 0;              ///< the padding m at which two truncations agreed
  bool stabilized = false;
};

/// Stable limit of the deformed 1^m x w followed by x -> x/(1 - alpha x).
StableLimit stable_G_w(const Permutation& w, int nvars, int d, const Params& p = {});

struct GwExpansion {
  SchurExpansion coeffs;  ///< keys index the G^(alpha,beta)_lambda basis
  bool stable = false;    ///< unchanged between D and D+1
};
/// Coefficients of G^(alpha,beta)_w in the G_lambda basis for |lambda| <= d.
GwExpansion expand_G_w_in_G_basis(const Permutation& w, int d, int nvars, const Params& p = {});

}  // namespace groth
