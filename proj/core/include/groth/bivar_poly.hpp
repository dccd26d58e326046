#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace groth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) for any integer n and k >= 0 (falling factorial
/// over k!); zero for k < 0.
BigInt binomial(long n, long k);

/// Binomial coefficient that is zero unless 0 <= k <= n.
BigInt binomial_std(long n, long k);

/// Exact polynomial in two commuting indeterminates a (alpha) and b (beta)
/// with big-integer coefficients. Terms are kept sorted by (i, j) and zero
/// coefficients are never stored.
class BivarPoly {
 public:
  struct Term {
    std::uint32_t i = 0;  // exponent of alpha
    std::uint32_t j = 0;  // exponent of beta
    BigInt c;
  };

  BivarPoly() = default;
  BivarPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit BivarPoly(const BigInt& c);

  static BivarPoly monomial(const BigInt& c, std::uint32_t i, std::uint32_t j);
  static BivarPoly alpha() { return monomial(1, 1, 0); }
  static BivarPoly beta() { return monomial(1, 0, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  BigInt coeff(std::uint32_t i, std::uint32_t j) const;
  BigInt constant_term() const { return coeff(0, 0); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_alpha() const;
  int degree_beta() const;
  std::size_t size() const { return terms_.size(); }

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly operator-() const;
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b);
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }
  /// Total order used only for containers (degree-lex on terms).
  friend bool operator<(const BivarPoly& a, const BivarPoly& b);

  BivarPoly pow(unsigned n) const;
  BivarPoly scaled(const BigInt& c) const;
  /// alpha <-> beta.
  BivarPoly swapped() const;
  /// Ring map alpha -> a, beta -> b.
  BivarPoly substitute(const BivarPoly& a, const BivarPoly& b) const;
  Rational evaluate(const Rational& a, const Rational& b) const;
  /// Every coefficient is >= 0.
  bool nonnegative() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void normalize();
};

/// The pair of parameters (alpha, beta) that a formula is evaluated at.
/// Parameters are themselves ring elements, so swapping, negation and
/// integer specialization are all expressed by choosing different values.
struct Params {
  BivarPoly alpha = BivarPoly::alpha();
  BivarPoly beta = BivarPoly::beta();

  static Params generic() { return {}; }
  BivarPoly gamma() const { return alpha + beta; }
  Params swapped() const { return {beta, alpha}; }
  Params negated() const { return {-alpha, -beta}; }
};

/// Power with the convention p^0 = 1 (also for p = 0).
BivarPoly pow(const BivarPoly& p, long n);

}  // namespace groth
