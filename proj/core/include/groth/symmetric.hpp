#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/partition.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace groth {

struct WeightLexLess {
  bool operator()(const Partition& a, const Partition& b) const { return weight_lex_less(a, b); }
};

/// Element of the completed ring of symmetric functions in the Schur basis.
///
/// `cutoff` marks a truncated infinite series (keys with |lambda| > cutoff are
/// absent and unknown). `max_rows` / `max_cols` record that the coefficients
/// are only known for partitions fitting the bound, which happens when the
/// expansion was extracted from finitely many variables (or its omega image).
class SchurExpansion {
 public:
  using Map = std::map<Partition, BivarPoly, WeightLexLess>;

  SchurExpansion() = default;
  explicit SchurExpansion(std::optional<int> cutoff) : cutoff_(cutoff) {}
  static SchurExpansion one();
  static SchurExpansion schur(const Partition& lambda, const BivarPoly& c = 1);

  const Map& coeffs() const { return coeffs_; }
  std::optional<int> cutoff() const { return cutoff_; }
  std::optional<int> max_rows() const { return max_rows_; }
  std::optional<int> max_cols() const { return max_cols_; }
  bool exact() const { return !cutoff_ && !max_rows_ && !max_cols_; }

  void set_cutoff(std::optional<int> d);
  void set_max_rows(std::optional<int> r);
  void set_max_cols(std::optional<int> c);

  /// The coefficient of s_lambda is known exactly.
  bool faithful_for(const Partition& lambda) const;

  BivarPoly get(const Partition& lambda) const;
  void add(const Partition& lambda, const BivarPoly& c);
  bool is_zero() const { return coeffs_.empty(); }
  /// Largest |lambda| among stored keys, -1 if empty.
  int max_degree() const;
  int min_degree() const;

  SchurExpansion& operator+=(const SchurExpansion& o);
  SchurExpansion& operator-=(const SchurExpansion& o);
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
  SchurExpansion scaled(const BivarPoly& c) const;
  SchurExpansion map_coeffs(const std::function<BivarPoly(const BivarPoly&)>& f) const;
  /// Drop keys with |lambda| > d and lower the cutoff to d.
  SchurExpansion truncated(int d) const;
  /// Drop keys outside the faithful region.
  SchurExpansion restricted_to_faithful() const;

  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b);

  std::string to_string() const;

 private:
  Map coeffs_;
  std::optional<int> cutoff_;
  std::optional<int> max_rows_;
  std::optional<int> max_cols_;
};

/// f - g restricted to the region where both are faithful.
SchurExpansion difference_on_common_region(const SchurExpansion& f, const SchurExpansion& g);
bool agree_on_common_region(const SchurExpansion& f, const SchurExpansion& g);

/// Littlewood-Richardson coefficient c^nu_{lambda mu}, counted by LR tableaux.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
/// s_lambda * s_mu as a map nu -> c^nu_{lambda mu} (memoized, thread-safe).
const std::map<Partition, long>& lr_product(const Partition& lambda, const Partition& mu);

/// Kostka number K_{lambda, mu}: SSYT of shape lambda and content mu.
long kostka(const Partition& lambda, const std::vector<int>& content);

SchurExpansion schur_multiply(const SchurExpansion& f, const SchurExpansion& g,
                              std::optional<int> d = std::nullopt);
SchurExpansion omega(const SchurExpansion& f);
SchurExpansion bar(const SchurExpansion& f);
/// <f, g> with f finite; throws if f is truncated or if some key of f lies
/// outside the faithful region of g.
BivarPoly hall_inner(const SchurExpansion& f, const SchurExpansion& g);

/// Polynomial in the generators h_1, h_2, ... (or e_1, e_2, ...), each of
/// weight k, with an optional weighted-degree cutoff. Monomials are
/// partitions listing the generator indices.
class GenPoly {
 public:
  enum class Basis { H, E };

  explicit GenPoly(Basis basis, std::optional<int> cutoff = std::nullopt)
      : basis_(basis), cutoff_(cutoff) {}
  static GenPoly constant(Basis basis, const BivarPoly& c, std::optional<int> cutoff = std::nullopt);
  /// The generator h_k (or e_k); h_0 = 1, negative index gives 0.
  static GenPoly generator(Basis basis, int k, std::optional<int> cutoff = std::nullopt);

  Basis basis() const { return basis_; }
  std::optional<int> cutoff() const { return cutoff_; }
  const std::map<Partition, BivarPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& mono, const BivarPoly& c);
  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  GenPoly scaled(const BivarPoly& c) const;
  /// Drop every monomial that uses a generator of index > n.
  GenPoly kill_generators_above(int n) const;

  SchurExpansion to_schur() const;

 private:
  Basis basis_;
  std::optional<int> cutoff_;
  std::map<Partition, BivarPoly> terms_;
};

/// h_k(x / (1 - c x)) in the Schur basis, truncated at d.
SchurExpansion h_substituted(int k, const BivarPoly& c, int d);
/// e_k(x / (1 - c x)) in the Schur basis, truncated at d.
SchurExpansion e_substituted(int k, const BivarPoly& c, int d);
/// f(x / (1 - c x)) for f in the Schur basis, via Jacobi-Trudi, truncated at d.
SchurExpansion substitute_rational(const SchurExpansion& f, const BivarPoly& c, int d);

/// s_lambda evaluated at x_1 = ... = x_n = 1 (hook-content formula).
BigInt schur_at_ones(const Partition& lambda, int n);

}  // namespace groth
