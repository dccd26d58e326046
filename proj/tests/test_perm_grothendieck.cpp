#include <doctest.h>

#include "groth/determinant.hpp"
#include "groth/permutation.hpp"
#include "helpers.hpp"

#include <algorithm>

using namespace groth;
using namespace testutil;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<MultivarPoly> monomials(int n, int max_deg) {
  std::vector<MultivarPoly> out;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) return out.push_back(MultivarPoly::monomial(n, e));
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

MultivarPoly x(int n, int i) {
  Exponent e(n, 0);
  e[i - 1] = 1;
  return MultivarPoly::monomial(n, e);
}

}  // namespace

TEST_CASE("permutations") {
  Permutation w({3, 1, 2});
  CHECK(w.length() == 2);
  CHECK(w.inverse() == Permutation({2, 3, 1}));
  CHECK(w * w.inverse() == Permutation::identity(3));
  CHECK(Permutation::longest(4).length() == 6);
  CHECK_THROWS(Permutation({1, 1, 2}));
  for (const auto& u : all_perms(4)) {
    Permutation r = Permutation::identity(4);
    for (int i : u.reduced_word()) r = r * Permutation::simple(i, 4);
    CHECK(r == u);
    CHECK(static_cast<int>(u.reduced_word().size()) == u.length());
    CHECK(static_cast<int>(u.reduced_word_rightmost().size()) == u.length());
  }
  CHECK(Permutation({1, 3, 2, 4}).grassmannian_partition() == Partition{1});
  CHECK(Permutation({2, 4, 1, 3}).grassmannian_partition() == Partition{2, 1});
  CHECK_FALSE(Permutation({3, 2, 1}).is_grassmannian());
}

TEST_CASE("pi operators") {
  const MultivarPoly x1 = x(2, 1), x2 = x(2, 2);
  CHECK(divided_difference(1, x1) == MultivarPoly::constant(2, 1));
  CHECK(pi_operator(1, x1, true, {}, MultiplierOrder::After) == MultivarPoly::constant(2, 1) + x2.scaled(gam));
  CHECK(pi_operator(1, MultivarPoly::constant(2, 1), true, {}, MultiplierOrder::After).is_zero());
  CHECK(pi_operator(1, x1, false) == MultivarPoly::constant(2, 1));

  for (const auto& f : monomials(3, 4)) {
    for (auto order : {MultiplierOrder::Before, MultiplierOrder::After}) {
      auto P = [&](int i, const MultivarPoly& h) { return pi_operator(i, h, true, {}, order); };
      CHECK(P(1, P(2, P(1, f))) == P(2, P(1, P(2, f))));
    }
    for (int i = 1; i <= 2; ++i) {
      const MultivarPoly c = pi_operator(i, f, false);
      CHECK(pi_operator(i, c, false) == c);
      // the deformed operator is not a projector: it squares to -(alpha+beta) times itself
      const MultivarPoly d = pi_operator(i, f, true);
      CHECK(pi_operator(i, d, true) == d.scaled(gam * -1));
    }
  }
}

TEST_CASE("Grothendieck polynomials") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(grothendieck_poly(Permutation::longest(n), true) == MultivarPoly::staircase(n));
    CHECK(grothendieck_poly(Permutation::identity(n), false) == MultivarPoly::constant(n, 1));
    CHECK(grothendieck_poly(Permutation::identity(n), true) == MultivarPoly::constant(n, 1));
  }
  CHECK(grothendieck_poly(Permutation({2, 1}), true) == x(2, 1));
  const MultivarPoly x1 = x(3, 1), x2 = x(3, 2);
  CHECK(grothendieck_poly(Permutation({1, 3, 2}), false) == x1 + x2 - x1 * x2);
  CHECK(grothendieck_poly(Permutation({1, 3, 2}), true) == x1 + x2 + (x1 * x2).scaled(gam));

  for (const auto& w : all_perms(4)) {
    const Permutation v = w.inverse() * Permutation::longest(4);
    CHECK(grothendieck_poly(w, true, {}, v.reduced_word()) == grothendieck_poly(w, true, {}, v.reduced_word_rightmost()));
  }
}

TEST_CASE("stable limits") {
  StableLimit id = stable_G_w(Permutation::identity(3), 3, 4);
  CHECK(id.stabilized);
  CHECK(id.series == TruncatedSeries::constant(3, 4, 1));
  for (const auto& w : all_perms(4)) {
    if (!w.is_grassmannian() || w == Permutation::identity(4)) continue;
    const Partition lam = w.grassmannian_partition();
    StableLimit s = stable_G_w(w, 3, 4);
    CHECK(s.stabilized);
    CHECK(s.series == bialternant_G(lam, 3, 4));
    GwExpansion e = expand_G_w_in_G_basis(w, 5, 3);
    CHECK(e.stable);
    CHECK((e.coeffs - SchurExpansion::schur(lam)).is_zero());
  }
}

TEST_CASE("expansion coefficients of G_w") {
  const Permutation w0 = Permutation::longest(3);
  GwExpansion e = expand_G_w_in_G_basis(w0, 5, 4);
  CHECK(e.stable);
  CHECK((e.coeffs - S("s[2,1]")).is_zero());

  for (const auto& w : all_perms(3)) {
    GwExpansion ew = expand_G_w_in_G_basis(w, 5, 4);
    GwExpansion ei = expand_G_w_in_G_basis(w.inverse(), 5, 4);
    GwExpansion ec = expand_G_w_in_G_basis(w0 * w * w0, 5, 4);
    CHECK(ew.stable);
    for (const auto& [lam, c] : ew.coeffs.coeffs()) {
      CHECK(ei.coeffs.get(lam.conjugate()) == c);
      CHECK(ec.coeffs.get(lam.conjugate()) == c);
      // a^(alpha,beta)_{w,lambda} = (alpha+beta)^{|lambda| - l(w)} a_{w,lambda}
      const BivarPoly base = c.substitute(1, 0);
      CHECK(c == pow(gam, lam.size() - w.length()) * base);
    }
    CHECK(ew.coeffs.coeffs().size() == ei.coeffs.coeffs().size());
  }
}
