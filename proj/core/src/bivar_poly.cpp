#include "groth/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace groth {

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long t = 0; t < k; ++t) {
    num *= (n - t);
    den *= (t + 1);
  }
  return num / den;
}

BigInt binomial_std(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binomial(n, k);
}

namespace {

bool key_less(const BivarPoly::Term& a, const BivarPoly::Term& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

bool same_key(const BivarPoly::Term& a, const BivarPoly::Term& b) {
  return a.i == b.i && a.j == b.j;
}

}  // namespace

BivarPoly::BivarPoly(long long c) {
  if (c != 0) terms_.push_back({0, 0, BigInt(c)});
}

BivarPoly::BivarPoly(const BigInt& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

BivarPoly BivarPoly::monomial(const BigInt& c, std::uint32_t i, std::uint32_t j) {
  BivarPoly p;
  if (c != 0) p.terms_.push_back({i, j, c});
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].i == 0 && terms_[0].j == 0);
}

bool BivarPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].i == 0 && terms_[0].j == 0 && terms_[0].c == 1;
}

BigInt BivarPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  Term probe{i, j, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, key_less);
  if (it != terms_.end() && same_key(*it, probe)) return it->c;
  return 0;
}

int BivarPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.i + t.j));
  return d;
}

int BivarPoly::degree_alpha() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.i));
  return d;
}

int BivarPoly::degree_beta() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.j));
  return d;
}

void BivarPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), key_less);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && same_key(out.back(), t)) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  terms_ = std::move(out);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && key_less(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || key_less(*b, *a)) {
      out.push_back(*b++);
    } else {
      BigInt c = a->c + b->c;
      if (c != 0) out.push_back({a->i, a->j, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_constant()) return b.scaled(a.terms_[0].c);
  if (b.is_constant()) return a.scaled(b.terms_[0].c);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back({s.i + t.i, s.j + t.j, s.c * t.c});
  r.normalize();
  return r;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& s = a.terms_[k];
    const auto& t = b.terms_[k];
    if (s.i != t.i || s.j != t.j || s.c != t.c) return false;
  }
  return true;
}

bool operator<(const BivarPoly& a, const BivarPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = a.terms_[k];
    const auto& t = b.terms_[k];
    if (s.i != t.i) return s.i < t.i;
    if (s.j != t.j) return s.j < t.j;
    if (s.c != t.c) return s.c < t.c;
  }
  return a.terms_.size() < b.terms_.size();
}

BivarPoly BivarPoly::pow(unsigned n) const {
  BivarPoly result(1);
  BivarPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

BivarPoly pow(const BivarPoly& p, long n) {
  if (n < 0) throw std::domain_error("negative power of a polynomial");
  return p.pow(static_cast<unsigned>(n));
}

BivarPoly BivarPoly::scaled(const BigInt& c) const {
  BivarPoly r;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.j, t.i, t.c});
  r.normalize();
  return r;
}

BivarPoly BivarPoly::substitute(const BivarPoly& a, const BivarPoly& b) const {
  BivarPoly r;
  std::vector<BivarPoly> apow{BivarPoly(1)};
  std::vector<BivarPoly> bpow{BivarPoly(1)};
  for (const auto& t : terms_) {
    while (apow.size() <= t.i) apow.push_back(apow.back() * a);
    while (bpow.size() <= t.j) bpow.push_back(bpow.back() * b);
    r += (apow[t.i] * bpow[t.j]).scaled(t.c);
  }
  return r;
}

Rational BivarPoly::evaluate(const Rational& a, const Rational& b) const {
  Rational r = 0;
  for (const auto& t : terms_) {
    Rational m = Rational(t.c);
    for (std::uint32_t k = 0; k < t.i; ++k) m *= a;
    for (std::uint32_t k = 0; k < t.j; ++k) m *= b;
    r += m;
  }
  return r;
}

bool BivarPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.c > 0; });
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
    if (x->i + x->j != y->i + y->j) return x->i + x->j > y->i + y->j;
    return x->i > y->i;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    BigInt c = t->c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (c != 1 || (t->i == 0 && t->j == 0)) {
      os << c;
      need_star = true;
    }
    if (t->i > 0) {
      os << (need_star ? "*" : "") << "a";
      if (t->i > 1) os << "^" << t->i;
      need_star = true;
    }
    if (t->j > 0) {
      os << (need_star ? "*" : "") << "b";
      if (t->j > 1) os << "^" << t->j;
    }
  }
  return os.str();
}

}  // namespace groth
