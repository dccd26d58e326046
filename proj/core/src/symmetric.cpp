#include "groth/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace groth {

// ---------------------------------------------------------------- SchurExpansion

SchurExpansion SchurExpansion::one() { return schur(Partition{}); }

SchurExpansion SchurExpansion::schur(const Partition& lambda, const BivarPoly& c) {
  SchurExpansion f;
  f.add(lambda, c);
  return f;
}

void SchurExpansion::set_cutoff(std::optional<int> d) {
  cutoff_ = d;
  if (d) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
      it = it->first.size() > *d ? coeffs_.erase(it) : std::next(it);
  }
}

void SchurExpansion::set_max_rows(std::optional<int> r) { max_rows_ = r; }
void SchurExpansion::set_max_cols(std::optional<int> c) { max_cols_ = c; }

bool SchurExpansion::faithful_for(const Partition& lambda) const {
  if (cutoff_ && lambda.size() > *cutoff_) return false;
  if (max_rows_ && lambda.length() > *max_rows_) return false;
  if (max_cols_ && lambda[0] > *max_cols_) return false;
  return true;
}

BivarPoly SchurExpansion::get(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? BivarPoly() : it->second;
}

void SchurExpansion::add(const Partition& lambda, const BivarPoly& c) {
  if (c.is_zero()) return;
  if (cutoff_ && lambda.size() > *cutoff_) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int SchurExpansion::max_degree() const {
  int d = -1;
  for (const auto& [k, v] : coeffs_) d = std::max(d, k.size());
  return d;
}

int SchurExpansion::min_degree() const {
  return coeffs_.empty() ? -1 : coeffs_.begin()->first.size();
}

namespace {

std::optional<int> opt_min(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  cutoff_ = opt_min(cutoff_, o.cutoff_);
  max_rows_ = opt_min(max_rows_, o.max_rows_);
  max_cols_ = opt_min(max_cols_, o.max_cols_);
  set_cutoff(cutoff_);
  for (const auto& [k, v] : o.coeffs_) add(k, v);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
  return *this += o.scaled(BivarPoly(-1));
}

SchurExpansion SchurExpansion::scaled(const BivarPoly& c) const {
  return map_coeffs([&](const BivarPoly& p) { return p * c; });
}

SchurExpansion SchurExpansion::map_coeffs(const std::function<BivarPoly(const BivarPoly&)>& f) const {
  SchurExpansion r(cutoff_);
  r.max_rows_ = max_rows_;
  r.max_cols_ = max_cols_;
  for (const auto& [k, v] : coeffs_) r.add(k, f(v));
  return r;
}

SchurExpansion SchurExpansion::truncated(int d) const {
  SchurExpansion r = *this;
  r.set_cutoff(opt_min(cutoff_, d));
  return r;
}

SchurExpansion SchurExpansion::restricted_to_faithful() const {
  SchurExpansion r = *this;
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = faithful_for(it->first) ? std::next(it) : r.coeffs_.erase(it);
  return r;
}

bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
  return a.cutoff_ == b.cutoff_ && a.max_rows_ == b.max_rows_ && a.max_cols_ == b.max_cols_ &&
         a.coeffs_ == b.coeffs_;
}

std::string SchurExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    std::string c = v.to_string();
    bool neg = false;
    bool compound = v.size() > 1;
    if (!compound && c[0] == '-') {
      neg = true;
      c = c.substr(1);
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (k.empty()) {
      os << (compound ? "(" + c + ")" : c);
      continue;
    }
    if (compound) {
      os << "(" << c << ")*";
    } else if (c != "1") {
      os << c << "*";
    }
    os << "s[" << k.to_string() << "]";
  }
  if (cutoff_) os << " + O(" << *cutoff_ + 1 << ")";
  return os.str();
}

SchurExpansion difference_on_common_region(const SchurExpansion& f, const SchurExpansion& g) {
  SchurExpansion d = f - g;
  return d.restricted_to_faithful();
}

bool agree_on_common_region(const SchurExpansion& f, const SchurExpansion& g) {
  return difference_on_common_region(f, g).is_zero();
}

// ---------------------------------------------------------------- LR and Kostka

namespace {

// Counts LR tableaux of shape nu/lambda and content mu. Cells are visited in
// reverse reading order (rows top to bottom, right to left inside a row).
long count_lr_tableaux(const Partition& nu, const Partition& lambda, const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= nu.length(); ++r)
    for (int c = nu[r - 1]; c > lambda[r - 1]; --c) cells.emplace_back(r, c);
  int rows = nu.length();
  int cols = nu.empty() ? 0 : nu[0];
  std::vector<std::vector<int>> fill(rows + 2, std::vector<int>(cols + 2, 0));
  std::vector<int> count(mu.length() + 2, 0);
  long total = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[k];
    int hi = std::min(mu.length(), r);
    int right = (c + 1 <= nu[r - 1]) ? fill[r][c + 1] : mu.length();
    hi = std::min(hi, right);
    int above = (r > 1 && c > lambda[r - 2]) ? fill[r - 1][c] : 0;
    for (int v = above + 1; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      fill[r][c] = v;
      self(self, k + 1);
      fill[r][c] = 0;
      --count[v];
    }
  };
  rec(rec, 0);
  return total;
}

std::mutex lr_mutex;
std::map<std::pair<Partition, Partition>, std::map<Partition, long>> lr_memo;

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, long> kostka_memo;

}  // namespace

const std::map<Partition, long>& lr_product(const Partition& lambda, const Partition& mu) {
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(lr_mutex);
    auto it = lr_memo.find(key);
    if (it != lr_memo.end()) return it->second;
  }
  std::map<Partition, long> result;
  int n = lambda.size() + mu.size();
  for (const auto& nu : partitions_of(n)) {
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    long c = count_lr_tableaux(nu, lambda, mu);
    if (c) result.emplace(nu, c);
  }
  std::lock_guard<std::mutex> lock(lr_mutex);
  return lr_memo.emplace(key, std::move(result)).first->second;
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  const auto& prod = lr_product(lambda, mu);
  auto it = prod.find(nu);
  return it == prod.end() ? 0 : it->second;
}

long kostka(const Partition& lambda, const std::vector<int>& content) {
  std::vector<int> cont;
  for (int c : content)
    if (c < 0) return 0;
  for (int c : content)
    if (c > 0) cont.push_back(c);
  int total = 0;
  for (int c : cont) total += c;
  if (total != lambda.size()) return 0;
  if (cont.empty()) return 1;
  auto key = std::make_pair(lambda, cont);
  {
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto it = kostka_memo.find(key);
    if (it != kostka_memo.end()) return it->second;
  }
  int last = cont.back();
  std::vector<int> rest(cont.begin(), cont.end() - 1);
  // remove a horizontal strip of size `last` from lambda
  long sum = 0;
  int len = lambda.length();
  std::vector<int> rho(len, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == len) {
      if (remaining == 0) sum += kostka(Partition(rho), rest);
      return;
    }
    int lo = lambda[i + 1];
    for (int r = lambda[i]; r >= lo; --r) {
      int used = lambda[i] - r;
      if (used > remaining) break;
      rho[i] = r;
      self(self, i + 1, remaining - used);
    }
  };
  rec(rec, 0, last);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  kostka_memo.emplace(key, sum);
  return sum;
}

// ---------------------------------------------------------------- ring maps

SchurExpansion schur_multiply(const SchurExpansion& f, const SchurExpansion& g, std::optional<int> d) {
  std::optional<int> cut = opt_min(opt_min(f.cutoff(), g.cutoff()), d);
  SchurExpansion r(cut);
  r.set_max_rows(opt_min(f.max_rows(), g.max_rows()));
  r.set_max_cols(opt_min(f.max_cols(), g.max_cols()));
  for (const auto& [lam, a] : f.coeffs()) {
    for (const auto& [mu, b] : g.coeffs()) {
      if (cut && lam.size() + mu.size() > *cut) continue;
      BivarPoly ab = a * b;
      for (const auto& [nu, c] : lr_product(lam, mu)) r.add(nu, ab.scaled(c));
    }
  }
  return r;
}

SchurExpansion omega(const SchurExpansion& f) {
  SchurExpansion r(f.cutoff());
  r.set_max_rows(f.max_cols());
  r.set_max_cols(f.max_rows());
  for (const auto& [k, v] : f.coeffs()) r.add(k.conjugate(), v);
  return r;
}

SchurExpansion bar(const SchurExpansion& f) {
  return f.map_coeffs([](const BivarPoly& p) { return p.swapped(); });
}

BivarPoly hall_inner(const SchurExpansion& f, const SchurExpansion& g) {
  if (!f.exact()) throw std::invalid_argument("hall_inner: left argument must be a finite expansion");
  BivarPoly r;
  for (const auto& [k, v] : f.coeffs()) {
    if (!g.faithful_for(k))
      throw std::invalid_argument("hall_inner: right argument not known at s[" + k.to_string() + "]");
    r += v * g.get(k);
  }
  return r;
}

// ---------------------------------------------------------------- GenPoly

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> m;
  m.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(m), std::greater<int>());
  return Partition(std::move(m));
}

}  // namespace

GenPoly GenPoly::constant(Basis basis, const BivarPoly& c, std::optional<int> cutoff) {
  GenPoly g(basis, cutoff);
  g.add(Partition{}, c);
  return g;
}

GenPoly GenPoly::generator(Basis basis, int k, std::optional<int> cutoff) {
  GenPoly g(basis, cutoff);
  if (k == 0) g.add(Partition{}, 1);
  if (k > 0) g.add(Partition{k}, 1);
  return g;
}

void GenPoly::add(const Partition& mono, const BivarPoly& c) {
  if (c.is_zero()) return;
  if (cutoff_ && mono.size() > *cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("GenPoly: mixed bases");
  cutoff_ = opt_min(cutoff_, o.cutoff_);
  for (const auto& [m, c] : o.terms_) add(m, c);
  if (cutoff_) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->first.size() > *cutoff_ ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) { return *this += o.scaled(BivarPoly(-1)); }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  if (a.basis_ != b.basis_) throw std::invalid_argument("GenPoly: mixed bases");
  GenPoly r(a.basis_, opt_min(a.cutoff_, b.cutoff_));
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) {
      if (r.cutoff_ && m1.size() + m2.size() > *r.cutoff_) continue;
      r.add(merge_parts(m1, m2), c1 * c2);
    }
  return r;
}

GenPoly GenPoly::scaled(const BivarPoly& c) const {
  GenPoly r(basis_, cutoff_);
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

GenPoly GenPoly::kill_generators_above(int n) const {
  GenPoly r(basis_, cutoff_);
  for (const auto& [m, v] : terms_)
    if (m.empty() || m[0] <= n) r.add(m, v);
  return r;
}

SchurExpansion GenPoly::to_schur() const {
  SchurExpansion r(cutoff_);
  for (const auto& [m, v] : terms_) {
    for (const auto& lam : partitions_of(m.size())) {
      long k = kostka(lam, m.parts());
      if (k == 0) continue;
      r.add(basis_ == Basis::H ? lam : lam.conjugate(), v.scaled(k));
    }
  }
  return r;
}

// ---------------------------------------------------------------- substitutions

namespace {

// e_m h_n in the Schur basis.
void add_e_times_h(SchurExpansion& r, int m, int n, const BivarPoly& c) {
  if (m == 0) {
    r.add(n == 0 ? Partition{} : Partition{n}, c);
    return;
  }
  if (n == 0) {
    r.add(Partition(std::vector<int>(m, 1)), c);
    return;
  }
  std::vector<int> hook1{n};
  hook1.insert(hook1.end(), m, 1);
  r.add(Partition(hook1), c);
  std::vector<int> hook2{n + 1};
  hook2.insert(hook2.end(), m - 1, 1);
  r.add(Partition(hook2), c);
}

}  // namespace

SchurExpansion h_substituted(int k, const BivarPoly& c, int d) {
  SchurExpansion r(d);
  if (k < 0) return r;
  for (int n = k; n <= d; ++n)
    for (int m = 0; m + n <= d; ++m) {
      BivarPoly coef = pow(c, m + n - k).scaled(binomial(n, k));
      if (m % 2) coef = -coef;
      add_e_times_h(r, m, n, coef);
    }
  return r;
}

SchurExpansion e_substituted(int k, const BivarPoly& c, int d) {
  SchurExpansion r(d);
  if (k < 0) return r;
  for (int m = k; m <= d; ++m)
    for (int n = 0; m + n <= d; ++n) {
      BivarPoly coef = pow(-c, m - k) * pow(c, n);
      coef = coef.scaled(binomial(m, k));
      add_e_times_h(r, m, n, coef);
    }
  return r;
}

SchurExpansion substitute_rational(const SchurExpansion& f, const BivarPoly& c, int d) {
  int cut = f.cutoff() ? std::min(*f.cutoff(), d) : d;
  SchurExpansion r(cut);
  r.set_max_rows(f.max_rows());
  r.set_max_cols(f.max_cols());
  std::map<int, SchurExpansion> hs;
  auto h = [&](int k) -> const SchurExpansion& {
    auto it = hs.find(k);
    if (it == hs.end()) it = hs.emplace(k, h_substituted(k, c, cut)).first;
    return it->second;
  };
  for (const auto& [lam, v] : f.coeffs()) {
    if (lam.size() > cut) continue;
    int l = lam.length();
    // Jacobi-Trudi determinant by Laplace expansion over column subsets.
    std::map<unsigned, SchurExpansion> minors;
    minors[0] = SchurExpansion::one();
    for (int row = l - 1; row >= 0; --row) {
      std::map<unsigned, SchurExpansion> next;
      for (unsigned mask = 0; mask < (1u << l); ++mask) {
        if (__builtin_popcount(mask) != l - row) continue;
        SchurExpansion acc(cut);
        int sign_pos = 0;
        for (int j = 0; j < l; ++j) {
          if (!(mask & (1u << j))) continue;
          unsigned sub = mask & ~(1u << j);
          auto mit = minors.find(sub);
          int idx = lam[row] - (row + 1) + (j + 1);
          if (mit != minors.end() && idx >= 0) {
            SchurExpansion term = schur_multiply(h(idx), mit->second, cut);
            if (sign_pos % 2) term = term.scaled(BivarPoly(-1));
            acc += term;
          }
          ++sign_pos;
        }
        next[mask] = acc;
      }
      minors = std::move(next);
    }
    r += minors[(1u << l) - 1].scaled(v);
  }
  return r;
}

BigInt schur_at_ones(const Partition& lambda, int n) {
  BigInt num = 1, den = 1;
  Partition conj = lambda.conjugate();
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) {
      num *= (n + c - r);
      den *= (lambda[r - 1] - c) + (conj[c - 1] - r) + 1;
    }
  return num / den;
}

}  // namespace groth
