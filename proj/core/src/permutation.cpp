#include "groth/permutation.hpp"

#include "groth/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace groth {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(w);
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("Permutation::simple: index out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(w);
}

Permutation Permutation::inverse() const {
  std::vector<int> r(w_.size());
  for (int i = 1; i <= size(); ++i) r[w_[i - 1] - 1] = i;
  return Permutation(r);
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++l;
  return l;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (w_[i - 1] > w_[i]) d.push_back(i);
  return d;
}

bool Permutation::is_grassmannian() const { return descents().size() <= 1; }

Partition Permutation::grassmannian_partition() const {
  auto d = descents();
  if (d.size() > 1) throw std::invalid_argument("grassmannian_partition: more than one descent");
  if (d.empty()) return {};
  const int k = d[0];
  std::vector<int> parts;
  for (int i = 1; i <= k; ++i) parts.push_back(w_[k - i] - (k + 1 - i));
  return Partition(parts);
}

Permutation Permutation::shifted(int m) const {
  std::vector<int> r(m + size());
  for (int i = 0; i < m; ++i) r[i] = i + 1;
  for (int i = 0; i < size(); ++i) r[m + i] = w_[i] + m;
  return Permutation(r);
}

Permutation Permutation::extended(int n) const {
  if (n < size()) throw std::invalid_argument("Permutation::extended: cannot shrink");
  std::vector<int> r = w_;
  for (int i = size() + 1; i <= n; ++i) r.push_back(i);
  return Permutation(r);
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  Permutation a = u.extended(n), b = v.extended(n);
  std::vector<int> r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = a(b(i));
  return Permutation(r);
}

namespace {

std::vector<int> reduced_word_impl(Permutation w, bool leftmost) {
  std::vector<int> word;
  for (;;) {
    auto d = w.descents();
    if (d.empty()) break;
    const int i = leftmost ? d.front() : d.back();
    word.push_back(i);
    w = w * Permutation::simple(i, w.size());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

std::vector<int> Permutation::reduced_word() const { return reduced_word_impl(*this, true); }
std::vector<int> Permutation::reduced_word_rightmost() const { return reduced_word_impl(*this, false); }

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << w_[i];
  return os.str();
}

// ---------------------------------------------------------------- MultivarPoly

MultivarPoly::MultivarPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("MultivarPoly: too many variables");
}

MultivarPoly MultivarPoly::constant(int nvars, const BivarPoly& c) {
  MultivarPoly r(nvars);
  r.add_packed(0, c);
  return r;
}

MultivarPoly MultivarPoly::monomial(int nvars, const Exponent& e, const BivarPoly& c) {
  MultivarPoly r(nvars);
  r.add(e, c);
  return r;
}

MultivarPoly MultivarPoly::staircase(int n) {
  Exponent e(n);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  return monomial(n, e);
}

MultivarPoly::Key MultivarPoly::pack(const Exponent& e) {
  Key k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= (1 << kBits)) throw std::invalid_argument("MultivarPoly: exponent out of range");
    k |= static_cast<Key>(e[i]) << (kBits * i);
  }
  return k;
}

int MultivarPoly::key_degree(Key k, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += exponent(k, i);
  return d;
}

void MultivarPoly::add_packed(Key k, const BivarPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultivarPoly::add(const Exponent& e, const BivarPoly& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultivarPoly::add: wrong arity");
  add_packed(pack(e), c);
}

int MultivarPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, key_degree(k, nvars_));
  return d;
}

BivarPoly MultivarPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? BivarPoly() : it->second;
}

std::vector<std::pair<Exponent, BivarPoly>> MultivarPoly::terms() const {
  std::vector<std::pair<Exponent, BivarPoly>> r;
  r.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    Exponent e(nvars_);
    for (int i = 0; i < nvars_; ++i) e[i] = exponent(k, i);
    r.emplace_back(std::move(e), c);
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

MultivarPoly& MultivarPoly::operator+=(const MultivarPoly& o) {
  if (o.nvars_ > nvars_) nvars_ = o.nvars_;
  for (const auto& [k, c] : o.terms_) add_packed(k, c);
  return *this;
}

MultivarPoly& MultivarPoly::operator-=(const MultivarPoly& o) {
  if (o.nvars_ > nvars_) nvars_ = o.nvars_;
  for (const auto& [k, c] : o.terms_) add_packed(k, -c);
  return *this;
}

MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b) {
  MultivarPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      for (int i = 0; i < r.nvars_; ++i)
        if (MultivarPoly::exponent(ka, i) + MultivarPoly::exponent(kb, i) >= (1 << MultivarPoly::kBits))
          throw std::overflow_error("MultivarPoly: exponent overflow");
      r.add_packed(ka + kb, ca * cb);
    }
  return r;
}

MultivarPoly MultivarPoly::scaled(const BivarPoly& c) const {
  MultivarPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add_packed(k, v * c);
  return r;
}

bool operator==(const MultivarPoly& a, const MultivarPoly& b) { return a.terms_ == b.terms_; }

MultivarPoly MultivarPoly::extended(int n) const {
  if (n < nvars_) throw std::invalid_argument("MultivarPoly::extended: cannot shrink");
  MultivarPoly r(n);
  r.terms_ = terms_;
  return r;
}

MultivarPoly MultivarPoly::truncated(int d) const {
  MultivarPoly r(nvars_);
  for (const auto& [k, c] : terms_)
    if (key_degree(k, nvars_) <= d) r.terms_.emplace(k, c);
  return r;
}

TruncatedSeries MultivarPoly::to_series(int n, int d) const {
  TruncatedSeries s(n, d);
  for (const auto& [k, c] : terms_) {
    bool keep = true;
    for (int i = n; i < nvars_ && keep; ++i) keep = exponent(k, i) == 0;
    if (!keep) continue;
    Exponent e(n, 0);
    for (int i = 0; i < std::min(n, nvars_); ++i) e[i] = exponent(k, i);
    s.add(e, c);  // add() drops terms above the cutoff
  }
  return s;
}

std::string MultivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  auto ts = terms();
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    const bool compound = c.size() > 1;
    std::string term;
    if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
    else if (c.is_one()) term = mono;
    else if (c == BivarPoly(-1)) term = "-" + mono;
    else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (first) os << term;
    else if (term[0] == '-') os << " - " << term.substr(1);
    else os << " + " << term;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- operators

namespace {

using Key = MultivarPoly::Key;

Key with_exponents(Key k, int i, int a, int b) {
  const int s = MultivarPoly::kBits;
  const Key mask = ((Key{1} << s) - 1);
  k &= ~(mask << (s * i));
  k &= ~(mask << (s * (i + 1)));
  return k | (static_cast<Key>(a) << (s * i)) | (static_cast<Key>(b) << (s * (i + 1)));
}

// Divided difference of one term into `out`, with i 0-based.
void dd_term(int i, Key k, const BivarPoly& c, MultivarPoly& out) {
  const int a = MultivarPoly::exponent(k, i);
  const int b = MultivarPoly::exponent(k, i + 1);
  if (a == b) return;
  const int lo = std::min(a, b);
  const int span = std::abs(a - b);
  const BivarPoly cc = a > b ? c : -c;
  for (int t = 0; t < span; ++t) out.add_packed(with_exponents(k, i, lo + span - 1 - t, lo + t), cc);
}

}  // namespace

MultivarPoly divided_difference(int i, const MultivarPoly& f) {
  if (i < 1 || i >= f.nvars()) throw std::invalid_argument("divided_difference: index out of range");
  MultivarPoly r(f.nvars());
  for (const auto& [k, c] : f.packed_terms()) dd_term(i - 1, k, c, r);
  return r;
}

namespace {

MultivarPoly multiplier(int i, int n, bool deformed, const Params& p) {
  MultivarPoly m = MultivarPoly::constant(n, 1);
  Exponent e(n, 0);
  e[i] = 1;  // x_{i+1}
  m.add(e, deformed ? p.gamma() : BivarPoly(-1));
  return m;
}

}  // namespace

MultivarPoly pi_operator(int i, const MultivarPoly& f, bool deformed, const Params& p, MultiplierOrder order) {
  if (i < 1 || i >= f.nvars()) throw std::invalid_argument("pi_operator: index out of range");
  MultivarPoly m = multiplier(i, f.nvars(), deformed, p);
  if (order == MultiplierOrder::Before) return divided_difference(i, m * f);
  return divided_difference(i, f) * m;
}

MultivarPoly apply_pi_word(const std::vector<int>& word, MultivarPoly f, bool deformed, const Params& p,
                           std::optional<int> max_degree) {
  const BivarPoly c = deformed ? p.gamma() : BivarPoly(-1);
  const int n = f.nvars();
  const int steps = static_cast<int>(word.size());
  for (int s = steps - 1; s >= 0; --s) {
    const int i = word[s] - 1;
    if (i < 0 || i + 1 >= n) throw std::invalid_argument("apply_pi_word: index out of range");
    MultivarPoly next(n);
    const int remaining = s;  // steps still to apply after this one
    for (const auto& [k, v] : f.packed_terms()) {
      // d_i((1 + c x_{i+1}) x^k)
      dd_term(i, k, v, next);
      const int b = MultivarPoly::exponent(k, i + 1);
      if (b + 1 >= (1 << MultivarPoly::kBits)) throw std::overflow_error("apply_pi_word: exponent overflow");
      dd_term(i, k + (Key{1} << (MultivarPoly::kBits * (i + 1))), v * c, next);
    }
    if (max_degree) {
      MultivarPoly pruned(n);
      for (const auto& [k, v] : next.packed_terms())
        if (MultivarPoly::key_degree(k, n) - remaining <= *max_degree) pruned.add_packed(k, v);
      next = std::move(pruned);
    }
    f = std::move(next);
  }
  return f;
}

MultivarPoly grothendieck_poly(const Permutation& w, bool deformed, const Params& p,
                               const std::optional<std::vector<int>>& word, std::optional<int> max_degree) {
  const int n = w.size();
  std::vector<int> wd = word ? *word : (w.inverse() * Permutation::longest(n)).reduced_word();
  MultivarPoly f = apply_pi_word(wd, MultivarPoly::staircase(n), deformed, p, max_degree);
  if (max_degree) f = f.truncated(*max_degree);
  return f;
}

StableLimit stable_G_w(const Permutation& w, int nvars, int d, const Params& p) {
  StableLimit r{TruncatedSeries(nvars, d), SchurExpansion(d), 0, false};
  const int m_max = d + w.size() + nvars;
  std::optional<TruncatedSeries> prev;
  for (int m = std::max(0, nvars - 1); m <= m_max; ++m) {
    const Permutation v = w.shifted(m);
    if (v.size() > MultivarPoly::kMaxVars) break;
    TruncatedSeries cur = grothendieck_poly(v, true, p, std::nullopt, d).to_series(nvars, d);
    if (prev && *prev == cur) {
      r.m_used = m - 1;
      r.stabilized = true;
      break;
    }
    prev = std::move(cur);
  }
  if (!prev) return r;
  r.series = substitute_rational(*prev, p.alpha);
  r.schur = series_to_schur(r.series);
  return r;
}

GwExpansion expand_G_w_in_G_basis(const Permutation& w, int d, int nvars, const Params& p) {
  auto at = [&](int dd) {
    StableLimit s = stable_G_w(w, nvars, dd, p);
    if (!s.stabilized) throw std::runtime_error("expand_G_w_in_G_basis: no stabilization for w = " + w.to_string());
    return expand_in_G_basis(s.schur, dd, p).restricted_to_faithful();
  };
  GwExpansion r;
  r.coeffs = at(d);
  SchurExpansion next = at(d + 1).truncated(d);
  r.stable = next.coeffs() == r.coeffs.coeffs();
  return r;
}

}  // namespace groth
