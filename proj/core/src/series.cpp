#include "groth/series.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace groth {

namespace {

int degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

TruncatedSeries::TruncatedSeries(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

TruncatedSeries TruncatedSeries::constant(int nvars, int cutoff, const BivarPoly& c) {
  TruncatedSeries s(nvars, cutoff);
  s.add(Exponent(nvars, 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int cutoff, int i) {
  Exponent e(nvars, 0);
  e.at(i - 1) = 1;
  return monomial(nvars, cutoff, e, 1);
}

TruncatedSeries TruncatedSeries::monomial(int nvars, int cutoff, const Exponent& e, const BivarPoly& c) {
  TruncatedSeries s(nvars, cutoff);
  s.add(e, c);
  return s;
}

BivarPoly TruncatedSeries::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BivarPoly() : it->second;
}

void TruncatedSeries::add(const Exponent& e, const BivarPoly& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (degree_of(e) > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  if (o.cutoff_ < cutoff_) *this = truncated(o.cutoff_);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  return *this += o.scaled(BivarPoly(-1));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  TruncatedSeries r(a.nvars_, std::min(a.cutoff_, b.cutoff_));
  std::vector<std::pair<const Exponent*, int>> bs;
  bs.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) bs.emplace_back(&e, degree_of(e));
  std::sort(bs.begin(), bs.end(), [](auto& x, auto& y) { return x.second < y.second; });
  Exponent sum(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = degree_of(ea);
    for (const auto& [eb, db] : bs) {
      if (da + db > r.cutoff_) break;
      for (int k = 0; k < a.nvars_; ++k) sum[k] = ea[k] + (*eb)[k];
      r.add(sum, ca * b.terms_.at(*eb));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const BivarPoly& c) const {
  return map_coeffs([&](const BivarPoly& p) { return p * c; });
}

TruncatedSeries TruncatedSeries::map_coeffs(const std::function<BivarPoly(const BivarPoly&)>& f) const {
  TruncatedSeries r(nvars_, cutoff_);
  for (const auto& [e, c] : terms_) r.add(e, f(c));
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.nvars_ == b.nvars_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
}

TruncatedSeries TruncatedSeries::truncated(int d) const {
  TruncatedSeries r(nvars_, std::min(d, cutoff_));
  for (const auto& [e, c] : terms_) r.add(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::restrict_vars(int n) const {
  TruncatedSeries r(n, cutoff_);
  for (const auto& [e, c] : terms_) {
    bool zero = false;
    for (int k = n; k < nvars_; ++k)
      if (e[k]) zero = true;
    if (zero) continue;
    Exponent f(e.begin(), e.begin() + std::min(n, nvars_));
    f.resize(n, 0);
    r.add(f, c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::extend_vars(int n) const {
  if (n < nvars_) throw std::invalid_argument("extend_vars: fewer variables");
  TruncatedSeries r(n, cutoff_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(n, 0);
    r.add(f, c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::swap_vars(int i) const {
  TruncatedSeries r(nvars_, cutoff_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    r.add(f, c);
  }
  return r;
}

bool TruncatedSeries::is_symmetric() const {
  for (int i = 1; i < nvars_; ++i)
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      std::swap(f[i - 1], f[i]);
      auto it = terms_.find(f);
      if (it == terms_.end() || it->second != c) return false;
    }
  return true;
}

namespace {

std::string monomial_string(const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k]) continue;
    if (!first) os << "*";
    first = false;
    os << "x";
    if (e.size() > 1) os << (k + 1);
    if (e[k] > 1) os << "^" << e[k];
  }
  return os.str();
}

}  // namespace

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponent, BivarPoly>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    int dx = degree_of(x->first), dy = degree_of(y->first);
    if (dx != dy) return dx < dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    std::string mono = monomial_string(t->first);
    std::string c = t->second.to_string();
    bool compound = t->second.size() > 1;
    bool neg = !compound && c[0] == '-';
    if (neg) c = c.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (mono.empty()) {
      os << (compound ? "(" + c + ")" : c);
    } else if (compound) {
      os << "(" << c << ")*" << mono;
    } else if (c == "1") {
      os << mono;
    } else {
      os << c << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Schur polynomials

namespace {

std::mutex schur_poly_mutex;
std::map<std::tuple<Partition, int, int>, TruncatedSeries> schur_poly_memo;

}  // namespace

TruncatedSeries schur_polynomial(const Partition& lambda, int n, int d) {
  auto key = std::make_tuple(lambda, n, d);
  {
    std::lock_guard<std::mutex> lock(schur_poly_mutex);
    auto it = schur_poly_memo.find(key);
    if (it != schur_poly_memo.end()) return it->second;
  }
  TruncatedSeries s(n, d);
  if (lambda.length() <= n && lambda.size() <= d) {
    auto cells = SkewShape(lambda, {}).cells();
    std::vector<std::vector<int>> fill(lambda.length() + 1, std::vector<int>(lambda[0] + 2, 0));
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == cells.size()) {
        s.add(e, 1);
        return;
      }
      auto [r, c] = cells[k];
      int lo = 1;
      if (c > 1) lo = std::max(lo, fill[r][c - 1]);
      if (r > 1) lo = std::max(lo, fill[r - 1][c] + 1);
      // column below needs room: entry <= n - (rows below in this column)
      int below = column_length(lambda, c) - r;
      for (int v = lo; v <= n - below; ++v) {
        fill[r][c] = v;
        ++e[v - 1];
        self(self, k + 1);
        --e[v - 1];
      }
      fill[r][c] = 0;
    };
    rec(rec, 0);
  }
  std::lock_guard<std::mutex> lock(schur_poly_mutex);
  schur_poly_memo.emplace(key, s);
  return s;
}

TruncatedSeries h_series(int k, int n, int d) {
  if (k < 0) return TruncatedSeries(n, d);
  return schur_polynomial(k == 0 ? Partition{} : Partition{k}, n, d);
}

TruncatedSeries e_series(int k, int n, int d) {
  if (k < 0) return TruncatedSeries(n, d);
  return schur_polynomial(Partition(std::vector<int>(k, 1)), n, d);
}

TruncatedSeries schur_to_series(const SchurExpansion& f, int n, int d) {
  int cut = f.cutoff() ? std::min(*f.cutoff(), d) : d;
  TruncatedSeries s(n, cut);
  for (const auto& [lam, c] : f.coeffs()) {
    if (lam.length() > n || lam.size() > cut) continue;
    if (!f.faithful_for(lam)) throw std::invalid_argument("schur_to_series: coefficient of s[" + lam.to_string() + "] unknown");
    s += schur_polynomial(lam, n, cut).scaled(c);
  }
  return s;
}

SchurExpansion series_to_schur(const TruncatedSeries& f) {
  if (!f.is_symmetric()) throw std::invalid_argument("series_to_schur: input is not symmetric");
  SchurExpansion out(f.cutoff());
  out.set_max_rows(f.nvars());
  TruncatedSeries rest = f;
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().rbegin();
    if (!std::is_sorted(e.begin(), e.end(), std::greater<int>()))
      throw std::logic_error("series_to_schur: leading monomial is not dominant");
    Partition lam(e);
    BivarPoly coef = c;
    out.add(lam, coef);
    TruncatedSeries sub = schur_polynomial(lam, f.nvars(), f.cutoff()).scaled(coef);
    rest -= sub;
  }
  return out;
}

TruncatedSeries substitute_rational(const TruncatedSeries& f, const BivarPoly& c) {
  int n = f.nvars(), d = f.cutoff();
  if (c.is_zero()) return f;
  std::vector<BivarPoly> cpow{BivarPoly(1)};
  for (int k = 1; k <= d; ++k) cpow.push_back(cpow.back() * c);
  TruncatedSeries r(n, d);
  for (const auto& [e, coef] : f.terms()) {
    // expand prod_i x_i^{a_i} (1 - c x_i)^{-a_i}
    std::vector<std::pair<Exponent, BivarPoly>> cur{{e, coef}};
    int base = degree_of(e);
    for (int i = 0; i < n; ++i) {
      if (!e[i]) continue;
      std::vector<std::pair<Exponent, BivarPoly>> next;
      for (auto& [ex, cc] : cur) {
        int slack = d - degree_of(ex);
        for (int m = 0; m <= slack; ++m) {
          Exponent ey = ex;
          ey[i] += m;
          next.emplace_back(ey, cc * cpow[m].scaled(binomial(e[i] + m - 1, m)));
        }
      }
      cur = std::move(next);
    }
    (void)base;
    for (auto& [ex, cc] : cur) r.add(ex, cc);
  }
  return r;
}

TruncatedSeries divide_by_difference(const TruncatedSeries& f, int i, int j) {
  int n = f.nvars();
  --i;
  --j;
  // Group by the exponent of x_i.
  std::map<int, std::map<Exponent, BivarPoly>> by_power;
  int top = 0;
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[i] = 0;
    by_power[e[i]][rest] = c;
    top = std::max(top, e[i]);
  }
  TruncatedSeries q(n, f.cutoff() - 1);
  std::map<Exponent, BivarPoly> carry;  // q_k
  for (int k = top; k >= 1; --k) {
    // q_{k-1} = P_k + x_j q_k
    std::map<Exponent, BivarPoly> qk1;
    if (by_power.count(k)) qk1 = by_power[k];
    for (const auto& [e, c] : carry) {
      Exponent shifted = e;
      ++shifted[j];
      auto [it, ins] = qk1.try_emplace(shifted, c);
      if (!ins) {
        it->second += c;
        if (it->second.is_zero()) qk1.erase(it);
      }
    }
    for (const auto& [e, c] : qk1) {
      Exponent full = e;
      full[i] = k - 1;
      q.add(full, c);
    }
    carry = std::move(qk1);
  }
  // remainder: P_0 + x_j q_0 must vanish on every complete degree
  std::map<Exponent, BivarPoly> rem;
  if (by_power.count(0)) rem = by_power[0];
  for (const auto& [e, c] : carry) {
    Exponent shifted = e;
    ++shifted[j];
    auto [it, ins] = rem.try_emplace(shifted, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  for (const auto& [e, c] : rem)
    if (!c.is_zero() && degree_of(e) <= f.cutoff())
      throw std::domain_error("divide_by_difference: division is not exact");
  return q;
}

}  // namespace groth
