#include "groth/operators.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace groth {

PartitionVector PartitionVector::basis(const Partition& p, const BivarPoly& c) {
  PartitionVector v;
  v.add(p, c);
  return v;
}

BivarPoly PartitionVector::get(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BivarPoly() : it->second;
}

void PartitionVector::add(const Partition& p, const BivarPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PartitionVector& PartitionVector::operator+=(const PartitionVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PartitionVector& PartitionVector::operator-=(const PartitionVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PartitionVector PartitionVector::scaled(const BivarPoly& c) const {
  PartitionVector r;
  if (c.is_zero()) return r;
  for (const auto& [p, v] : terms_) r.add(p, v * c);
  return r;
}

std::string PartitionVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*[" << p.to_string() << "]";
  }
  return os.str();
}

PartitionVector apply_u(int i, const PartitionVector& v) {
  PartitionVector r;
  for (const auto& [p, c] : v.terms())
    if (p.can_add_col(i)) r.add(p.add_col(i), c);
  return r;
}

PartitionVector apply_d(int i, const PartitionVector& v) {
  PartitionVector r;
  for (const auto& [p, c] : v.terms())
    if (p.can_remove_col(i)) r.add(p.remove_col(i), c);
  return r;
}

PartitionVector apply_u_hat(int i, const PartitionVector& v, const Params& p) {
  return apply_u(i, v) + apply_u(i, apply_d(i, v)).scaled(p.gamma());
}

PartitionVector apply_deformed(int i, const PartitionVector& v, const Params& p) {
  return apply_u_hat(i, v, p) - v.scaled(p.alpha);
}

// ---------------------------------------------------------------- relations

namespace {

using Op = std::function<PartitionVector(const PartitionVector&)>;

Op U(int i) {
  return [i](const PartitionVector& v) { return apply_u(i, v); };
}
Op Dn(int i) {
  return [i](const PartitionVector& v) { return apply_d(i, v); };
}
Op Ut(int i, const Params& p) {
  return [i, p](const PartitionVector& v) { return apply_deformed(i, v, p); };
}
// word applied right to left: {A, B, C} means A B C acting on v
Op word(std::vector<Op> ops) {
  return [ops](const PartitionVector& v) {
    PartitionVector r = v;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = (*it)(r);
    return r;
  };
}
Op sum(Op a, Op b) {
  return [a, b](const PartitionVector& v) { return a(v) + b(v); };
}
Op identity() {
  return [](const PartitionVector& v) { return v; };
}
Op commutator(Op a, Op b) {
  return [a, b](const PartitionVector& v) { return a(b(v)) - b(a(v)); };
}
Op zero() {
  return [](const PartitionVector&) { return PartitionVector(); };
}

}  // namespace

RelationReport verify_relations(int max_size, int max_col, const Params& p) {
  RelationReport rep;
  std::vector<Partition> basis;
  for (const auto& lam : partitions_up_to(max_size))
    if (lam[0] <= max_col) basis.push_back(lam);
  auto check = [&](const std::string& name, const Op& lhs, const Op& rhs) {
    for (const auto& lam : basis) {
      ++rep.checks;
      auto v = PartitionVector::basis(lam);
      if (lhs(v) != rhs(v)) {
        rep.failures.push_back(name + " on " + lam.to_string());
        return;
      }
    }
  };
  auto ud = [](int i) { return word({U(i), Dn(i)}); };
  auto du = [](int i) { return word({Dn(i), U(i)}); };
  for (int i = 1; i <= max_col; ++i) {
    std::string si = std::to_string(i);
    for (int j = 1; j <= max_col; ++j) {
      std::string sj = std::to_string(j);
      if (std::abs(i - j) >= 2) {
        check("[u" + sj + ",u" + si + "]=0", commutator(U(j), U(i)), zero());
        check("[d" + sj + ",d" + si + "]=0", commutator(Dn(j), Dn(i)), zero());
        check("[ut" + sj + ",ut" + si + "]=0", commutator(Ut(j, p), Ut(i, p)), zero());
      }
      if (i != j) check("[d" + sj + ",u" + si + "]=0", commutator(Dn(j), U(i)), zero());
    }
    check("d1u1=1", word({Dn(1), U(1)}), identity());
    check("[u" + si + "d" + si + ",d" + si + "u" + si + "]=0", commutator(ud(i), du(i)), zero());
    if (i + 1 <= max_col) {
      std::string s1 = std::to_string(i + 1);
      check("u" + s1 + "u" + si + "u" + si + "=u" + si + "u" + s1 + "u" + si, word({U(i + 1), U(i), U(i)}),
            word({U(i), U(i + 1), U(i)}));
      check("u" + s1 + "u" + si + "u" + s1 + "=u" + s1 + "u" + s1 + "u" + si, word({U(i + 1), U(i), U(i + 1)}),
            word({U(i + 1), U(i + 1), U(i)}));
      check("d" + s1 + "u" + s1 + "=u" + si + "d" + si, du(i + 1), ud(i));
      check("[u" + si + "d" + si + ",u" + s1 + "u" + si + "]=0", commutator(ud(i), word({U(i + 1), U(i)})), zero());
      check("[ut" + s1 + "ut" + si + ",ut" + si + "+ut" + s1 + "]=0",
            commutator(word({Ut(i + 1, p), Ut(i, p)}), sum(Ut(i, p), Ut(i + 1, p))), zero());
    }
    if (i >= 2) {
      std::string s0 = std::to_string(i - 1);
      check("[u" + si + "d" + si + ",u" + s0 + "d" + s0 + "]=0", commutator(ud(i), ud(i - 1)), zero());
      check("[d" + std::to_string(i + 1) + "u" + std::to_string(i + 1) + ",u" + s0 + "d" + s0 + "]=0",
            commutator(du(i + 1), ud(i - 1)), zero());
    }
  }
  return rep;
}

// ---------------------------------------------------------------- C and D series

namespace {

using YPoly = std::vector<BivarPoly>;  // coefficients of y^m
using Expansion = std::map<Partition, YPoly>;

struct Bound {
  std::optional<Partition> outer;
  int max_size = 0;
  bool admits(const Partition& q) const {
    if (outer) return outer->contains(q);
    return q.size() <= max_size;
  }
};

void add_shifted(Expansion& target, const Partition& q, const YPoly& poly, const BivarPoly& c, int cap) {
  if (c.is_zero()) return;
  YPoly& t = target[q];
  for (std::size_t m = 0; m < poly.size(); ++m) {
    if (poly[m].is_zero() || static_cast<int>(m) + 1 > cap) continue;
    if (t.size() < m + 2) t.resize(m + 2);
    t[m + 1] += poly[m] * c;
  }
}

// u_hat_i applied to every shape of e, raising the y-degree by one.
Expansion step(const Expansion& e, int i, const Params& p, const Bound& b, int cap) {
  Expansion r;
  const BivarPoly g = p.gamma();
  for (const auto& [q, poly] : e) {
    if (q.can_add_col(i)) {
      Partition nq = q.add_col(i);
      if (b.admits(nq)) add_shifted(r, nq, poly, 1, cap);
    }
    if (q.can_remove_col(i)) add_shifted(r, q, poly, g, cap);
  }
  return r;
}

void merge(Expansion& into, const Expansion& from) {
  for (const auto& [q, poly] : from) {
    YPoly& t = into[q];
    if (t.size() < poly.size()) t.resize(poly.size());
    for (std::size_t m = 0; m < poly.size(); ++m) t[m] += poly[m];
  }
}

int max_column(const Partition& shape, const Bound& b) {
  if (b.outer) return (*b.outer)[0];
  return shape[0] + std::max(0, b.max_size - shape.size());
}

// One factor C(x) = prod over increasing columns of (1 + y u_hat_i).
Expansion expand_C(const Partition& shape, const Params& p, const Bound& b, int cap) {
  Expansion cur;
  cur[shape] = YPoly{1};
  const int maxc = max_column(shape, b);
  for (int i = 1; i <= maxc; ++i) merge(cur, step(cur, i, p, b, cap));
  return cur;
}

// One factor D(x) = prod over decreasing columns of 1/(1 - y u_hat_i).
Expansion expand_D(const Partition& shape, const Params& p, const Bound& b, int cap) {
  Expansion cur;
  cur[shape] = YPoly{1};
  const int maxc = b.outer ? (*b.outer)[0] : shape[0] + cap;
  for (int i = maxc; i >= 1; --i) {
    Expansion total = cur;
    Expansion power = cur;
    for (int m = 1; m <= cap; ++m) {
      power = step(power, i, p, b, cap);
      if (power.empty()) break;
      merge(total, power);
    }
    cur = std::move(total);
  }
  return cur;
}

// (x_k / (1 - c x_k))^m in n variables.
TruncatedSeries y_power(int n, int d, int k, int m, const BivarPoly& c) {
  TruncatedSeries s(n, d);
  for (int e = m; e <= d; ++e) {
    Exponent ex(n, 0);
    ex[k - 1] = e;
    BigInt coef = m == 0 ? BigInt(e == 0 ? 1 : 0) : binomial_std(e - 1, m - 1);
    if (coef == 0) continue;
    s.add(ex, pow(c, e - m).scaled(coef));
  }
  return s;
}

int min_degree(const TruncatedSeries& s) {
  int m = s.cutoff() + 1;
  for (const auto& [e, c] : s.terms()) {
    int deg = 0;
    for (int v : e) deg += v;
    m = std::min(m, deg);
  }
  return m;
}

using SeriesState = std::map<Partition, TruncatedSeries>;

SeriesState apply_series(const SeriesState& state, int k, int n, int d, const Params& p, const Bound& b,
                         bool dual, std::map<Partition, Expansion>& memo) {
  SeriesState next;
  const BivarPoly c = dual ? -p.alpha : p.alpha;
  std::vector<TruncatedSeries> ypow;
  for (int m = 0; m <= d; ++m) ypow.push_back(y_power(n, d, k, m, c));
  for (const auto& [q, ser] : state) {
    auto it = memo.find(q);
    if (it == memo.end()) it = memo.emplace(q, dual ? expand_D(q, p, b, d) : expand_C(q, p, b, d)).first;
    const int base = min_degree(ser);
    for (const auto& [nq, poly] : it->second) {
      TruncatedSeries factor(n, d);
      for (std::size_t m = 0; m < poly.size(); ++m) {
        if (poly[m].is_zero() || base + static_cast<int>(m) > d) continue;
        factor += ypow[m].scaled(poly[m]);
      }
      if (factor.is_zero()) continue;
      auto jt = next.find(nq);
      TruncatedSeries prod = ser * factor;
      if (jt == next.end()) next.emplace(nq, prod);
      else jt->second += prod;
    }
  }
  return next;
}

TruncatedSeries run_series(const Partition& lambda, const Partition& mu, int n, int d, const Params& p, bool dual) {
  if (!lambda.contains(mu)) return TruncatedSeries(n, d);
  Bound b{lambda, 0};
  SeriesState state;
  state.emplace(mu, TruncatedSeries::constant(n, d, 1));
  std::map<Partition, Expansion> memo;
  for (int k = 1; k <= n; ++k) state = apply_series(state, k, n, d, p, b, dual, memo);
  auto it = state.find(lambda);
  return it == state.end() ? TruncatedSeries(n, d) : it->second;
}

}  // namespace

TruncatedSeries skew_G_series(const Partition& lambda, const Partition& mu, int n, int d, const Params& p) {
  return run_series(lambda, mu, n, d, p, false);
}

TruncatedSeries skew_G_dual_series(const Partition& lambda, const Partition& mu, int n, int d, const Params& p) {
  return run_series(lambda, mu, n, d, p, true);
}

bool verify_C_commutation(int max_size, int d, const Params& p) {
  for (const auto& mu : partitions_up_to(max_size)) {
    Bound b{std::nullopt, mu.size() + d};
    std::map<Partition, Expansion> memo;
    SeriesState s0;
    s0.emplace(mu, TruncatedSeries::constant(2, d, 1));
    SeriesState xy = apply_series(apply_series(s0, 1, 2, d, p, b, false, memo), 2, 2, d, p, b, false, memo);
    SeriesState yx = apply_series(apply_series(s0, 2, 2, d, p, b, false, memo), 1, 2, d, p, b, false, memo);
    auto clean = [](SeriesState& s) {
      for (auto it = s.begin(); it != s.end();) it = it->second.is_zero() ? s.erase(it) : std::next(it);
    };
    clean(xy);
    clean(yx);
    if (xy.size() != yx.size()) return false;
    for (const auto& [q, ser] : xy) {
      auto it = yx.find(q);
      if (it == yx.end() || !(it->second == ser)) return false;
    }
  }
  return true;
}

TruncatedSeries boundary_value(const Partition& mu, int d, const Params& p) {
  return skew_G_series(mu, mu, 1, d, p);
}

// ---------------------------------------------------------------- Schur extraction

namespace {

SchurExpansion extract(const Partition& lambda, const Partition& mu, int d, const Params& p, bool dual) {
  SchurExpansion out(d);
  if (!lambda.contains(mu)) return out;
  Bound b{lambda, 0};
  const BivarPoly c = dual ? -p.alpha : p.alpha;
  std::map<std::pair<Partition, int>, Expansion> memo;
  auto expansion = [&](const Partition& q, int cap) -> const Expansion& {
    auto key = std::make_pair(q, cap);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, dual ? expand_D(q, p, b, cap) : expand_C(q, p, b, cap)).first;
    return it->second;
  };
  // [x^e] y^m with y = x / (1 - c x)
  auto ycoef = [&](int e, int m) -> BivarPoly {
    if (m == 0) return e == 0 ? BivarPoly(1) : BivarPoly();
    if (m > e) return BivarPoly();
    return pow(c, e - m).scaled(binomial_std(e - 1, m - 1));
  };
  // states keyed by exponent prefix
  std::map<std::vector<int>, PartitionVector> prefix;
  prefix[{}] = PartitionVector::basis(mu);
  auto state_for = [&](auto&& self, const std::vector<int>& pre) -> const PartitionVector& {
    auto it = prefix.find(pre);
    if (it != prefix.end()) return it->second;
    std::vector<int> head(pre.begin(), pre.end() - 1);
    const int e = pre.back();
    PartitionVector prev = self(self, head);
    PartitionVector next;
    for (const auto& [q, coef] : prev.terms()) {
      const Expansion& ex = expansion(q, e);
      for (const auto& [nq, poly] : ex) {
        BivarPoly w;
        for (std::size_t m = 0; m < poly.size(); ++m)
          if (!poly[m].is_zero()) w += poly[m] * ycoef(e, static_cast<int>(m));
        if (!w.is_zero()) next.add(nq, coef * w);
      }
    }
    return prefix.emplace(pre, std::move(next)).first->second;
  };
  for (int deg = 0; deg <= d; ++deg) {
    // decreasing lexicographic order: dominant shapes first
    std::map<Partition, BivarPoly> found;
    for (const auto& c_part : partitions_of(deg)) {
      BivarPoly mono = state_for(state_for, c_part.parts()).get(lambda);
      for (const auto& [nu, a] : found) {
        long k = kostka(nu, c_part.parts());
        if (k) mono -= a.scaled(k);
      }
      if (!mono.is_zero()) {
        found.emplace(c_part, mono);
        out.add(c_part, mono);
      }
    }
  }
  return out;
}

}  // namespace

SchurExpansion schur_expand_G(const Partition& lambda, int d, const Params& p, const Partition& mu) {
  return extract(lambda, mu, d, p, false);
}

SchurExpansion schur_expand_G_dual(const Partition& lambda, int d, const Params& p, const Partition& mu) {
  return extract(lambda, mu, d, p, true);
}

// ---------------------------------------------------------------- branching

TruncatedSeries BranchingCoeff::series(int d, const Params& p) const {
  TruncatedSeries s(1, d);
  if (zero) return s;
  TruncatedSeries x = TruncatedSeries::variable(1, d, 1);
  TruncatedSeries num = TruncatedSeries::constant(1, d, 1) + x.scaled(p.beta);
  TruncatedSeries r = TruncatedSeries::constant(1, d, 1);
  for (int k = 0; k < x_power; ++k) r = r * x;
  for (int k = 0; k < num_power; ++k) r = r * num;
  // (1 - alpha x)^{-den}
  TruncatedSeries inv(1, d);
  for (int e = 0; e <= d; ++e) {
    BigInt c = den_power == 0 ? BigInt(e == 0 ? 1 : 0) : binomial_std(den_power + e - 1, e);
    if (c != 0) inv.add({e}, pow(p.alpha, e).scaled(c));
  }
  return r * inv;
}

BranchingCoeff branching_coeff_G(const Partition& lambda, const Partition& mu) {
  BranchingCoeff b;
  if (!lambda.contains(mu) || !is_horizontal_strip(SkewShape(lambda, mu))) return b;
  const Partition bar = lambda.drop_first_row();
  if (!mu.contains(bar)) return b;
  b.zero = false;
  const int strip = lambda.size() - mu.size();
  const int r = skew_stats(SkewShape(mu, bar)).r;
  b.x_power = strip;
  b.num_power = r;
  b.den_power = strip + r;
  return b;
}

}  // namespace groth
