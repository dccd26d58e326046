#include "groth/identities.hpp"

#include "groth/determinant.hpp"
#include "groth/operators.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace groth {

namespace {

std::string params_key(const Params& p) { return p.alpha.to_string() + "|" + p.beta.to_string(); }

Partition column(int k) { return Partition(std::vector<int>(std::max(k, 0), 1)); }
Partition row(int k) { return k > 0 ? Partition{k} : Partition{}; }

std::mutex cache_mutex;
std::map<std::tuple<Partition, int, std::string>, SchurExpansion> G_cache;
std::map<std::pair<Partition, std::string>, SchurExpansion> g_cache;

IdentityReport make_report(std::string identity, std::string instance, std::optional<int> degree,
                           const SchurExpansion& diff) {
  IdentityReport r{std::move(identity), std::move(instance), degree, diff.is_zero(), ""};
  if (!r.pass) r.lhs_minus_rhs = diff.to_string();
  return r;
}

IdentityReport make_report(std::string identity, std::string instance, std::optional<int> degree,
                           const TruncatedSeries& diff) {
  IdentityReport r{std::move(identity), std::move(instance), degree, diff.is_zero(), ""};
  if (!r.pass) r.lhs_minus_rhs = diff.to_string();
  return r;
}

SchurExpansion strip_cutoff_terms(SchurExpansion f) {
  // equality of truncated expansions compares the stored keys only
  SchurExpansion r(f.cutoff());
  for (const auto& [k, v] : f.coeffs()) r.add(k, v);
  return r;
}

}  // namespace

// ---------------------------------------------------------------- basis expansions

const SchurExpansion& G_schur(const Partition& lambda, int d, const Params& p) {
  auto key = std::make_tuple(lambda, d, params_key(p));
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = G_cache.find(key);
    if (it != G_cache.end()) return it->second;
  }
  SchurExpansion value = schur_expand_G(lambda, d, p);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return G_cache.emplace(key, std::move(value)).first->second;
}

const SchurExpansion& g_schur(const Partition& lambda, const Params& p) {
  auto key = std::make_pair(lambda, params_key(p));
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  SchurExpansion value = schur_expand_g(lambda, p);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return g_cache.emplace(key, std::move(value)).first->second;
}

SchurExpansion schur_expand_g(const Partition& lambda, const Params& p) {
  SchurExpansion out;
  for (const auto& nu : partitions_inside(lambda)) out.add(nu, f_alpha_beta_det(lambda, nu, FEntries::Positive, p));
  return out;
}

SchurExpansion schur_expand_s_in_G(const Partition& mu, int d, const Params& p) {
  SchurExpansion out(d);
  for (const auto& nu : partitions_containing(mu, d)) out.add(nu, f_alpha_beta_det(nu, mu, FEntries::Positive, p));
  return out;
}

SchurExpansion expand_in_G_basis(const SchurExpansion& f, int d, const Params& p) {
  const int cut = f.cutoff() ? std::min(*f.cutoff(), d) : d;
  SchurExpansion rest = f.truncated(cut);
  SchurExpansion out(cut);
  out.set_max_rows(f.max_rows());
  out.set_max_cols(f.max_cols());
  for (int deg = 0; deg <= cut; ++deg) {
    std::vector<std::pair<Partition, BivarPoly>> level;
    for (const auto& [nu, c] : rest.coeffs())
      if (nu.size() == deg && rest.faithful_for(nu)) level.emplace_back(nu, c);
    for (const auto& [nu, c] : level) {
      out.add(nu, c);
      rest -= G_schur(nu, cut, p).scaled(c);
    }
  }
  return out;
}

SchurExpansion expand_top_down(const SchurExpansion& f,
                               const std::function<SchurExpansion(const Partition&)>& basis) {
  if (f.cutoff()) throw std::invalid_argument("expand_top_down: input must be exact");
  SchurExpansion rest = f;
  SchurExpansion out;
  while (!rest.is_zero()) {
    auto [nu, c] = *rest.coeffs().rbegin();
    out.add(nu, c);
    rest -= basis(nu).scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------- Pieri rules

std::string to_string(PieriKind k) {
  switch (k) {
    case PieriKind::GType1Row: return "G-type1-row";
    case PieriKind::GType1Col: return "G-type1-col";
    case PieriKind::GType2H: return "G-type2-h";
    case PieriKind::GType2E: return "G-type2-e";
    case PieriKind::GType3H: return "G-type3-h";
    case PieriKind::GType3E: return "G-type3-e";
    case PieriKind::gType1Row: return "g-type1-row";
    case PieriKind::gType1Col: return "g-type1-col";
    case PieriKind::gType2H: return "g-type2-h";
    case PieriKind::gType2E: return "g-type2-e";
  }
  return "?";
}

std::optional<PieriKind> pieri_kind_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(PieriKind::gType2E); ++i) {
    auto k = static_cast<PieriKind>(i);
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

bool is_G_kind(PieriKind k) { return static_cast<int>(k) <= static_cast<int>(PieriKind::GType3E); }

namespace {

BivarPoly g_row_coeff(int k, const Partition& outer, const Partition& inner, const Params& p) {
  SkewShape s(outer, inner);
  if (!s.valid() || !is_horizontal_strip(s)) return {};
  const int j = k - s.size();
  if (j < 0) return {};
  const int rr = skew_stats(SkewShape(inner, outer.drop_first_row())).r;
  return pow(-p.gamma(), j).scaled(binomial_std(rr, j));
}

BivarPoly g_q_coeff(int k, const Partition& outer, const Partition& inner, const Params& p) {
  SkewShape s(outer, inner);
  if (!s.valid() || !is_horizontal_strip(s)) return {};
  const int sz = s.size();
  const int rr = skew_stats(SkewShape(inner, outer.drop_first_row())).r;
  BivarPoly total;
  for (int l = sz; l <= k; ++l) {
    BigInt c = binomial_std(rr, l - sz) * binomial_std(k - 1, l - 1);
    if (c == 0) continue;
    total += (pow(-p.gamma(), l - sz) * pow(-p.alpha, k - l)).scaled(c);
  }
  return total;
}

}  // namespace

BivarPoly pieri_coeff(PieriKind kind, int k, const Partition& outer, const Partition& inner, const Params& p) {
  if (!outer.contains(inner)) return {};
  SkewShape s(outer, inner);
  const SkewStats st = skew_stats(s);
  const int sz = s.size();
  const BivarPoly g = p.gamma();
  switch (kind) {
    case PieriKind::GType1Row:
      if (!is_horizontal_strip(s) || sz < k) return {};
      return pow(g, sz - k).scaled(binomial_std(st.r - 1, sz - k));
    case PieriKind::GType1Col:
      if (!is_vertical_strip(s) || sz < k) return {};
      return pow(g, sz - k).scaled(binomial_std(st.c - 1, sz - k));
    case PieriKind::GType2H:
      if (st.c != k) return {};
      return pow(g, sz - k);
    case PieriKind::GType2E:
      if (!is_vertical_strip(s) || sz < k) return {};
      return pow(g, sz - k).scaled(binomial_std(sz - st.c, k - st.c));
    case PieriKind::GType3H: {
      BigInt c = binomial_std(st.c - st.b, st.c - k);
      if (c == 0) return {};
      return (pow(p.beta, st.r - st.b) * pow(g, st.i) * pow(p.alpha, st.c - k)).scaled(c);
    }
    case PieriKind::GType3E: {
      BigInt c = binomial_std(st.r - st.b, st.r - k);
      if (c == 0) return {};
      return (pow(p.alpha, st.c - st.b) * pow(g, st.i) * pow(p.beta, st.r - k)).scaled(c);
    }
    case PieriKind::gType1Row: return g_row_coeff(k, outer, inner, p);
    case PieriKind::gType1Col: return g_row_coeff(k, outer.conjugate(), inner.conjugate(), p.swapped());
    case PieriKind::gType2H: return g_q_coeff(k, outer, inner, p);
    case PieriKind::gType2E: return g_q_coeff(k, outer.conjugate(), inner.conjugate(), p.swapped());
  }
  throw std::invalid_argument("pieri_coeff: unknown kind");
}

SchurExpansion pieri_generator(PieriKind kind, int k, int d, const Params& p) {
  switch (kind) {
    case PieriKind::GType1Row: return G_schur(row(k), d, p);
    case PieriKind::GType1Col: return G_schur(column(k), d, p);
    case PieriKind::GType2H: return h_substituted(k, -p.alpha, d);
    case PieriKind::GType2E: return e_substituted(k, -p.alpha, d);
    case PieriKind::GType3H: return SchurExpansion::schur(row(k)).truncated(d);
    case PieriKind::GType3E: return SchurExpansion::schur(column(k)).truncated(d);
    case PieriKind::gType1Row: return generator(GeneratorKind::gRow, k, d, p);
    case PieriKind::gType1Col: return generator(GeneratorKind::gCol, k, d, p);
    case PieriKind::gType2H: return SchurExpansion::schur(row(k));
    case PieriKind::gType2E: return SchurExpansion::schur(column(k));
  }
  throw std::invalid_argument("pieri_generator: unknown kind");
}

IdentityReport verify_pieri(PieriKind kind, int k, const Partition& inner, int d, const Params& p) {
  const std::string inst = "k=" + std::to_string(k) + " lambda=[" + inner.to_string() + "]";
  if (is_G_kind(kind)) {
    const bool type1 = kind == PieriKind::GType1Row || kind == PieriKind::GType1Col;
    const Params bp = type1 ? p : p.negated();
    SchurExpansion lhs = schur_multiply(pieri_generator(kind, k, d, p), G_schur(inner, d, bp), d);
    SchurExpansion rhs(d);
    for (const auto& nu : partitions_containing(inner, d)) {
      BivarPoly c = pieri_coeff(kind, k, nu, inner, p);
      if (!c.is_zero()) rhs += G_schur(nu, d, bp).scaled(c);
    }
    return make_report("pieri-" + to_string(kind), inst, d, strip_cutoff_terms(lhs - rhs));
  }
  SchurExpansion lhs = schur_multiply(pieri_generator(kind, k, d, p), g_schur(inner, p));
  SchurExpansion rhs;
  for (const auto& nu : partitions_containing(inner, inner.size() + k)) {
    BivarPoly c = pieri_coeff(kind, k, nu, inner, p);
    if (!c.is_zero()) rhs += g_schur(nu, p).scaled(c);
  }
  return make_report("pieri-" + to_string(kind), inst, std::nullopt, lhs - rhs);
}

IdentityReport v_decomposition_check(int k, const Partition& mu, const Partition& lambda, const Params& p) {
  const std::string inst = "k=" + std::to_string(k) + " mu/lambda=[" + mu.to_string() + "]/[" + lambda.to_string() + "]";
  BivarPoly closed = pieri_coeff(PieriKind::GType3H, k, mu, lambda, p);
  BivarPoly sum;
  if (mu.contains(lambda)) {
    for (const auto& nu : partitions_inside(mu)) {
      if (!nu.contains(lambda)) continue;
      SkewShape top(mu, nu);
      if (!is_vertical_strip(top)) continue;
      SkewShape bottom(nu, lambda);
      const int cb = skew_stats(bottom).c;
      const int ct = skew_stats(top).c;
      BigInt c = binomial_std(cb, k);
      if (c == 0) continue;
      sum += (pow(p.alpha, cb - k) * pow(p.gamma(), bottom.size() - cb) * pow(-p.alpha, ct) *
              pow(p.beta, top.size() - ct))
                 .scaled(c);
    }
  }
  SchurExpansion diff = SchurExpansion::schur(Partition{}, closed - sum);
  return make_report("v-decomposition", inst, std::nullopt, diff);
}

ZPoly g_branch_single(const Partition& lambda, const Partition& mu, const Params& p) {
  if (!lambda.contains(mu)) return {};
  return rbt_single_variable(SkewShape(lambda, mu), p);
}

// ---------------------------------------------------------------- generators

SchurExpansion generator(GeneratorKind kind, int k, int d, const Params& p) {
  switch (kind) {
    case GeneratorKind::GRow: return G_schur(row(k), d, p);
    case GeneratorKind::GCol: return G_schur(column(k), d, p);
    case GeneratorKind::gRow:
    case GeneratorKind::gCol: {
      SchurExpansion out;
      const bool is_row = kind == GeneratorKind::gRow;
      const BivarPoly& t = is_row ? p.alpha : p.beta;
      for (int i = 1; i <= k; ++i) out.add(is_row ? row(i) : column(i), pow(t, k - i).scaled(binomial_std(k - 1, i - 1)));
      if (k == 0) out.add(Partition{}, 1);
      return out;
    }
    case GeneratorKind::H:
    case GeneratorKind::E: {
      const bool is_h = kind == GeneratorKind::H;
      auto G = [&](int j) { return G_schur(is_h ? row(j) : column(j), d, p); };
      if (k == 0) return SchurExpansion::one().truncated(d) + G(1).scaled(p.gamma());
      return G(k) + G(k + 1).scaled(p.gamma());
    }
  }
  throw std::invalid_argument("generator: unknown kind");
}

namespace {

// Product over x-variables of a univariate factor built by `factor(j)`.
TruncatedSeries product_over(int n, int nv, int d, const std::function<TruncatedSeries(int)>& factor) {
  TruncatedSeries r = TruncatedSeries::constant(nv, d, 1);
  for (int j = 1; j <= n; ++j) r = r * factor(j);
  return r;
}

TruncatedSeries geometric(const TruncatedSeries& u, int d) {
  TruncatedSeries r = TruncatedSeries::constant(u.nvars(), d, 1);
  TruncatedSeries pw = r;
  for (int m = 1; m <= d; ++m) {
    pw = pw * u;
    if (pw.is_zero()) break;
    r += pw;
  }
  return r;
}

IdentityReport generating_series_check(bool rows, int n, int d, const Params& p) {
  const int nv = n + 1;
  const int t = n + 1;
  TruncatedSeries tv = TruncatedSeries::variable(nv, d, t);
  TruncatedSeries sum(nv, d);
  TruncatedSeries tpow = TruncatedSeries::constant(nv, d, 1);
  for (int k = 1; 2 * k - 1 <= d; ++k) {
    Partition lam = rows ? row(k) : column(k);
    TruncatedSeries Gk = bialternant_G(lam, n, d, p).extend_vars(nv);
    sum += Gk * tpow;
    tpow = tpow * tv;
  }
  TruncatedSeries lhs = TruncatedSeries::constant(nv, d, 1) + (TruncatedSeries::constant(nv, d, p.gamma()) + tv) * sum;
  TruncatedSeries rhs = product_over(n, nv, d, [&](int j) {
    TruncatedSeries x = TruncatedSeries::variable(nv, d, j);
    TruncatedSeries one = TruncatedSeries::constant(nv, d, 1);
    if (rows) return (one + x.scaled(p.beta)) * geometric(x.scaled(p.alpha) + x * tv, d);
    return (one + x.scaled(p.beta) + x * tv) * geometric(x.scaled(p.alpha), d);
  });
  return make_report(rows ? "H-series" : "E-series", "n=" + std::to_string(n), d, lhs - rhs);
}

}  // namespace

IdentityReport h_series_check(int n, int d, const Params& p) { return generating_series_check(true, n, d, p); }
IdentityReport e_series_check(int n, int d, const Params& p) { return generating_series_check(false, n, d, p); }

IdentityReport e0h0_check(int n, int d, const Params& p) {
  const Params q{-p.beta, -p.alpha};
  TruncatedSeries one = TruncatedSeries::constant(n, d, 1);
  TruncatedSeries e0 = one + bialternant_G({1}, n, d, p).scaled(p.gamma());
  TruncatedSeries h0 = one + bialternant_G({1}, n, d, q).scaled(q.gamma());
  return make_report("e0h0", "n=" + std::to_string(n), d, e0 * h0 - one);
}

IdentityReport h_ratio_check(int k, int n, int d, const Params& p) {
  auto series = [&](const SchurExpansion& f) { return schur_to_series(f.truncated(d), n, d); };
  TruncatedSeries hk = series(generator(GeneratorKind::H, k, d, p));
  TruncatedSeries h0 = series(generator(GeneratorKind::H, 0, d, p));
  TruncatedSeries ek = series(generator(GeneratorKind::E, k, d, p));
  TruncatedSeries e0 = series(generator(GeneratorKind::E, 0, d, p));
  TruncatedSeries dh = hk - h0 * substitute_rational(h_series(k, n, d), p.alpha);
  TruncatedSeries de = ek - e0 * substitute_rational(e_series(k, n, d), -p.beta);
  return make_report("h-e-ratio", "k=" + std::to_string(k) + " n=" + std::to_string(n), d, dh + de);
}

IdentityReport row_column_inverse_check(int m, const Params& p) {
  SchurExpansion total;
  for (int i = 0; i <= m; ++i) {
    SchurExpansion a = generator(GeneratorKind::gRow, i, 0, p);
    SchurExpansion b = generator(GeneratorKind::gCol, m - i, 0, p.swapped());
    // x -> -x multiplies the degree-k part by (-1)^k
    b = [&] {
      SchurExpansion r;
      for (const auto& [lam, c] : b.coeffs()) r.add(lam, lam.size() % 2 ? -c : c);
      return r;
    }();
    total += schur_multiply(a, b);
  }
  if (m == 0) total -= SchurExpansion::one();
  return make_report("row-column-inverse", "m=" + std::to_string(m), std::nullopt, total);
}

// ---------------------------------------------------------------- structure constants

StructureConstants structure_constants_G(const Partition& lambda, const Partition& mu, int d, const Params& p) {
  auto at = [&](int dd) {
    SchurExpansion prod = schur_multiply(G_schur(lambda, dd, p), G_schur(mu, dd, p), dd);
    return expand_in_G_basis(prod, dd, p);
  };
  StructureConstants r;
  r.coeffs = at(d);
  SchurExpansion next = at(d + 1);
  r.stable = strip_cutoff_terms(next.truncated(d)) == strip_cutoff_terms(r.coeffs) && next.max_degree() <= d;
  return r;
}

SchurExpansion structure_constants_g(const Partition& lambda, const Partition& mu, const Params& p) {
  SchurExpansion prod = schur_multiply(g_schur(lambda, p), g_schur(mu, p));
  return expand_top_down(prod, [&](const Partition& nu) { return g_schur(nu, p); });
}

// ---------------------------------------------------------------- canonical basis

SchurExpansion g_beta_column(int k) {
  return generator(GeneratorKind::gCol, k, 0, Params{BivarPoly(), BivarPoly::beta()});
}

CanonicalTable canonical_recursion(int k_max) {
  CanonicalTable t;
  t.k_max = k_max;
  t.p.assign(k_max + 1, std::vector<BivarPoly>(k_max + 1));
  t.pp.assign(k_max + 1, std::vector<BivarPoly>(k_max + 1));
  t.C.assign(k_max + 1, SchurExpansion());
  const BivarPoly a = BivarPoly::alpha();
  for (int k = 1; k <= k_max; ++k) {
    t.p[k][k] = 1;
    t.pp[k][k] = 1;
    for (int i = k - 1; i >= 1; --i) {
      BivarPoly rhs;
      for (int j = i + 1; j <= k; ++j)
        rhs += t.pp[k][j].swapped() * pow(a, j - i).scaled(binomial_std(j - 1, i - 1));
      BivarPoly up;
      BivarPoly down;
      for (const auto& term : rhs.terms()) {
        BivarPoly m = BivarPoly::monomial(term.c, term.i, term.j);
        if (term.i > term.j) up += m;
        else if (term.i < term.j) down += m;
        else
          t.ambiguities.push_back("k=" + std::to_string(k) + " i=" + std::to_string(i) + " term " + m.to_string());
      }
      t.p[k][i] = up;
      t.pp[k][i] = (-down).swapped();
    }
    SchurExpansion c;
    for (int i = 1; i <= k; ++i) c.add(row(i), t.p[k][i]);
    t.C[k] = c;
  }
  return t;
}

SchurExpansion g_in_gbeta_expansion(const Partition& lambda, const Params& p) {
  const Params q{BivarPoly(), p.beta};
  return expand_top_down(g_schur(lambda, p), [&](const Partition& nu) { return g_schur(nu, q); });
}

// ---------------------------------------------------------------- specializations

BivarPoly evaluate_at_ones(const SchurExpansion& f, int n) {
  BivarPoly r;
  for (const auto& [lam, c] : f.coeffs()) r += c.scaled(schur_at_ones(lam, n));
  return r;
}

BivarPoly evaluate_at_minus_ones(const SchurExpansion& f, int n) {
  BivarPoly r;
  for (const auto& [lam, c] : f.coeffs()) {
    BigInt v = schur_at_ones(lam, n);
    r += c.scaled(lam.size() % 2 ? BigInt(-v) : v);
  }
  return r;
}

BigInt g532_closed_form(int n) {
  BigInt N = n;
  BigInt num = N * (N + 1) * (N + 1) * (N + 2) * (N + 2) * (N + 3) * (N + 4) * (15 * N * N * N + 58 * N * N + 71 * N + 24);
  if (num % 120960 != 0) throw std::logic_error("g532_closed_form: not an integer");
  return num / 120960;
}

BigInt rectangle_rpp_count(int k, int m, int n) {
  Rational r = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= k; ++j) r *= Rational(n + m - 1 + j - i, m + k - i - j + 1);
  if (denominator(r) != 1) throw std::logic_error("rectangle_rpp_count: not an integer");
  return numerator(r);
}

BigInt row_col_strict_det(const Partition& lambda, int n) {
  const int l = lambda.length();
  Matrix<BivarPoly> m(l, std::vector<BivarPoly>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = BivarPoly(binomial(-n + lambda[i - 1] - 1, lambda[i - 1] - i + j));
  return determinant(m).constant_term();
}

BigInt rpp_count_det(const Partition& lambda, int n) {
  const Partition c = lambda.conjugate();
  const int l = c.length();
  Matrix<BivarPoly> m(l, std::vector<BivarPoly>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = BivarPoly(binomial(n + c[i - 1] - 1, c[i - 1] - i + j));
  return determinant(m).constant_term();
}

SchurExpansion giambelli_counterexample(const Params& p) {
  return schur_multiply(g_schur({2, 1}, p), g_schur({1}, p)) - schur_multiply(g_schur({2}, p), g_schur({1, 1}, p));
}

}  // namespace groth
