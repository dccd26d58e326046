#include "groth/verify.hpp"

#include "groth/determinant.hpp"
#include "groth/operators.hpp"
#include "groth/permutation.hpp"
#include "groth/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace groth {

std::vector<IdentityReport> run_parallel(const std::vector<std::function<IdentityReport()>>& jobs, unsigned threads) {
  std::vector<IdentityReport> out(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& e) {
        out[i] = IdentityReport{"error", std::to_string(i), std::nullopt, false, e.what()};
      }
    }
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

namespace {

using Jobs = std::vector<std::function<IdentityReport()>>;

IdentityReport report(std::string identity, std::string instance, std::optional<int> degree,
                      const SchurExpansion& diff) {
  IdentityReport r{std::move(identity), std::move(instance), degree, diff.is_zero(), ""};
  if (!r.pass) r.lhs_minus_rhs = diff.to_string();
  return r;
}

IdentityReport report(std::string identity, std::string instance, std::optional<int> degree, bool ok,
                      const std::string& detail) {
  return IdentityReport{std::move(identity), std::move(instance), degree, ok, ok ? "" : detail};
}

std::string lam_str(const Partition& l) { return l.empty() ? "[]" : "[" + l.to_string() + "]"; }

SchurExpansion drop_bounds(const SchurExpansion& f) {
  SchurExpansion r;
  for (const auto& [k, v] : f.coeffs()) r.add(k, v);
  return r;
}

std::vector<IdentityReport> run_pieri_g_type1(const VerifyOptions& o) {
  Jobs jobs;
  for (const auto& mu : partitions_up_to(o.max_weight))
    for (int k = 1; k <= 3; ++k)
      for (PieriKind kind : {PieriKind::gType1Row, PieriKind::gType1Col})
        jobs.push_back([=] { return verify_pieri(kind, k, mu, 0, o.params); });
  return run_parallel(jobs, o.threads);
}

std::vector<IdentityReport> run_omega_duality(const VerifyOptions& o) {
  Jobs jobs;
  for (const auto& lam : partitions_up_to(o.max_weight)) {
    jobs.push_back([=] {
      SchurExpansion lhs = omega(G_schur(lam, o.degree, o.params));
      SchurExpansion rhs = G_schur(lam.conjugate(), o.degree, o.params.swapped());
      return report("omega-duality-G", lam_str(lam), o.degree, drop_bounds(lhs - rhs));
    });
    jobs.push_back([=] {
      SchurExpansion lhs = omega(g_schur(lam, o.params));
      SchurExpansion rhs = g_schur(lam.conjugate(), o.params.swapped());
      return report("omega-duality-g", lam_str(lam), std::nullopt, lhs - rhs);
    });
  }
  return run_parallel(jobs, o.threads);
}

std::vector<IdentityReport> run_hall_duality(const VerifyOptions& o) {
  Jobs jobs;
  const auto parts = partitions_up_to(o.max_weight);
  for (const auto& lam : parts)
    jobs.push_back([=] {
      std::string bad;
      for (const auto& mu : parts) {
        BivarPoly v = hall_inner(g_schur(lam, o.params), G_schur(mu, o.degree, o.params.negated()));
        BivarPoly expect = lam == mu ? BivarPoly(1) : BivarPoly();
        if (v != expect) bad += "<g" + lam_str(lam) + ",G" + lam_str(mu) + "> = " + v.to_string() + "; ";
      }
      return report("hall-duality", "lambda=" + lam_str(lam), o.degree, bad.empty(), bad);
    });
  return run_parallel(jobs, o.threads);
}

std::vector<IdentityReport> run_jt_g(const VerifyOptions& o) {
  Jobs jobs;
  for (const auto& lam : partitions_up_to(o.max_weight))
    jobs.push_back([=] {
      SchurExpansion ref = g_schur(lam, o.params);
      SchurExpansion h = jacobi_trudi_g(lam, JTForm::H, o.params);
      SchurExpansion e = jacobi_trudi_g(lam, JTForm::E, o.params);
      std::string bad;
      if (h != ref) bad += "H-form: " + (h - ref).to_string() + "; ";
      if (e != ref) bad += "E-form: " + (e - ref).to_string() + "; ";
      return report("jt-g", lam_str(lam), std::nullopt, bad.empty(), bad);
    });
  return run_parallel(jobs, o.threads);
}

std::vector<IdentityReport> run_schur_positive(const VerifyOptions& o) {
  Jobs jobs;
  for (const auto& lam : partitions_up_to(o.max_weight))
    jobs.push_back([=] {
      std::string bad;
      for (const auto& [nu, c] : g_schur(lam, o.params).coeffs())
        if (!c.nonnegative()) bad += lam_str(nu) + ": " + c.to_string() + "; ";
      return report("schur-positive", lam_str(lam), std::nullopt, bad.empty(), bad);
    });
  return run_parallel(jobs, o.threads);
}

std::vector<IdentityReport> run_canonical_basis(const VerifyOptions& o) {
  const int k_max = std::max(1, o.max_weight);
  const CanonicalTable t = canonical_recursion(k_max);
  std::vector<IdentityReport> out;
  out.push_back(report("canonical-basis-ambiguity", "k<=" + std::to_string(k_max), std::nullopt,
                       t.ambiguities.empty(), t.ambiguities.empty() ? "" : t.ambiguities.front()));
  const BivarPoly a = BivarPoly::alpha();
  for (int k = 1; k <= k_max; ++k) {
    SchurExpansion expect;
    for (int i = 1; i <= k; ++i) expect.add(Partition{i}, pow(a, k - i).scaled(binomial_std(k - 1, i - 1)));
    std::string bad;
    if (!t.p[k][k].is_one() || !t.pp[k][k].is_one()) bad += "leading coefficient not 1; ";
    if (t.C[k] != expect) bad += "C_k: " + (t.C[k] - expect).to_string() + "; ";
    SchurExpansion dual;
    for (int i = 1; i <= k; ++i) dual += g_beta_column(i).scaled(t.pp[k][i]);
    SchurExpansion diff = omega(bar(t.C[k])) - dual;
    if (!diff.is_zero()) bad += "omega-bar: " + diff.to_string() + "; ";
    out.push_back(report("canonical-basis", "k=" + std::to_string(k), std::nullopt, bad.empty(), bad));
  }
  return out;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<IdentityReport> run_stable_limit(const VerifyOptions& o) {
  Jobs jobs;
  const int n = std::clamp(o.max_weight, 1, 5);
  const int nvars = 3;
  for (const auto& w : permutations_of(n)) {
    if (!w.is_grassmannian()) continue;
    jobs.push_back([=] {
      StableLimit s = stable_G_w(w, nvars, o.degree, o.params);
      TruncatedSeries ref = bialternant_G(w.grassmannian_partition(), nvars, o.degree, o.params);
      bool ok = s.stabilized && s.series == ref;
      std::string detail = s.stabilized ? (s.series - ref).to_string() : "no stabilization";
      return report("stable-limit", "w=" + w.to_string(), o.degree, ok, detail);
    });
  }
  return run_parallel(jobs, o.threads);
}

std::vector<IdentityReport> run_relations(const VerifyOptions& o) {
  RelationReport r = verify_relations(o.max_weight, o.max_weight + 1, o.params);
  std::string detail;
  for (const auto& f : r.failures) detail += f + "; ";
  return {report("relations", "|lambda|<=" + std::to_string(o.max_weight) + " checks=" + std::to_string(r.checks),
                 std::nullopt, r.ok(), detail)};
}

std::vector<IdentityReport> run_cauchy(const VerifyOptions& o) {
  // sum_lambda G^(-a,-b)_lambda(y1,y2) g_lambda(x1,x2) = prod_{i,j} 1/(1 - x_i y_j)
  const int d = o.degree;
  const int nv = 4;
  TruncatedSeries lhs(nv, d);
  for (const auto& lam : partitions_up_to(d)) {
    if (lam.length() > 2) continue;
    TruncatedSeries gx = schur_to_series(g_schur(lam, o.params), 2, d).extend_vars(nv);
    TruncatedSeries Gy(nv, d);
    const TruncatedSeries G = bialternant_G(lam, 2, d, o.params.negated());
    for (const auto& [e, c] : G.terms()) Gy.add({0, 0, e[0], e[1]}, c);
    lhs += gx * Gy;
  }
  TruncatedSeries rhs = TruncatedSeries::constant(nv, d, 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= 4; ++j) {
      TruncatedSeries u = TruncatedSeries::variable(nv, d, i) * TruncatedSeries::variable(nv, d, j);
      TruncatedSeries geo = TruncatedSeries::constant(nv, d, 1);
      TruncatedSeries pw = geo;
      for (int m = 1; 2 * m <= d; ++m) {
        pw = pw * u;
        geo += pw;
      }
      rhs = rhs * geo;
    }
  TruncatedSeries diff = lhs - rhs;
  return {report("cauchy", "x1,x2;y1,y2", d, diff.is_zero(), diff.to_string())};
}

}  // namespace

const std::vector<IdentityEntry>& identity_registry() {
  static const std::vector<IdentityEntry> reg = {
      {"pieri-g-type1", "g_(k) g_mu and g_(1^k) g_mu against the row and column rules", run_pieri_g_type1},
      {"omega-duality", "omega G_lambda = G^(b,a)_lambda' (truncated) and omega g_lambda = g^(b,a)_lambda'",
       run_omega_duality},
      {"hall-duality", "<g_lambda, G^(-a,-b)_mu> = delta", run_hall_duality},
      {"jt-g", "h-form and e-form determinants against the f-coefficient expansion", run_jt_g},
      {"schur-positive", "Schur coefficients of g_lambda lie in N[a,b]", run_schur_positive},
      {"canonical-basis", "triangular recursion for the canonical generators", run_canonical_basis},
      {"stable-limit", "stable limits of Grassmannian permutations against the bialternant", run_stable_limit},
      {"relations", "Schur operator and deformed operator relations", run_relations},
      {"cauchy", "sum G^(-a,-b)_lambda(y) g_lambda(x) = prod 1/(1 - x_i y_j)", run_cauchy},
  };
  return reg;
}

const IdentityEntry* find_identity(const std::string& name) {
  for (const auto& e : identity_registry())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace groth
