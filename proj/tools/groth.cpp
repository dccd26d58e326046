#include "groth/determinant.hpp"
#include "groth/identities.hpp"
#include "groth/io.hpp"
#include "groth/operators.hpp"
#include "groth/permutation.hpp"
#include "groth/tableaux.hpp"
#include "groth/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace groth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<int> nvars;
  std::optional<int> deg;
  std::string alpha = "a";
  std::string beta = "b";
  std::string format = "text";
};

Params params_of(const Common& c) {
  try {
    return Params{parse_poly(c.alpha), parse_poly(c.beta)};
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad --alpha/--beta: ") + e.what());
  }
}

std::string idx(const Partition& lam) { return lam.empty() ? "" : lam.to_string(); }

std::pair<Partition, Partition> parse_skew(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return {parse_partition(s), Partition{}};
  return {parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1))};
}

std::string hook_tableau_string(const HookTableau& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << (i ? " " : "") << "{";
    for (std::size_t k = 0; k < t[i].row.size(); ++k) os << (k ? "," : "") << t[i].row[k];
    if (!t[i].leg.empty()) {
      os << "|";
      for (std::size_t k = 0; k < t[i].leg.size(); ++k) os << (k ? "," : "") << t[i].leg[k];
    }
    os << "}";
  }
  return os.str();
}

std::string rbt_string(const RimBorderTableau& t) {
  std::ostringstream os;
  for (std::size_t r = 0; r < t.filling.size(); ++r) {
    os << (r ? " / " : "");
    bool first = true;
    for (int v : t.filling[r]) {
      if (v == 0) continue;
      os << (first ? "" : ",") << v;
      first = false;
    }
  }
  os << "  hooks=" << t.hooks.size() << " in=" << t.inner;
  return os.str();
}

void emit(const Common& c, const std::string& label, const nlohmann::json& payload, const std::string& text,
          const std::vector<std::string>& dump) {
  if (c.format == "json") {
    nlohmann::json j = {{"object", label}, {"value", payload}};
    if (!dump.empty()) j["tableaux"] = dump;
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& d : dump) std::cout << d << "\n";
  std::cout << label << " = " << text << "\n";
}

int cmd_expand(const std::string& kind, const std::string& index, const Common& c, bool dump_tableaux) {
  const Params p = params_of(c);
  std::vector<std::string> dump;
  if (kind == "G" || kind == "g") {
    const Partition lam = parse_partition(index);
    const int d = c.deg.value_or(lam.size() + 4);
    const std::string label = kind + "[" + idx(lam) + "]";
    if (c.nvars) {
      TruncatedSeries s(*c.nvars, d);
      if (kind == "G") {
        HookCallback cb = nullptr;
        if (dump_tableaux)
          cb = [&](const HookTableau& t, const BivarPoly& w) { dump.push_back(hook_tableau_string(t) + "  w=" + w.to_string()); };
        s = enum_G_tableaux(lam, GFamily::HookValued, *c.nvars, d, p, cb);
      } else {
        RbtCallback cb = nullptr;
        if (dump_tableaux)
          cb = [&](const RimBorderTableau& t, const BivarPoly& w) { dump.push_back(rbt_string(t) + "  w=" + w.to_string()); };
        s = enum_g_rbt(SkewShape(lam, Partition{}), *c.nvars, p, cb).truncated(d);
      }
      emit(c, label, to_json(s), s.to_string(), dump);
      return kExitOk;
    }
    SchurExpansion f = kind == "G" ? G_schur(lam, d, p) : g_schur(lam, p);
    emit(c, label, to_json(f), f.to_string(), dump);
    return kExitOk;
  }
  if (kind == "Gw") {
    const Permutation w = parse_permutation(index);
    const int d = c.deg.value_or(w.length() + 4);
    const int n = c.nvars.value_or(4);
    StableLimit s = stable_G_w(w, n, d, p);
    if (!s.stabilized) {
      std::cerr << "error: no stabilization for w = " << w.to_string() << "\n";
      return kExitFail;
    }
    const std::string label = "Gw[" + w.to_string() + "]";
    if (c.nvars) {
      emit(c, label, to_json(s.series), s.series.to_string(), dump);
    } else {
      SchurExpansion basis = expand_in_G_basis(s.schur, d, p).restricted_to_faithful();
      if (c.format == "json") {
        std::cout << nlohmann::json{{"object", label}, {"value", to_json(s.schur)}, {"G_basis", to_json(basis)}}.dump()
                  << "\n";
      } else {
        std::cout << label << " = " << s.schur.to_string() << "\n";
        std::string gb = basis.to_string();
        for (std::size_t pos = 0; (pos = gb.find("s[", pos)) != std::string::npos;) gb.replace(pos, 2, "G[");
        std::cout << label << " in G basis = " << gb << "\n";
      }
    }
    return kExitOk;
  }
  if (kind == "Gskew" || kind == "gskew") {
    auto [lam, mu] = parse_skew(index);
    if (!lam.contains(mu)) throw UsageError("skew shape: inner partition not contained in outer");
    const int size = lam.size() - mu.size();
    const int d = c.deg.value_or(size + 4);
    const std::string label = kind + "[" + idx(lam) + "/" + idx(mu) + "]";
    if (kind == "Gskew") {
      if (c.nvars) {
        TruncatedSeries s = skew_G_series(lam, mu, *c.nvars, d, p);
        emit(c, label, to_json(s), s.to_string(), dump);
      } else {
        SchurExpansion f = schur_expand_G(lam, d, p, mu);
        emit(c, label, to_json(f), f.to_string(), dump);
      }
      return kExitOk;
    }
    const int n = c.nvars.value_or(std::max(1, size));
    RbtCallback cb = nullptr;
    if (dump_tableaux)
      cb = [&](const RimBorderTableau& t, const BivarPoly& w) { dump.push_back(rbt_string(t) + "  w=" + w.to_string()); };
    TruncatedSeries s = enum_g_rbt(SkewShape(lam, mu), n, p, cb);
    if (c.nvars) {
      s = s.truncated(d);
      emit(c, label, to_json(s), s.to_string(), dump);
    } else {
      SchurExpansion f = series_to_schur(s);
      SchurExpansion exact;  // n >= |lambda/mu| variables determine every coefficient
      for (const auto& [k, v] : f.coeffs()) exact.add(k, v);
      emit(c, label, to_json(exact), exact.to_string(), dump);
    }
    return kExitOk;
  }
  throw UsageError("unknown kind '" + kind + "' (expected G, g, Gw, gskew, Gskew)");
}

int cmd_verify(const std::string& name, int max_weight, int deg, const Common& c) {
  const IdentityEntry* e = find_identity(name);
  if (!e) {
    std::string known;
    for (const auto& r : identity_registry()) known += " " + r.name;
    throw UsageError("unknown identity '" + name + "'; known:" + known);
  }
  VerifyOptions o;
  o.max_weight = max_weight;
  o.degree = deg;
  o.params = params_of(c);
  const auto reports = e->run(o);
  int failures = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    if (c.format == "json") std::cout << to_json(r).dump() << "\n";
    else
      std::cout << (r.pass ? "pass " : "FAIL ") << r.identity << " " << r.instance
                << (r.degree_checked ? " (to degree " + std::to_string(*r.degree_checked) + ")" : "")
                << (r.pass ? "" : ": " + r.lhs_minus_rhs) << "\n";
  }
  if (c.format != "json")
    std::cout << name << ": " << (reports.size() - failures) << "/" << reports.size() << " pass\n";
  return failures == 0 ? kExitOk : kExitFail;
}

std::string rational_string(const Rational& r) { return r.str(); }

int cmd_specialize(const std::string& kind, const std::string& index, const std::string& point, const Common& c) {
  if (kind != "g" && kind != "G") throw UsageError("specialize supports kinds g and G");
  const Partition lam = parse_partition(index);
  std::optional<int> ones;
  bool minus = false;
  std::optional<Rational> a, b;
  std::stringstream ss(point);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("specialization '" + item + "' is not of the form key=value");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "x") {
      const auto caret = val.find('^');
      if (caret == std::string::npos) throw UsageError("x must be 1^n or (-1)^n");
      const std::string base = val.substr(0, caret);
      if (base == "1") minus = false;
      else if (base == "(-1)" || base == "-1") minus = true;
      else throw UsageError("x must be 1^n or (-1)^n");
      ones = std::stoi(val.substr(caret + 1));
      if (*ones < 0) throw UsageError("n must be nonnegative");
    } else if (key == "alpha" || key == "a") {
      a = parse_rational(val);
    } else if (key == "beta" || key == "b") {
      b = parse_rational(val);
    } else {
      throw UsageError("unknown specialization key '" + key + "'");
    }
  }
  if (kind == "G" && ones) throw UsageError("G is an infinite series; x=1^n applies to g only");
  const int d = c.deg.value_or(lam.size() + 4);
  SchurExpansion f = kind == "g" ? g_schur(lam, params_of(c)) : G_schur(lam, d, params_of(c));
  const std::string label = kind + "[" + idx(lam) + "](" + point + ")";
  auto eval = [&](const BivarPoly& poly) -> std::string {
    if (!a && !b) return poly.to_string();
    if (a && b) return rational_string(poly.evaluate(*a, *b));
    // one parameter fixed: substitute an integer value if possible
    const Rational v = a ? *a : *b;
    if (denominator(v) != 1) throw UsageError("fix both alpha and beta to use rational values");
    BivarPoly iv(numerator(v));
    return (a ? poly.substitute(iv, BivarPoly::beta()) : poly.substitute(BivarPoly::alpha(), iv)).to_string();
  };
  if (ones) {
    BivarPoly v = minus ? evaluate_at_minus_ones(f, *ones) : evaluate_at_ones(f, *ones);
    const std::string out = eval(v);
    if (c.format == "json") std::cout << nlohmann::json{{"object", label}, {"value", out}}.dump() << "\n";
    else std::cout << label << " = " << out << "\n";
    return kExitOk;
  }
  std::string text;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [nu, poly] : f.coeffs()) {
    const std::string v = eval(poly);
    if (v == "0") continue;
    arr.push_back({{"partition", nu.parts()}, {"value", v}});
    const bool compound = v.find(' ') != std::string::npos;
    const bool neg = !compound && v[0] == '-';
    const std::string mag = neg ? v.substr(1) : v;
    text += text.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (compound) text += "(" + v + ")*";
    else if (mag != "1") text += mag + "*";
    text += "s[" + nu.to_string() + "]";
  }
  if (text.empty()) text = "0";
  if (f.cutoff()) text += " + O(" + std::to_string(*f.cutoff() + 1) + ")";
  if (c.format == "json") std::cout << nlohmann::json{{"object", label}, {"coeffs", arr}}.dump() << "\n";
  else std::cout << label << " = " << text << "\n";
  return kExitOk;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--nvars", c.nvars, "number of variables (series output)")->check(CLI::PositiveNumber);
  app->add_option("--deg", c.deg, "truncation degree D")->check(CLI::NonNegativeNumber);
  app->add_option("--alpha", c.alpha, "value of alpha (integer or expression in a, b)");
  app->add_option("--beta", c.beta, "value of beta (integer or expression in a, b)");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical stable Grothendieck functions G^(a,b) and their duals g^(a,b)"};
  app.require_subcommand(1);

  Common common;
  std::string kind, index, name, point;
  bool dump_tableaux = false;
  int max_weight = 4;
  int verify_deg = 6;

  auto* expand = app.add_subcommand("expand", "Schur expansion or monomial series of G, g, Gw, Gskew, gskew");
  expand->add_option("kind", kind, "G | g | Gw | Gskew | gskew")->required();
  expand->add_option("index", index, "partition (3,2,1), permutation (2,1,3) or skew shape (3,2/1)")->required();
  add_common(expand, common);
  expand->add_flag("--dump-tableaux", dump_tableaux, "list the tableaux behind a series (with --nvars)");

  auto* verify = app.add_subcommand("verify", "check an identity on a range of instances");
  verify->add_option("name", name, "identity name")->required();
  verify->add_option("--max-weight", max_weight, "largest partition weight checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--deg", verify_deg, "truncation degree for series identities")->check(CLI::NonNegativeNumber);
  verify->add_option("--alpha", common.alpha, "value of alpha");
  verify->add_option("--beta", common.beta, "value of beta");
  verify->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* list = app.add_subcommand("list", "list verifiable identities");

  auto* specialize = app.add_subcommand("specialize", "evaluate at x = 1^n, x = (-1)^n or numeric alpha, beta");
  specialize->add_option("kind", kind, "g | G")->required();
  specialize->add_option("index", index, "partition")->required();
  specialize->add_option("point", point, "x=1^n | x=(-1)^n | alpha=..,beta=.. (comma separated)")->required();
  add_common(specialize, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(kind, index, common, dump_tableaux);
    if (*verify) return cmd_verify(name, max_weight, verify_deg, common);
    if (*specialize) return cmd_specialize(kind, index, point, common);
    if (*list) {
      for (const auto& e : identity_registry()) std::cout << e.name << "  " << e.description << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
