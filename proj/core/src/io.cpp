#include "groth/io.hpp"

#include <cctype>
#include <sstream>

namespace groth {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<int> parse_int_list(const std::string& raw, const char* what) {
  std::string s = strip(raw);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    if (s.size() < 2 || (s.back() != ']' && s.back() != ')')) throw ParseError(std::string(what) + ": unbalanced brackets");
    s = strip(s.substr(1, s.size() - 2));
  }
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad integer '" + cur + "'");
    }
    if (pos != cur.size()) throw ParseError(std::string(what) + ": bad integer '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
    else cur += ch;
  }
  flush();
  return out;
}

}  // namespace

Partition parse_partition(const std::string& s) {
  std::vector<int> parts = parse_int_list(s, "partition");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw ParseError("partition: negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw ParseError("partition: parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

Permutation parse_permutation(const std::string& s) {
  try {
    return Permutation(parse_int_list(s, "permutation"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Rational parse_rational(const std::string& raw) {
  const std::string s = strip(raw);
  auto to_int = [&](const std::string& t) {
    const std::string u = strip(t);
    if (u.empty()) throw ParseError("rational: empty");
    std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) throw ParseError("rational: bad number '" + raw + "'");
    for (std::size_t k = i; k < u.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(u[k]))) throw ParseError("rational: bad number '" + raw + "'");
    return BigInt(u[0] == '+' ? u.substr(1) : u);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(to_int(s));
  BigInt den = to_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("rational: zero denominator");
  return Rational(to_int(s.substr(0, slash)), den);
}

// ---------------------------------------------------------------- expressions

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  SchurExpansion parse() {
    SchurExpansion v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool is_scalar(const SchurExpansion& f) {
    for (const auto& [k, v] : f.coeffs())
      if (!k.empty()) return false;
    return true;
  }

  static SchurExpansion multiply(const SchurExpansion& x, const SchurExpansion& y) {
    if (is_scalar(x) && !x.cutoff()) return y.scaled(x.get(Partition{}));
    if (is_scalar(y) && !y.cutoff()) return x.scaled(y.get(Partition{}));
    std::optional<int> d = x.cutoff() && y.cutoff() ? std::optional<int>(std::min(*x.cutoff(), *y.cutoff()))
                                                    : (x.cutoff() ? x.cutoff() : y.cutoff());
    return schur_multiply(x, y, d);
  }

  SchurExpansion expr() {
    SchurExpansion v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  SchurExpansion term() {
    SchurExpansion v = unary();
    while (eat('*')) v = multiply(v, unary());
    return v;
  }

  SchurExpansion unary() {
    if (eat('-')) return unary().scaled(BivarPoly(-1));
    if (eat('+')) return unary();
    return power();
  }

  SchurExpansion power() {
    SchurExpansion base = atom();
    if (!eat('^')) return base;
    skip();
    long e = integer();
    SchurExpansion r = SchurExpansion::one();
    for (long i = 0; i < e; ++i) r = multiply(r, base);
    return r;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  SchurExpansion atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SchurExpansion::schur(Partition{}, BivarPoly(BigInt(s_.substr(start, pos_ - start))));
    }
    if (c == 'a' || c == 'b') {
      ++pos_;
      return SchurExpansion::schur(Partition{}, c == 'a' ? BivarPoly::alpha() : BivarPoly::beta());
    }
    if (c == '(') {
      ++pos_;
      SchurExpansion v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 's') {
      ++pos_;
      if (!eat('[')) fail("expected '[' after s");
      std::size_t close = s_.find(']', pos_);
      if (close == std::string::npos) fail("expected ']'");
      Partition lam = parse_partition(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return SchurExpansion::schur(lam);
    }
    if (c == 'O') {
      ++pos_;
      if (!eat('(')) fail("expected '(' after O");
      long d = integer();
      if (!eat(')')) fail("expected ')'");
      return SchurExpansion(static_cast<int>(d - 1));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

SchurExpansion parse_schur(const std::string& s) { return ExprParser(s).parse(); }

BivarPoly parse_poly(const std::string& s) {
  SchurExpansion f = parse_schur(s);
  if (f.cutoff()) throw ParseError("polynomial: unexpected O(.) term");
  for (const auto& [k, v] : f.coeffs())
    if (!k.empty()) throw ParseError("polynomial: unexpected Schur function");
  return f.get(Partition{});
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json opt_json(std::optional<int> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::optional<int> opt_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

nlohmann::json to_json(const BivarPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) arr.push_back({t.i, t.j, t.c.str()});
  return arr;
}

BivarPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("json: polynomial must be an array");
  BivarPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("json: polynomial term must be [i, j, \"c\"]");
    const auto c = t[2].is_string() ? BigInt(t[2].get<std::string>()) : BigInt(t[2].get<long long>());
    p += BivarPoly::monomial(c, t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>());
  }
  return p;
}

nlohmann::json to_json(const SchurExpansion& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [lam, c] : f.coeffs()) coeffs.push_back({{"partition", lam.parts()}, {"poly", to_json(c)}});
  return {{"coeffs", coeffs},
          {"cutoff", opt_json(f.cutoff())},
          {"max_rows", opt_json(f.max_rows())},
          {"max_cols", opt_json(f.max_cols())}};
}

SchurExpansion schur_from_json(const nlohmann::json& j) {
  try {
    SchurExpansion f(opt_from(j, "cutoff"));
    f.set_max_rows(opt_from(j, "max_rows"));
    f.set_max_cols(opt_from(j, "max_cols"));
    for (const auto& e : j.at("coeffs")) f.add(Partition(e.at("partition").get<std::vector<int>>()), poly_from_json(e.at("poly")));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

nlohmann::json to_json(const TruncatedSeries& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", e}, {"poly", to_json(c)}});
  return {{"nvars", f.nvars()}, {"cutoff", f.cutoff()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  try {
    TruncatedSeries f(j.at("nvars").get<int>(), j.at("cutoff").get<int>());
    for (const auto& t : j.at("terms")) f.add(t.at("exponent").get<Exponent>(), poly_from_json(t.at("poly")));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j = {{"identity", r.identity},
                      {"instance", r.instance},
                      {"degree_checked", opt_json(r.degree_checked)},
                      {"status", r.pass ? "pass" : "fail"}};
  if (!r.pass) j["lhs_minus_rhs"] = r.lhs_minus_rhs;
  return j;
}

}  // namespace groth
