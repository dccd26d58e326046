#include "groth/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace groth {

int HookEntry::max() const {
  int m = row.back();
  if (!leg.empty()) m = std::max(m, leg.back());
  return m;
}

BivarPoly hook_weight(const HookTableau& t, const Params& p) {
  long a = 0, b = 0;
  for (const auto& h : t) {
    a += h.arm();
    b += static_cast<long>(h.leg.size());
  }
  return pow(p.alpha, a) * pow(p.beta, b);
}

Exponent hook_monomial(const HookTableau& t, int n) {
  Exponent e(n, 0);
  for (const auto& h : t) {
    for (int v : h.row) ++e[v - 1];
    for (int v : h.leg) ++e[v - 1];
  }
  return e;
}

namespace {

// Cache of alpha^a beta^b gamma^g for one parameter choice.
class WeightCache {
 public:
  explicit WeightCache(const Params& p) : p_(p) {}
  const BivarPoly& get(int a, int b, int g) {
    auto key = std::make_tuple(a, b, g);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, pow(p_.alpha, a) * pow(p_.beta, b) * pow(p_.gamma(), g)).first;
    return it->second;
  }

 private:
  Params p_;
  std::map<std::tuple<int, int, int>, BivarPoly> cache_;
};

std::vector<std::pair<int, int>> cells_of(const Partition& lambda) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) cells.emplace_back(r, c);
  return cells;
}

}  // namespace

TruncatedSeries enum_G_tableaux(const Partition& lambda, GFamily family, int n, int d, const Params& p,
                                const HookCallback& cb) {
  TruncatedSeries out(n, d);
  const auto cells = cells_of(lambda);
  const int ncells = static_cast<int>(cells.size());
  if (ncells > d) return out;
  if (ncells == 0) {
    out.add(Exponent(n, 0), 1);
    if (cb) cb({}, 1);
    return out;
  }
  WeightCache wc(p);
  std::map<Exponent, BivarPoly> acc;
  HookTableau cur(ncells);
  Exponent x(n, 0);
  // index of the box in row-major order
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < ncells; ++k) index[cells[k]] = k;

  // weight exponents accumulated so far
  int ea = 0, eb = 0, eg = 0;

  auto rec = [&](auto&& self, int k, int used) -> void {
    if (k == ncells) {
      const BivarPoly& w = wc.get(ea, eb, eg);
      acc[x] += w;
      if (cb) cb(cur, w);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 1) lo = std::max(lo, cur[index[{r, c - 1}]].max());
    if (r > 1) lo = std::max(lo, cur[index[{r - 1, c}]].max() + 1);
    const int budget = d - used - (ncells - k - 1);  // entries available for this box
    HookEntry& h = cur[k];
    for (int corner = lo; corner <= n; ++corner) {
      h.row.assign(1, corner);
      h.leg.clear();
      ++x[corner - 1];
      // arm: weakly increasing continuation of h.row
      auto arm_rec = [&](auto&& arm_self, int count) -> void {
        // leg: strictly increasing entries above the corner
        auto leg_rec = [&](auto&& leg_self, int cnt) -> void {
          // box weight exponents
          int da = 0, db = 0, dg = 0;
          if (family == GFamily::HookValued) {
            da = h.arm();
            db = static_cast<int>(h.leg.size());
          } else if (family == GFamily::SetValued) {
            db = static_cast<int>(h.leg.size());
          } else {
            int distinct = 1;
            for (std::size_t q = 1; q < h.row.size(); ++q)
              if (h.row[q] != h.row[q - 1]) ++distinct;
            da = static_cast<int>(h.row.size()) - distinct;
            dg = distinct - 1;
          }
          ea += da;
          eb += db;
          eg += dg;
          self(self, k + 1, used + cnt);
          ea -= da;
          eb -= db;
          eg -= dg;
          if (family == GFamily::MultisetValued) return;
          if (cnt >= budget) return;
          int start = h.leg.empty() ? corner + 1 : h.leg.back() + 1;
          for (int v = start; v <= n; ++v) {
            h.leg.push_back(v);
            ++x[v - 1];
            leg_self(leg_self, cnt + 1);
            --x[v - 1];
            h.leg.pop_back();
          }
        };
        leg_rec(leg_rec, count);
        if (family == GFamily::SetValued) return;
        if (count >= budget) return;
        for (int v = h.row.back(); v <= n; ++v) {
          h.row.push_back(v);
          ++x[v - 1];
          arm_self(arm_self, count + 1);
          --x[v - 1];
          h.row.pop_back();
        }
      };
      arm_rec(arm_rec, 1);
      --x[corner - 1];
    }
  };
  rec(rec, 0, 0);
  for (const auto& [e, v] : acc) out.add(e, v);
  return out;
}

// ---------------------------------------------------------------- rim border tableaux

bool on_border(const std::vector<std::vector<int>>& filling, const SkewShape& s, int r, int c) {
  const int v = filling[r - 1][c - 1];
  for (int k = 1; r - k >= 1 && c - k >= 1; ++k)
    if (s.has_cell(r - k, c - k) && filling[r - k - 1][c - k - 1] == v) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Enumerate all RPP fillings of s with entries in [1, n].
void for_each_rpp(const SkewShape& s, int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  const auto cells = s.cells();
  const int rows = s.outer.length();
  std::vector<std::vector<int>> fill(rows, std::vector<int>(std::max(1, s.outer[0]), 0));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      f(fill);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (s.has_cell(r, c - 1)) lo = std::max(lo, fill[r - 1][c - 2]);
    if (s.has_cell(r - 1, c)) lo = std::max(lo, fill[r - 2][c - 1]);
    for (int v = lo; v <= n; ++v) {
      fill[r - 1][c - 1] = v;
      self(self, k + 1);
    }
    fill[r - 1][c - 1] = 0;
  };
  rec(rec, 0);
}

}  // namespace

TruncatedSeries enum_g_rbt(const SkewShape& s, int n, const Params& p, const RbtCallback& cb) {
  if (!s.valid()) throw std::invalid_argument("enum_g_rbt: invalid skew shape");
  const auto cells = s.cells();
  const int N = static_cast<int>(cells.size());
  const int deg_bound = N;
  TruncatedSeries out(n, deg_bound);
  if (N == 0) {
    out.add(Exponent(n, 0), 1);
    return out;
  }
  WeightCache wc(p);
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < N; ++k) index[cells[k]] = k;
  std::map<Exponent, BivarPoly> acc;

  for_each_rpp(s, n, [&](const std::vector<std::vector<int>>& fill) {
    std::vector<bool> border(N);
    int inner = 0;
    for (int k = 0; k < N; ++k) {
      border[k] = on_border(fill, s, cells[k].first, cells[k].second);
      if (!border[k]) ++inner;
    }
    auto val = [&](int k) { return fill[cells[k].first - 1][cells[k].second - 1]; };
    std::vector<std::pair<int, int>> horiz, vert;
    for (int k = 0; k < N; ++k) {
      if (!border[k]) continue;
      auto [r, c] = cells[k];
      auto it = index.find({r, c + 1});
      if (it != index.end() && border[it->second] && val(it->second) == val(k)) horiz.emplace_back(k, it->second);
      it = index.find({r + 1, c});
      if (it != index.end() && border[it->second] && val(it->second) == val(k)) vert.emplace_back(k, it->second);
    }
    const std::size_t H = horiz.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << H); ++mask) {
      Dsu dsu(N);
      for (auto [a, b] : vert) dsu.unite(a, b);
      for (std::size_t h = 0; h < H; ++h)
        if (!(mask & (std::size_t{1} << h))) dsu.unite(horiz[h].first, horiz[h].second);
      std::map<int, std::vector<int>> groups;
      for (int k = 0; k < N; ++k)
        if (border[k]) groups[dsu.find(k)].push_back(k);
      int wt = 0, ht = 0;
      Exponent x(n, 0);
      for (const auto& [root, members] : groups) {
        std::set<int> rs, cs;
        for (int k : members) {
          rs.insert(cells[k].first);
          cs.insert(cells[k].second);
        }
        wt += static_cast<int>(cs.size()) - 1;
        ht += static_cast<int>(rs.size()) - 1;
        ++x[val(members.front()) - 1];
      }
      const BivarPoly& w = wc.get(wt, ht, inner);
      acc[x] += w;
      if (cb) {
        RimBorderTableau t{s, fill, {}, {}, inner, wt, ht};
        for (const auto& [root, members] : groups) {
          std::vector<std::pair<int, int>> hook;
          for (int k : members) hook.push_back(cells[k]);
          t.hooks.push_back(hook);
          t.hook_value.push_back(val(members.front()));
        }
        cb(t, w);
      }
    }
  });
  for (const auto& [e, v] : acc) out.add(e, v);
  return out;
}

TruncatedSeries enum_g_rbt(const Partition& lambda, int n, const Params& p) {
  return enum_g_rbt(SkewShape(lambda, Partition{}), n, p);
}

ZPoly rbt_single_variable(const SkewShape& s, const Params& p) {
  SkewStats st = skew_stats(s);
  // z^b (z + alpha)^{c-b}
  ZPoly z(st.c + 1);
  const BivarPoly front = pow(p.beta, st.r - st.b) * pow(p.gamma(), st.i);
  for (int k = 0; k <= st.c - st.b; ++k)
    z[st.b + k] = (front * pow(p.alpha, st.c - st.b - k)).scaled(binomial_std(st.c - st.b, k));
  while (!z.empty() && z.back().is_zero()) z.pop_back();
  return z;
}

ZPoly rbt_single_variable_enum(const SkewShape& s, const Params& p) {
  TruncatedSeries t = enum_g_rbt(s, 1, p);
  ZPoly z;
  for (const auto& [e, v] : t.terms()) {
    if (static_cast<int>(z.size()) <= e[0]) z.resize(e[0] + 1);
    z[e[0]] += v;
  }
  while (!z.empty() && z.back().is_zero()) z.pop_back();
  return z;
}

long lattice_forest_check(const Partition& lambda, int n) {
  const SkewShape s(lambda, Partition{});
  const auto cells = s.cells();
  const int N = static_cast<int>(cells.size());
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < N; ++k) index[cells[k]] = k;
  long checked = 0;
  // forests seen across all RBT: edges as (cell, cell, horizontal?) sets
  std::set<std::pair<std::vector<std::vector<int>>, std::set<std::pair<int, int>>>> seen;
  Params generic;
  enum_g_rbt(s, n, generic, [&](const RimBorderTableau& t, const BivarPoly& w) {
    ++checked;
    auto val = [&](int k) { return t.filling[cells[k].first - 1][cells[k].second - 1]; };
    std::vector<bool> border(N, false);
    std::set<std::pair<int, int>> hook_edges;
    for (const auto& hook : t.hooks) {
      for (auto rc : hook) border[index.at(rc)] = true;
      // chain: consecutive boxes along the ribbon are edge-adjacent
      for (auto a : hook)
        for (auto b : hook) {
          int ka = index.at(a), kb = index.at(b);
          bool adj = (a.first == b.first && b.second == a.second + 1) || (a.second == b.second && b.first == a.first + 1);
          if (adj) hook_edges.emplace(ka, kb);
        }
    }
    std::vector<int> inner;
    for (int k = 0; k < N; ++k)
      if (!border[k]) inner.push_back(k);
    BivarPoly total;
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
      std::set<std::pair<int, int>> edges = hook_edges;
      for (std::size_t q = 0; q < inner.size(); ++q) {
        auto [r, c] = cells[inner[q]];
        int other = (mask >> q) & 1 ? index.at({r, c - 1}) : index.at({r - 1, c});
        if (val(other) != val(inner[q])) throw std::logic_error("lattice forest: edge joins different labels");
        edges.emplace(other, inner[q]);
      }
      // forest: acyclic
      Dsu dsu(N);
      long horiz = 0, vertical = 0;
      for (auto [a, b] : edges) {
        if (dsu.find(a) == dsu.find(b)) throw std::logic_error("lattice forest: cycle");
        dsu.unite(a, b);
        if (cells[a].first == cells[b].first) ++horiz; else ++vertical;
      }
      // decode: border boxes are those without an up-left same label; hooks
      // are the components of edges between border boxes
      Dsu dec(N);
      for (auto [a, b] : edges) {
        bool ba = on_border(t.filling, s, cells[a].first, cells[a].second);
        bool bb = on_border(t.filling, s, cells[b].first, cells[b].second);
        if (ba && bb) dec.unite(a, b);
      }
      std::set<std::set<int>> decoded, original;
      std::map<int, std::set<int>> comp;
      for (int k = 0; k < N; ++k)
        if (border[k]) comp[dec.find(k)].insert(k);
      for (auto& [root, m] : comp) decoded.insert(m);
      for (const auto& hook : t.hooks) {
        std::set<int> m;
        for (auto rc : hook) m.insert(index.at(rc));
        original.insert(m);
      }
      if (decoded != original) throw std::logic_error("lattice forest: decoding mismatch");
      if (!seen.emplace(t.filling, edges).second) throw std::logic_error("lattice forest: not injective");
      total += pow(BivarPoly::alpha(), horiz) * pow(BivarPoly::beta(), vertical);
    }
    if (total != w) throw std::logic_error("lattice forest: weight mismatch");
  });
  return checked;
}

// ---------------------------------------------------------------- elegant and dual hook

namespace {

// SSYT fillings of mu/nu with row-specific bounds [lo(r), hi(r)].
void for_each_ssyt(const SkewShape& s, const std::function<std::pair<int, int>(int row)>& bounds,
                   const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  const auto cells = s.cells();
  const int rows = std::max(1, s.outer.length());
  std::vector<std::vector<int>> fill(rows, std::vector<int>(std::max(1, s.outer[0]), 0));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      f(fill);
      return;
    }
    auto [r, c] = cells[k];
    auto [lo, hi] = bounds(r);
    if (s.has_cell(r, c - 1)) lo = std::max(lo, fill[r - 1][c - 2]);
    if (s.has_cell(r - 1, c)) lo = std::max(lo, fill[r - 2][c - 1] + 1);
    for (int v = lo; v <= hi; ++v) {
      fill[r - 1][c - 1] = v;
      self(self, k + 1);
    }
    fill[r - 1][c - 1] = 0;
  };
  rec(rec, 0);
}

}  // namespace

long enum_elegant(const Partition& mu, const Partition& nu) {
  if (!mu.contains(nu)) return 0;
  long count = 0;
  SkewShape s(mu, nu);
  for_each_ssyt(s, [](int r) { return std::make_pair(1, r - 1); },
                [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

BivarPoly enum_elegant_weighted(const Partition& mu, const Partition& nu, const std::vector<BivarPoly>& t) {
  if (!mu.contains(nu)) return 0;
  BivarPoly total;
  SkewShape s(mu, nu);
  const auto cells = s.cells();
  for_each_ssyt(s, [](int r) { return std::make_pair(1, r - 1); },
                [&](const std::vector<std::vector<int>>& fill) {
                  BivarPoly w = 1;
                  for (auto [r, c] : cells) {
                    int v = fill[r - 1][c - 1];
                    if (v - 1 >= static_cast<int>(t.size())) throw std::invalid_argument("too few parameters");
                    w *= t[v - 1];
                  }
                  total += w;
                });
  return total;
}

long enum_dual_hook(const Partition& lambda, const Partition& nu) {
  if (!lambda.contains(nu) || lambda.diagonal() != nu.diagonal()) return 0;
  const int b = nu.diagonal();
  const SkewShape s(lambda, nu);
  std::vector<std::pair<int, int>> upper, lower;
  for (auto rc : s.cells()) (rc.first <= b ? upper : lower).push_back(rc);
  const int rows = std::max(1, lambda.length());
  const int cols = std::max(1, lambda[0]);
  const Partition conj = lambda.conjugate();

  // upper: strictly decreasing along rows, weakly decreasing down columns,
  // row i entries in [i - lambda_i + 1, 0]
  long up_count = 0;
  {
    std::vector<std::vector<int>> fill(rows, std::vector<int>(cols, 0));
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == upper.size()) {
        ++up_count;
        return;
      }
      auto [r, c] = upper[k];
      int hi = 0, lo = r - lambda[r - 1] + 1;
      if (s.has_cell(r, c - 1)) hi = std::min(hi, fill[r - 1][c - 2] - 1);
      if (s.has_cell(r - 1, c)) hi = std::min(hi, fill[r - 2][c - 1]);
      for (int v = lo; v <= hi; ++v) {
        fill[r - 1][c - 1] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  // lower: strictly increasing down columns, weakly increasing along rows,
  // column j entries in [1, lambda'_j - j] (mirror of the row rule)
  long low_count = 0;
  {
    std::vector<std::vector<int>> fill(rows, std::vector<int>(cols, 0));
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == lower.size()) {
        ++low_count;
        return;
      }
      auto [r, c] = lower[k];
      int lo = 1, hi = conj[c - 1] - c;
      if (s.has_cell(r, c - 1)) lo = std::max(lo, fill[r - 1][c - 2]);
      if (s.has_cell(r - 1, c)) lo = std::max(lo, fill[r - 2][c - 1] + 1);
      for (int v = lo; v <= hi; ++v) {
        fill[r - 1][c - 1] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  return up_count * low_count;
}

// ---------------------------------------------------------------- rim tableaux

namespace {

bool is_rim_hook(const std::vector<std::pair<int, int>>& cells) {
  std::set<std::pair<int, int>> set(cells.begin(), cells.end());
  for (auto [r, c] : cells)
    if (set.count({r, c + 1}) && set.count({r + 1, c}) && set.count({r + 1, c + 1})) return false;
  // connected
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> stack{cells.front()};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (auto nb : {std::make_pair(cur.first + 1, cur.second), std::make_pair(cur.first - 1, cur.second),
                    std::make_pair(cur.first, cur.second + 1), std::make_pair(cur.first, cur.second - 1)})
      if (set.count(nb) && !seen.count(nb)) stack.push_back(nb);
  }
  return seen.size() == set.size();
}

}  // namespace

TruncatedSeries enum_rim_tableaux(const Partition& lambda, int n, const BivarPoly& alpha) {
  const SkewShape s(lambda, Partition{});
  const auto cells = s.cells();
  const int N = static_cast<int>(cells.size());
  TruncatedSeries out(n, std::max(N, 0));
  if (N == 0) {
    out.add(Exponent(n, 0), 1);
    return out;
  }
  std::map<Exponent, BivarPoly> acc;
  for_each_rpp(s, n, [&](const std::vector<std::vector<int>>& fill) {
    // no 2x2 square of one letter
    for (auto [r, c] : cells)
      if (lambda.has_cell(r + 1, c + 1) && fill[r][c] == fill[r - 1][c - 1]) return;
    // set partitions of the boxes into same-letter rim hooks, built box by box
    std::vector<int> block(N, -1);
    std::vector<std::vector<std::pair<int, int>>> blocks;
    auto val = [&](std::pair<int, int> rc) { return fill[rc.first - 1][rc.second - 1]; };
    auto rec = [&](auto&& self, int k) -> void {
      if (k == N) {
        // no two hooks of one letter share a horizontal edge
        std::map<std::pair<int, int>, int> where;
        for (int q = 0; q < N; ++q) where[cells[q]] = block[q];
        for (int q = 0; q < N; ++q) {
          auto [r, c] = cells[q];
          auto it = where.find({r + 1, c});
          if (it != where.end() && it->second != block[q] && val({r + 1, c}) == val({r, c})) return;
        }
        BivarPoly w = 1;
        Exponent x(n, 0);
        for (const auto& b : blocks) {
          if (!is_rim_hook(b)) return;
          std::set<int> rows;
          for (auto rc : b) rows.insert(rc.first);
          int ht = static_cast<int>(rows.size());
          BivarPoly hw = pow(alpha, static_cast<long>(b.size()) - 1);
          if ((ht - 1) % 2) hw = -hw;
          w *= hw;
          ++x[val(b.front()) - 1];
        }
        acc[x] += w;
        return;
      }
      const int v = val(cells[k]);
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (val(blocks[bi].front()) != v) continue;
        blocks[bi].push_back(cells[k]);
        block[k] = static_cast<int>(bi);
        self(self, k + 1);
        blocks[bi].pop_back();
      }
      blocks.push_back({cells[k]});
      block[k] = static_cast<int>(blocks.size()) - 1;
      self(self, k + 1);
      blocks.pop_back();
      block[k] = -1;
    };
    rec(rec, 0);
  });
  for (const auto& [e, v] : acc) out.add(e, v);
  return out;
}

long enum_row_col_strict(const Partition& lambda, int n) {
  long count = 0;
  const SkewShape s(lambda, Partition{});
  const auto cells = s.cells();
  const int rows = std::max(1, lambda.length());
  std::vector<std::vector<int>> fill(rows, std::vector<int>(std::max(1, lambda[0]), 0));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 1) lo = std::max(lo, fill[r - 1][c - 2] + 1);
    if (r > 1) lo = std::max(lo, fill[r - 2][c - 1] + 1);
    for (int v = lo; v <= n; ++v) {
      fill[r - 1][c - 1] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// ---------------------------------------------------------------- lattice paths

BivarPoly step_weight(Grid g, GridPoint from, GridPoint to, const Params& p) {
  const long dx = to.x - from.x, dy = to.y - from.y;
  const long x = from.x, y = from.y;
  const bool up = dx == 0 && dy == 1, right = dx == 1 && dy == 0, diag = dx == 1 && dy == 1;
  if (up) return 1;
  if (x < 0) {
    // left half-plane is common to all grids
    if (right) return y >= 0 ? p.alpha : p.gamma();
    return 0;
  }
  switch (g) {
    case Grid::Type1:
      if (diag) return y >= 0 ? p.beta : p.gamma();
      return 0;
    case Grid::Type2:
      if (right) return y < -x ? p.gamma() : p.beta;
      return 0;
    case Grid::Type3:
      if (right && y < 0) return p.gamma();
      if (diag && y >= 0) return -p.alpha;
      return 0;
  }
  return 0;
}

Endpoints path_endpoints(const Partition& mu, const Partition& nu, Grid g) {
  Endpoints e;
  const int l = mu.length();
  const int d = nu.diagonal();
  for (int i = 1; i <= l; ++i) {
    const long mi = mu[i - 1], ni = nu[i - 1];
    GridPoint a = mi >= i ? GridPoint{i - mi, 1 - i} : GridPoint{i - mi, 1 - mi};
    GridPoint b = i <= d ? GridPoint{i - ni, ni - i} : GridPoint{i - ni, i - ni - 1};
    if (g == Grid::Type2) {
      if (a.x >= 0) a.y -= a.x;
      if (b.x >= 0) b.y -= b.x;
    } else if (g == Grid::Type3) {
      a = GridPoint{i - mi, 1 - i};
    }
    e.sources.push_back(a);
    e.sinks.push_back(b);
  }
  return e;
}

namespace {

const GridPoint kSteps[3] = {{0, 1}, {1, 0}, {1, 1}};

}  // namespace

BivarPoly single_path_weight(Grid g, GridPoint a, GridPoint b, const Params& p) {
  if (b.x < a.x || b.y < a.y) return 0;
  std::map<GridPoint, BivarPoly> memo;
  auto rec = [&](auto&& self, GridPoint cur) -> BivarPoly {
    if (cur == b) return 1;
    if (cur.x > b.x || cur.y > b.y) return 0;
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    BivarPoly total;
    for (auto st : kSteps) {
      GridPoint nx{cur.x + st.x, cur.y + st.y};
      BivarPoly w = step_weight(g, cur, nx, p);
      if (w.is_zero()) continue;
      BivarPoly rest = self(self, nx);
      if (!rest.is_zero()) total += w * rest;
    }
    memo.emplace(cur, total);
    return total;
  };
  return rec(rec, a);
}

BivarPoly enum_path_systems(const Endpoints& e, Grid g, const Params& p, const PathCallback& cb) {
  const std::size_t l = e.sources.size();
  if (l == 0) {
    if (cb) cb({}, 1);
    return 1;
  }
  std::set<GridPoint> used;
  PathSystem system(l);
  BivarPoly total;
  // endpoints of later paths are reserved
  for (std::size_t i = 0; i < l; ++i) {
    if (used.count(e.sources[i]) || (e.sources[i] != e.sinks[i] && used.count(e.sinks[i]))) return 0;
    used.insert(e.sources[i]);
    used.insert(e.sinks[i]);
  }
  auto route = [&](auto&& self, std::size_t i, GridPoint cur, const BivarPoly& w) -> void {
    if (cur == e.sinks[i]) {
      if (i + 1 == l) {
        total += w;
        if (cb) cb(system, w);
        return;
      }
      system[i + 1] = {e.sources[i + 1]};
      self(self, i + 1, e.sources[i + 1], w);
      return;
    }
    const GridPoint b = e.sinks[i];
    for (auto st : kSteps) {
      GridPoint nx{cur.x + st.x, cur.y + st.y};
      if (nx.x > b.x || nx.y > b.y) continue;
      if (used.count(nx) && nx != b) continue;
      BivarPoly sw = step_weight(g, cur, nx, p);
      if (sw.is_zero()) continue;
      const bool mark = nx != b;
      if (mark) used.insert(nx);
      system[i].push_back(nx);
      self(self, i, nx, w * sw);
      system[i].pop_back();
      if (mark) used.erase(nx);
    }
  };
  system[0] = {e.sources[0]};
  route(route, 0, e.sources[0], BivarPoly(1));
  return total;
}

BivarPoly enum_path_systems(const Partition& mu, const Partition& nu, Grid g, const Params& p) {
  if (!mu.contains(nu)) return 0;
  return enum_path_systems(path_endpoints(mu, nu, g), g, p);
}

BivarPoly path_weight(Grid g, GridPoint start, const std::string& steps, const Params& p) {
  BivarPoly w = 1;
  GridPoint cur = start;
  for (char ch : steps) {
    GridPoint nx = cur;
    if (ch == 'U') ++nx.y;
    else if (ch == 'R') ++nx.x;
    else if (ch == 'D') { ++nx.x; ++nx.y; }
    else throw std::invalid_argument("path_weight: unknown step");
    w *= step_weight(g, cur, nx, p);
    cur = nx;
  }
  return w;
}

}  // namespace groth
