#include "groth/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace groth {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

void Partition::normalize() {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return {};
  c.assign(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int Partition::diagonal() const {
  int d = 0;
  while (d < length() && parts_[d] >= d + 1) ++d;
  return d;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::drop_first_row() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::drop_first_column() const {
  std::vector<int> p;
  for (int x : parts_)
    if (x > 1) p.push_back(x - 1);
  return Partition(std::move(p));
}

std::vector<int> Partition::padded(int t) const {
  std::vector<int> p = parts_;
  if (static_cast<int>(p.size()) < t) p.resize(t, 0);
  return p;
}

bool Partition::can_add_row(int r) const {
  if (r < 1 || r > length() + 1) return false;
  return r == 1 || (*this)[r - 2] > (*this)[r - 1];
}

int column_length(const Partition& p, int c) {
  int n = 0;
  while (n < p.length() && p[n] >= c) ++n;
  return n;
}

bool Partition::can_add_col(int c) const {
  if (c < 1) return false;
  int r = column_length(*this, c) + 1;  // row receiving the box
  return (*this)[r - 1] == c - 1;
}

bool Partition::can_remove_col(int c) const {
  if (c < 1) return false;
  int r = column_length(*this, c);
  if (r == 0) return false;
  return (*this)[r - 1] == c;
}

Partition Partition::add_col(int c) const {
  int r = column_length(*this, c) + 1;
  std::vector<int> p = padded(r);
  ++p[r - 1];
  return Partition(std::move(p));
}

Partition Partition::remove_col(int c) const {
  int r = column_length(*this, c);
  std::vector<int> p = parts_;
  --p[r - 1];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "[]";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, int rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, rows - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int rows, int cols) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, cols < 0 ? n : cols, rows < 0 ? n + 1 : rows, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, -1, -1); }

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int bound) {
    if (row == outer.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(bound, outer[row]); p >= 0; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, outer.empty() ? 0 : outer[0]);
  std::sort(out.begin(), out.end(), weight_lex_less);
  return out;
}

std::vector<Partition> partitions_containing(const Partition& lambda, int max_size) {
  std::vector<Partition> out;
  for (int k = lambda.size(); k <= max_size; ++k)
    for (auto& p : partitions_of(k))
      if (p.contains(lambda)) out.push_back(p);
  return out;
}

bool weight_lex_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a > b;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner[r - 1] + 1; c <= outer[r - 1]; ++c) out.emplace_back(r, c);
  return out;
}

std::string SkewShape::to_string() const { return outer.to_string() + "/" + inner.to_string(); }

SkewStats skew_stats(const SkewShape& s) {
  if (!s.valid()) throw std::invalid_argument("inner partition not contained in outer");
  SkewStats st;
  auto cells = s.cells();
  std::set<int> rows, cols;
  for (auto [r, c] : cells) {
    rows.insert(r);
    cols.insert(c);
  }
  st.r = static_cast<int>(rows.size());
  st.c = static_cast<int>(cols.size());
  // connected components via union-find on the cell list
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto index = [&](int r, int c) -> int {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::make_pair(r, c));
    return (it != cells.end() && *it == std::make_pair(r, c)) ? static_cast<int>(it - cells.begin()) : -1;
  };
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto [r, c] = cells[k];
    for (auto [nr, nc] : {std::make_pair(r + 1, c), std::make_pair(r, c + 1)}) {
      int j = index(nr, nc);
      if (j >= 0) parent[find(static_cast<int>(k))] = find(j);
    }
  }
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (find(static_cast<int>(k)) == static_cast<int>(k)) ++st.b;
  st.i = s.size() - st.c - st.r + st.b;
  return st;
}

bool is_horizontal_strip(const SkewShape& s) {
  if (!s.valid()) return false;
  for (int r = 2; r <= s.outer.length(); ++r)
    if (s.outer[r - 1] > s.inner[r - 2]) return false;
  return true;
}

bool is_vertical_strip(const SkewShape& s) {
  if (!s.valid()) return false;
  for (int r = 1; r <= s.outer.length(); ++r)
    if (s.outer[r - 1] - s.inner[r - 1] > 1) return false;
  return true;
}

}  // namespace groth
