#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace groth {

/// Integer partition: weakly decreasing positive parts; trailing zeros are
/// stripped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Part i (0-based); 0 beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Number of boxes on the main diagonal.
  int diagonal() const;
  bool contains(const Partition& mu) const;
  /// Partition without its first row.
  Partition drop_first_row() const;
  /// Partition without its first column.
  Partition drop_first_column() const;

  /// Parts padded with zeros to length t (t >= length()).
  std::vector<int> padded(int t) const;

  /// Box (row, col), 1-based, lies in the diagram.
  bool has_cell(int row, int col) const { return row >= 1 && col >= 1 && (*this)[row - 1] >= col; }

  /// Add a box at the end of row r (1-based); result must be a partition.
  bool can_add_row(int r) const;
  /// Column (1-based) where a box may be added, if any: the new box lands in
  /// row (conjugate[c-1] + 1).
  bool can_add_col(int c) const;
  bool can_remove_col(int c) const;
  Partition add_col(int c) const;
  Partition remove_col(int c) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  void normalize();
};

/// Column length of column c (1-based).
int column_length(const Partition& p, int c);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n, grouped by size then decreasing lex.
std::vector<Partition> partitions_up_to(int n);
/// Partitions of n with at most `rows` rows (rows < 0 means unbounded).
std::vector<Partition> partitions_of(int n, int rows, int cols);
/// Partitions contained in `outer`.
std::vector<Partition> partitions_inside(const Partition& outer);
/// Partitions mu with lambda subset mu, |mu| <= n.
std::vector<Partition> partitions_containing(const Partition& lambda, int max_size);

/// Weight order used across the library: by size, then decreasing lex.
bool weight_lex_less(const Partition& a, const Partition& b);

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition o, Partition i);
  int size() const { return outer.size() - inner.size(); }
  bool valid() const { return outer.contains(inner); }
  /// Cells as (row, col) pairs, 1-based, row-major.
  std::vector<std::pair<int, int>> cells() const;
  bool has_cell(int r, int c) const { return outer.has_cell(r, c) && !inner.has_cell(r, c); }
  SkewShape conjugate() const { return {outer.conjugate(), inner.conjugate()}; }
  std::string to_string() const;
};

struct SkewStats {
  int r = 0;  ///< rows meeting the shape
  int c = 0;  ///< columns meeting the shape
  int b = 0;  ///< edge-connected components
  int i = 0;  ///< |s| - c - r + b
  friend bool operator==(const SkewStats&, const SkewStats&) = default;
};

SkewStats skew_stats(const SkewShape& s);
bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

}  // namespace groth
