#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qtile {

/// Box context (r, c, n): at most r rows, c columns, parts at most n.
struct BoxBounds {
  int r = 0;
  int c = 0;
  int n = 0;

  int d() const { return r < c ? r : c; }
  bool valid() const { return r >= 0 && c >= 0 && n >= 0; }
  bool operator==(const BoxBounds&) const = default;
};

std::string to_string(const BoxBounds& b);

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;  // sum of parts

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Plane partition stored as a zero-padded rows x cols rectangle.
///
/// The ragged (shape) form is a view: the shape is the partition of row
/// lengths counted over positive cells.
class PlanePartition {
 public:
  PlanePartition() = default;
  /// Pads ragged rows with zeros. Throws std::invalid_argument when rows
  /// or columns are not weakly decreasing or a part is negative.
  explicit PlanePartition(const std::vector<std::vector<int>>& rows);
  /// As above, then attaches the box: throws std::invalid_argument if the
  /// array does not fit in b.
  PlanePartition(const std::vector<std::vector<int>>& rows, const BoxBounds& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 0-based; returns 0 outside the stored rectangle.
  int at(int i, int j) const;
  int max_part() const { return rows_ > 0 && cols_ > 0 ? at(0, 0) : 0; }
  bool empty() const { return max_part() == 0; }

  Partition shape() const;
  /// Ragged rows with zero parts dropped.
  std::vector<std::vector<int>> ragged() const;
  bool fits(const BoxBounds& b) const;
  /// Same parts padded to exactly b.r x b.c (requires fits(b)).
  PlanePartition padded_to(const BoxBounds& b) const;

  bool operator==(const PlanePartition& o) const;

 private:
  PlanePartition(int rows, int cols, std::vector<int> cells);
  void validate() const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;  // row-major

  friend void for_each_in_box(const BoxBounds&,
                              const std::function<void(const PlanePartition&)>&);
};

int durfee_size(const Partition& lambda);
long long norm(const PlanePartition& pi);
long long trace(const PlanePartition& pi);
/// Cells with part >= k, parts unchanged; k must be >= 1.
PlanePartition k_truncation(const PlanePartition& pi, int k);
Partition k_cross_section(const PlanePartition& pi, int k);
/// (D_1, ..., D_{pi_11}); empty for the empty plane partition.
std::vector<int> durfee_profile(const PlanePartition& pi);

/// Visits every element of P(r,c,n) once, in lexicographic order of the
/// flattened padded r x c matrix (so the empty plane partition comes first).
/// Rows are generated one at a time, each bounded cellwise by the previous
/// row, so no candidate is ever rejected.
void for_each_in_box(const BoxBounds& b,
                     const std::function<void(const PlanePartition&)>& visit);
std::vector<PlanePartition> enumerate_box(const BoxBounds& b);

/// Line format: `[[2,1],[1]]`, empty plane partition is `[]`.
std::string format_plane_partition(const PlanePartition& pi);
/// Accepts the line format; zero parts are allowed. Throws
/// std::invalid_argument on malformed input.
PlanePartition parse_plane_partition(std::string_view text);

}  // namespace qtile
