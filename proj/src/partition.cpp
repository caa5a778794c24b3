#include "qtile/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qtile {

std::string to_string(const BoxBounds& b) {
  return "(" + std::to_string(b.r) + "," + std::to_string(b.c) + "," +
         std::to_string(b.n) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

PlanePartition::PlanePartition(int rows, int cols, std::vector<int> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {}

PlanePartition::PlanePartition(const std::vector<std::vector<int>>& rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = 0;
  for (const auto& row : rows) cols_ = std::max(cols_, static_cast<int>(row.size()));
  cells_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) cells_[i * cols_ + j] = rows[i][j];
  validate();
}

PlanePartition::PlanePartition(const std::vector<std::vector<int>>& rows,
                               const BoxBounds& b)
    : PlanePartition(rows) {
  if (!b.valid()) throw std::invalid_argument("box bounds must be non-negative");
  if (!fits(b))
    throw std::invalid_argument("plane partition does not fit in box " + to_string(b));
  *this = padded_to(b);
}

void PlanePartition::validate() const {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      int v = at(i, j);
      if (v < 0) throw std::invalid_argument("plane partition parts must be non-negative");
      if (j > 0 && v > at(i, j - 1))
        throw std::invalid_argument("plane partition rows must be weakly decreasing");
      if (i > 0 && v > at(i - 1, j))
        throw std::invalid_argument("plane partition columns must be weakly decreasing");
    }
  }
}

int PlanePartition::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return 0;
  return cells_[static_cast<std::size_t>(i) * cols_ + j];
}

Partition PlanePartition::shape() const {
  std::vector<int> parts;
  for (int i = 0; i < rows_; ++i) {
    int len = 0;
    while (len < cols_ && at(i, len) > 0) ++len;
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::vector<std::vector<int>> PlanePartition::ragged() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < rows_; ++i) {
    std::vector<int> row;
    for (int j = 0; j < cols_ && at(i, j) > 0; ++j) row.push_back(at(i, j));
    if (row.empty()) break;
    out.push_back(std::move(row));
  }
  return out;
}

bool PlanePartition::fits(const BoxBounds& b) const {
  if (empty()) return true;
  if (max_part() > b.n) return false;
  auto sh = shape();
  return static_cast<int>(sh.length()) <= b.r && sh.parts()[0] <= b.c;
}

PlanePartition PlanePartition::padded_to(const BoxBounds& b) const {
  if (!fits(b)) throw std::invalid_argument("plane partition does not fit in box " + to_string(b));
  std::vector<int> cells(static_cast<std::size_t>(b.r) * b.c, 0);
  for (int i = 0; i < b.r; ++i)
    for (int j = 0; j < b.c; ++j) cells[i * b.c + j] = at(i, j);
  return PlanePartition(b.r, b.c, std::move(cells));
}

bool PlanePartition::operator==(const PlanePartition& o) const {
  return ragged() == o.ragged();
}

int durfee_size(const Partition& lambda) {
  int k = 0;
  const auto& p = lambda.parts();
  while (k < static_cast<int>(p.size()) && p[k] >= k + 1) ++k;
  return k;
}

long long norm(const PlanePartition& pi) {
  long long s = 0;
  for (int i = 0; i < pi.rows(); ++i)
    for (int j = 0; j < pi.cols(); ++j) s += pi.at(i, j);
  return s;
}

long long trace(const PlanePartition& pi) {
  long long s = 0;
  for (int i = 0; i < std::min(pi.rows(), pi.cols()); ++i) s += pi.at(i, i);
  return s;
}

PlanePartition k_truncation(const PlanePartition& pi, int k) {
  if (k < 1) throw std::invalid_argument("k_truncation requires k >= 1");
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < pi.rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < pi.cols() && pi.at(i, j) >= k; ++j) row.push_back(pi.at(i, j));
    if (row.empty()) break;
    rows.push_back(std::move(row));
  }
  return PlanePartition(rows);
}

Partition k_cross_section(const PlanePartition& pi, int k) {
  return k_truncation(pi, k).shape();
}

std::vector<int> durfee_profile(const PlanePartition& pi) {
  std::vector<int> out;
  for (int k = 1; k <= pi.max_part(); ++k) out.push_back(durfee_size(k_cross_section(pi, k)));
  return out;
}

void for_each_in_box(const BoxBounds& b,
                     const std::function<void(const PlanePartition&)>& visit) {
  if (!b.valid()) throw std::invalid_argument("box bounds must be non-negative");
  if (b.r == 0 || b.c == 0) {
    visit(PlanePartition(b.r, b.c, {}));
    return;
  }
  // Each cell is bounded by its upper and left neighbours, so a row is
  // generated under the cellwise bound of the previous row.
  std::vector<int> cells(static_cast<std::size_t>(b.r) * b.c, 0);
  const int total = b.r * b.c;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == total) {
      visit(PlanePartition(b.r, b.c, cells));
      return;
    }
    int i = pos / b.c, j = pos % b.c;
    int hi = b.n;
    if (i > 0) hi = std::min(hi, cells[pos - b.c]);
    if (j > 0) hi = std::min(hi, cells[pos - 1]);
    for (int v = 0; v <= hi; ++v) {
      cells[pos] = v;
      rec(pos + 1);
    }
    cells[pos] = 0;
  };
  rec(0);
}

std::vector<PlanePartition> enumerate_box(const BoxBounds& b) {
  std::vector<PlanePartition> out;
  for_each_in_box(b, [&](const PlanePartition& pi) { out.push_back(pi); });
  return out;
}

std::string format_plane_partition(const PlanePartition& pi) {
  std::string s = "[";
  auto rows = pi.ragged();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows[i][j]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

PlanePartition parse_plane_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch)
      throw std::invalid_argument(std::string("malformed plane partition: expected '") + ch + "'");
    ++pos;
  };
  auto peek = [&]() -> char {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  std::vector<std::vector<int>> rows;
  expect('[');
  if (peek() != ']') {
    while (true) {
      expect('[');
      std::vector<int> row;
      if (peek() != ']') {
        while (true) {
          skip();
          std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (start == pos) throw std::invalid_argument("malformed plane partition: expected digit");
          row.push_back(std::stoi(std::string(text.substr(start, pos - start))));
          if (peek() == ',') {
            ++pos;
            continue;
          }
          break;
        }
      }
      expect(']');
      rows.push_back(std::move(row));
      if (peek() == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect(']');
  skip();
  if (pos != text.size()) throw std::invalid_argument("malformed plane partition: trailing input");
  return PlanePartition(rows);
}

}  // namespace qtile
