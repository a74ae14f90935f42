// Integer partitions and the small amount of combinatorics built on them.
#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace moyrt {

/// Weakly decreasing sequence of positive integers; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_i with 1-based index; zero past the end.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
  int first() const { return part(1); }

  /// lambda'_i = #{j : lambda_j >= i}
  Partition conjugate() const {
    std::vector<int> c(first(), 0);
    for (int p : parts_)
      for (int i = 0; i < p; ++i) ++c[i];
    return Partition(std::move(c));
  }

  bool fits_box(int rows, int cols) const { return length() <= rows && first() <= cols; }

  /// (n - lambda_m, ..., n - lambda_1) inside the rows x cols box.
  Partition box_complement(int rows, int cols) const {
    if (!fits_box(rows, cols)) throw std::invalid_argument("box_complement: partition does not fit the box");
    std::vector<int> c(rows);
    for (int j = 1; j <= rows; ++j) c[j - 1] = cols - part(rows + 1 - j);
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts (so lambda > mu iff the first nonzero lambda_j - mu_j is positive).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    for (int j = 1; j <= n; ++j)
      if (a.part(j) != b.part(j)) return a.part(j) <=> b.part(j);
    return std::strong_ordering::equal;
  }

 private:
  std::vector<int> parts_;
};

/// All partitions of `total` with at most max_len parts, each at most max_part,
/// in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int total, int max_len, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (total >= 0) rec(total, max_part);
  return out;
}

/// Every partition fitting the rows x cols box, ordered by size then decreasing lex.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int s = 0; s <= rows * cols; ++s) {
    auto level = partitions_of(s, rows, cols);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace moyrt
