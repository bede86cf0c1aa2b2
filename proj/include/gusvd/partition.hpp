#pragma once

#include <string>
#include <vector>

namespace gusvd {

// Weakly decreasing sequence of positive integers. Positional access past the
// last part reads as zero.
class Partition {
 public:
  Partition() = default;
  // Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace gusvd
