#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace grot {

// Ordered block sizes of a standard Levi subgroup GL_{n1} x ... x GL_{nk}.
class LeviComposition {
 public:
  explicit LeviComposition(std::vector<int> blocks);

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  int total() const noexcept { return total_; }
  int operator[](std::size_t i) const { return blocks_[i]; }

  // 1-based inclusive ranges [first, last] of the consecutive sections.
  std::vector<std::pair<int, int>> sections() const;

  bool divisible_by(int d) const noexcept;
  LeviComposition divided(int d) const;
  LeviComposition scaled(int d) const;

  std::string str() const;

  auto operator<=>(const LeviComposition& other) const = default;

 private:
  std::vector<int> blocks_;
  int total_ = 0;
};

// All 2^(n-1) compositions of n >= 1, in lexicographic order.
std::vector<LeviComposition> compositions(int n);

}  // namespace grot
