#pragma once

#include <span>
#include <vector>

#include "grot/levi.hpp"
#include "grot/virtual_rep.hpp"

namespace grot {

// A permutation of {1..n}, stored as its 1-based images.
class BlockPermutation {
 public:
  explicit BlockPermutation(std::vector<int> images);
  static BlockPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  BlockPermutation inverse() const;

  auto operator<=>(const BlockPermutation&) const = default;

 private:
  std::vector<int> images_;
};

// W(L1, L2): permutations increasing on every L1-section whose inverse is
// increasing on every L2-section. Built by backtracking.
std::vector<BlockPermutation> shuffle_set(const LeviComposition& l1, const LeviComposition& l2);

// sizes[i][j] = |{x in section i of L1 : w(x) in section j of L2}|.
std::vector<std::vector<int>> intersection_sizes(const BlockPermutation& w,
                                                 const LeviComposition& l1,
                                                 const LeviComposition& l2);

// Permutes the consecutive d-blocks of {1..rd} by tau, keeping the order
// inside each block: x = a*d - b maps to tau(a)*d - b.
BlockPermutation block_embed(const BlockPermutation& tau, int d);

// The elements of W(L1, L2) whose intersection Levi has every block size
// divisible by d. Both compositions must be divisible by d.
std::vector<BlockPermutation> shuffle_set_d(const LeviComposition& l1, const LeviComposition& l2,
                                            int d);

// r_{L2} i_{L1}(factors) expanded over W(L1, L2): each factor is restricted
// to its intersection with the w-conjugate of L2, the pieces are moved to
// their L2 blocks, and the pieces in each block are induced.
TensorRep geometric_lemma(const LeviComposition& l1, const LeviComposition& l2,
                          std::span<const Segment> factors);

// Same, with L1 given by the segments of `key` in canonical order.
TensorRep geometric_lemma(const Multisegment& key, const LeviComposition& l2);

}  // namespace grot
