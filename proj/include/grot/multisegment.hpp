#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grot/segment.hpp"

namespace grot {

// A multiset of same-side segments kept in canonical order. Indexes both the
// standard basis (induced from essentially square-integrable factors) and the
// irreducible basis (Langlands quotients) of the Grothendieck group.
class Multisegment {
 public:
  explicit Multisegment(Side side = Side::F) : side_(side) {}
  Multisegment(Side side, std::vector<Segment> segments);

  Side side() const noexcept { return side_; }
  std::span<const Segment> segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return segments_.size(); }
  bool empty() const noexcept { return segments_.empty(); }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }

  int degree() const noexcept { return degree_; }
  // Sum of squared lengths; strictly increases along elementary operations.
  std::int64_t rank() const noexcept;

  // Multiset union (the product of standard modules).
  Multisegment merged(const Multisegment& other) const;
  // Replace segments i and j (i != j) by the given ones.
  Multisegment replaced(std::size_t i, std::size_t j, const Segment& first,
                        const std::optional<Segment>& second) const;

  // Side, degree, number of segments, then lexicographic. This is also the
  // display order of terms in printed expressions.
  std::strong_ordering operator<=>(const Multisegment& other) const noexcept;
  bool operator==(const Multisegment& other) const noexcept {
    return side_ == other.side_ && segments_ == other.segments_;
  }

 private:
  Side side_;
  std::vector<Segment> segments_;
  int degree_ = 0;
};

struct SupportPoint {
  int family = 0;
  int exponent = 0;
  auto operator<=>(const SupportPoint&) const = default;
};

using Support = std::map<SupportPoint, int>;

Support support(const Multisegment& ms);

// Support lies on one line, with consecutive exponents of multiplicity one.
bool is_segment_support(const Multisegment& ms);

std::string format(const Multisegment& ms, const AlgebraContext& ctx);

// Segments of one family and side whose exponents all lie in [lo, hi].
std::vector<Segment> enumerate_segments(const AlgebraContext& ctx, int family, Side side, int lo,
                                        int hi);

// Multisegments over the given segments with degree <= max_degree, the empty
// one included. Output is sorted.
std::vector<Multisegment> enumerate_multisegments(Side side, std::span<const Segment> segments,
                                                  int max_degree);

}  // namespace grot
