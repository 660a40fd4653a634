#include "grot/multisegment.hpp"

#include <algorithm>

#include "grot/error.hpp"

namespace grot {

Multisegment::Multisegment(Side side, std::vector<Segment> segments)
    : side_(side), segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (s.side() != side_) throw DomainError("multisegment mixes F and D segments");
    degree_ += s.degree();
  }
  std::sort(segments_.begin(), segments_.end());
}

std::int64_t Multisegment::rank() const noexcept {
  std::int64_t r = 0;
  for (const auto& s : segments_) r += static_cast<std::int64_t>(s.length()) * s.length();
  return r;
}

Multisegment Multisegment::merged(const Multisegment& other) const {
  if (other.side_ != side_) throw DomainError("cannot merge multisegments of different sides");
  Multisegment out(side_);
  out.segments_.reserve(segments_.size() + other.segments_.size());
  std::merge(segments_.begin(), segments_.end(), other.segments_.begin(), other.segments_.end(),
             std::back_inserter(out.segments_));
  out.degree_ = degree_ + other.degree_;
  return out;
}

Multisegment Multisegment::replaced(std::size_t i, std::size_t j, const Segment& first,
                                    const std::optional<Segment>& second) const {
  std::vector<Segment> segs;
  segs.reserve(segments_.size());
  for (std::size_t k = 0; k < segments_.size(); ++k)
    if (k != i && k != j) segs.push_back(segments_[k]);
  segs.push_back(first);
  if (second) segs.push_back(*second);
  return Multisegment(side_, std::move(segs));
}

std::strong_ordering Multisegment::operator<=>(const Multisegment& other) const noexcept {
  if (auto c = side_ <=> other.side_; c != 0) return c;
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  if (auto c = segments_.size() <=> other.segments_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(segments_.begin(), segments_.end(),
                                                other.segments_.begin(), other.segments_.end());
}

Support support(const Multisegment& ms) {
  Support out;
  for (const auto& s : ms.segments())
    for (int e : s.exponents()) ++out[{s.family(), e}];
  return out;
}

bool is_segment_support(const Multisegment& ms) {
  if (ms.empty()) return false;
  const Segment& first = ms[0];
  for (const auto& s : ms.segments())
    if (!s.same_line(first)) return false;
  std::vector<int> exps;
  for (const auto& s : ms.segments())
    for (int e : s.exponents()) exps.push_back(e);
  std::sort(exps.begin(), exps.end());
  for (std::size_t i = 1; i < exps.size(); ++i)
    if (exps[i] != exps[i - 1] + first.step()) return false;
  return true;
}

std::string format(const Multisegment& ms, const AlgebraContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ',';
    out += format(ms[i], ctx);
  }
  return out;
}

std::vector<Segment> enumerate_segments(const AlgebraContext& ctx, int family, Side side, int lo,
                                        int hi) {
  std::vector<Segment> out;
  const int step = side == Side::F ? 1 : ctx.family(family).s.value_or(1);
  for (int a = lo; a <= hi; ++a)
    for (int len = 1; a + (len - 1) * step <= hi; ++len)
      out.push_back(make_segment(ctx, family, side, a, len));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multisegment> enumerate_multisegments(Side side, std::span<const Segment> segments,
                                                  int max_degree) {
  std::vector<Multisegment> out;
  std::vector<Segment> current;
  // Non-decreasing index sequences enumerate multisets without repeats.
  auto recurse = [&](auto&& self, std::size_t from, int budget) -> void {
    out.emplace_back(side, current);
    for (std::size_t i = from; i < segments.size(); ++i) {
      if (segments[i].degree() > budget) continue;
      current.push_back(segments[i]);
      self(self, i, budget - segments[i].degree());
      current.pop_back();
    }
  };
  recurse(recurse, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grot
