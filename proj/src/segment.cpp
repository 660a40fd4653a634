#include "grot/segment.hpp"

#include <numeric>

#include "grot/error.hpp"

namespace grot {

const char* to_string(Side side) noexcept { return side == Side::F ? "F" : "D"; }

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

int floor_mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int Segment::residue() const noexcept { return floor_mod(start_, step_); }

std::vector<int> Segment::exponents() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) out.push_back(start_ + i * step_);
  return out;
}

bool Segment::same_line(const Segment& other) const noexcept {
  return family_ == other.family_ && side_ == other.side_ && step_ == other.step_ &&
         residue() == other.residue();
}

bool Segment::contains(const Segment& other) const noexcept {
  return same_line(other) && start_ <= other.start_ && other.end() <= end();
}

Segment Segment::with_range(int start, int length) const {
  if (length < 1) throw DomainError("segment length must be positive");
  if (floor_mod(start, step_) != residue()) throw DomainError("start is off the segment's line");
  return Segment(family_, side_, start, length, step_, unit_degree_);
}

std::strong_ordering Segment::operator<=>(const Segment& other) const noexcept {
  if (auto c = family_ <=> other.family_; c != 0) return c;
  if (auto c = side_ <=> other.side_; c != 0) return c;
  if (auto c = residue() <=> other.residue(); c != 0) return c;
  if (auto c = start_ <=> other.start_; c != 0) return c;
  if (auto c = length_ <=> other.length_; c != 0) return c;
  if (auto c = step_ <=> other.step_; c != 0) return c;
  return unit_degree_ <=> other.unit_degree_;
}

Segment make_segment(const AlgebraContext& ctx, int family_id, Side side, int start, int length) {
  const auto& fam = ctx.family(family_id);
  if (length < 1) throw DomainError("segment length must be positive, got " + std::to_string(length));
  if (side == Side::F) return Segment(family_id, side, start, length, 1, fam.p);
  if (!fam.s) throw DomainError("family '" + fam.name + "' has no inner-form attachment");
  return Segment(family_id, side, start, length, *fam.s, ctx.d_unit_degree(family_id));
}

Segment make_segment(const AlgebraContext& ctx, std::string_view family, Side side, int start,
                     int length) {
  return make_segment(ctx, ctx.family_id(family), side, start, length);
}

bool linked(const Segment& a, const Segment& b) noexcept {
  if (!a.same_line(b)) return false;
  if (a.contains(b) || b.contains(a)) return false;
  const int step = a.step();
  // Not nested, so the two ranges are staggered; the union is a progression
  // iff they overlap or are juxtaposed.
  return b.start() <= a.end() + step && a.start() <= b.end() + step;
}

std::pair<Segment, std::optional<Segment>> union_inter(const Segment& a, const Segment& b) {
  if (!linked(a, b)) throw DomainError("union_inter requires linked segments");
  const int step = a.step();
  const int lo = std::min(a.start(), b.start());
  const int hi = std::max(a.end(), b.end());
  Segment uni = a.with_range(lo, (hi - lo) / step + 1);
  const int ilo = std::max(a.start(), b.start());
  const int ihi = std::min(a.end(), b.end());
  if (ilo > ihi) return {uni, std::nullopt};
  return {uni, a.with_range(ilo, (ihi - ilo) / step + 1)};
}

Rational exponent_center(const Segment& s) {
  return Rational::make(static_cast<std::int64_t>(s.start()) + s.end(), 2);
}

std::string format(const Segment& s, const AlgebraContext& ctx) {
  const auto& name = ctx.family(s.family()).name;
  if (s.side() == Side::F)
    return name + "[" + std::to_string(s.start()) + ".." + std::to_string(s.end()) + "]";
  return name + "'{" + std::to_string(s.start()) + ";" + std::to_string(s.length()) + "}";
}

}  // namespace grot
