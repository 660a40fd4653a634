#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grot/context.hpp"

namespace grot {

// F: the split group GL_n(F); D: the inner form GL_r(D).
enum class Side : std::uint8_t { F, D };

const char* to_string(Side side) noexcept;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

// An arithmetic progression {start, start+step, ..., start+(len-1)*step} of
// twist exponents over one cuspidal family. The step is 1 on side F and the
// torsion number s on side D.
class Segment {
 public:
  int family() const noexcept { return family_; }
  Side side() const noexcept { return side_; }
  int start() const noexcept { return start_; }
  int length() const noexcept { return length_; }
  int step() const noexcept { return step_; }
  int end() const noexcept { return start_ + (length_ - 1) * step_; }
  // Degree of GL over F (side F) or D (side D) carried by one exponent.
  int unit_degree() const noexcept { return unit_degree_; }
  int degree() const noexcept { return unit_degree_ * length_; }
  int residue() const noexcept;

  std::vector<int> exponents() const;
  bool contains(const Segment& other) const noexcept;
  bool same_line(const Segment& other) const noexcept;

  // Same line, new range. Throws DomainError for length < 1 or a start off
  // the line's residue class.
  Segment with_range(int start, int length) const;

  // Canonical order: family, side, residue class, start, length.
  std::strong_ordering operator<=>(const Segment& other) const noexcept;
  bool operator==(const Segment& other) const noexcept = default;

 private:
  friend Segment make_segment(const AlgebraContext&, int, Side, int, int);

  Segment(int family, Side side, int start, int length, int step, int unit_degree)
      : family_(family), side_(side), start_(start), length_(length), step_(step),
        unit_degree_(unit_degree) {}

  int family_ = 0;
  Side side_ = Side::F;
  int start_ = 0;
  int length_ = 1;
  int step_ = 1;
  int unit_degree_ = 1;
};

Segment make_segment(const AlgebraContext& ctx, int family_id, Side side, int start, int length);
Segment make_segment(const AlgebraContext& ctx, std::string_view family, Side side, int start,
                     int length);

// Linked: same line, and the union of the exponent sets is a progression
// with the common step that differs from both segments.
bool linked(const Segment& a, const Segment& b) noexcept;

// (union, intersection); the intersection is absent when empty.
std::pair<Segment, std::optional<Segment>> union_inter(const Segment& a, const Segment& b);

Rational exponent_center(const Segment& s);

// rho[0..5] on side F, rho'{0;3} (start;length) on side D.
std::string format(const Segment& s, const AlgebraContext& ctx);

}  // namespace grot
