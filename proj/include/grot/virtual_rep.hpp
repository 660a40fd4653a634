#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grot/multisegment.hpp"

namespace grot {

enum class Basis : std::uint8_t { Standard, Irreducible };

const char* to_string(Basis basis) noexcept;

using Coefficient = std::int64_t;

// An element of R(F) or R(D): a finite integer combination of standard
// modules (Basis::Standard) or of irreducible representations
// (Basis::Irreducible), both indexed by multisegments. Zero coefficients are
// never stored.
class VirtualRep {
 public:
  using Terms = std::map<Multisegment, Coefficient>;

  VirtualRep(Side side, Basis basis) : side_(side), basis_(basis) {}

  Side side() const noexcept { return side_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coefficient coefficient(const Multisegment& key) const;
  void add_term(const Multisegment& key, Coefficient c);

  // Degree shared by every key; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  std::map<int, VirtualRep> graded_slices() const;

  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  VirtualRep& operator*=(Coefficient c);

  friend VirtualRep operator+(VirtualRep x, const VirtualRep& y) { return x += y; }
  friend VirtualRep operator-(VirtualRep x, const VirtualRep& y) { return x -= y; }
  friend VirtualRep operator-(VirtualRep x) { return x *= -1; }
  friend VirtualRep operator*(Coefficient c, VirtualRep x) { return x *= c; }

  bool operator==(const VirtualRep& other) const = default;

 private:
  void require_compatible(const VirtualRep& other) const;

  Side side_;
  Basis basis_;
  Terms terms_;
};

VirtualRep standard(const Multisegment& ms);
VirtualRep irreducible(const Multisegment& ms);
VirtualRep unit(Side side);

// One key per Levi block. Block degrees are not fixed by the type: the
// comultiplication sums over all two-block splits.
class TensorRep {
 public:
  using Key = std::vector<Multisegment>;
  using Terms = std::map<Key, Coefficient>;

  TensorRep(Side side, Basis basis, std::size_t arity)
      : side_(side), basis_(basis), arity_(arity) {}

  Side side() const noexcept { return side_; }
  Basis basis() const noexcept { return basis_; }
  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coefficient coefficient(const Key& key) const;
  void add_term(const Key& key, Coefficient c);

  TensorRep& operator+=(const TensorRep& other);
  TensorRep& operator-=(const TensorRep& other);

  bool operator==(const TensorRep& other) const = default;

 private:
  Side side_;
  Basis basis_;
  std::size_t arity_;
  Terms terms_;
};

// "2*Std(rho[0..1]) - Std(rho[0..0],rho[1..1])"; zero prints as "0" and the
// unit as "Std()".
std::string format(const VirtualRep& x, const AlgebraContext& ctx);
// Slots joined by " (x) ".
std::string format(const TensorRep& x, const AlgebraContext& ctx);

}  // namespace grot
