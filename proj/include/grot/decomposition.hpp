#pragma once

#include <vector>

#include "grot/order.hpp"
#include "grot/virtual_rep.hpp"

namespace grot {

// Multiplicities of irreducibles in standard modules: multiplicity(a, b) is
// the coefficient of Irr(a) in Std(b). Implementations must be unitriangular
// (multiplicity(b, b) = 1, zero unless a <= b) and stateless.
class DecompositionProvider {
 public:
  virtual ~DecompositionProvider() = default;

  virtual bool covers(const Multisegment& b) const = 0;
  // Throws CoverageError when b is not covered.
  virtual Coefficient multiplicity(const Multisegment& a, const Multisegment& b) const = 0;
};

// Multiplicity one for every a <= b. Covers multisegments with a segment
// support, multisegments of at most two segments, and multisegments with no
// linked pair (their standard module is irreducible).
class SegmentSupportProvider final : public DecompositionProvider {
 public:
  bool covers(const Multisegment& b) const override;
  Coefficient multiplicity(const Multisegment& a, const Multisegment& b) const override;
};

// Std(ms) in the irreducible basis.
VirtualRep decompose_standard(const Multisegment& ms, const DecompositionProvider& prov);

// Irr(ms) in the standard basis, by inverting the unitriangular
// multiplicity matrix over the down-set of ms.
VirtualRep express_irreducible(const Multisegment& ms, const DecompositionProvider& prov);

// Linear extensions of the two basis changes.
VirtualRep to_irreducible_basis(const VirtualRep& x, const DecompositionProvider& prov);
VirtualRep to_standard_basis(const VirtualRep& x, const DecompositionProvider& prov);

// Moebius function of the down-set poset of b. Throws DomainError unless
// a <= b.
Coefficient moebius(const Multisegment& a, const Multisegment& b);

// Zeta (multiplicity) matrix and its inverse over the down-set of `top`,
// rows and columns in a linear extension of the order.
struct PosetMatrices {
  std::vector<Multisegment> elements;
  std::vector<std::vector<Coefficient>> zeta;
  std::vector<std::vector<Coefficient>> inverse;
};

PosetMatrices poset_matrices(const Multisegment& top, const DecompositionProvider& prov);

}  // namespace grot
