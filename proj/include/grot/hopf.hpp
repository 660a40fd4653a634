#pragma once

#include "grot/levi.hpp"
#include "grot/virtual_rep.hpp"

namespace grot {

// Parabolic induction: bilinear extension of multiset union. Standard basis
// only; both factors on the same side.
VirtualRep mul(const VirtualRep& x, const VirtualRep& y);

// Jacquet restriction of the essentially square-integrable representation
// of a single segment to the Levi `c`. Zero unless every block is a multiple
// of the per-exponent degree; otherwise one key cutting the segment into
// consecutive pieces, highest exponents in the first block.
TensorRep restrict_esci(const Segment& s, const LeviComposition& c);

// Two-block comultiplication summed over all splits, extended from the
// segment generators as a ring morphism into the tensor square.
TensorRep comult(const VirtualRep& x);

// The (arity-1)-fold iterated comultiplication: every key is cut into
// `arity` ordered, possibly empty, slot keys.
TensorRep comult_iterated(const VirtualRep& x, std::size_t arity);

// r_L: the iterated comultiplication sliced at the block degrees of L.
TensorRep jacquet_restrict(const VirtualRep& x, const LeviComposition& levi);

// i_L: product of the slots.
VirtualRep induce(const TensorRep& t);

// Slotwise product in the tensor power.
TensorRep tensor_mul(const TensorRep& x, const TensorRep& y);

// Replace slot `slot` by its two-block comultiplication (arity grows by one).
TensorRep comult_slot(const TensorRep& t, std::size_t slot);

// sum_L (-1)^(blocks(L)-1) i_L r_L (x) over all compositions of the degree.
// x must be homogeneous; degree-zero input is returned unchanged.
VirtualRep aubert(const VirtualRep& x);

// aubert applied to each graded slice.
VirtualRep aubert_graded(const VirtualRep& x);

// The same involution evaluated through its factorization over segments:
// on a key with m segments it equals (-1)^(m-1) times the product of the
// involutions of the segments (it is minus the antipode of a commutative
// Hopf algebra). Agrees with `aubert_graded`; usable at degrees where the
// sum over compositions is out of reach.
VirtualRep aubert_by_factors(const VirtualRep& x);

// No two segments linked.
bool is_irreducible_standard(const Multisegment& ms);

}  // namespace grot
