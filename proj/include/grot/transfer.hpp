#pragma once

#include <utility>
#include <vector>

#include "grot/decomposition.hpp"
#include "grot/virtual_rep.hpp"

namespace grot {

// G = GL_n(F) and G' = GL_r(D) with n = r*d, over the families of an
// algebra context.
class TransferContext {
 public:
  explicit TransferContext(AlgebraContext ctx) : ctx_(std::move(ctx)) {}

  const AlgebraContext& algebra() const noexcept { return ctx_; }
  int d() const noexcept { return ctx_.d(); }

 private:
  AlgebraContext ctx_;
};

// D-segment (a; l) with step s maps to the F-segment [a .. a + l*s - 1].
Segment transfer_segment_d_to_f(const TransferContext& tc, const Segment& s);

// Inverse of the above. TransferError::DoesNotTransfer when d does not divide
// p*len, TransferError::InconsistentDatum when it does but s does not divide
// len (or the family has no inner-form attachment).
Segment transfer_segment_f_to_d(const TransferContext& tc, const Segment& s);

// d divides the F-degree p*len of the segment.
bool segment_transfers(const TransferContext& tc, const Segment& s);

// The injective ring morphism R(D) -> R(F), segmentwise on standard keys.
VirtualRep jl(const TransferContext& tc, const VirtualRep& x);

// R(F) -> R(D): a key goes to its segmentwise preimage when every segment
// transfers, and to zero otherwise. Throws TransferError::NoInnerForm for a
// key whose degree is not divisible by d.
VirtualRep lj(const TransferContext& tc, const VirtualRep& x);

// x lies in S_{G,G'}: lj(x) = 0.
bool is_g_prime_null(const TransferContext& tc, const VirtualRep& x);

// x lies in the ideal I_{F,D}: every key contains a segment whose degree is
// not divisible by d.
bool in_ideal(const TransferContext& tc, const VirtualRep& x);

// Segmentwise transfer of a D-side Langlands datum (labels, not basis
// elements).
Multisegment m_map(const TransferContext& tc, const Multisegment& ms);

// jl of the irreducible Irr(ms), re-expressed in the F irreducible basis.
struct IrreducibleImageReport {
  Multisegment leading;
  Coefficient leading_coefficient = 0;
  VirtualRep image{Side::F, Basis::Irreducible};
  std::vector<Multisegment> lower_terms;
  bool lower_terms_smaller = true;

  bool ok() const noexcept { return leading_coefficient == 1 && lower_terms_smaller; }
};

IrreducibleImageReport check_jl_irreducible_image(const TransferContext& tc,
                                                  const Multisegment& ms,
                                                  const DecompositionProvider& prov);

// lj(Irr_F(m_map(ms))) equals Irr_D(ms) in standard coordinates.
bool check_conjecture_case(const TransferContext& tc, const Multisegment& ms,
                           const DecompositionProvider& prov);

// lj(aubert_F(jl(x))) == aubert_D(x).
bool check_involution_compat(const TransferContext& tc, const VirtualRep& x);

struct OrderPreservationReport {
  std::size_t pairs = 0;
  std::size_t comparable = 0;
  std::vector<std::pair<Multisegment, Multisegment>> violations;
  // The standing counterexample: the images are ordered, the D-side
  // multisegments are not.
  bool witness_images_ordered = false;
  bool witness_converse_fails = false;

  bool ok() const noexcept {
    return violations.empty() && witness_images_ordered && witness_converse_fails;
  }
};

// For each (a, b) with a <= b on side D, require m_map(a) <= m_map(b).
OrderPreservationReport check_order_preservation(
    const TransferContext& tc, const std::vector<std::pair<Multisegment, Multisegment>>& pairs);

// Quaternion-algebra example: d = 2, one family rho with p = 1 and s = 2;
// jl(a) = sigma1, jl(b) = sigma2, sigma2 < sigma1 but b is not below a.
struct Counterexample {
  AlgebraContext ctx;
  Multisegment a;
  Multisegment b;
  Multisegment sigma1;
  Multisegment sigma2;
};

Counterexample make_counterexample();

}  // namespace grot
