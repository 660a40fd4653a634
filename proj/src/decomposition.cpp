#include "grot/decomposition.hpp"

#include "grot/error.hpp"
#include "grot/hopf.hpp"

namespace grot {

bool SegmentSupportProvider::covers(const Multisegment& b) const {
  return b.size() <= 2 || is_segment_support(b) || is_irreducible_standard(b);
}

Coefficient SegmentSupportProvider::multiplicity(const Multisegment& a,
                                                 const Multisegment& b) const {
  if (!covers(b)) throw CoverageError("no decomposition data for this support");
  return leq(a, b).holds ? 1 : 0;
}

namespace {

void require_covered(const Multisegment& ms, const DecompositionProvider& prov) {
  if (!prov.covers(ms))
    throw CoverageError("decomposition numbers are not available for this support "
                        "(only segment supports and two-segment multisegments are covered)");
}

std::vector<std::vector<Coefficient>> zeta_of(const DownSetPoset& poset,
                                              const DecompositionProvider& prov) {
  const std::size_t n = poset.size();
  std::vector<std::vector<Coefficient>> z(n, std::vector<Coefficient>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (poset.leq(i, j)) z[i][j] = prov.multiplicity(poset[i], poset[j]);
  return z;
}

// Column `col` of the inverse of the upper unitriangular matrix z.
std::vector<Coefficient> inverse_column(const std::vector<std::vector<Coefficient>>& z,
                                        std::size_t col) {
  const std::size_t n = z.size();
  std::vector<Coefficient> y(n, 0);
  y[col] = 1;
  for (std::size_t i = col; i-- > 0;) {
    Coefficient acc = 0;
    for (std::size_t k = i + 1; k <= col; ++k) acc += z[i][k] * y[k];
    y[i] = -acc;
  }
  return y;
}

}  // namespace

VirtualRep decompose_standard(const Multisegment& ms, const DecompositionProvider& prov) {
  require_covered(ms, prov);
  VirtualRep out(ms.side(), Basis::Irreducible);
  for (const auto& a : down_set(ms)) out.add_term(a, prov.multiplicity(a, ms));
  return out;
}

VirtualRep express_irreducible(const Multisegment& ms, const DecompositionProvider& prov) {
  require_covered(ms, prov);
  const DownSetPoset poset(ms);
  const auto z = zeta_of(poset, prov);
  const std::size_t top = *poset.index_of(ms);
  const auto y = inverse_column(z, top);
  VirtualRep out(ms.side(), Basis::Standard);
  for (std::size_t i = 0; i < poset.size(); ++i) out.add_term(poset[i], y[i]);
  return out;
}

VirtualRep to_irreducible_basis(const VirtualRep& x, const DecompositionProvider& prov) {
  if (x.basis() != Basis::Standard) throw DomainError("expected a Standard-basis element");
  VirtualRep out(x.side(), Basis::Irreducible);
  for (const auto& [key, c] : x.terms()) out += c * decompose_standard(key, prov);
  return out;
}

VirtualRep to_standard_basis(const VirtualRep& x, const DecompositionProvider& prov) {
  if (x.basis() != Basis::Irreducible) throw DomainError("expected an Irreducible-basis element");
  VirtualRep out(x.side(), Basis::Standard);
  for (const auto& [key, c] : x.terms()) out += c * express_irreducible(key, prov);
  return out;
}

Coefficient moebius(const Multisegment& a, const Multisegment& b) {
  const DownSetPoset poset(b);
  const auto ia = poset.index_of(a);
  if (!ia) throw DomainError("moebius: the arguments are not comparable (a <= b fails)");
  const std::size_t top = *poset.index_of(b);
  // mu(x, b) = -sum_{x < y <= b} mu(y, b), computed from the top down.
  std::vector<Coefficient> mu(poset.size(), 0);
  mu[top] = 1;
  for (std::size_t x = top; x-- > 0;) {
    if (!poset.leq(x, top)) continue;
    Coefficient acc = 0;
    for (std::size_t y = x + 1; y <= top; ++y)
      if (poset.leq(x, y)) acc += mu[y];
    mu[x] = -acc;
  }
  return mu[*ia];
}

PosetMatrices poset_matrices(const Multisegment& top, const DecompositionProvider& prov) {
  require_covered(top, prov);
  const DownSetPoset poset(top);
  PosetMatrices out;
  out.elements = poset.elements();
  out.zeta = zeta_of(poset, prov);
  const std::size_t n = poset.size();
  out.inverse.assign(n, std::vector<Coefficient>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = inverse_column(out.zeta, j);
    for (std::size_t i = 0; i < n; ++i) out.inverse[i][j] = col[i];
  }
  return out;
}

}  // namespace grot
