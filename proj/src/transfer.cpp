#include "grot/transfer.hpp"

#include "grot/error.hpp"
#include "grot/hopf.hpp"

namespace grot {

namespace {

void require(Side got, Side want, const char* op) {
  if (got != want)
    throw DomainError(std::string(op) + " expects side " + to_string(want) + ", got side " +
                      to_string(got));
}

}  // namespace

Segment transfer_segment_d_to_f(const TransferContext& tc, const Segment& s) {
  require(s.side(), Side::D, "transfer_segment_d_to_f");
  return make_segment(tc.algebra(), s.family(), Side::F, s.start(), s.length() * s.step());
}

bool segment_transfers(const TransferContext& tc, const Segment& s) {
  require(s.side(), Side::F, "segment_transfers");
  return s.degree() % tc.d() == 0;
}

Segment transfer_segment_f_to_d(const TransferContext& tc, const Segment& s) {
  require(s.side(), Side::F, "transfer_segment_f_to_d");
  const auto& ctx = tc.algebra();
  const auto& fam = ctx.family(s.family());
  if (!segment_transfers(tc, s))
    throw TransferError(TransferError::Kind::DoesNotTransfer,
                        format(s, ctx) + " does not transfer: d=" + std::to_string(tc.d()) +
                            " does not divide its degree " + std::to_string(s.degree()));
  if (!fam.s)
    throw TransferError(TransferError::Kind::InconsistentDatum,
                        "inconsistent transfer datum: family '" + fam.name +
                            "' has no inner-form attachment");
  if (s.length() % *fam.s != 0)
    throw TransferError(TransferError::Kind::InconsistentDatum,
                        "inconsistent transfer datum: s=" + std::to_string(*fam.s) +
                            " does not divide the length of " + format(s, ctx));
  return make_segment(ctx, s.family(), Side::D, s.start(), s.length() / *fam.s);
}

Multisegment m_map(const TransferContext& tc, const Multisegment& ms) {
  require(ms.side(), Side::D, "m_map");
  std::vector<Segment> segs;
  for (const auto& s : ms.segments()) segs.push_back(transfer_segment_d_to_f(tc, s));
  return Multisegment(Side::F, std::move(segs));
}

VirtualRep jl(const TransferContext& tc, const VirtualRep& x) {
  require(x.side(), Side::D, "jl");
  if (x.basis() != Basis::Standard) throw DomainError("jl requires the Standard basis");
  VirtualRep out(Side::F, Basis::Standard);
  for (const auto& [key, c] : x.terms()) out.add_term(m_map(tc, key), c);
  return out;
}

VirtualRep lj(const TransferContext& tc, const VirtualRep& x) {
  require(x.side(), Side::F, "lj");
  if (x.basis() != Basis::Standard) throw DomainError("lj requires the Standard basis");
  VirtualRep out(Side::D, Basis::Standard);
  for (const auto& [key, c] : x.terms()) {
    if (key.degree() % tc.d() != 0)
      throw TransferError(TransferError::Kind::NoInnerForm,
                          "no inner form at degree " + std::to_string(key.degree()) +
                              " (d=" + std::to_string(tc.d()) + ")");
    bool transfers = true;
    for (const auto& s : key.segments()) transfers = transfers && segment_transfers(tc, s);
    if (!transfers) continue;
    std::vector<Segment> segs;
    for (const auto& s : key.segments()) segs.push_back(transfer_segment_f_to_d(tc, s));
    out.add_term(Multisegment(Side::D, std::move(segs)), c);
  }
  return out;
}

bool is_g_prime_null(const TransferContext& tc, const VirtualRep& x) {
  return lj(tc, x).is_zero();
}

bool in_ideal(const TransferContext& tc, const VirtualRep& x) {
  require(x.side(), Side::F, "in_ideal");
  if (x.basis() != Basis::Standard) throw DomainError("in_ideal requires the Standard basis");
  for (const auto& [key, c] : x.terms()) {
    bool has_obstruction = false;
    for (const auto& s : key.segments())
      if (!segment_transfers(tc, s)) has_obstruction = true;
    if (!has_obstruction) return false;
  }
  return true;
}

IrreducibleImageReport check_jl_irreducible_image(const TransferContext& tc,
                                                  const Multisegment& ms,
                                                  const DecompositionProvider& prov) {
  IrreducibleImageReport report;
  report.leading = m_map(tc, ms);
  report.image = to_irreducible_basis(jl(tc, express_irreducible(ms, prov)), prov);
  report.leading_coefficient = report.image.coefficient(report.leading);
  for (const auto& [key, c] : report.image.terms()) {
    if (key == report.leading) continue;
    report.lower_terms.push_back(key);
    if (!leq(key, report.leading).holds) report.lower_terms_smaller = false;
  }
  return report;
}

bool check_conjecture_case(const TransferContext& tc, const Multisegment& ms,
                           const DecompositionProvider& prov) {
  const auto f_side = express_irreducible(m_map(tc, ms), prov);
  return lj(tc, f_side) == express_irreducible(ms, prov);
}

bool check_involution_compat(const TransferContext& tc, const VirtualRep& x) {
  return lj(tc, aubert_graded(jl(tc, x))) == aubert_graded(x);
}

Counterexample make_counterexample() {
  AlgebraContext ctx(2, {{"rho", 1, 2}});
  auto f = [&](int a, int b) { return make_segment(ctx, "rho", Side::F, a, b - a + 1); };
  auto d = [&](int a, int l) { return make_segment(ctx, "rho", Side::D, a, l); };
  Multisegment a(Side::D, {d(0, 3), d(1, 4), d(3, 2), d(4, 3)});
  Multisegment b(Side::D, {d(0, 5), d(1, 3), d(3, 3), d(4, 1)});
  Multisegment sigma1(Side::F, {f(0, 5), f(1, 8), f(3, 6), f(4, 9)});
  Multisegment sigma2(Side::F, {f(0, 9), f(1, 6), f(3, 8), f(4, 5)});
  return {std::move(ctx), std::move(a), std::move(b), std::move(sigma1), std::move(sigma2)};
}

OrderPreservationReport check_order_preservation(
    const TransferContext& tc, const std::vector<std::pair<Multisegment, Multisegment>>& pairs) {
  OrderPreservationReport report;
  for (const auto& [a, b] : pairs) {
    ++report.pairs;
    if (!leq(a, b).holds) continue;
    ++report.comparable;
    if (!leq(m_map(tc, a), m_map(tc, b)).holds) report.violations.emplace_back(a, b);
  }
  const auto ce = make_counterexample();
  report.witness_images_ordered = leq(ce.sigma2, ce.sigma1).holds;
  report.witness_converse_fails = !leq(ce.b, ce.a).holds;
  return report;
}

}  // namespace grot
