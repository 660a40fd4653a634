#include "grot/cli/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "grot/decomposition.hpp"
#include "grot/error.hpp"
#include "grot/hopf.hpp"
#include "grot/order.hpp"
#include "grot/transfer.hpp"
#include "grot/weyl.hpp"

namespace grot::cli {

namespace {

class Tally {
 public:
  explicit Tally(std::string property) { line_.property = std::move(property); }

  template <class Pred, class Describe>
  void check(Pred&& pred, Describe&& describe) {
    ++line_.cases;
    std::string error;
    bool ok = false;
    try {
      ok = pred();
    } catch (const Error& e) {
      error = e.what();
    }
    if (!ok && line_.passed) {
      line_.passed = false;
      line_.counterexample = describe();
      if (!error.empty()) line_.counterexample += " (" + error + ")";
    }
  }

  const CheckLine& line() const { return line_; }

 private:
  CheckLine line_;
};

struct Env {
  const AlgebraContext& ctx;
  const SuiteOptions& opts;
  int n;

  VirtualRep emit(VirtualRep x) const {
    if (opts.emitted) opts.emitted->push_back(x);
    return x;
  }
  std::string fmt(const Multisegment& ms) const { return "{" + format(ms, ctx) + "}"; }
  std::string fmt(const VirtualRep& x) const { return format(x, ctx); }
};

const char* tag(Side side) { return side == Side::F ? " (F)" : " (D)"; }

std::optional<int> inner_family(const AlgebraContext& ctx) {
  for (std::size_t i = 0; i < ctx.families().size(); ++i)
    if (ctx.families()[i].s) return static_cast<int>(i);
  return std::nullopt;
}

int require_inner_family(const AlgebraContext& ctx, std::string_view suite) {
  const auto fam = inner_family(ctx);
  if (!fam)
    throw DomainError("suite '" + std::string(suite) +
                      "' needs a family with an inner-form torsion number s");
  return *fam;
}

std::vector<Segment> window(const AlgebraContext& ctx, int fam, Side side) {
  return enumerate_segments(ctx, fam, side, 0, side == Side::F ? kWindowF : kWindowD);
}

std::vector<Multisegment> window_keys(const AlgebraContext& ctx, int fam, Side side, int max_degree) {
  const auto segs = window(ctx, fam, side);
  return enumerate_multisegments(side, segs, max_degree);
}

// All multisegments whose support is the k consecutive points of the line
// starting at exponent `base`.
std::vector<Multisegment> support_compositions(const AlgebraContext& ctx, int fam, Side side, int k,
                                               int base = 0) {
  const int step = side == Side::F ? 1 : *ctx.family(fam).s;
  std::vector<Multisegment> out;
  for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
    std::vector<Segment> segs;
    int start = 0;
    for (int i = 0; i < k; ++i)
      if (i == k - 1 || (mask & (1 << i))) {
        segs.push_back(make_segment(ctx, fam, side, base + step * start, i - start + 1));
        start = i + 1;
      }
    out.emplace_back(side, std::move(segs));
  }
  return out;
}

void hopf_side(const Env& e, Side side, int fam, std::vector<CheckLine>& out) {
  const auto keys = window_keys(e.ctx, fam, side, e.n);

  Tally coassoc(std::string("coassociativity") + tag(side));
  for (const auto& k : keys)
    coassoc.check(
        [&] {
          const auto c = comult(standard(k));
          return comult_slot(c, 0) == comult_slot(c, 1);
        },
        [&] { return e.fmt(k); });
  out.push_back(coassoc.line());

  Tally multiplicative(std::string("c(x*y) = c(x)*c(y)") + tag(side));
  std::map<Multisegment, TensorRep> comults;
  for (const auto& k : keys) comults.emplace(k, comult(standard(k)));
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j) {
      const auto& x = keys[i];
      const auto& y = keys[j];
      if (x.degree() + y.degree() > e.n) continue;
      multiplicative.check(
          [&] {
            const auto& p = e.emit(mul(standard(x), standard(y)));
            return comult(p) == tensor_mul(comults.at(x), comults.at(y));
          },
          [&] { return e.fmt(x) + " * " + e.fmt(y); });
    }
  out.push_back(multiplicative.line());

  // jacquet_restrict is the L-component of the iterated comultiplication,
  // computed without expanding the other components.
  Tally lemma(std::string("geometric lemma = iterated comultiplication, L-components") + tag(side));
  for (const auto& k : keys) {
    if (k.empty()) continue;
    for (const auto& levi : compositions(k.degree()))
      lemma.check([&] { return geometric_lemma(k, levi) == jacquet_restrict(standard(k), levi); },
                  [&] { return e.fmt(k) + " at " + levi.str(); });
  }
  out.push_back(lemma.line());
}

std::vector<CheckLine> hopf_suite(const Env& e) {
  std::vector<CheckLine> out;
  hopf_side(e, Side::F, 0, out);
  if (const auto fam = inner_family(e.ctx)) hopf_side(e, Side::D, *fam, out);
  return out;
}

std::vector<CheckLine> involution_suite(const Env& e) {
  std::vector<CheckLine> out;
  const SegmentSupportProvider prov;
  std::vector<std::pair<Side, int>> sides{{Side::F, 0}};
  if (const auto fam = inner_family(e.ctx)) sides.emplace_back(Side::D, *fam);

  for (const auto& [side, fam] : sides) {
    Tally twice(std::string("aubert(aubert(x)) = x") + tag(side));
    for (const auto& k : window_keys(e.ctx, fam, side, e.n))
      twice.check(
          [&] {
            const auto& once = e.emit(aubert(standard(k)));
            return aubert(once) == standard(k);
          },
          [&] { return e.fmt(k); });
    out.push_back(twice.line());
  }

  Tally regression("aubert(Std([0..1])) = Std([0..1]) - Std([0..0],[1..1])");
  regression.check(
      [&] {
        const auto x = standard(Multisegment(Side::F, {make_segment(e.ctx, 0, Side::F, 0, 2)}));
        const auto y = standard(Multisegment(Side::F, {make_segment(e.ctx, 0, Side::F, 0, 1),
                                                        make_segment(e.ctx, 0, Side::F, 1, 1)}));
        return e.emit(aubert(x)) == x - y;
      },
      [&] { return std::string("Std([0..1])"); });
  out.push_back(regression.line());

  for (const auto& [side, fam] : sides) {
    Tally irr(std::string("aubert(Irr) = +-Irr on segment supports") + tag(side));
    for (int k = 1; k <= e.n; ++k)
      for (const auto& ms : support_compositions(e.ctx, fam, side, k))
        irr.check(
            [&] {
              const auto& expanded = e.emit(express_irreducible(ms, prov));
              const auto& dual = e.emit(to_irreducible_basis(aubert(expanded), prov));
              if (dual.size() != 1) return false;
              const auto c = dual.terms().begin()->second;
              return c == 1 || c == -1;
            },
            [&] { return "Irr" + e.fmt(ms); });
    out.push_back(irr.line());
  }
  return out;
}

bool has_non_transferring(const TransferContext& tc, const Multisegment& ms) {
  return std::any_of(ms.segments().begin(), ms.segments().end(),
                     [&](const Segment& s) { return !segment_transfers(tc, s); });
}

std::vector<CheckLine> transfer_suite(const Env& e) {
  const int fam = require_inner_family(e.ctx, "transfer");
  const TransferContext tc(e.ctx);
  std::vector<CheckLine> out;
  const auto dkeys = window_keys(e.ctx, fam, Side::D, e.n);

  Tally roundtrip("lj(jl(x)) = x on D keys of degree <= " + std::to_string(e.n));
  std::set<Multisegment> images;
  bool injective = true;
  for (const auto& k : dkeys)
    roundtrip.check(
        [&] {
          const auto& image = e.emit(jl(tc, standard(k)));
          if (image.size() != 1 || !images.insert(image.terms().begin()->first).second) injective = false;
          return e.emit(lj(tc, image)) == standard(k);
        },
        [&] { return e.fmt(k); });
  out.push_back(roundtrip.line());

  Tally inj("jl is injective on D keys");
  inj.check([&] { return injective; }, [] { return std::string("two keys share an image"); });
  out.push_back(inj.line());

  Tally ring("jl(x*y) = jl(x)*jl(y)");
  for (std::size_t i = 0; i < dkeys.size(); ++i)
    for (std::size_t j = i; j < dkeys.size(); ++j) {
      const auto& x = dkeys[i];
      const auto& y = dkeys[j];
      if (x.degree() + y.degree() > e.n) continue;
      ring.check(
          [&] {
            return e.emit(jl(tc, mul(standard(x), standard(y)))) ==
                   mul(jl(tc, standard(x)), jl(tc, standard(y)));
          },
          [&] { return e.fmt(x) + " * " + e.fmt(y); });
    }
  out.push_back(ring.line());

  // The kernel of lj on one F-degree slice: lj sends every key either to zero
  // or to a single key, so ker(lj) is spanned by the keys it kills exactly
  // when the surviving images are pairwise distinct.
  const int slice_degree = e.n - e.n % e.ctx.d();
  if (slice_degree > 0) {
    std::vector<Multisegment> fkeys;
    for (const auto& k : window_keys(e.ctx, fam, Side::F, slice_degree))
      if (k.degree() == slice_degree) fkeys.push_back(k);
    Tally kernel("ker(lj) on F degree " + std::to_string(slice_degree) +
                 " = span of keys with a non-transferring segment");
    std::set<Multisegment> seen;
    for (const auto& k : fkeys)
      kernel.check(
          [&] {
            const auto& image = e.emit(lj(tc, standard(k)));
            if (image.is_zero()) return has_non_transferring(tc, k);
            return !has_non_transferring(tc, k) && image.size() == 1 &&
                   image.terms().begin()->second == 1 && seen.insert(image.terms().begin()->first).second;
          },
          [&] { return e.fmt(k); });
    out.push_back(kernel.line());

    Tally stable("aubert_F preserves ker(lj) on F degree " + std::to_string(slice_degree));
    for (const auto& k : fkeys) {
      if (!has_non_transferring(tc, k)) continue;
      stable.check([&] { return is_g_prime_null(tc, e.emit(aubert(standard(k)))); },
                   [&] { return e.fmt(k); });
    }
    out.push_back(stable.line());
  }

  const int compat_degree = std::min(e.n, 3);
  Tally compat("lj(aubert_F(jl(x))) = aubert_D(x) on D keys of degree <= " + std::to_string(compat_degree));
  for (const auto& k : dkeys) {
    if (k.degree() > compat_degree) continue;
    compat.check([&] { return check_involution_compat(tc, standard(k)); }, [&] { return e.fmt(k); });
  }
  out.push_back(compat.line());
  return out;
}

// Builds a D multisegment by drawing window segments until the target degree
// is reached or nothing fits.
Multisegment random_multisegment(std::mt19937_64& rng, const std::vector<Segment>& segs, int max_degree) {
  int remaining = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
  std::vector<Segment> chosen;
  while (remaining > 0) {
    std::vector<const Segment*> fits;
    for (const auto& s : segs)
      if (s.degree() <= remaining) fits.push_back(&s);
    if (fits.empty()) break;
    const Segment& s = *fits[rng() % fits.size()];
    chosen.push_back(s);
    remaining -= s.degree();
  }
  return Multisegment(Side::D, std::move(chosen));
}

constexpr int kOrderSamples = 500;

std::vector<CheckLine> order_suite(const Env& e) {
  const int fam = require_inner_family(e.ctx, "order");
  const TransferContext tc(e.ctx);
  std::mt19937_64 rng(e.opts.seed);
  const auto segs = window(e.ctx, fam, Side::D);

  std::vector<Multisegment> samples;
  for (int i = 0; i < kOrderSamples; ++i) samples.push_back(random_multisegment(rng, segs, e.n));

  std::vector<std::pair<Multisegment, Multisegment>> edges;
  for (const auto& ms : samples)
    for (const auto& op : elementary_ops(ms)) edges.emplace_back(op.result, ms);

  std::vector<CheckLine> out;
  Tally mono("elementary-op edges a < b give m(a) <= m(b) (" + std::to_string(kOrderSamples) +
             " samples)");
  for (const auto& [a, b] : edges)
    mono.check(
        [&] {
          const auto r = check_order_preservation(tc, {{a, b}});
          return r.comparable == 1 && r.violations.empty();
        },
        [&] { return e.fmt(a) + " < " + e.fmt(b); });
  out.push_back(mono.line());

  Tally certs("order certificates replay (D edges and their F images)");
  for (const auto& [a, b] : edges)
    certs.check(
        [&] {
          const auto d = leq(a, b);
          const auto ma = m_map(tc, a);
          const auto mb = m_map(tc, b);
          const auto f = leq(ma, mb);
          return d.holds && f.holds && replay(*d.certificate, b, a) && replay(*f.certificate, mb, ma);
        },
        [&] { return e.fmt(a) + " < " + e.fmt(b); });
  out.push_back(certs.line());

  Tally laws("leq is reflexive and antisymmetric on sampled pairs");
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    laws.check(
        [&] {
          if (!leq(a, a).holds) return false;
          return !(leq(a, b).holds && leq(b, a).holds) || a == b;
        },
        [&] { return e.fmt(a) + ", " + e.fmt(b); });
  }
  out.push_back(laws.line());

  Tally witness("standing witness: m(b) < m(a) but b is not <= a");
  witness.check(
      [&] {
        const auto r = check_order_preservation(tc, {});
        return r.witness_images_ordered && r.witness_converse_fails;
      },
      [] { return std::string("counterexample pair"); });
  out.push_back(witness.line());
  return out;
}

std::vector<CheckLine> conjecture_suite(const Env& e) {
  const int fam = require_inner_family(e.ctx, "conjecture");
  const TransferContext tc(e.ctx);
  const SegmentSupportProvider prov;
  std::vector<CheckLine> out;

  std::vector<Multisegment> cases;
  const int two_degree = std::max(1, e.n - 1);
  for (const auto& k : window_keys(e.ctx, fam, Side::D, two_degree))
    if (k.size() == 2) cases.push_back(k);
  const int s = *e.ctx.family(fam).s;
  for (int base = 0; base < std::min(s, 2); ++base)
    for (int k = 1; k <= e.n; ++k)
      for (auto& ms : support_compositions(e.ctx, fam, Side::D, k, base)) cases.push_back(std::move(ms));

  auto describe_range = [&](std::string head) {
    return head + " on two-segment D keys of degree <= " + std::to_string(two_degree) +
           " and D segment supports of size <= " + std::to_string(e.n);
  };
  Tally conj(describe_range("lj(Irr_F(m(x))) = Irr_D(x)"));
  Tally image(describe_range("jl(Irr_D(x)) = Irr_F(m(x)) + strictly smaller terms"));
  for (const auto& ms : cases) {
    conj.check([&] { return check_conjecture_case(tc, ms, prov); }, [&] { return e.fmt(ms); });
    image.check(
        [&] {
          const auto r = check_jl_irreducible_image(tc, ms, prov);
          e.emit(r.image);
          return r.ok();
        },
        [&] { return e.fmt(ms); });
  }
  out.push_back(conj.line());
  out.push_back(image.line());

  const int max_k = e.n + 1;
  Tally inverse("zeta and Moebius matrices are unitriangular inverses for supports of size <= " +
                std::to_string(max_k));
  Tally minimal("minimal key has coefficient +-1 in every Irr expansion");
  for (int k = 1; k <= max_k; ++k) {
    const auto all = support_compositions(e.ctx, 0, Side::F, k);
    const Multisegment top = all.back();
    const Multisegment bottom = all.front();
    PosetMatrices pm;
    inverse.check(
        [&] {
          pm = poset_matrices(top, prov);
          const std::size_t n = pm.elements.size();
          if (n != all.size()) return false;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              if (i > j && (pm.zeta[i][j] != 0 || pm.inverse[i][j] != 0)) return false;
              if (i == j && (pm.zeta[i][i] != 1 || pm.inverse[i][i] != 1)) return false;
              Coefficient acc = 0;
              for (std::size_t m = 0; m < n; ++m) acc += pm.zeta[i][m] * pm.inverse[m][j];
              if (acc != (i == j ? 1 : 0)) return false;
            }
          return true;
        },
        [&] { return "support of size " + std::to_string(k); });
    const auto it = std::find(pm.elements.begin(), pm.elements.end(), bottom);
    for (const auto& ms : all)
      minimal.check(
          [&] {
            const auto& x = e.emit(express_irreducible(ms, prov));
            const auto c = x.coefficient(bottom);
            return it != pm.elements.end() && (c == 1 || c == -1);
          },
          [&] { return "Irr" + e.fmt(ms); });
  }
  out.push_back(inverse.line());
  out.push_back(minimal.line());
  return out;
}

std::vector<CheckLine> weyl_suite(const Env& e) {
  std::vector<CheckLine> out;
  Tally bijection("block_embed: W(L1,L2) -> W(dL1,dL2)_d is a bijection for r <= " +
                  std::to_string(e.n) + ", d in {2,3}");
  for (int d = 2; d <= 3; ++d)
    for (int r = 1; r <= e.n; ++r)
      for (const auto& l1 : compositions(r))
        for (const auto& l2 : compositions(r))
          bijection.check(
              [&] {
                std::set<BlockPermutation> image;
                const auto small = shuffle_set(l1, l2);
                for (const auto& t : small) image.insert(block_embed(t, d));
                const auto big = shuffle_set_d(l1.scaled(d), l2.scaled(d), d);
                return image.size() == small.size() &&
                       image == std::set<BlockPermutation>(big.begin(), big.end());
              },
              [&] { return "d=" + std::to_string(d) + " " + l1.str() + " " + l2.str(); });
  out.push_back(bijection.line());

  Tally embed("block_embed([2,1],2) = [3,4,1,2]");
  embed.check([] { return block_embed(BlockPermutation({2, 1}), 2).images() == std::vector<int>{3, 4, 1, 2}; },
              [] { return std::string("[2,1]"); });
  out.push_back(embed.line());

  const auto w22 = shuffle_set_d(LeviComposition({2, 2}), LeviComposition({2, 2}), 2);
  Tally count("|W((2,2),(2,2))_2| = " + std::to_string(w22.size()));
  count.check([&] { return w22.size() == 2; }, [&] { return std::to_string(w22.size()); });
  out.push_back(count.line());

  const int multinomial_n = e.n + 2;
  Tally multinomial("|W(L,torus)| = |W(torus,L)| = multinomial for n <= " + std::to_string(multinomial_n));
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int n = 1; n <= multinomial_n; ++n)
    for (const auto& l : compositions(n))
      multinomial.check(
          [&] {
            long long expected = fact(n);
            for (int b : l.blocks()) expected /= fact(b);
            const LeviComposition torus(std::vector<int>(static_cast<std::size_t>(n), 1));
            return static_cast<long long>(shuffle_set(l, torus).size()) == expected &&
                   static_cast<long long>(shuffle_set(torus, l).size()) == expected;
          },
          [&] { return l.str(); });
  out.push_back(multinomial.line());

  Tally split("W(L1,L2)_1 = W(L1,L2)");
  for (int r = 1; r <= e.n; ++r)
    for (const auto& l1 : compositions(r))
      for (const auto& l2 : compositions(r))
        split.check([&] { return shuffle_set_d(l1, l2, 1) == shuffle_set(l1, l2); },
                    [&] { return l1.str() + " " + l2.str(); });
  out.push_back(split.line());
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf", "involution", "transfer", "order", "conjecture", "weyl"};
  return names;
}

int default_max_degree(std::string_view suite) {
  if (suite == "hopf") return 6;
  if (suite == "involution" || suite == "order" || suite == "conjecture") return 5;
  if (suite == "transfer" || suite == "weyl") return 4;
  throw DomainError("unknown suite '" + std::string(suite) + "'");
}

std::vector<CheckLine> run_suite(std::string_view name, const AlgebraContext& ctx, const SuiteOptions& opts) {
  const int n = opts.max_degree.value_or(default_max_degree(name));
  if (n < 1) throw DomainError("max degree must be positive");
  const Env env{ctx, opts, n};
  if (name == "hopf") return hopf_suite(env);
  if (name == "involution") return involution_suite(env);
  if (name == "transfer") return transfer_suite(env);
  if (name == "order") return order_suite(env);
  if (name == "conjecture") return conjecture_suite(env);
  if (name == "weyl") return weyl_suite(env);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace grot::cli
