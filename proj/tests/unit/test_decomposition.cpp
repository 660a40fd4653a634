#include "doctest.h"
#include "grot/decomposition.hpp"
#include "grot/error.hpp"
#include "grot/hopf.hpp"
#include "oracles.hpp"

using namespace grot;

namespace {

const AlgebraContext& ctx() {
  static const AlgebraContext c(2, {{"rho", 1, 2}});
  return c;
}

Segment F(int a, int b) { return make_segment(ctx(), "rho", Side::F, a, b - a + 1); }
Segment D(int a, int l) { return make_segment(ctx(), "rho", Side::D, a, l); }
Multisegment MF(std::vector<Segment> s) { return Multisegment(Side::F, std::move(s)); }

oracle::Multi to_oracle(const Multisegment& ms) {
  oracle::Multi m;
  for (const auto& s : ms.segments()) {
    const auto e = s.exponents();
    m.insert(oracle::ExpSet(e.begin(), e.end()));
  }
  return m;
}

// All multisegments whose support is exactly {0, ..., k-1} on rho, side F.
std::vector<Multisegment> compositions_of_support(int k) {
  std::vector<Multisegment> out;
  for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
    std::vector<Segment> segs;
    int start = 0;
    for (int i = 0; i < k - 1; ++i)
      if (mask & (1 << i)) {
        segs.push_back(F(start, i));
        start = i + 1;
      }
    segs.push_back(F(start, k - 1));
    out.emplace_back(Side::F, segs);
  }
  return out;
}

const SegmentSupportProvider prov;

}  // namespace

TEST_CASE("provider") {
  const auto two = MF({F(0, 0), F(1, 1)});
  CHECK(prov.multiplicity(MF({F(0, 1)}), two) == 1);
  CHECK(prov.multiplicity(two, MF({F(0, 1)})) == 0);
  CHECK(prov.multiplicity(two, two) == 1);
  CHECK(prov.covers(MF({F(0, 5), F(1, 8)})));
  CHECK(prov.covers(MF({F(0, 0), F(1, 1), F(2, 2)})));
  // three linked segments over a non-segment support are not covered
  const auto sigma1 = MF({F(0, 5), F(1, 8), F(3, 6), F(4, 9)});
  CHECK_FALSE(prov.covers(sigma1));
  CHECK_THROWS_AS(prov.multiplicity(sigma1, sigma1), CoverageError);
  CHECK_THROWS_AS(decompose_standard(sigma1, prov), CoverageError);
  // pairwise unlinked: irreducible standard module
  CHECK(prov.covers(MF({F(0, 3), F(1, 2), F(7, 7)})));
}

TEST_CASE("decompose_standard") {
  const auto two = MF({F(0, 0), F(1, 1)});
  CHECK(decompose_standard(two, prov) == irreducible(two) + irreducible(MF({F(0, 1)})));
  CHECK(decompose_standard(MF({F(0, 2)}), prov) == irreducible(MF({F(0, 2)})));
  const auto three = decompose_standard(MF({F(0, 0), F(1, 1), F(2, 2)}), prov);
  CHECK(three.size() == 4);
  for (const auto& [k, c] : three.terms()) CHECK(c == 1);
}

TEST_CASE("express_irreducible") {
  const auto two = MF({F(0, 0), F(1, 1)});
  CHECK(express_irreducible(two, prov) == standard(two) - standard(MF({F(0, 1)})));
  CHECK(express_irreducible(MF({F(0, 2)}), prov) == standard(MF({F(0, 2)})));
  const auto three = express_irreducible(MF({F(0, 0), F(1, 1), F(2, 2)}), prov);
  CHECK(three.coefficient(MF({F(0, 2)})) == 1);
  CHECK(three.coefficient(MF({F(0, 0), F(1, 1), F(2, 2)})) == 1);
  CHECK(three.coefficient(MF({F(0, 1), F(2, 2)})) == -1);
  CHECK(three.coefficient(MF({F(0, 0), F(1, 2)})) == -1);
}

TEST_CASE("basis changes are mutually inverse") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& ms : compositions_of_support(k)) {
      CHECK(to_standard_basis(decompose_standard(ms, prov), prov) == standard(ms));
      CHECK(to_irreducible_basis(express_irreducible(ms, prov), prov) == irreducible(ms));
    }
  // two linked segments with an intersection
  const auto pair = MF({F(0, 2), F(1, 4)});
  CHECK(express_irreducible(pair, prov) == standard(pair) - standard(MF({F(0, 4), F(1, 2)})));
  const auto dpair = Multisegment(Side::D, {D(0, 2), D(2, 2)});
  CHECK(to_irreducible_basis(express_irreducible(dpair, prov), prov) == irreducible(dpair));
}

TEST_CASE("moebius") {
  const auto two = MF({F(0, 0), F(1, 1)});
  CHECK(moebius(two, two) == 1);
  CHECK(moebius(MF({F(0, 1)}), two) == -1);
  CHECK(moebius(MF({F(0, 2)}), MF({F(0, 0), F(1, 1), F(2, 2)})) == 1);
  CHECK_THROWS_AS(moebius(two, MF({F(0, 1)})), DomainError);
}

TEST_CASE("moebius agrees with Hall's chain count") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& b : compositions_of_support(k))
      for (const auto& a : down_set(b)) {
        const auto m = moebius(a, b);
        CHECK(m == oracle::hall_moebius(to_oracle(a), to_oracle(b), 1));
        CHECK(express_irreducible(b, prov).coefficient(a) == m);
      }
}

TEST_CASE("poset matrices are unitriangular inverses") {
  for (int k = 1; k <= 5; ++k) {
    const auto top = compositions_of_support(k).back();
    const auto pm = poset_matrices(top, prov);
    const std::size_t n = pm.elements.size();
    CHECK(n == (std::size_t{1} << (k - 1)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Coefficient acc = 0;
        for (std::size_t m = 0; m < n; ++m) acc += pm.zeta[i][m] * pm.inverse[m][j];
        CHECK(acc == (i == j ? 1 : 0));
        if (i > j) {
          CHECK(pm.zeta[i][j] == 0);
          CHECK(pm.inverse[i][j] == 0);
        }
      }
  }
}

TEST_CASE("aubert sends irreducibles to irreducibles up to sign on segment supports") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& ms : compositions_of_support(k)) {
      const auto dual = to_irreducible_basis(aubert(express_irreducible(ms, prov)), prov);
      REQUIRE(dual.size() == 1);
      const auto c = dual.terms().begin()->second;
      CHECK((c == 1 || c == -1));
    }
  // the Steinberg-type segment goes to the full torus
  const auto dual = to_irreducible_basis(aubert(express_irreducible(MF({F(0, 2)}), prov)), prov);
  CHECK(dual.coefficient(MF({F(0, 0), F(1, 1), F(2, 2)})) != 0);
}
