#include <map>
#include <random>

#include "doctest.h"
#include "grot/error.hpp"
#include "grot/order.hpp"
#include "grot/transfer.hpp"
#include "oracles.hpp"

using namespace grot;

namespace {

const AlgebraContext& ctx() {
  static const AlgebraContext c(2, {{"rho", 1, 2}});
  return c;
}

Segment F(int a, int b) { return make_segment(ctx(), "rho", Side::F, a, b - a + 1); }
Segment D(int a, int l) { return make_segment(ctx(), "rho", Side::D, a, l); }

oracle::Multi to_oracle(const Multisegment& ms) {
  oracle::Multi m;
  for (const auto& s : ms.segments()) {
    const auto e = s.exponents();
    m.insert(oracle::ExpSet(e.begin(), e.end()));
  }
  return m;
}

int step_of(const Multisegment& ms) { return ms.empty() ? 1 : ms[0].step(); }

// Shortest descent length by oracle BFS.
int oracle_distance(const oracle::Multi& from, const oracle::Multi& to, int step) {
  std::map<oracle::Multi, int> dist{{from, 0}};
  std::deque<oracle::Multi> q{from};
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    if (cur == to) return dist[cur];
    for (auto& c : oracle::children(cur, step))
      if (dist.emplace(c, dist[cur] + 1).second) q.push_back(c);
  }
  return -1;
}

const Multisegment sigma1() { return Multisegment(Side::F, {F(0, 5), F(1, 8), F(3, 6), F(4, 9)}); }
const Multisegment sigma2() { return Multisegment(Side::F, {F(0, 9), F(1, 6), F(3, 8), F(4, 5)}); }

}  // namespace

TEST_CASE("elementary_ops on sigma1 matches exhaustive pair enumeration") {
  const auto ops = elementary_ops(sigma1());
  const auto oracle_children = oracle::children(to_oracle(sigma1()), 1);
  CHECK(oracle_children.size() == 5);
  REQUIRE(ops.size() == oracle_children.size());
  for (std::size_t k = 0; k < ops.size(); ++k) {
    CHECK(to_oracle(ops[k].result) == oracle_children[k]);
    CHECK(support(ops[k].result) == support(sigma1()));
    CHECK(ops[k].result.rank() > sigma1().rank());
    CHECK(ops[k].result.degree() == sigma1().degree());
  }
  // the only unlinked pair is the nested one
  for (const auto& op : ops) CHECK_FALSE((op.first == F(1, 8) && op.second == F(3, 6)));
}

TEST_CASE("elementary_ops small cases") {
  Multisegment a(Side::D, {D(0, 3), D(1, 4), D(3, 2), D(4, 3)});
  const auto ops = elementary_ops(a);
  REQUIRE(ops.size() == 1);
  CHECK(ops[0].first == D(0, 3));
  CHECK(ops[0].second == D(4, 3));
  CHECK(elementary_ops(Multisegment(Side::F, {F(0, 0)})).empty());
  CHECK(elementary_ops(Multisegment(Side::F)).empty());
}

TEST_CASE("leq on the counterexample") {
  const auto r = leq(sigma2(), sigma1());
  REQUIRE(r.holds);
  REQUIRE(r.certificate);
  const auto& chain = r.certificate->chain;
  CHECK(chain.size() == static_cast<std::size_t>(oracle_distance(to_oracle(sigma1()), to_oracle(sigma2()), 1)));
  REQUIRE(chain.size() == 4);
  CHECK(replay(*r.certificate, sigma1(), sigma2()));
  CHECK(chain[0].first == F(0, 5));
  CHECK(chain[0].second == F(1, 8));
  CHECK(chain[1].first == F(0, 8));
  CHECK(chain[1].second == F(4, 9));
  CHECK(chain[2].first == F(1, 5));
  CHECK(chain[2].second == F(3, 6));
  CHECK(chain[3].first == F(3, 5));
  CHECK(chain[3].second == F(4, 8));

  Multisegment a(Side::D, {D(0, 3), D(1, 4), D(3, 2), D(4, 3)});
  Multisegment b(Side::D, {D(0, 5), D(1, 3), D(3, 3), D(4, 1)});
  CHECK_FALSE(leq(b, a).holds);
  CHECK_FALSE(oracle::below(to_oracle(b), to_oracle(a), 2));
  CHECK_FALSE(leq(sigma1(), sigma2()).holds);

  const auto self = leq(a, a);
  CHECK(self.holds);
  CHECK(self.certificate->chain.empty());

  CHECK_THROWS_AS(leq(a, sigma1()), DomainError);
}

TEST_CASE("replay rejects tampered certificates") {
  auto cert = *leq(sigma2(), sigma1()).certificate;
  CHECK_FALSE(replay(cert, sigma1(), sigma1()));
  std::swap(cert.chain[0], cert.chain[1]);
  CHECK_FALSE(replay(cert, sigma1(), sigma2()));
}

TEST_CASE("down_set") {
  Multisegment two(Side::F, {F(0, 0), F(1, 1)});
  const auto ds2 = down_set(two);
  CHECK(ds2 == std::set<Multisegment>{two, Multisegment(Side::F, {F(0, 1)})});

  Multisegment three(Side::F, {F(0, 0), F(1, 1), F(2, 2)});
  CHECK(down_set(three).size() == oracle::down_set(to_oracle(three), 1).size());
  CHECK(down_set(three).size() == 4);

  Multisegment seg(Side::F, {F(0, 2)});
  CHECK(down_set(seg) == std::set<Multisegment>{seg});

  CHECK(down_set(sigma1()).size() == oracle::down_set(to_oracle(sigma1()), 1).size());
}

TEST_CASE("order laws on random multisegments") {
  std::mt19937_64 rng(7);
  const auto segs = enumerate_segments(ctx(), 0, Side::F, 0, 3);
  const auto dsegs = enumerate_segments(ctx(), 0, Side::D, 0, 5);
  for (const auto* pool : {&segs, &dsegs}) {
    const Side side = pool->front().side();
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Segment> picked;
      const auto k = 1 + rng() % 4;
      for (std::size_t i = 0; i < k; ++i) picked.push_back((*pool)[rng() % pool->size()]);
      Multisegment top(side, picked);
      const auto ds = down_set(top);
      CHECK(ds.size() == oracle::down_set(to_oracle(top), step_of(top)).size());
      for (const auto& x : ds) {
        const auto r = leq(x, top);
        REQUIRE(r.holds);
        CHECK(replay(*r.certificate, top, x));
        if (!(x == top)) CHECK_FALSE(leq(top, x).holds);  // antisymmetry
        for (const auto& y : down_set(x)) CHECK(leq(y, top).holds);  // transitivity
      }
    }
  }
}

TEST_CASE("DownSetPoset is a linear extension") {
  const DownSetPoset p(Multisegment(Side::F, {F(0, 0), F(1, 1), F(2, 2), F(3, 3)}));
  CHECK(p.size() == 8);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      CHECK(p.leq(i, j) == leq(p[i], p[j]).holds);
      if (p.leq(i, j)) CHECK(i <= j);
    }
}
