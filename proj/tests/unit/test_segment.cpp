#include "doctest.h"
#include "grot/error.hpp"
#include "grot/multisegment.hpp"

using namespace grot;

namespace {

const AlgebraContext& ctx() {
  static const AlgebraContext c(2, {{"rho", 1, 2}, {"tau", 2, 1}, {"pi", 3, std::nullopt}});
  return c;
}

Segment F(int a, int b, const char* fam = "rho") {
  return make_segment(ctx(), fam, Side::F, a, b - a + 1);
}
Segment D(int a, int l, const char* fam = "rho") { return make_segment(ctx(), fam, Side::D, a, l); }

}  // namespace

TEST_CASE("context validation") {
  CHECK_THROWS_AS(AlgebraContext(0, {}), ContextError);
  CHECK_THROWS_AS(AlgebraContext(2, {{"rho", 1, 3}}), ContextError);
  CHECK_THROWS_AS(AlgebraContext(2, {{"rho", 1, 2}, {"rho", 2, 1}}), ContextError);
  CHECK_THROWS_AS(AlgebraContext(2, {{"rho", 0, std::nullopt}}), ContextError);
  // families are sorted by name; ids follow that order
  CHECK(ctx().family(0).name == "pi");
  CHECK(ctx().family_id("tau") == 2);
  CHECK_THROWS_AS(ctx().family_id("sigma"), ContextError);
  CHECK(ctx().d_unit_degree(ctx().family_id("rho")) == 1);
  CHECK(ctx().d_unit_degree(ctx().family_id("tau")) == 1);
}

TEST_CASE("make_segment") {
  auto s = F(0, 5);
  CHECK(s.exponents() == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(s.degree() == 6);

  auto d = D(0, 3);
  CHECK(d.exponents() == std::vector<int>{0, 2, 4});
  CHECK(d.degree() == 3);

  CHECK(D(1, 4).exponents() == std::vector<int>{1, 3, 5, 7});
  CHECK(F(0, 1, "tau").degree() == 4);

  CHECK_THROWS_AS(make_segment(ctx(), "sigma", Side::F, 0, 1), ContextError);
  CHECK_THROWS_AS(make_segment(ctx(), "pi", Side::D, 0, 1), DomainError);
  CHECK_THROWS_AS(make_segment(ctx(), "rho", Side::F, 0, 0), DomainError);
}

TEST_CASE("linked") {
  CHECK(linked(F(0, 5), F(1, 8)));
  CHECK_FALSE(linked(F(1, 8), F(3, 6)));
  CHECK(linked(D(0, 3), D(4, 3)));
  // juxtaposed
  CHECK(linked(F(0, 1), F(2, 3)));
  CHECK_FALSE(linked(F(0, 1), F(3, 3)));
  // different residue classes never link
  CHECK_FALSE(linked(D(0, 1), D(1, 1)));
  CHECK_FALSE(linked(F(0, 1), F(1, 2, "tau")));
  CHECK_FALSE(linked(F(0, 1), F(0, 1)));

  for (int a = -2; a <= 2; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int e = c; e <= 3; ++e) CHECK(linked(F(a, b), F(c, e)) == linked(F(c, e), F(a, b)));
}

TEST_CASE("union_inter") {
  auto [u1, i1] = union_inter(F(0, 5), F(4, 9));
  CHECK(u1 == F(0, 9));
  CHECK(i1 == F(4, 5));

  auto [u2, i2] = union_inter(F(0, 5), F(1, 8));
  CHECK(u2 == F(0, 8));
  CHECK(i2 == F(1, 5));

  auto [u3, i3] = union_inter(D(0, 3), D(4, 3));
  CHECK(u3.exponents() == std::vector<int>{0, 2, 4, 6, 8});
  CHECK(i3->exponents() == std::vector<int>{4});

  auto [u4, i4] = union_inter(F(0, 1), F(2, 3));
  CHECK(u4 == F(0, 3));
  CHECK_FALSE(i4.has_value());
  CHECK(F(0, 1).degree() + F(2, 3).degree() == u4.degree());

  CHECK_THROWS_AS(union_inter(F(1, 8), F(3, 6)), DomainError);
}

TEST_CASE("exponent_center") {
  CHECK(exponent_center(F(0, 5)) == Rational{5, 2});
  CHECK(exponent_center(make_segment(ctx(), "rho", Side::D, 1, 3)) == Rational{3, 1});
  CHECK(exponent_center(F(-4, -4)) == Rational{-4, 1});
  CHECK(exponent_center(F(0, 5)).str() == "5/2");
}

TEST_CASE("format") {
  CHECK(format(F(0, 5), ctx()) == "rho[0..5]");
  CHECK(format(D(1, 4), ctx()) == "rho'{1;4}");
}

TEST_CASE("multisegment normalization") {
  Multisegment x(Side::F, {F(4, 9), F(0, 5), F(3, 6), F(1, 8)});
  Multisegment y(Side::F, {F(1, 8), F(3, 6), F(0, 5), F(4, 9)});
  CHECK(x == y);
  CHECK(x.degree() == 24);
  CHECK(Multisegment(Side::F, std::vector<Segment>(x.segments().begin(), x.segments().end())) == x);
  CHECK(format(x, ctx()) == "rho[0..5],rho[1..8],rho[3..6],rho[4..9]");
  CHECK_THROWS_AS(Multisegment(Side::F, {F(0, 1), D(0, 1)}), DomainError);
}

TEST_CASE("support") {
  Multisegment s1(Side::F, {F(0, 5), F(1, 8), F(3, 6), F(4, 9)});
  const auto sup = support(s1);
  const int rho = ctx().family_id("rho");
  CHECK(sup.at({rho, 4}) == 4);
  CHECK(sup.at({rho, 0}) == 1);
  CHECK(sup.at({rho, 9}) == 1);

  Multisegment t(Side::F, {F(0, 1)});
  CHECK(support(t) == Support{{{rho, 0}, 1}, {{rho, 1}, 1}});
}

TEST_CASE("is_segment_support") {
  CHECK(is_segment_support(Multisegment(Side::F, {F(0, 0), F(1, 2)})));
  CHECK_FALSE(is_segment_support(Multisegment(Side::F, {F(0, 5), F(1, 8), F(3, 6), F(4, 9)})));
  CHECK_FALSE(is_segment_support(Multisegment(Side::F, {F(0, 0), F(2, 2)})));
  CHECK(is_segment_support(Multisegment(Side::D, {D(0, 1), D(2, 2)})));
  CHECK_FALSE(is_segment_support(Multisegment(Side::D, {D(0, 1), D(1, 1)})));
  CHECK_FALSE(is_segment_support(Multisegment(Side::F)));
}

TEST_CASE("enumeration") {
  const auto segs = enumerate_segments(ctx(), ctx().family_id("rho"), Side::F, 0, 3);
  CHECK(segs.size() == 10);
  const auto all = enumerate_multisegments(Side::F, segs, 2);
  // empty, 4 of degree 1, C(5,2)=10 pairs of points plus 3 segments of length 2
  CHECK(all.size() == 1 + 4 + 13);
  CHECK(std::is_sorted(all.begin(), all.end()));
  const auto dsegs = enumerate_segments(ctx(), ctx().family_id("rho"), Side::D, 0, 5);
  CHECK(dsegs.size() == 12);
}
