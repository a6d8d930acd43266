#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "hypc/ordinal_quotient.hpp"

using namespace hypc;

namespace {

Rational r(const char* s) { return parse_rational(s); }

L1Functional fun(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (auto* c : cs) v.push_back(r(c));
  return L1Functional(L1Vector(std::move(v)));
}

// Function with constant blocks given by tails; anchors forced by continuity,
// anchor 0 set to the first tail.
COmegaNFunc step_func(std::vector<Rational> tails) {
  std::size_t n = tails.size();
  std::vector<ConvergentSeq> blocks;
  std::vector<Rational> anchors{tails[0]};
  for (auto& t : tails) {
    blocks.push_back(ConvergentSeq::constant(t));
    anchors.push_back(t);
  }
  return COmegaNFunc(n, std::move(blocks), std::move(anchors));
}

COmegaNFunc random_func(gen::Rng& rng, std::size_t n) {
  std::vector<ConvergentSeq> blocks;
  std::vector<Rational> anchors{rng.rational(3, 3)};
  for (std::size_t k = 0; k < n; ++k) {
    blocks.push_back(gen::seq(rng, 3, 3, 3));
    anchors.push_back(blocks.back().limit());
  }
  return COmegaNFunc(n, std::move(blocks), std::move(anchors));
}

}  // namespace

TEST_CASE("COmegaNFunc construction and evaluation") {
  auto g = step_func({r("5"), r("7")});
  CHECK(g.value_at({1, 0}) == 5);   // anchor omega*1
  CHECK(g.value_at({2, 0}) == 7);   // top point omega*2
  CHECK(g.value_at({0, 3}) == 5);
  CHECK_THROWS_AS(g.value_at({3, 0}), DomainError);
  CHECK_THROWS_AS(g.value_at({2, 1}), DomainError);

  // continuity violation: anchor 1 must be the limit of block 0
  CHECK_THROWS_AS(COmegaNFunc(1, {ConvergentSeq::constant(Rational(1))},
                              {Rational(0), Rational(2)}),
                  DomainError);
}

TEST_CASE("make_mu") {
  auto f = fun({"3/4", "1/4"});

  auto m1 = make_mu(f, 1);
  REQUIRE(m1.atoms().size() == 1);
  CHECK(m1.atoms()[0].first == OrdinalPoint{1, 0});
  CHECK(m1.atoms()[0].second == 1);

  auto m2 = make_mu(f, 2);
  REQUIRE(m2.atoms().size() == 3);
  CHECK(m2.atoms()[0] == std::pair(OrdinalPoint{0, 2}, r("-1/3")));
  CHECK(m2.atoms()[1] == std::pair(OrdinalPoint{1, 2}, r("-1/3")));
  CHECK(m2.atoms()[2] == std::pair(OrdinalPoint{1, 3}, r("1/3")));
  CHECK(m2.total_variation() == 1);

  auto m3 = make_mu(f, 3);
  REQUIRE(m3.atoms().size() == 4);
  CHECK(m3.atoms()[0] == std::pair(OrdinalPoint{0, 3}, r("-1/3")));
  CHECK(m3.atoms()[1] == std::pair(OrdinalPoint{1, 4}, r("-2/9")));
  CHECK(m3.atoms()[2] == std::pair(OrdinalPoint{1, 5}, r("2/9")));
  CHECK(m3.atoms()[3] == std::pair(OrdinalPoint{1, 6}, r("-2/9")));
  CHECK(m3.total_variation() == 1);

  CHECK_THROWS_AS(make_mu(fun({"1/4", "1/4", "1/4", "1/4"}), 1), DomainError);
  CHECK_THROWS_AS(make_mu(fun({"0", "1"}), 1), DomainError);

  // n = 1 (f = ±e_1): only the alternating part, still total variation 1
  auto me = make_mu(fun({"-1"}), 3);
  CHECK(me.total_variation() == 1);
  CHECK(me.atoms().size() == 3);
  CHECK(me.atoms()[0].first == OrdinalPoint{0, 4});
}

TEST_CASE("integrate") {
  auto g = step_func({r("5"), r("7")});
  FinMeasure dirac({{OrdinalPoint{1, 0}, Rational(1)}});
  CHECK(integrate(dirac, g) == 5);
  CHECK(integrate(FinMeasure{}, g) == 0);

  FinMeasure mu({{OrdinalPoint{0, 2}, r("-1/3")},
                 {OrdinalPoint{1, 2}, r("-1/3")},
                 {OrdinalPoint{1, 3}, r("1/3")}});
  CHECK(integrate(mu, g) == r("-5/3"));

  CHECK_THROWS_AS(FinMeasure({{OrdinalPoint{0, 1}, Rational(1)},
                              {OrdinalPoint{0, 1}, Rational(2)}}),
                  DomainError);
}

TEST_CASE("quotient_apply") {
  auto f = fun({"3/4", "1/4"});
  auto ones = COmegaNFunc::constant(2, Rational(1));
  auto qi = quotient_apply(f, ones, 3);
  CHECK(qi.values[0] == 1);
  CHECK(qi.values[1] == r("-1/3"));          // -1/3 + (1/3) * 0
  CHECK(qi.values[2] == r("-1/3") - r("2/9"));  // -1/3 + (2/9) * (-1)
  CHECK(qi.limit == r("-1/3"));
  CHECK(f.coeff(1) * qi.limit + f.coeff(2) * qi.values[0] == 0);

  auto zeros = COmegaNFunc::constant(2, Rational(0));
  auto qz = quotient_apply(f, zeros, 4);
  for (const auto& v : qz.values) CHECK(v == 0);
  CHECK(qz.limit == 0);

  auto g = step_func({r("3"), r("0")});
  auto qg = quotient_apply(f, g, 2);
  CHECK(qg.limit == -1);
  CHECK(qg.values[0] == 3);  // anchor at omega, forced to 3 by continuity
  CHECK(f.coeff(1) * qg.limit + f.coeff(2) * qg.values[0] == 0);

  CHECK_THROWS_AS(quotient_apply(f, COmegaNFunc::constant(3, Rational(0)), 2),
                  DomainError);
}

TEST_CASE("mu_limit_compatibility") {
  auto f = fun({"3/4", "1/4"});
  CHECK(mu_limit_compatibility(f, COmegaNFunc::constant(2, Rational(1))));
  CHECK(mu_limit_compatibility(f, COmegaNFunc::constant(2, Rational(0))));

  auto f3 = fun({"5/8", "1/4", "1/8"});
  auto g3 = step_func({r("1"), r("2"), r("0")});
  CHECK(quotient_apply(f3, g3, 1).limit == r("-4/5"));
  CHECK(mu_limit_compatibility(f3, g3));
}

TEST_CASE("measure properties on random instances") {
  gen::Rng rng(8100);
  int done = 0;
  while (done < 60) {
    L1Functional f = gen::functional(rng, 5, 8);
    auto cls = classify(f);
    if (cls != HyperplaneClass::DualL1Only && cls != HyperplaneClass::IsoC0) continue;
    ++done;
    std::size_t n = f.support();

    for (std::size_t i = 1; i <= 25; ++i) {
      auto mu = make_mu(f, i);
      CHECK(mu.total_variation() == 1);
      // atom points are pairwise distinct
      std::set<OrdinalPoint> pts;
      for (const auto& [p, w] : mu.atoms()) CHECK(pts.insert(p).second);
    }

    for (int t = 0; t < 10; ++t) {
      auto g = random_func(rng, n);
      Rational sup = 0;
      for (const auto& b : g.blocks()) sup = std::max(sup, b.sup_norm());
      sup = std::max(sup, rabs(g.anchors()[0]));

      auto qi = quotient_apply(f, g, n + 4);
      Rational mem = f.coeff(1) * qi.limit;
      for (std::size_t i = 1; i + 1 <= f.support(); ++i)
        mem += f.coeff(i + 1) * qi.values[i - 1];
      CHECK(mem == 0);
      CHECK(mu_limit_compatibility(f, g));
      for (const auto& v : qi.values) CHECK(rabs(v) <= sup);
    }
  }
}
