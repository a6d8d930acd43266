#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gen.hpp"
#include "hypc/oracles.hpp"

using namespace hypc;

namespace {

Rational r(const char* s) { return parse_rational(s); }

L1Functional fun(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (auto* c : cs) v.push_back(r(c));
  return L1Functional(L1Vector(std::move(v)));
}

ConvergentSeq seq(std::initializer_list<const char*> prefix, const char* tail) {
  std::vector<Rational> p;
  for (auto* c : prefix) p.push_back(r(c));
  return ConvergentSeq(std::move(p), r(tail));
}

Rational witness_max(const L1Functional& f, const ConvergentSeq& z, std::size_t n) {
  Rational best = 0;
  for (std::size_t i = 1; i <= n + 1; ++i)
    best = std::max(best, attained_norm_witness(f, z, n, i).value);
  return best;
}

}  // namespace

TEST_CASE("attained_norm_witness") {
  auto f = fun({"0", "1"});
  auto z0 = seq({"1"}, "0");
  CHECK(attained_norm_witness(f, z0, 2, 1).value == 1);

  auto f2 = fun({"3/4", "1/4"});
  auto z2 = seq({"0"}, "4/3");
  CHECK(witness_max(f2, z2, 2) == r("7/3"));
  CHECK(witness_max(f2, z2, 2) == projection_norm(f2, z2));

  // sgn(0) = +1: at i = 2, z_2 = 0 makes every argument 0 or 1
  auto w = attained_norm_witness(f, z0, 2, 2);
  CHECK(w.x == ConvergentSeq::constant(Rational(1)));

  CHECK_THROWS_AS(attained_norm_witness(f, seq({"2"}, "0"), 2, 1), DomainError);
}

TEST_CASE("extreme_point_norm_oracle") {
  auto f = fun({"0", "1"});
  CHECK(extreme_point_norm_oracle(f, seq({"1"}, "0"), 2) == 1);

  auto f2 = fun({"3/4", "1/4"});
  auto z2 = seq({"0"}, "4/3");
  CHECK(extreme_point_norm_oracle(f2, z2, 2) == r("7/3"));

  // depth 0 (tails only) is still a valid lower bound
  CHECK(extreme_point_norm_oracle(f2, z2, 0) <= projection_norm(f2, z2));
}

TEST_CASE("numeric_projection_constant") {
  auto near = [](double a, double b) { return std::fabs(a - b) <= 1e-6; };
  auto r1 = numeric_projection_constant(fun({"3/4", "1/4"}), 8);
  CHECK(r1.converged);
  CHECK(near(r1.value, 1.8));
  auto r2 = numeric_projection_constant(fun({"0", "1"}), 8);
  CHECK(near(r2.value, 1.0));
  auto r3 = numeric_projection_constant(fun({"1"}), 8);
  CHECK(near(r3.value, 2.0));
}

TEST_CASE("implication_suite") {
  auto rep = implication_suite(fun({"0", "1/2", "1/2"}));
  CHECK(rep.properties == std::array<bool, 8>{true, true, true, true, true,
                                              false, false, false});
  CHECK(rep.all_pass);

  auto rep2 = implication_suite(fun({"1"}));
  CHECK(rep2.properties == std::array<bool, 8>{false, false, false, true, true,
                                               true, true, true});
  CHECK(rep2.all_pass);

  auto rep3 = implication_suite(fun({"1/4", "1/4", "1/4", "1/4"}));
  for (bool p : rep3.properties) CHECK_FALSE(p);
  CHECK(rep3.all_pass);
}

TEST_CASE("weak_star_convergence_check") {
  auto f = fun({"3/4", "1/4"});
  auto x = seq({"3"}, "-1");
  REQUIRE(member(f, x));
  CHECK(weak_star_convergence_check(f, x, 1) == 4);
  CHECK(weak_star_convergence_check(f, x, 2) == 0);
  CHECK(weak_star_convergence_check(f, x, 5) == 0);
  CHECK_THROWS_AS(weak_star_convergence_check(f, seq({"1"}, "1"), 1), DomainError);
  CHECK_THROWS_AS(weak_star_convergence_check(fun({"0", "1"}), seq({"0"}, "0"), 1),
                  DomainError);
}

TEST_CASE("oracle sandwich on random pairs") {
  gen::Rng rng(9100);
  for (int t = 0; t < 60; ++t) {
    L1Functional f = gen::functional(rng, 4, 5);
    ConvergentSeq z = gen::feasible_z(rng, f, 3);
    Rational norm = projection_norm(f, z);
    std::size_t depth = std::max(z.prefix_size() + 1, f.support());

    CHECK(extreme_point_norm_oracle(f, z, depth - 1) <= norm);
    CHECK(extreme_point_norm_oracle(f, z, depth) == norm);
    CHECK(witness_max(f, z, depth) == norm);
  }
}

TEST_CASE("numeric oracle brackets the constant on random functionals") {
  gen::Rng rng(9200);
  for (int t = 0; t < 40; ++t) {
    L1Functional f = gen::functional(rng, 5, 6);
    double expected = static_cast<double>(numerator(projection_constant(f))) /
                      static_cast<double>(denominator(projection_constant(f)));
    auto nr = numeric_projection_constant(f, 16);
    CHECK(nr.converged);
    CHECK(std::fabs(nr.value - expected) <= 1e-6);
  }
}

TEST_CASE("verify report") {
  auto rep = verify_functional(fun({"3/4", "1/4"}));
  CHECK(rep.hyperplane_class == "dual_l1_only");
  CHECK(rep.all_pass);
  CHECK(rep.checks.size() >= 6);

  CHECK(verify_functional(fun({"0", "1/2", "1/2"})).all_pass);
  CHECK(verify_functional(fun({"1"})).all_pass);
  CHECK(verify_functional(fun({"1/4", "1/4", "1/4", "1/4"})).all_pass);
}
