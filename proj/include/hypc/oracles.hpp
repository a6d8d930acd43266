#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hypc/core_seq.hpp"
#include "hypc/hyperplane.hpp"

namespace hypc {

struct NormWitness {
  ConvergentSeq x;  // sign-pattern witness x^(n,i), all entries ±1
  Rational value;   // ||P_z(x^(n,i))||
};

// Witness from the norm-formula proof: x_j = sgn(delta_ij - f_{j+1} z_i) for
// j <= n, tail sgn(-f_1 z_i), with sgn(0) = +1. For n covering both supports
// the max over i of the returned value equals projection_norm(f, z) exactly.
NormWitness attained_norm_witness(const L1Functional& f, const ConvergentSeq& z,
                                  std::size_t n, std::size_t i);

// Exhaustive lower bound: max of ||P_z(x)|| over all x with prefix in
// {-1,+1}^depth and tail ±1. Always <= projection_norm(f, z); equality once
// depth covers both supports.
Rational extreme_point_norm_oracle(const L1Functional& f, const ConvergentSeq& z,
                                   std::size_t depth);

struct NumericResult {
  double value;
  bool converged;
};

// Independent floating-point minimization of ||P_z|| over z in f^{-1}(1):
// deterministic coordinate descent with nested grid refinement, started from
// the feasible truncated minimizer. Every evaluated point is feasible, so the
// result never undershoots the true constant beyond rounding.
NumericResult numeric_projection_constant(const L1Functional& f,
                                          std::size_t N = 32,
                                          int max_sweeps = 256,
                                          double tolerance = 1e-9);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
  double elapsed_ms = 0.0;
};

// The eight numbered structural properties and the implications between
// them, each evaluated as a concrete computation on this f.
struct ImplicationReport {
  std::array<bool, 8> properties{};   // properties (1)..(8)
  std::vector<CheckResult> checks;    // one per stated implication
  bool all_pass = true;
};

ImplicationReport implication_suite(const L1Functional& f);

// |phi(e_n)(x) - phi(ehat)(x)|; zero exactly once n passes the prefix of x.
// Throws NotInHyperplane, ZeroLeadCoefficient.
Rational weak_star_convergence_check(const L1Functional& f, const ConvergentSeq& x,
                                     std::size_t n);

struct VerifyReport {
  std::string hyperplane_class;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// Cross-verification bundle for one f: closed forms against the numeric and
// exhaustive oracles, the implication suite, and the class-specific duality
// and measure identities.
VerifyReport verify_functional(const L1Functional& f, std::size_t trunc = 32,
                               double tol = 1e-6, std::size_t depth = 0);

}  // namespace hypc
