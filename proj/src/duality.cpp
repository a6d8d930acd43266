#include "hypc/duality.hpp"

#include <algorithm>

namespace hypc {

Rational phi_apply(const L1Functional& f, const L1Vector& y, const ConvergentSeq& x) {
  if (!member(f, x))
    throw DomainError(Errc::NotInHyperplane, "x is not in ker f");
  Rational s = 0;
  for (std::size_t j = 1; j <= y.support(); ++j) s += x.coord(j) * y.coeff(j);
  return s;
}

WeakStarLimit weak_star_limit(const L1Functional& f) {
  Rational f1 = f.coeff(1);
  if (f1 == 0)
    throw DomainError(Errc::ZeroLeadCoefficient, "f_1 = 0");
  std::vector<Rational> c;
  for (std::size_t j = 2; j <= f.support(); ++j) c.push_back(-f.coeff(j) / f1);
  return WeakStarLimit{L1Vector(std::move(c)),
                       classify(f) != HyperplaneClass::DualL1Only};
}

DualNormWitness dual_norm_lower_witness(const L1Functional& f, const L1Vector& y,
                                        std::size_t N) {
  if (classify(f) != HyperplaneClass::DualL1Only)
    throw DomainError(Errc::WrongClass, "requires class dual_l1_only");

  // Smallest admissible truncation: tail sum sum_{j>N} |f_{j+1}| < 1/2.
  std::size_t n0 = 1;
  while (true) {
    Rational tail_abs = 0;
    for (std::size_t j = n0 + 1; j + 1 <= f.support(); ++j)
      tail_abs += rabs(f.coeff(j + 1));
    if (tail_abs < Rational(1, 2)) break;
    ++n0;
  }
  if (N < n0)
    throw DomainError(Errc::NBelowThreshold, "truncation below N_0");

  Rational num = 0;   // sum_{j=1}^{N} f_{j+1} sgn(y_j)
  std::vector<Rational> prefix;
  prefix.reserve(N);
  for (std::size_t j = 1; j <= N; ++j) {
    int s = sgn_pos(y.coeff(j));
    prefix.push_back(Rational(s));
    num += f.coeff(j + 1) * s;
  }
  Rational den = f.coeff(1);  // f_1 + sum_{j>N} f_{j+1}
  for (std::size_t j = N + 1; j + 1 <= f.support(); ++j) den += f.coeff(j + 1);
  if (den == 0)
    throw DomainError(Errc::DegenerateWitness, "vanishing tail denominator");

  ConvergentSeq x(std::move(prefix), -num / den);
  Rational value = rabs(phi_apply(f, y, x));
  return DualNormWitness{std::move(x), std::move(value)};
}

PredualResult predual_from_limit(const L1Vector& ehat) {
  Rational n = ehat.l1_norm();
  if (n > 1)
    throw DomainError(Errc::NotInUnitBall, "l1_norm(ehat) > 1");

  // With norm <= 1, a unit-modulus coefficient forces ehat = ±e_m.
  for (std::size_t j = 1; j <= ehat.support(); ++j) {
    if (rabs(ehat.coeff(j)) == 1)
      return PredualResult{true, L1Functional(L1Vector::unit(2))};
  }

  Rational f1 = Rational(1) / (1 + n);
  std::vector<Rational> c;
  c.reserve(ehat.support() + 1);
  c.push_back(f1);
  for (std::size_t j = 1; j <= ehat.support(); ++j) c.push_back(-ehat.coeff(j) * f1);
  return PredualResult{false, L1Functional(L1Vector(std::move(c)))};
}

}  // namespace hypc
