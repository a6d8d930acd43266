// Deterministic random generators shared by the unit and acceptance suites.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypc/core_seq.hpp"
#include "hypc/hyperplane.hpp"

namespace gen {

using hypc::ConvergentSeq;
using hypc::L1Functional;
using hypc::L1Vector;
using hypc::Rational;

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  Rational rational(int max_abs_num, int max_den) {
    return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
  }

 private:
  std::mt19937 eng_;
};

inline L1Vector vector(Rng& rng, std::size_t max_support, int max_num, int max_den) {
  std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_support)));
  std::vector<Rational> c;
  c.reserve(len);
  for (std::size_t i = 0; i < len; ++i) c.push_back(rng.rational(max_num, max_den));
  return L1Vector(std::move(c));
}

inline L1Functional functional(Rng& rng, std::size_t max_support, int max_den) {
  for (;;) {
    L1Vector v = vector(rng, max_support, max_den, max_den);
    if (!v.is_zero()) return hypc::normalize(v);
  }
}

inline ConvergentSeq seq(Rng& rng, std::size_t max_prefix, int max_num, int max_den) {
  std::size_t len = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_prefix)));
  std::vector<Rational> p;
  p.reserve(len);
  for (std::size_t i = 0; i < len; ++i) p.push_back(rng.rational(max_num, max_den));
  return ConvergentSeq(std::move(p), rng.rational(max_num, max_den));
}

// Some z with pair(f, z) = 1: a coordinate vector when f has a coefficient
// past the first slot, the constant 1/f_1 otherwise.
inline ConvergentSeq canonical_feasible(const L1Functional& f) {
  for (std::size_t j = 2; j <= f.support(); ++j) {
    if (f.coeff(j) != 0) {
      std::vector<Rational> p(j - 1, Rational(0));
      p[j - 2] = Rational(1) / f.coeff(j);
      return ConvergentSeq(std::move(p), Rational(0));
    }
  }
  return ConvergentSeq::constant(Rational(1) / f.coeff(1));
}

inline ConvergentSeq feasible_z(Rng& rng, const L1Functional& f, std::size_t max_prefix) {
  for (;;) {
    ConvergentSeq z = seq(rng, max_prefix, 4, 4);
    Rational p = hypc::pair(f, z);
    if (p != 0) return Rational(1) / p * z;
  }
}

// A point of ker f (exact), with a bounded prefix.
inline ConvergentSeq kernel_point(Rng& rng, const L1Functional& f, std::size_t max_prefix) {
  ConvergentSeq x = seq(rng, max_prefix, 4, 4);
  return x - hypc::pair(f, x) * canonical_feasible(f);
}

// A point of the unit ball of ker f.
inline ConvergentSeq unit_ball_kernel_point(Rng& rng, const L1Functional& f,
                                            std::size_t max_prefix) {
  ConvergentSeq x = kernel_point(rng, f, max_prefix);
  Rational n = x.sup_norm();
  if (n > 1) x = Rational(1) / n * x;
  return x;
}

}  // namespace gen
