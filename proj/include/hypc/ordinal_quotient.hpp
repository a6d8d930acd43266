#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hypc/core_seq.hpp"
#include "hypc/hyperplane.hpp"

namespace hypc {

// Ordinal w*block + offset, block in 0..n. The top point w*n is (n, 0);
// (k, 0) with k >= 1 is the limit point w*k; (0, m) is the ordinal m.
struct OrdinalPoint {
  std::size_t block = 0;
  std::size_t offset = 0;

  friend bool operator==(const OrdinalPoint& a, const OrdinalPoint& b) {
    return a.block == b.block && a.offset == b.offset;
  }
  friend bool operator<(const OrdinalPoint& a, const OrdinalPoint& b) {
    return a.block != b.block ? a.block < b.block : a.offset < b.offset;
  }
};

// Continuous rational function on the ordinals <= w*n, represented with one
// eventually constant sequence per block (values at offsets m >= 1) and
// anchor values at the points (k, 0). Continuity pins anchors[k] to the tail
// of block k-1 for k = 1..n; anchors[0] is free (0 is isolated).
class COmegaNFunc {
 public:
  COmegaNFunc(std::size_t n, std::vector<ConvergentSeq> blocks,
              std::vector<Rational> anchors);

  // Constant function on the whole domain.
  static COmegaNFunc constant(std::size_t n, const Rational& v);

  std::size_t n() const { return n_; }
  const std::vector<ConvergentSeq>& blocks() const { return blocks_; }
  const std::vector<Rational>& anchors() const { return anchors_; }

  // Throws DomainMismatch for points outside the domain.
  Rational value_at(const OrdinalPoint& p) const;

 private:
  std::size_t n_;
  std::vector<ConvergentSeq> blocks_;
  std::vector<Rational> anchors_;
};

// Finitely supported measure: atoms with distinct points and nonzero weights.
class FinMeasure {
 public:
  FinMeasure() = default;
  // Drops zero weights; throws DomainMismatch on duplicate points.
  explicit FinMeasure(std::vector<std::pair<OrdinalPoint, Rational>> atoms);

  const std::vector<std::pair<OrdinalPoint, Rational>>& atoms() const {
    return atoms_;
  }
  Rational total_variation() const;

 private:
  std::vector<std::pair<OrdinalPoint, Rational>> atoms_;
};

// The measure sequence mu_i realizing W_f as a quotient of C(w*n), n the
// support length of f: mu_i = delta_{w*i} for i < n, and for i >= n the
// combination of deltas on blocks 0..n-2 plus an alternating average on
// block n-1. Requires 1/2 <= |f_1| and |f_j| < 1/2 for j >= 2 (WrongClass
// otherwise). Total variation is 1 for every i.
FinMeasure make_mu(const L1Functional& f, std::size_t i);

// sum of weight * g(point). Throws DomainMismatch if an atom lies outside g.
Rational integrate(const FinMeasure& mu, const COmegaNFunc& g);

struct QuotientImage {
  std::vector<Rational> values;  // (mu_1(g), ..., mu_m(g))
  Rational limit;                // exact lim_i mu_i(g)
};

// The sequence (mu_i(g)) together with its exact limit
// L = -(1/f_1) sum_{j=2}^{n} f_j tail(blocks[j-2]); the image lies in W_f:
// f_1 L + sum_{i=1}^{n-1} f_{i+1} mu_i(g) = 0 exactly.
QuotientImage quotient_apply(const L1Functional& f, const COmegaNFunc& g,
                             std::size_t m);

// Checks lim_i mu_i(g) = sum_j ehat_j mu_j(g) with ehat the weak* basis
// limit, i.e. the measure-level image of the weak* limit.
bool mu_limit_compatibility(const L1Functional& f, const COmegaNFunc& g);

}  // namespace hypc
