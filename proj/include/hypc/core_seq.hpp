#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hypc/errors.hpp"
#include "hypc/rational.hpp"

namespace hypc {

// Finitely supported element of l1 with exact rational coefficients
// (f_1, f_2, ..., f_n). Canonical form: the last stored coefficient is
// nonzero, or the list is empty (zero vector).
class L1Vector {
 public:
  L1Vector() = default;
  explicit L1Vector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static L1Vector unit(std::size_t n);  // e_n, n >= 1

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t support() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  // 1-based coefficient access; zero beyond the support.
  Rational coeff(std::size_t j) const {
    return (j >= 1 && j <= coeffs_.size()) ? coeffs_[j - 1] : Rational(0);
  }

  Rational l1_norm() const;

  friend bool operator==(const L1Vector& a, const L1Vector& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend L1Vector operator-(const L1Vector& a);
  friend L1Vector operator+(const L1Vector& a, const L1Vector& b);
  friend L1Vector operator*(const Rational& s, const L1Vector& a);

 private:
  std::vector<Rational> coeffs_;
};

// An l1 vector with l1 norm exactly 1, the standing hypothesis on f.
class L1Functional {
 public:
  // Throws NotNormalized unless l1_norm(v) = 1 exactly.
  explicit L1Functional(L1Vector v);

  const L1Vector& vec() const { return vec_; }
  std::size_t support() const { return vec_.support(); }
  Rational coeff(std::size_t j) const { return vec_.coeff(j); }

  friend bool operator==(const L1Functional& a, const L1Functional& b) {
    return a.vec_ == b.vec_;
  }

 private:
  L1Vector vec_;
};

// y / l1_norm(y). Throws ZeroVector for y = 0.
L1Functional normalize(const L1Vector& y);

// Eventually constant member of c: a finite prefix (x_1, ..., x_m) followed
// by a constant tail, which is also the limit x_0. Canonical form: the
// prefix does not end with a value equal to the tail.
class ConvergentSeq {
 public:
  ConvergentSeq() : tail_(0) {}
  ConvergentSeq(std::vector<Rational> prefix, Rational tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
  }

  static ConvergentSeq constant(Rational v) { return ConvergentSeq({}, std::move(v)); }

  const std::vector<Rational>& prefix() const { return prefix_; }
  std::size_t prefix_size() const { return prefix_.size(); }
  const Rational& tail() const { return tail_; }
  const Rational& limit() const { return tail_; }

  // 1-based coordinate; reads the tail beyond the prefix.
  const Rational& coord(std::size_t i) const {
    return (i >= 1 && i <= prefix_.size()) ? prefix_[i - 1] : tail_;
  }

  Rational sup_norm() const;
  bool is_zero() const { return prefix_.empty() && tail_ == 0; }

  friend bool operator==(const ConvergentSeq& a, const ConvergentSeq& b) {
    return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
  }
  friend ConvergentSeq operator+(const ConvergentSeq& a, const ConvergentSeq& b);
  friend ConvergentSeq operator-(const ConvergentSeq& a, const ConvergentSeq& b);
  friend ConvergentSeq operator*(const Rational& s, const ConvergentSeq& a);

 private:
  std::vector<Rational> prefix_;
  Rational tail_;
};

// The duality pairing f(x) = f_1 x_0 + sum_{i>=1} f_{i+1} x_i, a finite sum
// since f is finitely supported.
Rational pair(const L1Vector& f, const ConvergentSeq& x);

inline Rational pair(const L1Functional& f, const ConvergentSeq& x) {
  return pair(f.vec(), x);
}

}  // namespace hypc
