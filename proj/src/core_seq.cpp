#include "hypc/core_seq.hpp"

#include <algorithm>

namespace hypc {

L1Vector L1Vector::unit(std::size_t n) {
  std::vector<Rational> c(n, Rational(0));
  c[n - 1] = 1;
  return L1Vector(std::move(c));
}

Rational L1Vector::l1_norm() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += rabs(c);
  return s;
}

L1Vector operator-(const L1Vector& a) {
  std::vector<Rational> c;
  c.reserve(a.coeffs_.size());
  for (const auto& v : a.coeffs_) c.push_back(-v);
  return L1Vector(std::move(c));
}

L1Vector operator+(const L1Vector& a, const L1Vector& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i + 1) + b.coeff(i + 1);
  return L1Vector(std::move(c));
}

L1Vector operator*(const Rational& s, const L1Vector& a) {
  std::vector<Rational> c;
  c.reserve(a.coeffs_.size());
  for (const auto& v : a.coeffs_) c.push_back(s * v);
  return L1Vector(std::move(c));
}

L1Functional::L1Functional(L1Vector v) : vec_(std::move(v)) {
  if (vec_.l1_norm() != 1)
    throw DomainError(Errc::NotNormalized,
                      "functional must have l1 norm exactly 1");
}

L1Functional normalize(const L1Vector& y) {
  Rational n = y.l1_norm();
  if (n == 0) throw DomainError(Errc::ZeroVector, "cannot normalize the zero vector");
  return L1Functional(Rational(1) / n * y);
}

Rational ConvergentSeq::sup_norm() const {
  Rational m = rabs(tail_);
  for (const auto& v : prefix_) m = std::max(m, rabs(v));
  return m;
}

ConvergentSeq operator+(const ConvergentSeq& a, const ConvergentSeq& b) {
  std::vector<Rational> p(std::max(a.prefix_.size(), b.prefix_.size()), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.coord(i + 1) + b.coord(i + 1);
  return ConvergentSeq(std::move(p), a.tail_ + b.tail_);
}

ConvergentSeq operator-(const ConvergentSeq& a, const ConvergentSeq& b) {
  std::vector<Rational> p(std::max(a.prefix_.size(), b.prefix_.size()), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.coord(i + 1) - b.coord(i + 1);
  return ConvergentSeq(std::move(p), a.tail_ - b.tail_);
}

ConvergentSeq operator*(const Rational& s, const ConvergentSeq& a) {
  std::vector<Rational> p;
  p.reserve(a.prefix_.size());
  for (const auto& v : a.prefix_) p.push_back(s * v);
  return ConvergentSeq(std::move(p), s * a.tail_);
}

Rational pair(const L1Vector& f, const ConvergentSeq& x) {
  if (f.is_zero()) return 0;
  Rational s = f.coeff(1) * x.limit();
  for (std::size_t i = 1; i + 1 <= f.support(); ++i) s += f.coeff(i + 1) * x.coord(i);
  return s;
}

}  // namespace hypc
