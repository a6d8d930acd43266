#include "hypc/ordinal_quotient.hpp"

#include <algorithm>
#include <set>

#include "hypc/duality.hpp"

namespace hypc {

COmegaNFunc::COmegaNFunc(std::size_t n, std::vector<ConvergentSeq> blocks,
                         std::vector<Rational> anchors)
    : n_(n), blocks_(std::move(blocks)), anchors_(std::move(anchors)) {
  if (n_ == 0 || blocks_.size() != n_ || anchors_.size() != n_ + 1)
    throw DomainError(Errc::DomainMismatch, "need n blocks and n+1 anchors");
  for (std::size_t k = 1; k <= n_; ++k)
    if (anchors_[k] != blocks_[k - 1].limit())
      throw DomainError(Errc::DomainMismatch,
                        "continuity: anchor k must equal the limit of block k-1");
}

COmegaNFunc COmegaNFunc::constant(std::size_t n, const Rational& v) {
  return COmegaNFunc(n, std::vector<ConvergentSeq>(n, ConvergentSeq::constant(v)),
                     std::vector<Rational>(n + 1, v));
}

Rational COmegaNFunc::value_at(const OrdinalPoint& p) const {
  if (p.block > n_ || (p.block == n_ && p.offset != 0))
    throw DomainError(Errc::DomainMismatch, "point outside the domain");
  if (p.offset == 0) return anchors_[p.block];
  return blocks_[p.block].coord(p.offset);
}

FinMeasure::FinMeasure(std::vector<std::pair<OrdinalPoint, Rational>> atoms) {
  std::set<OrdinalPoint> seen;
  for (auto& [p, w] : atoms) {
    if (w == 0) continue;
    if (!seen.insert(p).second)
      throw DomainError(Errc::DomainMismatch, "duplicate atom");
    atoms_.emplace_back(p, std::move(w));
  }
}

Rational FinMeasure::total_variation() const {
  Rational s = 0;
  for (const auto& [p, w] : atoms_) s += rabs(w);
  return s;
}

FinMeasure make_mu(const L1Functional& f, std::size_t i) {
  Rational f1 = f.coeff(1);
  if (rabs(f1) < Rational(1, 2))
    throw DomainError(Errc::WrongClass, "requires |f_1| >= 1/2");
  for (std::size_t j = 2; j <= f.support(); ++j)
    if (rabs(f.coeff(j)) >= Rational(1, 2))
      throw DomainError(Errc::WrongClass, "requires |f_j| < 1/2 for j >= 2");
  std::size_t n = f.support();
  if (n == 0) throw DomainError(Errc::SupportTooShort, "empty support");
  if (i == 0) throw DomainError(Errc::DomainMismatch, "i must be positive");

  std::vector<std::pair<OrdinalPoint, Rational>> atoms;
  if (i <= n - 1) {
    atoms.emplace_back(OrdinalPoint{i, 0}, Rational(1));  // delta_{w*i}
    return FinMeasure(std::move(atoms));
  }
  for (std::size_t j = 2; j <= n; ++j) {
    Rational w = -f.coeff(j) / f1;
    if (w != 0) atoms.emplace_back(OrdinalPoint{j - 2, i}, std::move(w));
  }
  Rational c = (2 * rabs(f1) - 1) / (rabs(f1) * Rational(i));
  if (c != 0) {
    std::size_t base = i * (i - 1) / 2;
    for (std::size_t j = 1; j <= i; ++j)
      atoms.emplace_back(OrdinalPoint{n - 1, base + j},
                         (j % 2 == 0 ? c : -c));
  }
  return FinMeasure(std::move(atoms));
}

Rational integrate(const FinMeasure& mu, const COmegaNFunc& g) {
  Rational s = 0;
  for (const auto& [p, w] : mu.atoms()) s += w * g.value_at(p);
  return s;
}

namespace {

Rational quotient_limit(const L1Functional& f, const COmegaNFunc& g) {
  Rational s = 0;
  for (std::size_t j = 2; j <= f.support(); ++j)
    s += f.coeff(j) * g.blocks()[j - 2].limit();
  return -s / f.coeff(1);
}

}  // namespace

QuotientImage quotient_apply(const L1Functional& f, const COmegaNFunc& g,
                             std::size_t m) {
  if (g.n() != f.support())
    throw DomainError(Errc::DomainMismatch, "g must live on w*n, n = support of f");
  QuotientImage out;
  out.values.reserve(m);
  for (std::size_t i = 1; i <= m; ++i)
    out.values.push_back(integrate(make_mu(f, i), g));
  out.limit = quotient_limit(f, g);
  return out;
}

bool mu_limit_compatibility(const L1Functional& f, const COmegaNFunc& g) {
  if (g.n() != f.support())
    throw DomainError(Errc::DomainMismatch, "g must live on w*n, n = support of f");
  L1Vector ehat = weak_star_limit(f).ehat;
  Rational s = 0;
  for (std::size_t j = 1; j <= ehat.support(); ++j)
    s += ehat.coeff(j) * integrate(make_mu(f, j), g);
  return quotient_limit(f, g) == s;
}

}  // namespace hypc
