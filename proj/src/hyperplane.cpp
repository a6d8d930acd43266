#include "hypc/hyperplane.hpp"

#include <algorithm>

namespace hypc {

namespace {

const Rational kHalf(1, 2);

void require_projection(const L1Functional& f, const ConvergentSeq& z) {
  if (pair(f, z) != 1)
    throw DomainError(Errc::NotAProjection, "pair(f, z) must equal 1");
}

}  // namespace

const char* class_name(HyperplaneClass c) {
  switch (c) {
    case HyperplaneClass::IsoC: return "iso_c";
    case HyperplaneClass::IsoC0: return "iso_c0";
    case HyperplaneClass::DualL1Only: return "dual_l1_only";
    case HyperplaneClass::DualNotL1: return "dual_not_l1";
  }
  return "unknown";
}

bool member(const L1Functional& f, const ConvergentSeq& x) {
  return pair(f, x) == 0;
}

ConvergentSeq projection_apply(const L1Functional& f, const ConvergentSeq& z,
                               const ConvergentSeq& x) {
  require_projection(f, z);
  return x - pair(f, x) * z;
}

Rational projection_norm(const L1Functional& f, const ConvergentSeq& z) {
  require_projection(f, z);
  // Beyond both supports every term collapses to 1 + |z_0|.
  Rational best = 1 + rabs(z.tail());
  std::size_t m = std::max(z.prefix_size(), f.support() > 0 ? f.support() - 1 : 0);
  for (std::size_t i = 1; i <= m; ++i) {
    const Rational& zi = z.coord(i);
    Rational fi1 = f.coeff(i + 1);
    Rational term = rabs(1 - fi1 * zi) + rabs(zi) * (1 - rabs(fi1));
    best = std::max(best, term);
  }
  return best;
}

std::vector<std::size_t> one_complemented(const L1Functional& f) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 2; j <= f.support(); ++j)
    if (rabs(f.coeff(j)) >= kHalf) idx.push_back(j);
  return idx;
}

MinProjection min_projection(const L1Functional& f) {
  auto idx = one_complemented(f);
  if (idx.empty())
    throw DomainError(Errc::NotOneComplemented, "no index j >= 2 with |f_j| >= 1/2");
  std::size_t j0 = idx.front();
  std::vector<Rational> prefix(j0 - 1, Rational(0));
  prefix[j0 - 2] = Rational(1) / f.coeff(j0);
  ConvergentSeq z0(std::move(prefix), Rational(0));
  Rational norm = projection_norm(f, z0);
  return MinProjection{ProjectionSpec{std::move(z0), std::move(norm)},
                       idx.size() == 1, j0};
}

Rational projection_constant(const L1Functional& f) {
  if (!one_complemented(f).empty()) return 1;
  Rational alpha = rabs(f.coeff(1));
  for (std::size_t j = 2; j <= f.support(); ++j) {
    Rational a = rabs(f.coeff(j));
    alpha += a / (1 - 2 * a);
  }
  return 1 + Rational(1) / alpha;
}

namespace {

// alpha_N = |f_1| + sum_{j=1}^{N-1} |f_{j+1}|/(1-2|f_{j+1}|)
//         + sgn(f_1) sum_{j=N}^{inf} f_{j+1}, with sgn(0) = +1.
Rational alpha_of(const L1Functional& f, std::size_t N) {
  Rational alpha = rabs(f.coeff(1));
  for (std::size_t j = 1; j + 1 <= f.support(); ++j) {
    Rational a = rabs(f.coeff(j + 1));
    if (j <= N - 1)
      alpha += a / (1 - 2 * a);
    else
      alpha += Rational(sgn_pos(f.coeff(1))) * f.coeff(j + 1);
  }
  return alpha;
}

bool truncation_ok(const L1Functional& f, std::size_t N) {
  Rational alpha = alpha_of(f, N);
  if (alpha <= 0) return false;
  for (std::size_t k = 1; k <= N - 1; ++k) {
    Rational a = rabs(f.coeff(k + 1));
    if (alpha < a / (1 - 2 * a)) return false;
  }
  return true;
}

}  // namespace

Rational truncation_lambda(const L1Functional& f, std::size_t N) {
  Rational alpha = alpha_of(f, N);
  if (alpha <= 0)
    throw DomainError(Errc::NBelowThreshold, "alpha_N is not positive");
  return Rational(1) / alpha;
}

std::size_t min_truncation(const L1Functional& f) {
  // Guaranteed to hold by N = support length: alpha is then the full sum,
  // which dominates each of its own terms.
  std::size_t bound = std::max<std::size_t>(f.support(), 1);
  for (std::size_t N = 1; N < bound; ++N)
    if (truncation_ok(f, N)) return N;
  return bound;
}

ProjectionSpec minimizing_projection(const L1Functional& f, std::size_t N) {
  if (!one_complemented(f).empty())
    throw DomainError(Errc::OneComplemented,
                      "W_f is 1-complemented; use min_projection");
  if (N < min_truncation(f) || !truncation_ok(f, N))
    throw DomainError(Errc::NBelowThreshold, "truncation below N_0");
  Rational lambda = truncation_lambda(f, N);
  std::vector<Rational> prefix;
  prefix.reserve(N - 1);
  for (std::size_t j = 2; j <= N; ++j) {
    Rational a = rabs(f.coeff(j));
    prefix.push_back(lambda * Rational(sgn_pos(f.coeff(j))) / (1 - 2 * a));
  }
  ConvergentSeq z(std::move(prefix), lambda * Rational(sgn_pos(f.coeff(1))));
  Rational norm = projection_norm(f, z);
  return ProjectionSpec{std::move(z), std::move(norm)};
}

HyperplaneClass classify(const L1Functional& f) {
  if (!one_complemented(f).empty()) return HyperplaneClass::IsoC;
  Rational f1 = rabs(f.coeff(1));
  if (f1 == 1) return HyperplaneClass::IsoC0;
  if (f1 >= kHalf) return HyperplaneClass::DualL1Only;
  return HyperplaneClass::DualNotL1;
}

bool c0_one_complemented(const L1Functional& f) {
  for (std::size_t j = 1; j <= f.support(); ++j)
    if (rabs(f.coeff(j)) >= kHalf) return true;
  return false;
}

}  // namespace hypc
