#include "hypc/isometry.hpp"

#include <algorithm>

namespace hypc {

namespace {

std::size_t smallest_j0(const L1Functional& f) {
  auto idx = one_complemented(f);
  if (idx.empty())
    throw DomainError(Errc::NotOneComplemented, "no index j >= 2 with |f_j| >= 1/2");
  return idx.front();
}

}  // namespace

ConvergentSeq embed_c_into_wf(const L1Functional& f, const ConvergentSeq& x) {
  std::size_t j0 = smallest_j0(f);

  // alpha = -(1/f_{j0}) ( sum_{j=0}^{j0-2} f_{j+1} x_j
  //                     + sum_{j=j0}^{inf} f_{j+1} x_{j-1} ), x_0 = lim x.
  Rational acc = f.coeff(1) * x.limit();
  for (std::size_t j = 1; j + 1 <= f.support(); ++j) {
    if (j == j0 - 1) continue;
    acc += f.coeff(j + 1) * (j <= j0 - 2 ? x.coord(j) : x.coord(j - 1));
  }
  Rational alpha = -acc / f.coeff(j0);

  std::size_t len = std::max(j0 - 1, x.prefix_size() + 1);
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) {
    if (i < j0 - 1)
      prefix.push_back(x.coord(i));
    else if (i == j0 - 1)
      prefix.push_back(alpha);
    else
      prefix.push_back(x.coord(i - 1));
  }
  return ConvergentSeq(std::move(prefix), x.limit());
}

ConvergentSeq project_wf_to_c(const L1Functional& f, const ConvergentSeq& y) {
  std::size_t j0 = smallest_j0(f);
  if (!member(f, y))
    throw DomainError(Errc::NotInHyperplane, "y is not in ker f");

  std::vector<Rational> prefix;
  prefix.reserve(y.prefix_size());
  for (std::size_t i = 1; i <= y.prefix_size(); ++i)
    prefix.push_back(i < j0 - 1 ? y.coord(i) : y.coord(i + 1));
  return ConvergentSeq(std::move(prefix), y.limit());
}

ConvergentSeq iso_c0(const L1Functional& f, const ConvergentSeq& x) {
  if (classify(f) != HyperplaneClass::IsoC0)
    throw DomainError(Errc::WrongClass, "f is not ±e_1");
  if (x.limit() != 0)
    throw DomainError(Errc::NotInC0, "x has a nonzero limit");
  return x;
}

}  // namespace hypc
