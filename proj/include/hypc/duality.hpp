#pragma once

#include <cstddef>

#include "hypc/core_seq.hpp"
#include "hypc/hyperplane.hpp"

namespace hypc {

// (phi(y))(x) = sum_{j>=1} x_j y_j, the explicit duality between l1 and
// W_f*. Throws NotInHyperplane unless x is in ker f.
Rational phi_apply(const L1Functional& f, const L1Vector& y, const ConvergentSeq& x);

struct WeakStarLimit {
  L1Vector ehat;             // ehat_j = -f_{j+1} / f_1
  bool outside_hypothesis;   // set unless classify(f) = DualL1Only
};

// Weak* limit of the standard basis under the identification W_f* = l1.
// Total on f_1 != 0; throws ZeroLeadCoefficient otherwise. The isometric
// meaning of ehat is only claimed in class DualL1Only.
WeakStarLimit weak_star_limit(const L1Functional& f);

struct DualNormWitness {
  ConvergentSeq x;  // x^N: sign pattern of y on the first N coordinates
  Rational value;   // |phi(y)(x^N)|; equals l1_norm(y) once N covers both supports
};

// Norm-attainment witness from the duality theorem. Requires class
// DualL1Only and N at least the smallest N_0 with sum_{j>N_0} |f_{j+1}| < 1/2.
// Throws WrongClass, NBelowThreshold, DegenerateWitness.
DualNormWitness dual_norm_lower_witness(const L1Functional& f, const L1Vector& y,
                                        std::size_t N);

struct PredualResult {
  bool iso_c;       // ehat = ±e_m: the predual is c itself
  L1Functional f;   // reconstructed functional, or the representative e_2
};

// Reconstructs f from a weak* basis limit: f_1 = 1/(1 + sum |ehat_n|),
// f_n = -ehat_{n-1} f_1 for n >= 2. Requires l1_norm(ehat) <= 1
// (NotInUnitBall otherwise). ehat = ±e_m yields the IsoC tag with
// representative e_2.
PredualResult predual_from_limit(const L1Vector& ehat);

}  // namespace hypc
