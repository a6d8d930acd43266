#pragma once

#include <cstddef>
#include <vector>

#include "hypc/core_seq.hpp"

namespace hypc {

// Every norm-one f falls in exactly one class:
//   IsoC       — W_f is isometric to c   (some |f_j| >= 1/2 with j >= 2)
//   IsoC0      — W_f is isometric to c0  (|f_1| = 1)
//   DualL1Only — dual is l1 but W_f is isometric to neither
//                (1/2 <= |f_1| < 1, all |f_j| < 1/2 for j >= 2)
//   DualNotL1  — dual is not l1          (all |f_j| < 1/2)
enum class HyperplaneClass { IsoC, IsoC0, DualL1Only, DualNotL1 };

const char* class_name(HyperplaneClass c);  // "iso_c" | "iso_c0" | ...

// A z in f^{-1}(1) together with the exact value of ||P_z||.
struct ProjectionSpec {
  ConvergentSeq z;
  Rational norm;
};

struct MinProjection {
  ProjectionSpec proj;
  bool unique;        // exactly one qualifying index j0
  std::size_t j0;     // smallest index used for z0
};

// Kernel membership: pair(f, x) = 0 exactly.
bool member(const L1Functional& f, const ConvergentSeq& x);

// P_z(x) = x - f(x) z. Throws NotAProjection unless pair(f, z) = 1.
ConvergentSeq projection_apply(const L1Functional& f, const ConvergentSeq& z,
                               const ConvergentSeq& x);

// ||P_z|| = sup_{i>=1} { |1 - f_{i+1} z_i| + |z_i| (1 - |f_{i+1}|) }.
// Exact: the sup is a finite max plus the constant tail term 1 + |z_0|.
Rational projection_norm(const L1Functional& f, const ConvergentSeq& z);

// All indices j >= 2 with |f_j| >= 1/2. Empty means W_f is not
// 1-complemented; a two-element result forces both values to be 1/2.
std::vector<std::size_t> one_complemented(const L1Functional& f);

// The norm-1 projection built from the smallest qualifying index j0:
// z0_{j0-1} = 1/f_{j0}, all other coordinates 0.
// Throws NotOneComplemented when no index qualifies.
MinProjection min_projection(const L1Functional& f);

// inf_z ||P_z||: 1 on the 1-complemented branch, otherwise
// 1 + (|f_1| + sum_j |f_{j+1}| / (1 - 2 |f_{j+1}|))^{-1}. Always in [1, 2].
Rational projection_constant(const L1Functional& f);

// lambda_N = alpha_N^{-1} for the truncated minimizing sequence. Throws
// NBelowThreshold when alpha_N <= 0.
Rational truncation_lambda(const L1Functional& f, std::size_t N);

// Smallest admissible truncation: the least N with alpha_N > 0 and
// alpha_N >= |f_{k+1}| / (1 - 2 |f_{k+1}|) for all k <= N - 1. At most the
// support length for finitely supported f.
std::size_t min_truncation(const L1Functional& f);

// z^N = lambda_N (sgn(f_2)/(1-2|f_2|), ..., sgn(f_N)/(1-2|f_N|), sgn(f_1), ...)
// with the returned norm computed by projection_norm. For N >= support length
// the value equals projection_constant(f) exactly.
// Throws OneComplemented when min_projection applies, NBelowThreshold when
// N < min_truncation(f).
ProjectionSpec minimizing_projection(const L1Functional& f, std::size_t N);

HyperplaneClass classify(const L1Functional& f);

// The c0 criterion: some index j >= 1 (j = 1 included) has |f_j| >= 1/2.
bool c0_one_complemented(const L1Functional& f);

}  // namespace hypc
