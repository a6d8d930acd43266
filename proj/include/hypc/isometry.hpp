#pragma once

#include "hypc/core_seq.hpp"
#include "hypc/hyperplane.hpp"

namespace hypc {

// The isometry T : c -> W_f available when W_f is 1-complemented. Inserts at
// position j0 - 1 the unique value alpha that puts the shifted sequence into
// ker f; preserves the sup norm exactly.
// Throws NotOneComplemented.
ConvergentSeq embed_c_into_wf(const L1Functional& f, const ConvergentSeq& x);

// T^{-1} : W_f -> c, deletion of coordinate j0 - 1.
// Throws NotOneComplemented, NotInHyperplane.
ConvergentSeq project_wf_to_c(const L1Functional& f, const ConvergentSeq& y);

// Identity map witnessing W_f = {x in c : lim x = 0} when f = ±e_1.
// Throws WrongClass, NotInC0.
ConvergentSeq iso_c0(const L1Functional& f, const ConvergentSeq& x);

}  // namespace hypc
