#include "hypc/errors.hpp"

namespace hypc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroVector: return "zero_vector";
    case Errc::NotNormalized: return "not_normalized";
    case Errc::NotAProjection: return "not_a_projection";
    case Errc::NotOneComplemented: return "not_one_complemented";
    case Errc::OneComplemented: return "one_complemented";
    case Errc::NBelowThreshold: return "n_below_threshold";
    case Errc::WrongClass: return "wrong_class";
    case Errc::NotInHyperplane: return "not_in_hyperplane";
    case Errc::NotInC0: return "not_in_c0";
    case Errc::ZeroLeadCoefficient: return "zero_lead_coefficient";
    case Errc::NotInUnitBall: return "not_in_unit_ball";
    case Errc::DegenerateWitness: return "degenerate_witness";
    case Errc::SupportTooShort: return "support_too_short";
    case Errc::DomainMismatch: return "domain_mismatch";
  }
  return "unknown";
}

}  // namespace hypc
