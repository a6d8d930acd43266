#pragma once

#include <stdexcept>
#include <string>

namespace hypc {

// Domain error codes, one per mathematically invalid input class. The CLI
// maps these one-to-one onto machine-readable error JSON.
enum class Errc {
  ZeroVector,
  NotNormalized,
  NotAProjection,
  NotOneComplemented,
  OneComplemented,
  NBelowThreshold,
  WrongClass,
  NotInHyperplane,
  NotInC0,
  ZeroLeadCoefficient,
  NotInUnitBall,
  DegenerateWitness,
  SupportTooShort,
  DomainMismatch,
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, std::string detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace hypc
