#pragma once

#include <nlohmann/json.hpp>

#include "hypc/core_seq.hpp"
#include "hypc/duality.hpp"
#include "hypc/hyperplane.hpp"
#include "hypc/oracles.hpp"
#include "hypc/ordinal_quotient.hpp"

namespace hypc {

using json = nlohmann::json;

// Rationals travel as canonical "p/q" strings; every *_from_json throws
// ParseError on malformed documents.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const L1Vector& v);                 // {"coeffs": [...]}
L1Vector l1vector_from_json(const json& j);

json to_json(const ConvergentSeq& x);            // {"prefix": [...], "tail": "p/q"}
ConvergentSeq seq_from_json(const json& j);

json to_json(const ProjectionSpec& p);           // {"z": ..., "norm": "p/q"}

json to_json(const OrdinalPoint& p);             // {"block": k, "offset": m}
OrdinalPoint point_from_json(const json& j);

json to_json(const FinMeasure& mu);              // {"atoms": [[point, "p/q"], ...]}
FinMeasure measure_from_json(const json& j);

json to_json(const COmegaNFunc& g);              // {"n": n, "blocks": [...], "anchors": [...]}
COmegaNFunc func_from_json(const json& j);

json to_json(const CheckResult& c);
json to_json(const ImplicationReport& r);
json to_json(const VerifyReport& r);

}  // namespace hypc
