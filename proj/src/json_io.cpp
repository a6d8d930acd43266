#include "hypc/json_io.hpp"

namespace hypc {

namespace {

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw ParseError(std::string("missing field: ") + field);
  return j.at(field);
}

std::vector<Rational> rational_list(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

std::size_t size_field(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number_unsigned()) throw ParseError(std::string(field) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

json to_json(const L1Vector& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_json(c));
  return json{{"coeffs", coeffs}};
}

L1Vector l1vector_from_json(const json& j) {
  return L1Vector(rational_list(require(j, "coeffs")));
}

json to_json(const ConvergentSeq& x) {
  json prefix = json::array();
  for (const auto& c : x.prefix()) prefix.push_back(to_json(c));
  return json{{"prefix", prefix}, {"tail", to_json(x.tail())}};
}

ConvergentSeq seq_from_json(const json& j) {
  return ConvergentSeq(rational_list(require(j, "prefix")),
                       rational_from_json(require(j, "tail")));
}

json to_json(const ProjectionSpec& p) {
  return json{{"z", to_json(p.z)}, {"norm", to_json(p.norm)}};
}

json to_json(const OrdinalPoint& p) {
  return json{{"block", p.block}, {"offset", p.offset}};
}

OrdinalPoint point_from_json(const json& j) {
  return OrdinalPoint{size_field(j, "block"), size_field(j, "offset")};
}

json to_json(const FinMeasure& mu) {
  json atoms = json::array();
  for (const auto& [p, w] : mu.atoms())
    atoms.push_back(json::array({to_json(p), to_json(w)}));
  return json{{"atoms", atoms}, {"total_variation", to_json(mu.total_variation())}};
}

FinMeasure measure_from_json(const json& j) {
  const json& atoms = require(j, "atoms");
  if (!atoms.is_array()) throw ParseError("atoms must be an array");
  std::vector<std::pair<OrdinalPoint, Rational>> out;
  for (const auto& a : atoms) {
    if (!a.is_array() || a.size() != 2) throw ParseError("atom must be [point, weight]");
    out.emplace_back(point_from_json(a[0]), rational_from_json(a[1]));
  }
  return FinMeasure(std::move(out));
}

json to_json(const COmegaNFunc& g) {
  json blocks = json::array();
  for (const auto& b : g.blocks()) blocks.push_back(to_json(b));
  json anchors = json::array();
  for (const auto& a : g.anchors()) anchors.push_back(to_json(a));
  return json{{"n", g.n()}, {"blocks", blocks}, {"anchors", anchors}};
}

COmegaNFunc func_from_json(const json& j) {
  std::size_t n = size_field(j, "n");
  const json& jb = require(j, "blocks");
  if (!jb.is_array()) throw ParseError("blocks must be an array");
  std::vector<ConvergentSeq> blocks;
  for (const auto& b : jb) blocks.push_back(seq_from_json(b));
  return COmegaNFunc(n, std::move(blocks), rational_list(require(j, "anchors")));
}

json to_json(const CheckResult& c) {
  return json{{"name", c.name},
              {"expected", c.expected},
              {"got", c.got},
              {"result", c.pass ? "PASS" : "FAIL"},
              {"elapsed_ms", c.elapsed_ms}};
}

json to_json(const ImplicationReport& r) {
  json props = json::array();
  for (bool p : r.properties) props.push_back(p);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"properties", props},
              {"implications", checks},
              {"all_pass", r.all_pass}};
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"class", r.hyperplane_class},
              {"checks", checks},
              {"all_pass", r.all_pass}};
}

}  // namespace hypc
