// JSON (de)serialization: instance files, polynomials, fans, bundles, and
// verdict payloads.
#pragma once

#include "fsplit/common.hpp"
#include "fsplit/fppoly.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/pairs.hpp"
#include "fsplit/toricpairs.hpp"
#include "fsplit/tvb.hpp"
#include "fsplit/verdict.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace fsplit {

using Json = nlohmann::json;

struct ComplexityOneData {
  ComplexityOneInstance instance;
};

struct CyclicCoverData {
  ToricAmbient ambient;
  BranchDatum branch;
  bool anticanonical_matching = false;
  bool reduced_branch = false;
};

struct ToricPairData {
  ToricAmbient ambient;
  std::vector<BranchDatum> branches;
};

struct FedderData {
  ToricAmbient ambient;
  RationalPoly f{0};
  bool normal = false;
};

struct ToricDiagonalData {
  Fan fan;
};

struct TvbData {
  TwoStepBundle bundle;
};

using Instance = std::variant<ComplexityOneData, CyclicCoverData, ToricPairData, FedderData,
                              ToricDiagonalData, TvbData>;

// The "kind" tag of an instance, e.g. "complexity-one".
std::string instance_kind(const Instance& instance);
// Short human description used in reports.
std::string instance_description(const Instance& instance);

// Parses {"vars": [...], "terms": [{"e": [...], "c": "3/7"}, ...]}.
// The variable list length fixes the arity.
RationalPoly parse_polynomial(const Json& value, std::vector<std::string>* vars_out = nullptr);
Json polynomial_to_json(const RationalPoly& poly, const std::vector<std::string>& vars);

Fan parse_fan(const Json& value);
Json fan_to_json(const Fan& fan);

CurvePoint parse_curve_point(const Json& value);

// Dispatches on the "kind" field; throws ParseError with context on any
// malformed input and ValidationError on invariant violations.
Instance parse_instance(const Json& value);
Instance parse_instance_text(const std::string& text);
Instance load_instance_file(const std::string& path);

Json verdict_to_json(const Verdict& verdict);

}  // namespace fsplit
