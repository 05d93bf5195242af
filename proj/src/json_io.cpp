#include "fsplit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fsplit {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

const Json& field(const Json& value, const char* name) {
  if (!value.is_object()) fail(std::string("expected object with field '") + name + "'");
  auto it = value.find(name);
  if (it == value.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

long long int_field(const Json& value, const char* name) {
  const Json& item = field(value, name);
  if (!item.is_number_integer()) fail(std::string("field '") + name + "' must be an integer");
  return item.get<long long>();
}

bool bool_field(const Json& value, const char* name, bool fallback) {
  if (!value.is_object()) return fallback;
  auto it = value.find(name);
  if (it == value.end()) return fallback;
  if (!it->is_boolean()) fail(std::string("field '") + name + "' must be a boolean");
  return it->get<bool>();
}

Rat parse_rat_json(const Json& value) {
  if (value.is_number_integer()) return Rat(value.get<long long>());
  if (value.is_string()) return parse_rat(value.get<std::string>());
  fail("rational values must be integers or strings like \"3/7\"");
}

std::set<std::string> parse_flags(const Json& value) {
  std::set<std::string> flags;
  if (!value.is_object()) return flags;
  auto it = value.find("flags");
  if (it == value.end()) return flags;
  if (!it->is_array()) fail("'flags' must be an array of strings");
  for (const auto& entry : *it) {
    if (!entry.is_string()) fail("'flags' entries must be strings");
    flags.insert(entry.get<std::string>());
  }
  return flags;
}

}  // namespace

RationalPoly parse_polynomial(const Json& value, std::vector<std::string>* vars_out) {
  const Json& vars = field(value, "vars");
  if (!vars.is_array() || vars.empty()) fail("'vars' must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& name : vars) {
    if (!name.is_string()) fail("'vars' entries must be strings");
    names.push_back(name.get<std::string>());
  }
  RationalPoly poly(names.size());
  const Json& terms = field(value, "terms");
  if (!terms.is_array()) fail("'terms' must be an array");
  for (const auto& term : terms) {
    const Json& exponents = field(term, "e");
    if (!exponents.is_array() || exponents.size() != names.size())
      fail("term exponent vector length must match 'vars'");
    Monomial monomial;
    for (const auto& e : exponents) {
      if (!e.is_number_integer()) fail("exponents must be integers");
      monomial.exponents.push_back(e.get<std::int32_t>());
    }
    poly.add_term(monomial, parse_rat_json(field(term, "c")));
  }
  if (vars_out) *vars_out = std::move(names);
  return poly;
}

Json polynomial_to_json(const RationalPoly& poly, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const auto& [monomial, coeff] : poly.terms()) {
    Json term;
    term["e"] = monomial.exponents;
    term["c"] = rat_to_string(coeff);
    terms.push_back(std::move(term));
  }
  Json result;
  result["vars"] = vars;
  result["terms"] = std::move(terms);
  return result;
}

Fan parse_fan(const Json& value) {
  Fan fan;
  fan.dim = static_cast<int>(int_field(value, "dim"));
  const Json& rays = field(value, "rays");
  if (!rays.is_array()) fail("'rays' must be an array");
  for (const auto& ray : rays) {
    if (!ray.is_array()) fail("each ray must be an integer array");
    std::vector<long long> vec;
    for (const auto& entry : ray) {
      if (!entry.is_number_integer()) fail("ray entries must be integers");
      vec.push_back(entry.get<long long>());
    }
    fan.rays.push_back(std::move(vec));
  }
  fan.complete = bool_field(value, "complete", false);
  fan.smooth = bool_field(value, "smooth", false);
  fan.validate();
  return fan;
}

Json fan_to_json(const Fan& fan) {
  Json result;
  result["dim"] = fan.dim;
  result["rays"] = fan.rays;
  result["complete"] = fan.complete;
  result["smooth"] = fan.smooth;
  return result;
}

CurvePoint parse_curve_point(const Json& value) {
  if (value.is_string() && value.get<std::string>() == "inf") return CurvePoint::infinity();
  return CurvePoint::finite(parse_rat_json(value));
}

namespace {

ToricAmbient parse_ambient(const Json& value) {
  const Json& preset = field(value, "preset");
  if (!preset.is_string()) fail("'preset' must be a string");
  std::string name = preset.get<std::string>();
  if (name == "P") return ToricAmbient::projective_space(static_cast<int>(int_field(value, "m")));
  if (name == "product") {
    const Json& factors = field(value, "factors");
    if (!factors.is_array() || factors.empty()) fail("'factors' must be a nonempty array");
    std::vector<int> dims;
    for (const auto& m : factors) {
      if (!m.is_number_integer()) fail("'factors' entries must be integers");
      dims.push_back(m.get<int>());
    }
    return ToricAmbient::product_of_projective_spaces(dims);
  }
  if (name == "general") {
    Fan fan = parse_fan(field(value, "fan"));
    const Json& degrees = field(value, "coxDegrees");
    if (!degrees.is_array()) fail("'coxDegrees' must be an array");
    std::vector<std::vector<long long>> cox_degrees;
    for (const auto& degree : degrees) {
      if (!degree.is_array()) fail("each Cox degree must be an integer array");
      std::vector<long long> vec;
      for (const auto& entry : degree) {
        if (!entry.is_number_integer()) fail("Cox degree entries must be integers");
        vec.push_back(entry.get<long long>());
      }
      cox_degrees.push_back(std::move(vec));
    }
    return ToricAmbient::general(std::move(fan), std::move(cox_degrees));
  }
  fail("unknown ambient preset '" + name + "'");
}

BranchDatum parse_branch(const ToricAmbient& ambient, const Json& value) {
  RationalPoly poly = parse_polynomial(field(value, "f"));
  if (poly.arity() != ambient.cox_arity())
    throw Error(ErrorCode::ValidationError,
                "branch polynomial has " + std::to_string(poly.arity()) +
                    " variables; ambient has " + std::to_string(ambient.cox_arity()));
  if (value.contains("n")) return BranchDatum::from_cover(std::move(poly), static_cast<int>(int_field(value, "n")));
  if (value.contains("a"))
    return BranchDatum::from_coefficient(std::move(poly), parse_rat_json(field(value, "a")));
  fail("branch needs a cover order 'n' or a coefficient 'a'");
}

ComplexityOneData parse_complexity_one(const Json& value) {
  ComplexityOneData data;
  const Json& base = field(value, "base");
  if (!base.is_string()) fail("'base' must be a string");
  std::string name = base.get<std::string>();
  if (name == "P1")
    data.instance.base = ComplexityOneInstance::Base::ProjectiveLine;
  else if (name == "elliptic")
    data.instance.base = ComplexityOneInstance::Base::EllipticLegendre;
  else if (name == "affine")
    data.instance.base = ComplexityOneInstance::Base::AffineCurve;
  else
    fail("unknown base '" + name + "' (expected P1, elliptic, or affine)");

  if (value.contains("stabilizers")) {
    const Json& stabilizers = field(value, "stabilizers");
    if (!stabilizers.is_array()) fail("'stabilizers' must be an array");
    for (const auto& entry : stabilizers) {
      CurvePoint point = parse_curve_point(field(entry, "point"));
      int order = static_cast<int>(int_field(entry, "order"));
      data.instance.stabilizers.emplace_back(point, order);
    }
  }
  if (data.instance.base == ComplexityOneInstance::Base::EllipticLegendre) {
    data.instance.lambda = parse_rat_json(field(value, "lambda"));
    data.instance.free_action = bool_field(value, "free", data.instance.stabilizers.empty());
  }
  data.instance.validate();
  return data;
}

TvbData parse_tvb(const Json& value) {
  TvbData data;
  data.bundle.rank = static_cast<int>(int_field(value, "rank"));
  data.bundle.fan = parse_fan(field(value, "fan"));
  const Json& subspaces = field(value, "subspaces");
  if (!subspaces.is_array()) fail("'subspaces' must be an array");
  for (const auto& entry : subspaces) {
    const Json& basis = field(entry, "basis");
    if (!basis.is_array() || basis.empty()) fail("subspace 'basis' must be a nonempty array");
    std::vector<std::vector<Rat>> vectors;
    for (const auto& row : basis) {
      if (!row.is_array()) fail("basis vectors must be arrays");
      std::vector<Rat> vec;
      for (const auto& coord : row) vec.push_back(parse_rat_json(coord));
      vectors.push_back(std::move(vec));
    }
    data.bundle.subspaces.push_back(Subspace::from_vectors(data.bundle.rank, std::move(vectors)));
  }
  const Json& filtrations = field(value, "filtrations");
  if (!filtrations.is_array()) fail("'filtrations' must be an array");
  for (const auto& entry : filtrations) {
    RayFiltration filtration;
    filtration.ray = static_cast<int>(int_field(entry, "ray"));
    const Json& shape = field(entry, "shape");
    if (!shape.is_string()) fail("filtration 'shape' must be a string");
    std::string shape_name = shape.get<std::string>();
    if (shape_name == "one-step") {
      filtration.shape = RayFiltration::OneStep{static_cast<int>(int_field(entry, "last"))};
    } else if (shape_name == "two-step") {
      filtration.shape = RayFiltration::TwoStep{
          static_cast<int>(int_field(entry, "first")),
          static_cast<int>(int_field(entry, "subspace")),
          static_cast<int>(int_field(entry, "subLast"))};
    } else {
      fail("unknown filtration shape '" + shape_name + "'");
    }
    data.bundle.filtrations.push_back(filtration);
  }
  data.bundle.general_position = bool_field(value, "generalPosition", false);
  data.bundle.validate();
  return data;
}

}  // namespace

Instance parse_instance(const Json& value) {
  const Json& kind = field(value, "kind");
  if (!kind.is_string()) fail("'kind' must be a string");
  std::string name = kind.get<std::string>();

  if (name == "complexity-one") return parse_complexity_one(value);

  if (name == "cyclic-cover") {
    CyclicCoverData data;
    data.ambient = parse_ambient(field(value, "ambient"));
    data.branch = parse_branch(data.ambient, field(value, "branch"));
    if (!data.branch.cover_order) fail("cyclic cover branch needs an order 'n'");
    auto flags = parse_flags(value);
    data.anticanonical_matching = flags.count("anticanonical-matching") > 0;
    data.reduced_branch = flags.count("reduced-branch") > 0;
    return data;
  }

  if (name == "toric-pair") {
    ToricPairData data;
    data.ambient = parse_ambient(field(value, "ambient"));
    const Json& branches = field(value, "branches");
    if (!branches.is_array()) fail("'branches' must be an array");
    for (const auto& entry : branches) data.branches.push_back(parse_branch(data.ambient, entry));
    return data;
  }

  if (name == "fedder") {
    FedderData data;
    data.ambient = parse_ambient(field(value, "ambient"));
    data.f = parse_polynomial(field(value, "f"));
    if (data.f.arity() != data.ambient.cox_arity())
      throw Error(ErrorCode::ValidationError, "polynomial arity differs from Cox arity");
    data.normal = parse_flags(value).count("normal") > 0;
    return data;
  }

  if (name == "toric-diagonal") {
    ToricDiagonalData data;
    data.fan = parse_fan(field(value, "fan"));
    return data;
  }

  if (name == "tvb") return parse_tvb(value);

  fail("unknown instance kind '" + name + "'");
}

Instance parse_instance_text(const std::string& text) {
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) fail("malformed JSON");
  return parse_instance(value);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) fail("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << input.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string instance_kind(const Instance& instance) {
  struct Visitor {
    std::string operator()(const ComplexityOneData&) const { return "complexity-one"; }
    std::string operator()(const CyclicCoverData&) const { return "cyclic-cover"; }
    std::string operator()(const ToricPairData&) const { return "toric-pair"; }
    std::string operator()(const FedderData&) const { return "fedder"; }
    std::string operator()(const ToricDiagonalData&) const { return "toric-diagonal"; }
    std::string operator()(const TvbData&) const { return "tvb"; }
  };
  return std::visit(Visitor{}, instance);
}

std::string instance_description(const Instance& instance) {
  struct Visitor {
    std::string operator()(const ComplexityOneData& data) const {
      switch (data.instance.base) {
        case ComplexityOneInstance::Base::AffineCurve:
          return "complexity-one over an affine curve";
        case ComplexityOneInstance::Base::EllipticLegendre:
          return "complexity-one over the Legendre curve, lambda = " +
                 rat_to_string(*data.instance.lambda);
        case ComplexityOneInstance::Base::ProjectiveLine: {
          std::string text = "complexity-one over P^1, orders (";
          auto orders = data.instance.sorted_orders();
          for (std::size_t i = 0; i < orders.size(); ++i) {
            if (i > 0) text += ",";
            text += std::to_string(orders[i]);
          }
          return text + ")";
        }
      }
      return "complexity-one";
    }
    std::string operator()(const CyclicCoverData& data) const {
      return "cyclic cover of " + data.ambient.description() + " of order " +
             std::to_string(*data.branch.cover_order);
    }
    std::string operator()(const ToricPairData& data) const {
      return "pair on " + data.ambient.description() + " with " +
             std::to_string(data.branches.size()) + " branch(es)";
    }
    std::string operator()(const FedderData& data) const {
      return "Fedder check in the Cox ring of " + data.ambient.description();
    }
    std::string operator()(const ToricDiagonalData& data) const {
      return "diagonal splitting of the toric variety with " +
             std::to_string(data.fan.rays.size()) + " rays";
    }
    std::string operator()(const TvbData& data) const {
      return "two-step toric vector bundle of rank " + std::to_string(data.bundle.rank);
    }
  };
  return std::visit(Visitor{}, instance);
}

Json verdict_to_json(const Verdict& verdict) {
  Json result;
  result["value"] = decision_name(verdict.value);
  result["reason"] = verdict.reason;
  if (verdict.certificate) {
    Json certificate;
    if (const auto* witness = std::get_if<WitnessMonomial>(&*verdict.certificate)) {
      certificate["type"] = "monomial";
      certificate["vars"] = witness->vars;
      certificate["exponents"] = witness->exponents;
      certificate["coefficient"] = witness->coefficient;
    } else if (const auto* missing = std::get_if<MissingClass>(&*verdict.certificate)) {
      certificate["type"] = "missing-class";
      certificate["prime"] = missing->prime;
      certificate["class"] = missing->cls;
    } else if (const auto* reps = std::get_if<RepresentativeList>(&*verdict.certificate)) {
      certificate["type"] = "representatives";
      certificate["prime"] = reps->prime;
      Json entries = Json::array();
      for (const auto& entry : reps->entries) {
        Json row;
        row["class"] = entry.cls;
        row["rep"] = entry.rep;
        entries.push_back(std::move(row));
      }
      certificate["entries"] = std::move(entries);
    } else if (const auto* degree = std::get_if<DegreeObstruction>(&*verdict.certificate)) {
      certificate["type"] = "degree-obstruction";
      certificate["lhs"] = degree->lhs;
      certificate["rhs"] = degree->rhs;
      certificate["description"] = degree->description;
    }
    result["certificate"] = std::move(certificate);
  } else {
    result["certificate"] = nullptr;
  }
  result["assumptions"] = verdict.assumptions;
  result["notes"] = verdict.notes;
  return result;
}

}  // namespace fsplit
