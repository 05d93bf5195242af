// Tri-state decision record shared by all decision engines.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fsplit {

enum class Decision { Yes, No, Unknown };

const char* decision_name(Decision d);

// A monomial of the criterion polynomial witnessing a splitting section.
struct WitnessMonomial {
  std::vector<std::string> vars;   // variable names, parallel to exponents
  std::vector<int> exponents;
  std::string coefficient;         // residue as decimal string
};

// A residue class in (Z/p)^n that no admissible weight hits.
struct MissingClass {
  std::uint32_t prime = 0;
  std::vector<int> cls;
};

// One admissible lattice representative per residue class.
struct RepresentativeList {
  std::uint32_t prime = 0;
  struct Entry {
    std::vector<int> cls;
    std::vector<long long> rep;
  };
  std::vector<Entry> entries;
};

// Exact degree comparison that rules a splitting section out.
struct DegreeObstruction {
  std::string lhs;
  std::string rhs;
  std::string description;
};

using Certificate =
    std::variant<WitnessMonomial, MissingClass, RepresentativeList, DegreeObstruction>;

struct Verdict {
  Decision value = Decision::Unknown;
  std::string reason;  // rule identifier, e.g. "stabilizer-table/(2,3,6)"
  std::optional<Certificate> certificate;
  std::vector<std::string> assumptions;  // user-asserted flags this verdict consumed
  std::vector<std::string> notes;

  static Verdict yes(std::string reason_id) {
    return Verdict{Decision::Yes, std::move(reason_id), std::nullopt, {}, {}};
  }
  static Verdict no(std::string reason_id) {
    return Verdict{Decision::No, std::move(reason_id), std::nullopt, {}, {}};
  }
  static Verdict unknown(std::string reason_id) {
    return Verdict{Decision::Unknown, std::move(reason_id), std::nullopt, {}, {}};
  }
};

}  // namespace fsplit
