#include "fsplit/common.hpp"

#include <cstdlib>

namespace fsplit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::ResourceExceeded: return "ResourceExceeded";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::LambdaDegenerateModP: return "LambdaDegenerateModP";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::WildRamification: return "WildRamification";
    case ErrorCode::HomogeneityViolation: return "HomogeneityViolation";
    case ErrorCode::OrphanSubspace: return "OrphanSubspace";
    case ErrorCode::NotHyperplaneCase: return "NotHyperplaneCase";
    case ErrorCode::GeneralPositionNotAsserted: return "GeneralPositionNotAsserted";
    case ErrorCode::OutOfModel: return "OutOfModel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

Rat parse_rat(const std::string& text) {
  auto parse_int = [](const std::string& s) -> long long {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer in rational");
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
    }
    if (pos != s.size())
      throw Error(ErrorCode::ParseError, "trailing characters in integer '" + s + "'");
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Rat(num, den);
}

std::string rat_to_string(const Rat& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

long long floor_rat(const Rat& value) {
  long long num = value.numerator();
  long long den = value.denominator();  // boost keeps den > 0
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

long long ceil_rat(const Rat& value) { return -floor_rat(-value); }

}  // namespace fsplit
