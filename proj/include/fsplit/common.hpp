// Shared error machinery and exact rational helpers used by every module.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsplit {

enum class ErrorCode {
  ArityMismatch,
  PrimeMismatch,
  BadReduction,
  ResourceExceeded,
  Unbounded,
  NotComplete,
  NotPrime,
  CoefficientOutOfRange,
  DegeneratePoints,
  LambdaDegenerateModP,
  EvenPrime,
  WildRamification,
  HomogeneityViolation,
  OrphanSubspace,
  NotHyperplaneCase,
  GeneralPositionNotAsserted,
  OutOfModel,
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Exact rational arithmetic. boost::rational keeps values normalized with a
// positive denominator, which the mod-p reduction below relies on.
using Rat = boost::rational<long long>;

// Parses "3", "-4/7", "0" style strings.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& value);

long long floor_rat(const Rat& value);
long long ceil_rat(const Rat& value);

}  // namespace fsplit
