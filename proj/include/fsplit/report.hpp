// Request dispatch across the decision engines, per-prime verdict collection,
// and deterministic report rendering.
#pragma once

#include "fsplit/json_io.hpp"
#include "fsplit/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsplit {

inline constexpr std::uint32_t kDefaultPrimeCap = 10'000;

// Queries an instance kind can answer.
std::vector<std::string> allowed_queries(const std::string& kind);

struct Request {
  Instance instance;
  std::vector<std::uint32_t> primes;   // validated primes, ascending, distinct
  std::vector<std::string> queries;    // nonempty subset of the allowed queries
  std::optional<Decision> expect;

  void validate() const;
};

struct ResultRecord {
  std::uint32_t prime = 0;
  std::string query;
  Verdict verdict;
  std::string rule;  // human-readable rule citation derived from the reason
};

struct Report {
  std::string kind;
  std::string description;
  std::vector<std::uint32_t> primes;
  std::vector<std::string> queries;
  std::vector<ResultRecord> records;  // ordered by (prime, query position)
};

// Evaluates every (prime, query) pair. Engine errors propagate, annotated
// with the offending prime.
Report run(const Request& request);

// Congruence-pattern digest per query, computed from observed verdicts only.
std::string sweep_summary(const Report& report);

Json report_to_json(const Report& report);
std::string report_to_table(const Report& report);

// True when every record's verdict equals the expectation.
bool matches_expectation(const Report& report, Decision expected);

// Reason-prefix to rule-citation table, exposed for the report tests.
std::string rule_citation(const std::string& reason);

}  // namespace fsplit
