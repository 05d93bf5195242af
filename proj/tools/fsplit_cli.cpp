// Command-line front end: parses instance files, dispatches to the decision
// engines, sweeps prime ranges, and prints verdict reports.
//
// Exit codes: 0 = ran (and matched --expect when given), 2 = verdict
// mismatch against --expect, 1 = error.
#include "fsplit/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CommandOptions {
  std::string instance_path;
  std::vector<std::uint32_t> primes;
  std::string prime_range;
  std::string queries;
  std::string format = "table";
  std::string expect;
  bool allow_large_primes = false;
};

std::vector<std::uint32_t> resolve_primes(const CommandOptions& options) {
  std::set<std::uint32_t> primes(options.primes.begin(), options.primes.end());
  for (auto p : options.primes) {
    if (!fsplit::is_prime(p))
      throw fsplit::Error(fsplit::ErrorCode::NotPrime,
                          std::to_string(p) + " (from --prime) is not prime");
  }
  if (!options.prime_range.empty()) {
    auto dots = options.prime_range.find("..");
    if (dots == std::string::npos)
      throw fsplit::Error(fsplit::ErrorCode::ValidationError,
                          "--primes expects a range like 5..100");
    unsigned long lo = 0, hi = 0;
    try {
      lo = std::stoul(options.prime_range.substr(0, dots));
      hi = std::stoul(options.prime_range.substr(dots + 2));
    } catch (const std::exception&) {
      throw fsplit::Error(fsplit::ErrorCode::ValidationError,
                          "--primes expects a range like 5..100");
    }
    for (unsigned long p = lo; p <= hi; ++p) {
      if (fsplit::is_prime(p)) primes.insert(static_cast<std::uint32_t>(p));
    }
  }
  if (primes.empty())
    throw fsplit::Error(fsplit::ErrorCode::ValidationError,
                        "no primes requested; use --prime or --primes");
  if (!options.allow_large_primes) {
    for (auto p : primes) {
      if (p > fsplit::kDefaultPrimeCap)
        throw fsplit::Error(fsplit::ErrorCode::ValidationError,
                            "prime " + std::to_string(p) +
                                " exceeds the default cap of 10000; pass "
                                "--allow-large-primes to acknowledge the cost");
    }
  }
  return {primes.begin(), primes.end()};
}

std::vector<std::string> resolve_queries(const CommandOptions& options, const std::string& kind) {
  if (options.queries.empty()) return fsplit::allowed_queries(kind);
  std::vector<std::string> queries;
  std::stringstream stream(options.queries);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) queries.push_back(item);
  }
  return queries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision engine for F-splitting, F-regularity, and diagonal "
               "splitting of varieties with diagonalizable group actions"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"complexity-one", "cyclic-cover", "toric-pair",
                                          "fedder", "toric-diagonal", "tvb"};
  std::map<std::string, CommandOptions> options_by_kind;
  for (const auto& kind : kinds) {
    auto* sub = app.add_subcommand(kind, "Evaluate a " + kind + " instance");
    auto& options = options_by_kind[kind];
    sub->add_option("--instance", options.instance_path, "Instance JSON file")->required();
    sub->add_option("--prime", options.primes, "A prime to test (repeatable)");
    sub->add_option("--primes", options.prime_range, "Inclusive prime range A..B");
    sub->add_option("--query", options.queries,
                    "Comma-separated queries: fsplit,fregular,diagonal");
    sub->add_option("--format", options.format, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--expect", options.expect, "Expected verdict for CI")
        ->check(CLI::IsMember({"yes", "no", "unknown"}));
    sub->add_flag("--allow-large-primes", options.allow_large_primes,
                  "Lift the default prime cap of 10000");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    std::string kind = app.get_subcommands().front()->get_name();
    const CommandOptions& options = options_by_kind[kind];

    fsplit::Request request;
    request.instance = fsplit::load_instance_file(options.instance_path);
    if (fsplit::instance_kind(request.instance) != kind)
      throw fsplit::Error(fsplit::ErrorCode::ValidationError,
                          "instance file has kind '" +
                              fsplit::instance_kind(request.instance) +
                              "' but the subcommand is '" + kind + "'");
    request.primes = resolve_primes(options);
    request.queries = resolve_queries(options, kind);
    if (options.expect == "yes") request.expect = fsplit::Decision::Yes;
    if (options.expect == "no") request.expect = fsplit::Decision::No;
    if (options.expect == "unknown") request.expect = fsplit::Decision::Unknown;

    fsplit::Report report = fsplit::run(request);
    if (options.format == "json")
      std::cout << fsplit::report_to_json(report).dump(2) << "\n";
    else
      std::cout << fsplit::report_to_table(report);

    if (request.expect && !fsplit::matches_expectation(report, *request.expect)) {
      std::cerr << "expectation mismatch: wanted every verdict to be '"
                << fsplit::decision_name(*request.expect) << "'\n";
      return 2;
    }
    return 0;
  } catch (const fsplit::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
