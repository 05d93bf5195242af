#include "fsplit/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fsplit {

std::vector<std::string> allowed_queries(const std::string& kind) {
  if (kind == "complexity-one") return {"fsplit", "fregular", "diagonal"};
  if (kind == "cyclic-cover") return {"fsplit", "fregular"};
  if (kind == "toric-pair") return {"fsplit", "fregular"};
  if (kind == "fedder") return {"fsplit"};
  if (kind == "toric-diagonal") return {"diagonal"};
  if (kind == "tvb") return {"fsplit", "fregular", "diagonal"};
  throw Error(ErrorCode::ValidationError, "unknown instance kind '" + kind + "'");
}

void Request::validate() const {
  if (primes.empty()) throw Error(ErrorCode::ValidationError, "at least one prime is required");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Prime check(primes[i]);  // throws NotPrime
    if (i > 0 && primes[i] <= primes[i - 1])
      throw Error(ErrorCode::ValidationError, "primes must be ascending and distinct");
  }
  if (queries.empty()) throw Error(ErrorCode::ValidationError, "at least one query is required");
  auto allowed = allowed_queries(instance_kind(instance));
  for (const auto& query : queries) {
    if (std::find(allowed.begin(), allowed.end(), query) == allowed.end())
      throw Error(ErrorCode::ValidationError,
                  "query '" + query + "' is not supported for kind '" +
                      instance_kind(instance) + "'");
  }
}

std::string rule_citation(const std::string& reason) {
  auto slash = reason.find('/');
  std::string head = slash == std::string::npos ? reason : reason.substr(0, slash);
  static const std::map<std::string, std::string> kTable = {
      {"affine-toroidal-quotient", "affine toroidal quotients are F-regular"},
      {"elliptic-quotient", "ordinarity of the elliptic quotient curve"},
      {"stabilizer-table", "stabilizer-order classification for complexity-one actions"},
      {"diag-necessity", "necessary stabilizer shapes for diagonal splitting"},
      {"toric-ambient", "normal toric varieties are F-regular"},
      {"pair-splitting", "Cox-coordinate monomial criterion for pair splitting"},
      {"cyclic-cover", "cyclic cover splitting rule"},
      {"fedder", "Fedder criterion in Cox coordinates"},
      {"payne-coverage", "residue coverage criterion for toric diagonal splitting"},
      {"hyperplane-case", "hyperplane-filtration quotient rule"},
      {"point-blowup", "general-point blowup rules"},
      {"tvb", "two-step bundle routing"},
  };
  auto it = kTable.find(head);
  if (it != kTable.end()) return it->second;
  return head;
}

namespace {

struct QueryVerdicts {
  std::optional<Verdict> fsplit, fregular, diagonal;
};

QueryVerdicts evaluate(const Instance& instance, Prime p, const std::set<std::string>& wanted) {
  QueryVerdicts result;
  if (const auto* data = std::get_if<ComplexityOneData>(&instance)) {
    if (wanted.count("fsplit") || wanted.count("fregular")) {
      auto verdicts = complexity_one_verdict(data->instance, p);
      result.fsplit = verdicts.fsplit;
      result.fregular = verdicts.fregular;
    }
    if (wanted.count("diagonal"))
      result.diagonal = diag_necessary_complexity_one(data->instance, p);
    return result;
  }
  if (const auto* data = std::get_if<CyclicCoverData>(&instance)) {
    auto verdicts = cyclic_cover_verdict(data->ambient, data->branch, p,
                                         data->anticanonical_matching, data->reduced_branch);
    result.fsplit = verdicts.fsplit;
    result.fregular = verdicts.fregular;
    return result;
  }
  if (const auto* data = std::get_if<ToricPairData>(&instance)) {
    Verdict fsplit = toric_pair_fsplit(data->ambient, data->branches, p);
    result.fsplit = fsplit;
    if (wanted.count("fregular")) {
      if (data->branches.empty()) {
        result.fregular = Verdict::yes("toric-ambient/always-f-regular");
      } else if (never_fregular_check(data->ambient, data->branches, p)) {
        result.fregular = Verdict::no("pair-splitting/boundary-matches-anticanonical");
      } else if (fsplit.value == Decision::No) {
        result.fregular = Verdict::no("pair-splitting/not-f-split");
      } else {
        result.fregular = Verdict::unknown("pair-splitting/f-regularity-undecided");
      }
    }
    return result;
  }
  if (const auto* data = std::get_if<FedderData>(&instance)) {
    result.fsplit = fedder_cox(data->ambient, data->f, p, data->normal);
    return result;
  }
  if (const auto* data = std::get_if<ToricDiagonalData>(&instance)) {
    result.diagonal = diag_split_toric(data->fan, p);
    return result;
  }
  const auto& data = std::get<TvbData>(instance);
  auto verdicts = decide_bundle(data.bundle, p);
  result.fsplit = verdicts.fsplit;
  result.fregular = verdicts.fregular;
  result.diagonal = verdicts.diag_necessary;
  return result;
}

}  // namespace

Report run(const Request& request) {
  request.validate();
  Report report;
  report.kind = instance_kind(request.instance);
  report.description = instance_description(request.instance);
  report.primes = request.primes;
  report.queries = request.queries;
  std::set<std::string> wanted(request.queries.begin(), request.queries.end());

  for (std::uint32_t prime_value : request.primes) {
    Prime p(prime_value);
    QueryVerdicts verdicts;
    try {
      verdicts = evaluate(request.instance, p, wanted);
    } catch (const Error& error) {
      throw Error(error.code(),
                  std::string(error.what()) + " (at prime " + std::to_string(prime_value) + ")");
    }
    for (const auto& query : request.queries) {
      const std::optional<Verdict>* verdict = nullptr;
      if (query == "fsplit") verdict = &verdicts.fsplit;
      if (query == "fregular") verdict = &verdicts.fregular;
      if (query == "diagonal") verdict = &verdicts.diagonal;
      if (!verdict || !verdict->has_value())
        throw Error(ErrorCode::ValidationError,
                    "query '" + query + "' produced no verdict at prime " +
                        std::to_string(prime_value));
      ResultRecord record;
      record.prime = prime_value;
      record.query = query;
      record.verdict = **verdict;
      record.rule = rule_citation(record.verdict.reason);
      report.records.push_back(std::move(record));
    }
  }
  return report;
}

namespace {

std::string summarize_query(const Report& report, const std::string& query) {
  std::vector<std::uint32_t> yes, no, unknown;
  std::map<std::string, int> unknown_reasons;
  for (const auto& record : report.records) {
    if (record.query != query) continue;
    switch (record.verdict.value) {
      case Decision::Yes: yes.push_back(record.prime); break;
      case Decision::No: no.push_back(record.prime); break;
      case Decision::Unknown:
        unknown.push_back(record.prime);
        ++unknown_reasons[record.verdict.reason];
        break;
    }
  }
  std::size_t total = yes.size() + no.size() + unknown.size();
  std::ostringstream text;
  text << query << ": ";
  if (unknown.empty() && yes.size() == total) {
    text << "Yes for all " << total << " tested primes";
  } else if (unknown.empty() && no.size() == total) {
    text << "No for all " << total << " tested primes";
  } else {
    text << "Yes for " << yes.size() << "/" << total << " tested primes";
    if (unknown.empty() && !yes.empty() && !no.empty()) {
      // Try a pure congruence pattern: yes exactly at p = r mod m.
      for (std::uint32_t modulus = 3; modulus <= 12; ++modulus) {
        std::uint32_t residue = yes.front() % modulus;
        bool exact = true;
        for (auto p : yes)
          if (p % modulus != residue) exact = false;
        for (auto p : no)
          if (p % modulus == residue) exact = false;
        if (exact) {
          text << "; yes exactly at p = " << residue << " mod " << modulus
               << " among tested primes";
          break;
        }
        if (modulus == 12) {
          // Fall back to a threshold pattern: yes exactly at p >= bound.
          std::uint32_t bound = *std::min_element(yes.begin(), yes.end());
          bool threshold = true;
          for (auto p : no)
            if (p >= bound) threshold = false;
          if (threshold) text << "; yes exactly at p >= " << bound << " among tested primes";
        }
      }
    }
    if (!unknown.empty()) {
      text << "; unknown for " << unknown.size() << " prime(s) (";
      bool first = true;
      for (const auto& [reason, count] : unknown_reasons) {
        if (!first) text << ", ";
        text << reason << " x" << count;
        first = false;
      }
      text << ")";
    }
  }
  return text.str();
}

}  // namespace

std::string sweep_summary(const Report& report) {
  if (report.records.empty())
    throw Error(ErrorCode::ValidationError, "cannot summarize an empty report");
  std::ostringstream text;
  for (std::size_t i = 0; i < report.queries.size(); ++i) {
    if (i > 0) text << "\n";
    text << summarize_query(report, report.queries[i]);
  }
  return text.str();
}

Json report_to_json(const Report& report) {
  Json result;
  result["kind"] = report.kind;
  result["description"] = report.description;
  result["primes"] = report.primes;
  result["queries"] = report.queries;
  Json records = Json::array();
  for (const auto& record : report.records) {
    Json row = verdict_to_json(record.verdict);
    row["prime"] = record.prime;
    row["query"] = record.query;
    row["rule"] = record.rule;
    records.push_back(std::move(row));
  }
  result["results"] = std::move(records);
  result["summary"] = sweep_summary(report);
  return result;
}

namespace {

std::string certificate_brief(const Verdict& verdict) {
  if (!verdict.certificate) return "-";
  if (const auto* witness = std::get_if<WitnessMonomial>(&*verdict.certificate)) {
    std::string text;
    bool constant = true;
    for (std::size_t i = 0; i < witness->exponents.size(); ++i) {
      if (witness->exponents[i] == 0) continue;
      constant = false;
      if (!text.empty()) text += "*";
      text += witness->vars[i];
      if (witness->exponents[i] != 1) text += "^" + std::to_string(witness->exponents[i]);
    }
    if (constant) text = "1";
    return text + " (coeff " + witness->coefficient + ")";
  }
  if (const auto* missing = std::get_if<MissingClass>(&*verdict.certificate)) {
    std::string text = "missing class [";
    for (std::size_t i = 0; i < missing->cls.size(); ++i) {
      if (i > 0) text += ",";
      text += std::to_string(missing->cls[i]);
    }
    return text + "]";
  }
  if (const auto* reps = std::get_if<RepresentativeList>(&*verdict.certificate))
    return std::to_string(reps->entries.size()) + " class representatives";
  if (const auto* degree = std::get_if<DegreeObstruction>(&*verdict.certificate))
    return "degree " + degree->lhs + " > " + degree->rhs;
  return "-";
}

}  // namespace

std::string report_to_table(const Report& report) {
  std::ostringstream out;
  out << "# " << report.kind << ": " << report.description << "\n";
  auto pad = [](const std::string& text, std::size_t width) {
    std::string padded = text;
    while (padded.size() < width) padded += ' ';
    return padded;
  };
  out << pad("prime", 8) << pad("query", 10) << pad("verdict", 9) << pad("reason", 44)
      << "certificate" << "\n";
  for (const auto& record : report.records) {
    out << pad(std::to_string(record.prime), 8) << pad(record.query, 10)
        << pad(decision_name(record.verdict.value), 9) << pad(record.verdict.reason, 44)
        << certificate_brief(record.verdict) << "\n";
  }
  out << "summary:\n" << sweep_summary(report) << "\n";
  return out.str();
}

bool matches_expectation(const Report& report, Decision expected) {
  return std::all_of(report.records.begin(), report.records.end(),
                     [&](const ResultRecord& record) { return record.verdict.value == expected; });
}

}  // namespace fsplit
