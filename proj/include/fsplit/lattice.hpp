// Fans, the weight polytopes P_X and F_X, lattice-point enumeration, and
// residue-class coverage mod p. Drives toric splitting sections and the
// diagonal-splitting test.
#pragma once

#include "fsplit/common.hpp"
#include "fsplit/fppoly.hpp"
#include "fsplit/verdict.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace fsplit {

// Ray list of a fan. Completeness and smoothness are user assertions carried
// on the data; nothing here infers them (cones are not modeled).
struct Fan {
  int dim = 0;
  std::vector<std::vector<long long>> rays;  // primitive, nonzero, pairwise distinct
  bool complete = false;
  bool smooth = false;

  void validate() const;
};

// Intersection of half-spaces {u : <normal, u> <= bound}.
struct HPolytope {
  struct Halfspace {
    std::vector<long long> normal;
    Rat bound;
  };
  int dim = 0;
  std::vector<Halfspace> halfspaces;
};

// {u : <ray, u> <= 1 for every ray}.
HPolytope px_polytope(const Fan& fan);

// P_X cap -P_X.
HPolytope fx_polytope(const Fan& fan);

// All integer points of k*P in ascending lexicographic order.
// Throws Unbounded when the recession cone of P is nontrivial.
std::vector<std::vector<long long>> enumerate_scaled(const HPolytope& polytope, long long k);

// Image of a point set in (Z/p)^n together with the complement.
class ResidueCoverage {
 public:
  static constexpr std::size_t kMissingListCap = 10'000;

  ResidueCoverage(Prime p, int dim, std::set<std::vector<int>> covered);

  Prime prime() const { return prime_; }
  int dim() const { return dim_; }
  const std::set<std::vector<int>>& covered() const { return covered_; }
  unsigned long long covered_count() const { return covered_.size(); }
  unsigned long long missing_count() const { return missing_count_; }
  bool all_covered() const { return missing_count_ == 0; }

  // Lexicographically first missing class, when any.
  const std::optional<std::vector<int>>& sample_missing() const { return sample_missing_; }
  // Full missing list, populated only when it fits under kMissingListCap.
  const std::optional<std::vector<std::vector<int>>>& missing_list() const {
    return missing_list_;
  }

 private:
  Prime prime_;
  int dim_;
  std::set<std::vector<int>> covered_;
  unsigned long long missing_count_ = 0;
  std::optional<std::vector<int>> sample_missing_;
  std::optional<std::vector<std::vector<int>>> missing_list_;
};

ResidueCoverage residue_coverage(const std::vector<std::vector<long long>>& points, Prime p);

// Decides diagonal splitting of the complete toric variety of `fan` at p:
// every class of M/pM must have a representative among the integer points of
// (p-1) * F_X. Yes certificates list one representative per class; No
// certificates name a missing class.
Verdict diag_split_toric(const Fan& fan, Prime p);

}  // namespace fsplit
