// Splitting criteria for pairs (toric ambient, sum of a_i * V(f_i)) in Cox
// coordinates: the uniform monomial search, cyclic covers, Fedder checks for
// subvarieties, and degree obstructions.
#pragma once

#include "fsplit/common.hpp"
#include "fsplit/fppoly.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsplit {

// Smooth complete toric ambient with its Cox grading. Presets carry hardcoded
// gradings; the general case takes user-provided degrees, one per ray.
class ToricAmbient {
 public:
  enum class Kind { ProjectiveSpace, ProductOfProjectiveSpaces, GeneralSmoothComplete };

  ToricAmbient() = default;  // empty placeholder; factories build usable ambients

  static ToricAmbient projective_space(int m);
  static ToricAmbient product_of_projective_spaces(const std::vector<int>& dims);
  static ToricAmbient general(Fan fan, std::vector<std::vector<long long>> cox_degrees);

  Kind kind() const { return kind_; }
  std::size_t cox_arity() const { return degrees_.size(); }
  std::size_t grading_rank() const { return degrees_.empty() ? 0 : degrees_.front().size(); }
  const std::vector<long long>& var_degree(std::size_t index) const { return degrees_.at(index); }
  std::vector<long long> anticanonical_degree() const;
  const std::vector<std::string>& var_names() const { return names_; }
  bool complete() const { return complete_; }
  bool smooth() const { return smooth_; }
  const std::string& description() const { return description_; }

 private:
  Kind kind_ = Kind::ProjectiveSpace;
  std::vector<std::vector<long long>> degrees_;  // class-group vector per Cox variable
  std::vector<std::string> names_;
  bool complete_ = true;
  bool smooth_ = true;
  std::string description_;
};

// A branch component: homogeneous f with Delta-coefficient a in [0, 1),
// a = (n-1)/n when it comes from a cover of order n.
struct BranchDatum {
  RationalPoly f{0};
  Rat a;
  std::optional<int> cover_order;

  static BranchDatum from_cover(RationalPoly poly, int n);
  static BranchDatum from_coefficient(RationalPoly poly, Rat a);
};

// Delta coefficients (n_i - 1) / n_i for a list of cover branches.
std::vector<BranchDatum> boundary_delta(const std::vector<std::pair<RationalPoly, int>>& branches);

// Class-group degree of a homogeneous polynomial; HomogeneityViolation when
// the terms disagree.
std::vector<long long> homogeneous_degree(const ToricAmbient& ambient, const RationalPoly& f);

// Splitting test for the pair (X, sum a_i V(f_i)) at p: some monomial of
// prod f_i^{ceil((p-1) a_i)} must have all Cox exponents <= p-1 with nonzero
// coefficient. Sufficient as well as necessary on complete smooth ambients.
// An empty branch list is the plain toric splitting, always Yes.
Verdict toric_pair_fsplit(const ToricAmbient& ambient, const std::vector<BranchDatum>& branches,
                          Prime p);

struct CoverVerdicts {
  Verdict fsplit;
  Verdict fregular;
};

// Degree-n cyclic cover branched over the reduced divisor V(f). When the
// branch class matches the anticanonical class (asserted or detected), the
// cover splits only for p = 1 mod n and is never F-regular.
CoverVerdicts cyclic_cover_verdict(const ToricAmbient& ambient, const BranchDatum& branch,
                                   Prime p, bool anticanonical_matching_asserted,
                                   bool reduced_branch_asserted);

// Fedder test for the subvariety V(f) of the Cox space: F-split iff f^{p-1}
// avoids the ideal of p-th variable powers. Requires normality of V(f) as a
// user assertion.
Verdict fedder_cox(const ToricAmbient& ambient, const RationalPoly& f, Prime p,
                   bool normal_asserted);

// True when sum a_i [V(f_i)] equals the anticanonical class exactly; the
// section space then leaves no room for any extra effective divisor, so the
// pair is not F-regular.
bool never_fregular_check(const ToricAmbient& ambient, const std::vector<BranchDatum>& branches,
                          Prime p);

// Not-F-split obstruction for the Frobenius pullback of the cotangent bundle:
// deg floor((1-p)(K + Delta^sep)) = (p-1)(n - rayCount) is negative exactly
// when rayCount > n.
bool frobenius_pullback_obstruction(int dim, int ray_count, Prime p);

}  // namespace fsplit
