#include "fsplit/tvb.hpp"

#include "fsplit/toricpairs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fsplit {

namespace {

// In-place Gauss-Jordan to reduced row echelon form; drops zero rows.
std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t pivot = pivot_row;
    while (pivot < rows.size() && rows[pivot][col] == Rat(0)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot_row], rows[pivot]);
    Rat inv = Rat(1) / rows[pivot_row][col];
    for (auto& value : rows[pivot_row]) value *= inv;
    for (std::size_t row = 0; row < rows.size(); ++row) {
      if (row == pivot_row) continue;
      Rat factor = rows[row][col];
      if (factor == Rat(0)) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[row][j] -= factor * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::vector<Rat>& row) {
                              return std::all_of(row.begin(), row.end(),
                                                 [](const Rat& v) { return v == Rat(0); });
                            }),
             rows.end());
  return rows;
}

}  // namespace

Subspace Subspace::from_vectors(int ambient_dim, std::vector<std::vector<Rat>> vectors) {
  if (ambient_dim < 1) throw Error(ErrorCode::ValidationError, "ambient dimension must be >= 1");
  for (const auto& vector : vectors) {
    if (static_cast<int>(vector.size()) != ambient_dim)
      throw Error(ErrorCode::ValidationError, "basis vector dimension mismatch");
  }
  auto basis = rref(std::move(vectors));
  int dim = static_cast<int>(basis.size());
  if (dim < 1 || dim >= ambient_dim)
    throw Error(ErrorCode::ValidationError,
                "subspace must be proper and nonzero (dim " + std::to_string(dim) + " of " +
                    std::to_string(ambient_dim) + ")");
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains_vector(const std::vector<Rat>& vector) const {
  // Reduce the vector against the RREF basis and check for a zero remainder.
  std::vector<Rat> residual = vector;
  for (const auto& row : basis_) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == Rat(0)) ++lead;
    if (lead == row.size()) continue;
    Rat factor = residual[lead];
    if (factor == Rat(0)) continue;
    for (std::size_t j = 0; j < row.size(); ++j) residual[j] -= factor * row[j];
  }
  return std::all_of(residual.begin(), residual.end(), [](const Rat& v) { return v == Rat(0); });
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  for (const auto& row : other.basis_) {
    if (!contains_vector(row)) return false;
  }
  return true;
}

Subspace Subspace::orthogonal_complement() const {
  // Kernel of the basis matrix with respect to the standard pairing.
  int r = ambient_dim_;
  int k = dim();
  // Identify pivot columns of the RREF basis.
  std::vector<bool> is_pivot(r, false);
  std::vector<int> pivot_col(k, -1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < r; ++j) {
      if (basis_[i][j] != Rat(0)) {
        is_pivot[j] = true;
        pivot_col[i] = j;
        break;
      }
    }
  }
  std::vector<std::vector<Rat>> kernel;
  for (int free = 0; free < r; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> vec(r, Rat(0));
    vec[free] = Rat(1);
    for (int i = 0; i < k; ++i) vec[pivot_col[i]] = -basis_[i][free];
    kernel.push_back(std::move(vec));
  }
  return Subspace::from_vectors(r, std::move(kernel));
}

bool Subspace::operator<(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) return ambient_dim_ < other.ambient_dim_;
  if (basis_.size() != other.basis_.size()) return basis_.size() < other.basis_.size();
  return basis_ < other.basis_;
}

void TwoStepBundle::validate() const {
  if (rank < 2) throw Error(ErrorCode::ValidationError, "bundle rank must be >= 2");
  fan.validate();
  for (const auto& subspace : subspaces) {
    if (subspace.ambient_dim() != rank)
      throw Error(ErrorCode::ValidationError, "subspace ambient dimension differs from rank");
  }
  if (filtrations.size() != fan.rays.size())
    throw Error(ErrorCode::ValidationError, "need exactly one filtration per ray");
  std::set<int> seen_rays;
  for (const auto& filtration : filtrations) {
    if (filtration.ray < 0 || filtration.ray >= static_cast<int>(fan.rays.size()))
      throw Error(ErrorCode::ValidationError, "filtration ray index out of range");
    if (!seen_rays.insert(filtration.ray).second)
      throw Error(ErrorCode::ValidationError, "two filtrations on one ray");
    if (const auto* two = std::get_if<RayFiltration::TwoStep>(&filtration.shape)) {
      if (two->subspace < 0 || two->subspace >= static_cast<int>(subspaces.size()))
        throw Error(ErrorCode::ValidationError, "filtration subspace index out of range");
      if (two->first > two->sub_last)
        throw Error(ErrorCode::ValidationError, "empty filtration interval");
    }
  }
}

std::vector<int> mu_values(const TwoStepBundle& bundle) {
  bundle.validate();
  std::vector<int> mu(bundle.subspaces.size(), 0);
  std::vector<bool> referenced(bundle.subspaces.size(), false);
  for (const auto& filtration : bundle.filtrations) {
    const auto* two = std::get_if<RayFiltration::TwoStep>(&filtration.shape);
    if (!two) continue;
    referenced[two->subspace] = true;
    int length = two->sub_last - two->first + 1;
    const Subspace& held = bundle.subspaces[two->subspace];
    for (std::size_t i = 0; i < bundle.subspaces.size(); ++i) {
      // E_i sits inside the proper step for the whole interval iff the held
      // subspace contains it; other rays contribute 0.
      if (held.contains(bundle.subspaces[i])) mu[i] = std::max(mu[i], length);
    }
  }
  for (std::size_t i = 0; i < bundle.subspaces.size(); ++i) {
    if (!referenced[i])
      throw Error(ErrorCode::OrphanSubspace,
                  "subspace " + std::to_string(i) + " occurs in no filtration");
  }
  return mu;
}

bool QuotientDescriptor::delta_trivial() const {
  return std::all_of(centers.begin(), centers.end(),
                     [](const Center& center) { return center.delta == Rat(0); });
}

std::string QuotientDescriptor::to_string() const {
  std::string text = "Bl(P^" + std::to_string(base_dim) + "; ";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (i > 0) text += ", ";
    text += "dim" + std::to_string(centers[i].subspace_dim) + " mu" +
            std::to_string(centers[i].mu);
  }
  text += ") delta=(";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (i > 0) text += ",";
    text += rat_to_string(centers[i].delta);
  }
  text += ")";
  return text;
}

QuotientDescriptor quotient_descriptor(const TwoStepBundle& bundle) {
  auto mu = mu_values(bundle);
  QuotientDescriptor descriptor;
  descriptor.base_dim = bundle.rank - 1;
  for (std::size_t i = 0; i < bundle.subspaces.size(); ++i) {
    QuotientDescriptor::Center center;
    center.subspace_dim = bundle.subspaces[i].dim() - 1;  // projectivized dimension
    center.mu = mu[i];
    center.delta = Rat(mu[i] - 1, mu[i]);
    descriptor.centers.push_back(center);
  }
  std::sort(descriptor.centers.begin(), descriptor.centers.end(),
            [](const QuotientDescriptor::Center& lhs, const QuotientDescriptor::Center& rhs) {
              if (lhs.subspace_dim != rhs.subspace_dim) return lhs.subspace_dim < rhs.subspace_dim;
              return lhs.mu < rhs.mu;
            });
  return descriptor;
}

TwoStepBundle dual_bundle(const TwoStepBundle& bundle) {
  bundle.validate();
  TwoStepBundle dual;
  dual.rank = bundle.rank;
  dual.fan = bundle.fan;
  dual.general_position = bundle.general_position;
  for (const auto& subspace : bundle.subspaces)
    dual.subspaces.push_back(subspace.orthogonal_complement());
  for (const auto& filtration : bundle.filtrations) {
    RayFiltration mirrored;
    mirrored.ray = filtration.ray;
    if (const auto* one = std::get_if<RayFiltration::OneStep>(&filtration.shape)) {
      mirrored.shape = RayFiltration::OneStep{-one->last - 1};
    } else {
      const auto& two = std::get<RayFiltration::TwoStep>(filtration.shape);
      mirrored.shape = RayFiltration::TwoStep{-two.sub_last, two.subspace, -two.first};
    }
    dual.filtrations.push_back(mirrored);
  }
  return dual;
}

namespace {

CurvePoint line_to_point(const Subspace& line) {
  // A line in Q^2 spanned by (a, b) is the point (a : b) of P^1.
  const auto& vec = line.basis().front();
  if (vec[1] == Rat(0)) return CurvePoint::infinity();
  return CurvePoint::finite(vec[0] / vec[1]);
}

}  // namespace

TvbVerdicts ranktwo_verdict(const TwoStepBundle& bundle, Prime p) {
  bundle.validate();
  if (bundle.rank != 2)
    throw Error(ErrorCode::ValidationError, "rank-two route called on rank != 2");
  auto mu = mu_values(bundle);

  ComplexityOneInstance instance;
  instance.base = ComplexityOneInstance::Base::ProjectiveLine;
  for (std::size_t i = 0; i < bundle.subspaces.size(); ++i) {
    if (mu[i] > 1)
      instance.stabilizers.emplace_back(line_to_point(bundle.subspaces[i]), mu[i]);
  }
  auto pair_verdicts = complexity_one_verdict(instance, p);
  TvbVerdicts verdicts;
  verdicts.fsplit = pair_verdicts.fsplit;
  verdicts.fregular = pair_verdicts.fregular;
  verdicts.diag_necessary = diag_necessary_complexity_one(instance, p);
  for (auto* verdict : {&verdicts.fsplit, &verdicts.fregular, &verdicts.diag_necessary})
    verdict->assumptions.push_back("klyachko-data-from-bundle");
  return verdicts;
}

HyperplaneVerdicts hyperplane_case_verdict(const TwoStepBundle& bundle, Prime p) {
  bundle.validate();
  for (const auto& subspace : bundle.subspaces) {
    if (subspace.dim() != bundle.rank - 1)
      throw Error(ErrorCode::NotHyperplaneCase, "a subspace is not a hyperplane");
  }
  auto mu = mu_values(bundle);

  ToricAmbient ambient = ToricAmbient::projective_space(bundle.rank - 1);
  std::vector<BranchDatum> branches;
  for (std::size_t i = 0; i < bundle.subspaces.size(); ++i) {
    if (mu[i] <= 1) continue;
    // Linear form cutting the hyperplane: its normal vector.
    Subspace normal_line = bundle.subspaces[i].orthogonal_complement();
    const auto& normal = normal_line.basis().front();
    RationalPoly form(bundle.rank);
    for (int j = 0; j < bundle.rank; ++j) {
      if (normal[j] != Rat(0))
        form.add_term(Monomial::variable(bundle.rank, j), normal[j]);
    }
    branches.push_back(BranchDatum::from_coefficient(std::move(form), Rat(mu[i] - 1, mu[i])));
  }

  HyperplaneVerdicts verdicts;
  verdicts.fsplit = toric_pair_fsplit(ambient, branches, p);
  verdicts.fsplit.assumptions.push_back("klyachko-data-from-bundle");

  if (branches.empty()) {
    verdicts.fregular = Verdict::yes("hyperplane-case/trivial-boundary-projective-quotient");
  } else if (verdicts.fsplit.value == Decision::No) {
    verdicts.fregular = Verdict::no("hyperplane-case/not-f-split");
  } else if (never_fregular_check(ambient, branches, p)) {
    verdicts.fregular = Verdict::no("hyperplane-case/boundary-matches-anticanonical");
  } else {
    verdicts.fregular = Verdict::unknown("hyperplane-case/f-regularity-undecided");
  }
  verdicts.fregular.assumptions.push_back("klyachko-data-from-bundle");
  return verdicts;
}

PointBlowupVerdicts point_blowup_rules(int base_dim, long long num_points, Prime p,
                                       bool general_position_asserted) {
  (void)p;  // the point rules are prime-independent
  if (!general_position_asserted)
    throw Error(ErrorCode::GeneralPositionNotAsserted,
                "point rules require the general-position assertion");
  if (base_dim < 1 || num_points < 0)
    throw Error(ErrorCode::ValidationError, "bad point-blowup parameters");

  PointBlowupVerdicts verdicts;
  auto regular = [&](const std::string& reason) {
    verdicts.fregular = Verdict::yes(reason);
    verdicts.fsplit = Verdict::yes(reason);
  };
  if (num_points <= base_dim + 1) {
    regular("point-blowup/toric-after-coordinate-change");
  } else if (num_points == base_dim + 2) {
    regular("point-blowup/f-regular-at-dim-plus-two");
  } else {
    // h^0(P^m, O(m+1)) = binom(2m+1, m).
    unsigned long long h0 = 1;
    for (int i = 1; i <= base_dim; ++i)
      h0 = h0 * static_cast<unsigned long long>(base_dim + 1 + i) / i;
    if (static_cast<unsigned long long>(num_points) >= h0) {
      verdicts.fsplit = Verdict::no("point-blowup/anticanonical-sections-vanish");
      DegreeObstruction obstruction;
      obstruction.lhs = std::to_string(num_points);
      obstruction.rhs = std::to_string(h0);
      obstruction.description = "points meet the section-space dimension bound";
      verdicts.fsplit.certificate = obstruction;
      verdicts.fregular = Verdict::no("point-blowup/not-f-split");
    } else {
      verdicts.fsplit = Verdict::unknown("point-blowup/between-rules");
      verdicts.fregular = Verdict::unknown("point-blowup/between-rules");
    }
  }
  for (auto* verdict : {&verdicts.fsplit, &verdicts.fregular})
    verdict->assumptions.push_back("general-position");
  return verdicts;
}

TvbVerdicts decide_bundle(const TwoStepBundle& bundle, Prime p) {
  bundle.validate();
  if (bundle.rank == 2) return ranktwo_verdict(bundle, p);

  auto mu = mu_values(bundle);
  auto descriptor = quotient_descriptor(bundle);

  bool all_hyperplanes = std::all_of(
      bundle.subspaces.begin(), bundle.subspaces.end(),
      [&](const Subspace& subspace) { return subspace.dim() == bundle.rank - 1; });
  if (all_hyperplanes) {
    auto hv = hyperplane_case_verdict(bundle, p);
    TvbVerdicts verdicts;
    verdicts.fsplit = hv.fsplit;
    verdicts.fregular = hv.fregular;
    verdicts.diag_necessary = Verdict::unknown("tvb/no-diagonal-rule");
    return verdicts;
  }

  bool all_points = std::all_of(
      bundle.subspaces.begin(), bundle.subspaces.end(),
      [](const Subspace& subspace) { return subspace.dim() == 1; });
  bool delta_trivial = std::all_of(mu.begin(), mu.end(), [](int m) { return m == 1; });
  if (all_points && delta_trivial) {
    if (!bundle.general_position) {
      TvbVerdicts verdicts;
      verdicts.fsplit = Verdict::unknown("point-blowup/general-position-not-asserted");
      verdicts.fregular = Verdict::unknown("point-blowup/general-position-not-asserted");
      verdicts.diag_necessary = Verdict::unknown("tvb/no-diagonal-rule");
      return verdicts;
    }
    auto pv = point_blowup_rules(bundle.rank - 1, static_cast<long long>(bundle.subspaces.size()),
                                 p, true);
    TvbVerdicts verdicts;
    verdicts.fsplit = pv.fsplit;
    verdicts.fregular = pv.fregular;
    verdicts.diag_necessary = Verdict::unknown("tvb/no-diagonal-rule");
    return verdicts;
  }

  TvbVerdicts verdicts;
  Verdict unknown = Verdict::unknown("tvb/no-decision-route");
  unknown.notes.push_back("quotient descriptor: " + descriptor.to_string());
  verdicts.fsplit = unknown;
  verdicts.fregular = unknown;
  verdicts.diag_necessary = Verdict::unknown("tvb/no-diagonal-rule");
  return verdicts;
}

}  // namespace fsplit
