#include "fsplit/pairs.hpp"

#include <algorithm>
#include <string>

namespace fsplit {

QDivisor::QDivisor(std::vector<std::pair<CurvePoint, Rat>> entries) {
  std::vector<std::pair<CurvePoint, Rat>> collected;
  for (auto& [point, coeff] : entries) {
    bool found = false;
    for (auto& [existing, total] : collected) {
      if (existing == point) {
        total += coeff;
        found = true;
        break;
      }
    }
    if (!found) collected.emplace_back(point, coeff);
  }
  for (auto& [point, coeff] : collected) {
    if (coeff != Rat(0)) entries_.emplace_back(point, coeff);
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
}

Rat QDivisor::degree() const {
  Rat total(0);
  for (const auto& [point, coeff] : entries_) total += coeff;
  return total;
}

Rat pair_genus(int genus, const QDivisor& delta) {
  if (genus < 0) throw Error(ErrorCode::ValidationError, "negative genus");
  for (const auto& [point, coeff] : delta.entries()) {
    if (coeff < Rat(0) || coeff >= Rat(1))
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "coefficient " + rat_to_string(coeff) + " outside [0, 1)");
  }
  return (delta.degree() + Rat(2 * genus)) / Rat(2);
}

namespace {

// Bracket [i, j] = a_i b_j - a_j b_i; vanishes exactly when the points agree.
Rat bracket(const CurvePoint& lhs, const CurvePoint& rhs) {
  return lhs.a() * rhs.b() - rhs.a() * lhs.b();
}

}  // namespace

Rat cross_ratio(const CurvePoint& c1, const CurvePoint& c2, const CurvePoint& c3,
                const CurvePoint& c4) {
  const CurvePoint pts[4] = {c1, c2, c3, c4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j])
        throw Error(ErrorCode::DegeneratePoints,
                    "points " + pts[i].to_string() + " and " + pts[j].to_string() + " coincide");
    }
  }
  Rat num = bracket(c4, c1) * bracket(c3, c2);
  Rat den = bracket(c4, c2) * bracket(c3, c1);
  return num / den;
}

FpPoly hasse_polynomial(Prime p) {
  if (p.value() == 2) throw Error(ErrorCode::EvenPrime, "Hasse polynomial needs an odd prime");
  std::uint32_t m = (p.value() - 1) / 2;
  // binom(m, i) mod p accumulated multiplicatively; entries stay below p.
  FpPoly h(1, p);
  FpElem binom(1, p);
  for (std::uint32_t i = 0; i <= m; ++i) {
    h.add_term(Monomial{{static_cast<std::int32_t>(i)}}, binom * binom);
    if (i < m) binom = binom * FpElem(m - i, p) * FpElem(i + 1, p).inverse();
  }
  return h;
}

bool ordinary_pair(const CurvePoint& c1, const CurvePoint& c2, const CurvePoint& c3,
                   const CurvePoint& c4, Prime p) {
  if (p.value() == 2) throw Error(ErrorCode::EvenPrime, "ordinarity is defined for odd p");
  Rat lambda = cross_ratio(c1, c2, c3, c4);
  FpElem lambda_p = FpElem::from_rational(lambda, p);
  if (lambda_p.residue() == 0 || lambda_p.residue() == 1)
    throw Error(ErrorCode::LambdaDegenerateModP,
                "cross-ratio " + rat_to_string(lambda) + " reduces to " +
                    std::to_string(lambda_p.residue()) + " mod " + std::to_string(p.value()));

  // Coefficient of x^{(p-1)/2} in ((x - lambda)(x - 1))^{(p-1)/2}.
  std::uint32_t m = (p.value() - 1) / 2;
  FpPoly factor(1, p);
  factor.add_term(Monomial{{2}}, 1);
  factor.add_term(Monomial{{1}}, -(FpElem(1, p) + lambda_p));
  factor.add_term(Monomial{{0}}, lambda_p);
  FpPoly power = poly_pow(factor, m);
  return !coeff(power, Monomial{{static_cast<std::int32_t>(m)}}).is_zero();
}

bool fsplit_degree_bound(int genus, const QDivisor& delta, Prime p, int e) {
  if (e < 1) throw Error(ErrorCode::ValidationError, "Frobenius iterate must be >= 1");
  unsigned __int128 q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p.value();
    if (q > (static_cast<unsigned __int128>(1) << 62))
      throw Error(ErrorCode::ResourceExceeded, "p^e exceeds supported range");
  }
  long long scale = static_cast<long long>(q) - 1;
  long long lhs = 0;
  for (const auto& [point, coeff] : delta.entries()) lhs += ceil_rat(coeff * Rat(scale));
  long long rhs = scale * (2 - 2 * static_cast<long long>(genus));
  return lhs <= rhs;
}

void ComplexityOneInstance::validate() const {
  std::vector<CurvePoint> seen;
  for (const auto& [point, order] : stabilizers) {
    if (order < 2)
      throw Error(ErrorCode::ValidationError, "stabilizer orders must be >= 2");
    for (const auto& other : seen) {
      if (other == point)
        throw Error(ErrorCode::ValidationError,
                    "repeated stabilizer point " + point.to_string());
    }
    seen.push_back(point);
  }
  if (base == Base::EllipticLegendre) {
    if (!lambda) throw Error(ErrorCode::ValidationError, "elliptic base needs a lambda value");
    if (*lambda == Rat(0) || *lambda == Rat(1))
      throw Error(ErrorCode::ValidationError, "Legendre lambda must avoid 0 and 1");
    if (free_action != stabilizers.empty())
      throw Error(ErrorCode::ValidationError,
                  "elliptic base: stabilizer list must be empty exactly when the action is free");
  }
}

std::vector<int> ComplexityOneInstance::sorted_orders() const {
  std::vector<int> orders;
  for (const auto& [point, order] : stabilizers) orders.push_back(order);
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace {

std::string orders_label(const std::vector<int>& orders) {
  std::string label = "(";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0) label += ",";
    label += std::to_string(orders[i]);
  }
  label += ")";
  return label;
}

bool four_points_ordinary(const ComplexityOneInstance& instance, Prime p) {
  std::vector<CurvePoint> points;
  for (const auto& [point, order] : instance.stabilizers) points.push_back(point);
  std::sort(points.begin(), points.end());
  return ordinary_pair(points[0], points[1], points[2], points[3], p);
}

}  // namespace

PairVerdicts complexity_one_verdict(const ComplexityOneInstance& instance, Prime p) {
  instance.validate();
  const long long pv = p.value();

  switch (instance.base) {
    case ComplexityOneInstance::Base::AffineCurve: {
      // Affine separated quotient: the pair is toroidal, hence F-regular.
      Verdict yes = Verdict::yes("affine-toroidal-quotient");
      return {yes, yes};
    }
    case ComplexityOneInstance::Base::EllipticLegendre: {
      if (!instance.free_action) {
        Verdict no = Verdict::no("elliptic-quotient/nontrivial-boundary");
        return {no, no};
      }
      bool ordinary = ordinary_pair(CurvePoint::finite(Rat(0)), CurvePoint::finite(Rat(1)),
                                    CurvePoint::finite(*instance.lambda),
                                    CurvePoint::infinity(), p);
      Verdict fsplit = ordinary ? Verdict::yes("elliptic-quotient/ordinary")
                                : Verdict::no("elliptic-quotient/supersingular");
      Verdict fregular = Verdict::no("elliptic-quotient/genus-one");
      return {fsplit, fregular};
    }
    case ComplexityOneInstance::Base::ProjectiveLine:
      break;
  }

  std::vector<int> orders = instance.sorted_orders();
  const std::string label = "stabilizer-table/" + orders_label(orders);

  // At most two nontrivial stabilizer orders: the (1,*,*) row.
  if (orders.size() <= 2) {
    Verdict yes = Verdict::yes("stabilizer-table/(1,*,*)");
    return {yes, yes};
  }

  if (orders.size() == 3) {
    int a = orders[0], b = orders[1], c = orders[2];
    auto both = [&](bool condition) {
      PairVerdicts v;
      v.fsplit = condition ? Verdict::yes(label) : Verdict::no(label + "/p-excluded");
      v.fregular = v.fsplit;
      return v;
    };
    auto split_only = [&](bool condition) {
      PairVerdicts v;
      v.fsplit = condition ? Verdict::yes(label) : Verdict::no(label + "/p-excluded");
      v.fregular = Verdict::no(label + "/never-f-regular");
      return v;
    };
    if (a == 2 && b == 2) return both(pv >= 3);
    if (a == 2 && b == 3 && (c == 3 || c == 4)) return both(pv >= 5);
    if (a == 2 && b == 3 && c == 5) return both(pv >= 7);
    if (a == 2 && b == 3 && c == 6) return split_only(pv % 3 == 1);
    if (a == 2 && b == 4 && c == 4) return split_only(pv % 4 == 1);
    if (a == 3 && b == 3 && c == 3) return split_only(pv % 3 == 1);
    Verdict no = Verdict::no(label + "/not-in-table");
    return {no, no};
  }

  if (orders.size() == 4 && orders == std::vector<int>{2, 2, 2, 2}) {
    if (pv < 3) {
      Verdict no = Verdict::no("stabilizer-table/(2,2,2,2)/p-excluded");
      return {no, no};
    }
    bool ordinary = four_points_ordinary(instance, p);
    Verdict fsplit = ordinary ? Verdict::yes("stabilizer-table/(2,2,2,2)/ordinary")
                              : Verdict::no("stabilizer-table/(2,2,2,2)/supersingular");
    Verdict fregular = Verdict::no("stabilizer-table/(2,2,2,2)/never-f-regular");
    return {fsplit, fregular};
  }

  Verdict no = Verdict::no(label + "/degree-bound");
  DegreeObstruction obstruction;
  QDivisor delta = [&] {
    std::vector<std::pair<CurvePoint, Rat>> entries;
    for (const auto& [point, order] : instance.stabilizers)
      entries.emplace_back(point, Rat(order - 1, order));
    return QDivisor(std::move(entries));
  }();
  obstruction.lhs = rat_to_string(pair_genus(0, delta));
  obstruction.rhs = "1";
  obstruction.description = "pair genus exceeds 1";
  no.certificate = obstruction;
  return {no, no};
}

Verdict diag_necessary_complexity_one(const ComplexityOneInstance& instance, Prime p) {
  (void)p;  // the necessity is prime-independent
  instance.validate();
  if (instance.base == ComplexityOneInstance::Base::AffineCurve)
    throw Error(ErrorCode::ValidationError,
                "diagonal necessity applies to complete instances only");
  if (instance.base == ComplexityOneInstance::Base::EllipticLegendre)
    return Verdict::no("diag-necessity/elliptic-quotient-excluded");

  std::vector<int> orders = instance.sorted_orders();
  if (orders.size() <= 2)
    return Verdict::unknown("diag-necessity/(1,*,*)-shape-passes");
  if (orders == std::vector<int>{2, 2, 2})
    return Verdict::unknown("diag-necessity/(2,2,2)-shape-passes");
  return Verdict::no("diag-necessity/" + orders_label(orders) + "-excluded");
}

}  // namespace fsplit
