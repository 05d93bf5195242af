// Rational divisors on curves, pair genus, the ordinarity test, and the full
// complexity-one F-split / F-regular / diagonal classification.
#pragma once

#include "fsplit/common.hpp"
#include "fsplit/fppoly.hpp"
#include "fsplit/verdict.hpp"

#include <optional>
#include <vector>

namespace fsplit {

// Point of P^1 with exact rational coordinates; canonical form is (v:1) for
// finite points and (1:0) for infinity.
class CurvePoint {
 public:
  static CurvePoint finite(const Rat& value) { return CurvePoint(value, false); }
  static CurvePoint infinity() { return CurvePoint(Rat(0), true); }

  bool is_infinity() const { return infinite_; }
  const Rat& value() const { return value_; }  // valid only for finite points

  // Projective coordinates (a : b).
  Rat a() const { return infinite_ ? Rat(1) : value_; }
  Rat b() const { return infinite_ ? Rat(0) : Rat(1); }

  bool operator==(const CurvePoint& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }
  // Finite points ascending by value, infinity last.
  bool operator<(const CurvePoint& other) const {
    if (infinite_ != other.infinite_) return !infinite_;
    if (infinite_) return false;
    return value_ < other.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : rat_to_string(value_); }

 private:
  CurvePoint(const Rat& value, bool infinite) : value_(value), infinite_(infinite) {}
  Rat value_;
  bool infinite_;
};

// Formal rational-coefficient sum of points; entries canonicalized (points
// distinct and sorted, zero coefficients dropped).
class QDivisor {
 public:
  QDivisor() = default;
  explicit QDivisor(std::vector<std::pair<CurvePoint, Rat>> entries);

  const std::vector<std::pair<CurvePoint, Rat>>& entries() const { return entries_; }
  Rat degree() const;
  bool is_zero() const { return entries_.empty(); }

 private:
  std::vector<std::pair<CurvePoint, Rat>> entries_;
};

// g(C, Delta) = (deg Delta + 2g) / 2. Coefficients must lie in [0, 1).
Rat pair_genus(int genus, const QDivisor& delta);

// Cross-ratio normalized so that (0, inf; 1, t) = t: the image of c4 under
// the Moebius transformation taking (c1, c2, c3) to (0, inf, 1).
Rat cross_ratio(const CurvePoint& c1, const CurvePoint& c2, const CurvePoint& c3,
                const CurvePoint& c4);

// The pair (P^1, 1/2(c1+c2+c3+c4)) is ordinary at odd p iff the coefficient
// of x^{(p-1)/2} in ((x-lambda)(x-1))^{(p-1)/2} is nonzero mod p, with lambda
// the cross-ratio of the four points.
bool ordinary_pair(const CurvePoint& c1, const CurvePoint& c2, const CurvePoint& c3,
                   const CurvePoint& c4, Prime p);

// Necessary degree bound for a splitting section of (C, Delta) with genus g:
// deg ceil((p^e - 1) Delta) <= (p^e - 1)(2 - 2g).
bool fsplit_degree_bound(int genus, const QDivisor& delta, Prime p, int e);

// Hasse polynomial H(t) = sum_i binom(m, i)^2 t^i with m = (p-1)/2, as an
// arity-1 polynomial over F_p. Its nonvanishing at lambda is the ordinarity
// criterion up to sign.
FpPoly hasse_polynomial(Prime p);

struct ComplexityOneInstance {
  enum class Base { AffineCurve, EllipticLegendre, ProjectiveLine };

  Base base = Base::ProjectiveLine;
  std::optional<Rat> lambda;  // EllipticLegendre branch value, not 0 or 1
  bool free_action = true;    // EllipticLegendre: stabilizers trivial everywhere
  std::vector<std::pair<CurvePoint, int>> stabilizers;  // orders >= 2, points distinct

  void validate() const;
  std::vector<int> sorted_orders() const;
};

struct PairVerdicts {
  Verdict fsplit;
  Verdict fregular;
};

// The complexity-one classification: affine quotients, elliptic quotients in
// Legendre form, and projective-line quotients matched against the stabilizer
// order table.
PairVerdicts complexity_one_verdict(const ComplexityOneInstance& instance, Prime p);

// Necessary condition for diagonal splitting of a complete complexity-one
// variety: quotient P^1 with orders of shape (1,*,*) or exactly (2,2,2).
// Passing the necessity yields Unknown, never Yes.
Verdict diag_necessary_complexity_one(const ComplexityOneInstance& instance, Prime p);

}  // namespace fsplit
