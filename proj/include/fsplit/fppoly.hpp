// Exact prime-field arithmetic and sparse multivariate Laurent polynomials.
// Carries every coefficient-of-a-power criterion in the project: powering,
// coefficient extraction, and bounded witness searches.
#pragma once

#include "fsplit/common.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace fsplit {

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

bool is_prime(std::uint64_t n);

// A verified prime 2 <= p < 2^31.
class Prime {
 public:
  explicit Prime(std::uint32_t value);
  std::uint32_t value() const { return value_; }
  bool operator==(const Prime& other) const { return value_ == other.value_; }
  bool operator!=(const Prime& other) const { return value_ != other.value_; }

 private:
  std::uint32_t value_;
};

// Residue in [0, p). Arithmetic stays exact; inverse requires a nonzero value.
class FpElem {
 public:
  FpElem(long long value, Prime p);
  std::uint32_t residue() const { return residue_; }
  std::uint32_t prime() const { return prime_; }
  bool is_zero() const { return residue_ == 0; }

  FpElem operator+(const FpElem& other) const;
  FpElem operator-(const FpElem& other) const;
  FpElem operator*(const FpElem& other) const;
  FpElem operator-() const;
  FpElem inverse() const;
  bool operator==(const FpElem& other) const;

  // Reduces num/den mod p; throws BadReduction when p divides den.
  static FpElem from_rational(const Rat& value, Prime p);

 private:
  FpElem(std::uint32_t residue, std::uint32_t prime) : residue_(residue), prime_(prime) {}
  void check_same_prime(const FpElem& other) const;

  std::uint32_t residue_;
  std::uint32_t prime_;
};

// Exponent vector; entries may be negative (Laurent monomials).
struct Monomial {
  std::vector<std::int32_t> exponents;

  std::size_t arity() const { return exponents.size(); }
  long long degree() const;
  Monomial operator*(const Monomial& other) const;
  bool operator<(const Monomial& other) const { return exponents < other.exponents; }
  bool operator==(const Monomial& other) const { return exponents == other.exponents; }

  static Monomial one(std::size_t arity) { return Monomial{std::vector<std::int32_t>(arity, 0)}; }
  static Monomial variable(std::size_t arity, std::size_t index, std::int32_t exponent = 1);
};

// Sparse polynomial over F_p. No zero coefficients are stored and term
// iteration is lexicographically ascending in the exponent vector.
class FpPoly {
 public:
  FpPoly(std::size_t arity, Prime p) : arity_(arity), prime_(p) {}

  static FpPoly zero(std::size_t arity, Prime p) { return FpPoly(arity, p); }
  static FpPoly constant(std::size_t arity, Prime p, long long c);
  static FpPoly one(std::size_t arity, Prime p) { return constant(arity, p, 1); }

  std::size_t arity() const { return arity_; }
  Prime prime() const { return prime_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const std::map<Monomial, FpElem>& terms() const { return terms_; }

  // Adds c * m into the polynomial, pruning a resulting zero.
  void add_term(const Monomial& m, const FpElem& c);
  void add_term(const Monomial& m, long long c);

  bool operator==(const FpPoly& other) const;

 private:
  std::size_t arity_;
  Prime prime_;
  std::map<Monomial, FpElem> terms_;
};

// Sparse polynomial with exact rational coefficients; authored once and
// reduced per prime so an instance can be swept over prime ranges.
class RationalPoly {
 public:
  explicit RationalPoly(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);

 private:
  std::size_t arity_;
  std::map<Monomial, Rat> terms_;
};

FpPoly reduce_mod_p(const RationalPoly& f, Prime p);

FpPoly poly_add(const FpPoly& f, const FpPoly& g);
FpPoly poly_mul(const FpPoly& f, const FpPoly& g, std::size_t term_cap = kDefaultTermCap);
FpPoly poly_pow(const FpPoly& f, unsigned long long e, std::size_t term_cap = kDefaultTermCap);

FpElem coeff(const FpPoly& f, const Monomial& m);

// Searches the terms of f for a nonzero coefficient whose exponents all lie
// in [0, bound], tightened per variable by `extra`. Ties are broken by taking
// the lexicographically greatest exponent vector so certificates are
// reproducible across runs and platforms.
std::optional<Monomial> bounded_witness(const FpPoly& f, long long bound,
                                        const std::map<std::size_t, long long>& extra = {});

// Hypersurface splitting test: true iff f^{p-1} has a monomial with all
// exponents <= p-1, i.e. f^{p-1} is not in the ideal of p-th variable powers.
bool fedder_hypersurface(const FpPoly& f, Prime p);

// Univariate helpers (arity-1 polynomials, nonnegative exponents).
FpPoly univariate_derivative(const FpPoly& f);
FpPoly univariate_gcd(const FpPoly& f, const FpPoly& g);  // monic; gcd(0,0)=0

}  // namespace fsplit
