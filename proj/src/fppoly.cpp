#include "fsplit/fppoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace fsplit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint32_t value) : value_(value) {
  if (value < 2 || value > 0x7fffffffu || !is_prime(value))
    throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not a prime in [2, 2^31)");
}

FpElem::FpElem(long long value, Prime p) : prime_(p.value()) {
  long long r = value % static_cast<long long>(prime_);
  if (r < 0) r += prime_;
  residue_ = static_cast<std::uint32_t>(r);
}

void FpElem::check_same_prime(const FpElem& other) const {
  if (prime_ != other.prime_)
    throw Error(ErrorCode::PrimeMismatch,
                "mixing residues mod " + std::to_string(prime_) + " and mod " +
                    std::to_string(other.prime_));
}

FpElem FpElem::operator+(const FpElem& other) const {
  check_same_prime(other);
  std::uint64_t r = static_cast<std::uint64_t>(residue_) + other.residue_;
  if (r >= prime_) r -= prime_;
  return FpElem(static_cast<std::uint32_t>(r), prime_);
}

FpElem FpElem::operator-(const FpElem& other) const {
  check_same_prime(other);
  std::uint64_t r = static_cast<std::uint64_t>(residue_) + prime_ - other.residue_;
  if (r >= prime_) r -= prime_;
  return FpElem(static_cast<std::uint32_t>(r), prime_);
}

FpElem FpElem::operator*(const FpElem& other) const {
  check_same_prime(other);
  std::uint64_t r = static_cast<std::uint64_t>(residue_) * other.residue_ % prime_;
  return FpElem(static_cast<std::uint32_t>(r), prime_);
}

FpElem FpElem::operator-() const {
  return FpElem(residue_ == 0 ? 0u : prime_ - residue_, prime_);
}

FpElem FpElem::inverse() const {
  if (residue_ == 0)
    throw Error(ErrorCode::BadReduction, "inverse of 0 mod " + std::to_string(prime_));
  // Extended Euclid on (residue, p).
  long long t = 0, new_t = 1;
  long long r = prime_, new_r = residue_;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += prime_;
  return FpElem(static_cast<std::uint32_t>(t), prime_);
}

bool FpElem::operator==(const FpElem& other) const {
  return prime_ == other.prime_ && residue_ == other.residue_;
}

FpElem FpElem::from_rational(const Rat& value, Prime p) {
  long long den = value.denominator();
  if (den % static_cast<long long>(p.value()) == 0)
    throw Error(ErrorCode::BadReduction,
                "denominator " + std::to_string(den) + " divisible by " +
                    std::to_string(p.value()));
  FpElem num(value.numerator(), p);
  FpElem d(den, p);
  return num * d.inverse();
}

long long Monomial::degree() const {
  long long total = 0;
  for (auto e : exponents) total += e;
  return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exponents.size() != other.exponents.size())
    throw Error(ErrorCode::ArityMismatch, "monomial arities differ");
  Monomial result = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    result.exponents[i] += other.exponents[i];
  return result;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::int32_t exponent) {
  Monomial m = one(arity);
  m.exponents.at(index) = exponent;
  return m;
}

FpPoly FpPoly::constant(std::size_t arity, Prime p, long long c) {
  FpPoly result(arity, p);
  result.add_term(Monomial::one(arity), c);
  return result;
}

void FpPoly::add_term(const Monomial& m, const FpElem& c) {
  if (m.arity() != arity_) throw Error(ErrorCode::ArityMismatch, "term arity differs");
  if (c.prime() != prime_.value())
    throw Error(ErrorCode::PrimeMismatch, "coefficient prime differs");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    FpElem sum = it->second + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum;
  }
}

void FpPoly::add_term(const Monomial& m, long long c) { add_term(m, FpElem(c, prime_)); }

bool FpPoly::operator==(const FpPoly& other) const {
  if (arity_ != other.arity_ || prime_.value() != other.prime_.value()) return false;
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
  }
  return true;
}

void RationalPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.arity() != arity_) throw Error(ErrorCode::ArityMismatch, "term arity differs");
  if (c == Rat(0)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rat(0)) terms_.erase(it);
  }
}

FpPoly reduce_mod_p(const RationalPoly& f, Prime p) {
  FpPoly result(f.arity(), p);
  for (const auto& [m, c] : f.terms()) result.add_term(m, FpElem::from_rational(c, p));
  return result;
}

namespace {

void check_compatible(const FpPoly& f, const FpPoly& g) {
  if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "polynomial arities differ");
  if (f.prime() != g.prime()) throw Error(ErrorCode::PrimeMismatch, "polynomial primes differ");
}

}  // namespace

FpPoly poly_add(const FpPoly& f, const FpPoly& g) {
  check_compatible(f, g);
  FpPoly result = f;
  for (const auto& [m, c] : g.terms()) result.add_term(m, c);
  return result;
}

FpPoly poly_mul(const FpPoly& f, const FpPoly& g, std::size_t term_cap) {
  check_compatible(f, g);
  FpPoly result(f.arity(), f.prime());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      result.add_term(mf * mg, cf * cg);
      if (result.term_count() > term_cap)
        throw Error(ErrorCode::ResourceExceeded,
                    "product exceeds term cap of " + std::to_string(term_cap));
    }
  }
  return result;
}

FpPoly poly_pow(const FpPoly& f, unsigned long long e, std::size_t term_cap) {
  FpPoly result = FpPoly::one(f.arity(), f.prime());
  FpPoly base = f;
  while (e > 0) {
    if (e & 1ull) result = poly_mul(result, base, term_cap);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base, term_cap);
  }
  return result;
}

FpElem coeff(const FpPoly& f, const Monomial& m) {
  if (m.arity() != f.arity()) throw Error(ErrorCode::ArityMismatch, "monomial arity differs");
  auto it = f.terms().find(m);
  if (it == f.terms().end()) return FpElem(0, f.prime());
  return it->second;
}

std::optional<Monomial> bounded_witness(const FpPoly& f, long long bound,
                                        const std::map<std::size_t, long long>& extra) {
  std::optional<Monomial> best;
  for (const auto& [m, c] : f.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < m.exponents.size() && ok; ++i) {
      long long e = m.exponents[i];
      long long cap = bound;
      auto it = extra.find(i);
      if (it != extra.end()) cap = std::min(cap, it->second);
      if (e < 0 || e > cap) ok = false;
    }
    if (!ok) continue;
    if (!best || *best < m) best = m;
  }
  return best;
}

bool fedder_hypersurface(const FpPoly& f, Prime p) {
  if (f.prime() != p)
    throw Error(ErrorCode::PrimeMismatch, "polynomial prime differs from requested prime");
  for (const auto& [m, c] : f.terms()) {
    for (auto e : m.exponents)
      if (e < 0)
        throw Error(ErrorCode::ValidationError, "fedder test requires nonnegative exponents");
  }
  FpPoly power = poly_pow(f, p.value() - 1);
  return bounded_witness(power, p.value() - 1).has_value();
}

namespace {

long long univariate_degree(const FpPoly& f) {
  if (f.arity() != 1) throw Error(ErrorCode::ArityMismatch, "univariate operation on arity != 1");
  long long deg = -1;
  for (const auto& [m, c] : f.terms()) deg = std::max<long long>(deg, m.exponents[0]);
  return deg;
}

FpElem leading_coeff(const FpPoly& f, long long deg) {
  return coeff(f, Monomial{{static_cast<std::int32_t>(deg)}});
}

}  // namespace

FpPoly univariate_derivative(const FpPoly& f) {
  if (f.arity() != 1) throw Error(ErrorCode::ArityMismatch, "univariate operation on arity != 1");
  FpPoly result(1, f.prime());
  for (const auto& [m, c] : f.terms()) {
    std::int32_t e = m.exponents[0];
    if (e <= 0) continue;
    result.add_term(Monomial{{e - 1}}, c * FpElem(e, f.prime()));
  }
  return result;
}

FpPoly univariate_gcd(const FpPoly& f, const FpPoly& g) {
  check_compatible(f, g);
  FpPoly a = f, b = g;
  while (!b.is_zero()) {
    // a mod b by long division.
    long long deg_b = univariate_degree(b);
    FpElem lead_b_inv = leading_coeff(b, deg_b).inverse();
    FpPoly r = a;
    while (!r.is_zero()) {
      long long deg_r = univariate_degree(r);
      if (deg_r < deg_b) break;
      FpElem factor = leading_coeff(r, deg_r) * lead_b_inv;
      long long shift = deg_r - deg_b;
      for (const auto& [m, c] : b.terms()) {
        Monomial shifted{{static_cast<std::int32_t>(m.exponents[0] + shift)}};
        r.add_term(shifted, -(factor * c));
      }
    }
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  FpElem lead_inv = leading_coeff(a, univariate_degree(a)).inverse();
  FpPoly monic(1, f.prime());
  for (const auto& [m, c] : a.terms()) monic.add_term(m, c * lead_inv);
  return monic;
}

}  // namespace fsplit
