#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsplit/fppoly.hpp"
#include "test_support.hpp"

#include <random>

using namespace fsplit;
using testsupport::from_term_map;
using testsupport::oracle_mul;
using testsupport::oracle_pow;
using testsupport::random_poly;
using testsupport::to_term_map;

namespace {

FpPoly univariate(Prime p, std::initializer_list<std::pair<int, long long>> terms) {
  FpPoly f(1, p);
  for (const auto& [e, c] : terms) f.add_term(Monomial{{e}}, c);
  return f;
}

}  // namespace

TEST_CASE("prime validation") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(7919).value() == 7919);
  CHECK(Prime(1000003u).value() == 1000003u);
  CHECK_THROWS_AS(Prime(1), Error);
  CHECK_THROWS_AS(Prime(4), Error);
  CHECK_THROWS_AS(Prime(1000001u), Error);  // 101 * 9901
}

TEST_CASE("field arithmetic") {
  Prime p(7);
  FpElem a(10, p), b(-3, p);
  CHECK(a.residue() == 3);
  CHECK(b.residue() == 4);
  CHECK((a + b).residue() == 0);
  CHECK((a * b).residue() == 5);
  CHECK((a.inverse() * a).residue() == 1);
  CHECK_THROWS_AS(FpElem(0, p).inverse(), Error);
}

TEST_CASE("reduce_mod_p examples") {
  // (1/2) x at p=5 -> 3x
  RationalPoly f(1);
  f.add_term(Monomial{{1}}, Rat(1, 2));
  FpPoly reduced = reduce_mod_p(f, Prime(5));
  CHECK(coeff(reduced, Monomial{{1}}).residue() == 3);
  CHECK(reduced.term_count() == 1);

  // x - 3 at p=3 -> x (constant term drops)
  RationalPoly g(1);
  g.add_term(Monomial{{1}}, Rat(1));
  g.add_term(Monomial{{0}}, Rat(-3));
  FpPoly reduced_g = reduce_mod_p(g, Prime(3));
  CHECK(reduced_g.term_count() == 1);
  CHECK(coeff(reduced_g, Monomial{{1}}).residue() == 1);

  // (1/3) x at p=3 -> BadReduction
  RationalPoly h(1);
  h.add_term(Monomial{{1}}, Rat(1, 3));
  CHECK_THROWS_AS(reduce_mod_p(h, Prime(3)), Error);
}

TEST_CASE("poly_mul examples") {
  Prime two(2);
  // (x+y)^2 at p=2 -> x^2 + y^2
  FpPoly f(2, two);
  f.add_term(Monomial{{1, 0}}, 1);
  f.add_term(Monomial{{0, 1}}, 1);
  FpPoly square = poly_mul(f, f);
  CHECK(square.term_count() == 2);
  CHECK(coeff(square, Monomial{{2, 0}}).residue() == 1);
  CHECK(coeff(square, Monomial{{0, 2}}).residue() == 1);

  // f * 1 == f
  CHECK(poly_mul(f, FpPoly::one(2, two)) == f);

  // (x-1)(x-2) at p=5 -> x^2 + 2x + 2
  Prime five(5);
  FpPoly a = univariate(five, {{1, 1}, {0, -1}});
  FpPoly b = univariate(five, {{1, 1}, {0, -2}});
  FpPoly product = poly_mul(a, b);
  CHECK(coeff(product, Monomial{{2}}).residue() == 1);
  CHECK(coeff(product, Monomial{{1}}).residue() == 2);
  CHECK(coeff(product, Monomial{{0}}).residue() == 2);

  FpPoly wrong_arity(3, five);
  CHECK_THROWS_AS(poly_mul(a, wrong_arity), Error);
  FpPoly wrong_prime(1, Prime(7));
  CHECK_THROWS_AS(poly_mul(a, wrong_prime), Error);
}

TEST_CASE("poly_pow examples") {
  Prime five(5);
  // ((x-2)(x-1))^2 at p=5 -> x^4 + 4x^3 + 3x^2 + 3x + 4
  FpPoly base = poly_mul(univariate(five, {{1, 1}, {0, -2}}), univariate(five, {{1, 1}, {0, -1}}));
  FpPoly squared = poly_pow(base, 2);
  CHECK(coeff(squared, Monomial{{4}}).residue() == 1);
  CHECK(coeff(squared, Monomial{{3}}).residue() == 4);
  CHECK(coeff(squared, Monomial{{2}}).residue() == 3);
  CHECK(coeff(squared, Monomial{{1}}).residue() == 3);
  CHECK(coeff(squared, Monomial{{0}}).residue() == 4);

  CHECK(poly_pow(base, 0) == FpPoly::one(1, five));

  // (x+y)^4 at p=2 -> x^4 + y^4
  Prime two(2);
  FpPoly f(2, two);
  f.add_term(Monomial{{1, 0}}, 1);
  f.add_term(Monomial{{0, 1}}, 1);
  FpPoly fourth = poly_pow(f, 4);
  CHECK(fourth.term_count() == 2);
  CHECK(coeff(fourth, Monomial{{4, 0}}).residue() == 1);
  CHECK(coeff(fourth, Monomial{{0, 4}}).residue() == 1);
}

TEST_CASE("coeff examples") {
  Prime five(5);
  FpPoly base = poly_mul(univariate(five, {{1, 1}, {0, -2}}), univariate(five, {{1, 1}, {0, -1}}));
  CHECK(coeff(poly_pow(base, 2), Monomial{{2}}).residue() == 3);  // 13 mod 5

  Prime three(3);
  FpPoly g = poly_mul(univariate(three, {{1, 1}, {0, -2}}), univariate(three, {{1, 1}, {0, -1}}));
  CHECK(coeff(g, Monomial{{1}}).residue() == 0);  // -(1+2) = 0 mod 3

  CHECK(coeff(FpPoly::one(1, five), Monomial{{0}}).residue() == 1);
  CHECK_THROWS_AS(coeff(g, Monomial{{0, 0}}), Error);
}

TEST_CASE("bounded_witness examples") {
  Prime five(5);
  FpPoly fermat(4, five);
  for (std::size_t i = 0; i < 4; ++i) fermat.add_term(Monomial::variable(4, i, 4), 1);

  // (x^4+y^4+z^4+w^4)^2 at p=5, bound 4 -> witness x^4 y^4 with coefficient 2
  FpPoly squared = poly_pow(fermat, 2);
  auto witness = bounded_witness(squared, 4);
  REQUIRE(witness.has_value());
  CHECK(witness->exponents == std::vector<std::int32_t>{4, 4, 0, 0});
  CHECK(coeff(squared, *witness).residue() == 2);

  // At p=3 with bound 2 every exponent 4 term fails.
  Prime three(3);
  FpPoly fermat3(4, three);
  for (std::size_t i = 0; i < 4; ++i) fermat3.add_term(Monomial::variable(4, i, 4), 1);
  CHECK(!bounded_witness(fermat3, 2).has_value());

  // f = 1, bound 0 -> witness 1
  auto unit = bounded_witness(FpPoly::one(2, five), 0);
  REQUIRE(unit.has_value());
  CHECK(unit->exponents == std::vector<std::int32_t>{0, 0});

  // per-variable caps
  auto capped = bounded_witness(squared, 4, {{0, 3}});
  REQUIRE(capped.has_value());
  CHECK(capped->exponents[0] <= 3);
}

TEST_CASE("fedder_hypersurface examples") {
  // x^2 + xy + y^2 at p=2: f itself contains xy
  Prime two(2);
  FpPoly f(2, two);
  f.add_term(Monomial{{2, 0}}, 1);
  f.add_term(Monomial{{1, 1}}, 1);
  f.add_term(Monomial{{0, 2}}, 1);
  CHECK(fedder_hypersurface(f, two));

  // x^2 at p=3: f^2 = x^4 with exponent above 2
  Prime three(3);
  FpPoly g(1, three);
  g.add_term(Monomial{{2}}, 1);
  CHECK(!fedder_hypersurface(g, three));
}

TEST_CASE("fedder oracle cross-check: x0^2 y0^2 - x1^2 y1^2 + x0 x1 y0 y1 at p=3") {
  Prime three(3);
  FpPoly f(4, three);
  f.add_term(Monomial{{2, 0, 2, 0}}, 1);
  f.add_term(Monomial{{0, 2, 0, 2}}, -1);
  f.add_term(Monomial{{1, 1, 1, 1}}, 1);

  // Brute-force expansion of f^{p-1} and exponent scan.
  auto power = oracle_pow(to_term_map(f), 2, 4, 3);
  bool oracle_split = false;
  for (const auto& [e, c] : power) {
    bool admissible = true;
    for (int exponent : e)
      if (exponent > 2) admissible = false;
    if (admissible && c % 3 != 0) oracle_split = true;
  }
  CHECK(fedder_hypersurface(f, three) == oracle_split);
}

TEST_CASE("property: poly_pow additivity over random inputs") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> small_exponent(0, 4);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(primes[trial % 4]);
    FpPoly f = random_poly(rng, 2, p, 4, 3);
    unsigned a = small_exponent(rng), b = small_exponent(rng);
    CHECK(poly_pow(f, a + b) == poly_mul(poly_pow(f, a), poly_pow(f, b)));
  }
}

TEST_CASE("property: Frobenius additivity (f+g)^p = f^p + g^p") {
  std::mt19937 rng(7);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(primes[trial % 3]);
    FpPoly f = random_poly(rng, 2, p, 4, 3);
    FpPoly g = random_poly(rng, 2, p, 4, 3);
    CHECK(poly_pow(poly_add(f, g), p.value()) ==
          poly_add(poly_pow(f, p.value()), poly_pow(g, p.value())));
  }
}

TEST_CASE("property: coeff agrees with the naive repeated-multiplication oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exponent(0, 6);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(primes[trial % 4]);
    FpPoly f = random_poly(rng, 2, p, 6, 4);
    unsigned e = exponent(rng);
    FpPoly via_library = poly_pow(f, e);
    FpPoly via_oracle = from_term_map(oracle_pow(to_term_map(f), e, 2, p.value()), 2, p);
    CHECK(via_library == via_oracle);
  }
}

TEST_CASE("property: bounded_witness returns a real term and misses nothing") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> bound_dist(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(trial % 2 == 0 ? 3 : 5);
    FpPoly f = random_poly(rng, 3, p, 6, 5);
    long long bound = bound_dist(rng);
    auto witness = bounded_witness(f, bound);
    bool exists = false;
    for (const auto& [m, c] : f.terms()) {
      bool ok = true;
      for (auto e : m.exponents)
        if (e < 0 || e > bound) ok = false;
      if (ok) exists = true;
    }
    CHECK(witness.has_value() == exists);
    if (witness) {
      CHECK(!coeff(f, *witness).is_zero());
      for (auto e : witness->exponents) {
        CHECK(e >= 0);
        CHECK(e <= bound);
      }
    }
  }
}

TEST_CASE("property: fedder invariant under variable permutation and scaling") {
  std::mt19937 rng(17);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(primes[trial % 3]);
    FpPoly f = random_poly(rng, 3, p, 4, 2);
    if (f.is_zero()) continue;
    bool base = fedder_hypersurface(f, p);

    // Swap the first two variables.
    FpPoly swapped(3, p);
    for (const auto& [m, c] : f.terms()) {
      Monomial mirrored = m;
      std::swap(mirrored.exponents[0], mirrored.exponents[1]);
      swapped.add_term(mirrored, c);
    }
    CHECK(fedder_hypersurface(swapped, p) == base);

    // Scale by a nonzero constant.
    std::uniform_int_distribution<long long> nonzero(1, p.value() - 1);
    FpElem scale(nonzero(rng), p);
    FpPoly scaled(3, p);
    for (const auto& [m, c] : f.terms()) scaled.add_term(m, c * scale);
    CHECK(fedder_hypersurface(scaled, p) == base);
  }
}

TEST_CASE("univariate gcd and derivative") {
  Prime five(5);
  // gcd((x-1)^2 (x-2), (x-1)(x-3)) = x - 1
  FpPoly a = poly_mul(poly_pow(univariate(five, {{1, 1}, {0, -1}}), 2),
                      univariate(five, {{1, 1}, {0, -2}}));
  FpPoly b = poly_mul(univariate(five, {{1, 1}, {0, -1}}), univariate(five, {{1, 1}, {0, -3}}));
  FpPoly g = univariate_gcd(a, b);
  CHECK(g == univariate(five, {{1, 1}, {0, -1}}));

  FpPoly d = univariate_derivative(poly_pow(univariate(five, {{1, 1}, {0, -1}}), 2));
  // d/dx (x-1)^2 = 2x - 2
  CHECK(coeff(d, Monomial{{1}}).residue() == 2);
  CHECK(coeff(d, Monomial{{0}}).residue() == 3);

  // Coprime polynomials give gcd 1.
  FpPoly one = univariate_gcd(univariate(five, {{1, 1}}), univariate(five, {{1, 1}, {0, -1}}));
  CHECK(one == FpPoly::one(1, five));
}

TEST_CASE("term cap raises ResourceExceeded") {
  Prime p(101);
  FpPoly f(2, p);
  for (int i = 0; i < 40; ++i) f.add_term(Monomial{{i, i * i}}, 1);
  CHECK_THROWS_AS(poly_mul(f, f, 100), Error);
}
