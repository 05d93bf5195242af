// Shared helpers for the test suites: independent brute-force oracles over
// hand-rolled term maps (deliberately separate from the library code paths)
// and deterministic random generators.
#pragma once

#include "fsplit/fppoly.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace testsupport {

// A polynomial as a plain map exponent-vector -> residue, with all arithmetic
// done longhand. Used as the oracle against FpPoly.
using TermMap = std::map<std::vector<int>, long long>;

inline TermMap oracle_normalize(const TermMap& f, long long p) {
  TermMap result;
  for (const auto& [e, c] : f) {
    long long r = ((c % p) + p) % p;
    if (r != 0) result[e] = r;
  }
  return result;
}

inline TermMap oracle_mul(const TermMap& f, const TermMap& g, long long p) {
  TermMap result;
  for (const auto& [ef, cf] : f) {
    for (const auto& [eg, cg] : g) {
      std::vector<int> e(ef.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      result[e] = (result[e] + cf * cg) % p;
    }
  }
  return oracle_normalize(result, p);
}

// Repeated multiplication, no squaring shortcuts.
inline TermMap oracle_pow(const TermMap& f, unsigned e, std::size_t arity, long long p) {
  TermMap result;
  result[std::vector<int>(arity, 0)] = 1;
  for (unsigned i = 0; i < e; ++i) result = oracle_mul(result, f, p);
  return result;
}

inline TermMap to_term_map(const fsplit::FpPoly& f) {
  TermMap result;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(m.exponents.begin(), m.exponents.end());
    result[e] = c.residue();
  }
  return result;
}

inline fsplit::FpPoly from_term_map(const TermMap& f, std::size_t arity, fsplit::Prime p) {
  fsplit::FpPoly result(arity, p);
  for (const auto& [e, c] : f) {
    fsplit::Monomial m;
    m.exponents.assign(e.begin(), e.end());
    result.add_term(m, c);
  }
  return result;
}

inline fsplit::FpPoly random_poly(std::mt19937& rng, std::size_t arity, fsplit::Prime p,
                                  int max_terms = 6, int max_exponent = 4) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> exponent(0, max_exponent);
  std::uniform_int_distribution<long long> coefficient(0, p.value() - 1);
  fsplit::FpPoly result(arity, p);
  int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    fsplit::Monomial m;
    for (std::size_t i = 0; i < arity; ++i)
      m.exponents.push_back(static_cast<std::int32_t>(exponent(rng)));
    result.add_term(m, coefficient(rng));
  }
  return result;
}

// Random element of GL_n(Z) built from elementary row operations.
inline std::vector<std::vector<long long>> random_unimodular(std::mt19937& rng, int n,
                                                             int operations = 6) {
  std::vector<std::vector<long long>> matrix(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) matrix[i][i] = 1;
  std::uniform_int_distribution<int> row(0, n - 1);
  std::uniform_int_distribution<int> scalar(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int step = 0; step < operations; ++step) {
    int i = row(rng), j = row(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) {
          long long c = scalar(rng);
          for (int k = 0; k < n; ++k) matrix[i][k] += c * matrix[j][k];
        }
        break;
      case 1:
        std::swap(matrix[i], matrix[j]);
        break;
      default:
        for (int k = 0; k < n; ++k) matrix[i][k] = -matrix[i][k];
        break;
    }
  }
  return matrix;
}

inline std::vector<long long> apply_matrix(const std::vector<std::vector<long long>>& matrix,
                                           const std::vector<long long>& vec) {
  std::vector<long long> result(matrix.size(), 0);
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < vec.size(); ++j) result[i] += matrix[i][j] * vec[j];
  return result;
}

}  // namespace testsupport
