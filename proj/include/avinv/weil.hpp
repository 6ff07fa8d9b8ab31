#pragma once

// The Weil-polynomial layer: validation, Frobenius decomposition, trace
// polynomial and the Honda-Tate exponent.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "avinv/poly.hpp"

namespace avinv {

struct WeilPolynomial {
  IntPolynomial poly;
  std::uint64_t p = 0;
  unsigned n = 0;
  mpz_class q;

  int degree() const { return poly.degree(); }
};

mpz_class prime_power(std::uint64_t p, unsigned n);
// Exact integer square root if x is a perfect square.
std::optional<mpz_class> exact_sqrt(const mpz_class& x);

// Product of the distinct monic irreducible factors.
IntPolynomial radical(const IntPolynomial& f);

// Splits a squarefree monic f into the factors with real roots (T^2 - q or
// T -+ sqrt(q)) and the remaining part.
struct RealSplit {
  std::vector<IntPolynomial> real_factors;  // canonical order
  IntPolynomial complex_part;
};
RealSplit split_real_roots(const IntPolynomial& squarefree, const mpz_class& q);

// Certifies |alpha|^2 = q for every root: interval check on multiprecision
// roots, then an exact Sturm count on the trace polynomial.
WeilPolynomial validate_weil(const IntPolynomial& poly, std::uint64_t p, unsigned n);

struct FrobeniusFactor {
  WeilPolynomial h;
  int e = 1;
};

struct FrobeniusDecomposition {
  std::vector<FrobeniusFactor> factors;  // canonical order
  bool simple = false;                   // exactly one distinct factor
  IntPolynomial h;                       // radical
};

FrobeniusDecomposition frobenius_decompose(const WeilPolynomial& P);

// P+(x) = prod (x - (alpha + q/alpha)) over conjugate pairs, with each real
// root r contributing x - 2r (roots doubled). Exact.
IntPolynomial trace_polynomial(const WeilPolynomial& h);
IntPolynomial trace_polynomial(const IntPolynomial& h, const mpz_class& q);

// Number of distinct real roots of f in the closed interval [-c*sqrt(q), c*sqrt(q)].
int sturm_count_symmetric(const IntPolynomial& f, long c, const mpz_class& q);

struct LocalFactorData {
  int degree = 0;
  mpq_class slope;  // normalized so that v(q) = 1
};

int honda_tate_e(const WeilPolynomial& h, const std::vector<LocalFactorData>& local_factors);

// Root multiset with real roots counted twice.
struct RootMultiset {
  int d = 0;                    // half the slot count
  int complex_roots = 0;        // occupies the first slots
  std::vector<bool> real_flags;  // per slot
};
RootMultiset root_multiset(const IntPolynomial& squarefree, const mpz_class& q);

}  // namespace avinv
