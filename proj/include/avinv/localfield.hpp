#pragma once

// Degrees and slopes of Q_p-irreducible factors, and per-root valuations.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "avinv/poly.hpp"
#include "avinv/splitting.hpp"
#include "avinv/w2d.hpp"
#include "avinv/weil.hpp"

namespace avinv {

struct PadicFactor {
  int degree = 0;
  mpq_class slope;  // v_p of a root
  int e = 1;        // ramification index
  int f = 1;        // residual degree
  // false: a block of total `degree` whose irreducible parts have degrees
  // divisible by `unit` (deeper splitting was not resolved)
  bool resolved = true;
  int unit = 0;
};

struct PadicFactorization {
  std::uint64_t p = 0;
  int depth = 0;  // deepest refinement used
  std::vector<PadicFactor> factors;  // ordered by (slope, degree, f)
};

PadicFactorization factor_over_Qp(const IntPolynomial& f, std::uint64_t p, int max_depth = 12);

// (degree, slope normalized by n) per factor, for the Honda-Tate exponent.
// Throws WildRamificationUnresolved if an unresolved block could change it.
std::vector<LocalFactorData> local_factor_data(const PadicFactorization& fac, unsigned n);

int honda_tate_e(const WeilPolynomial& h);

struct ValuationAssignment {
  Weighting v;                  // by encoded symbol
  std::vector<long> exponents;  // k_j of the test element prod alpha_j^k_j
  IntPolynomial charpoly;       // its characteristic polynomial over G
  int orbit_size = 0;           // size of the G-orbit of v
};

// The valuation function of the roots under a fixed embedding into Q_p-bar,
// determined up to the action of G and returned as the canonical member of
// its G-orbit.
ValuationAssignment root_valuations(const GaloisCertificate& cert);

}  // namespace avinv
