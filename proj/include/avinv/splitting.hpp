#pragma once

// Galois groups of squarefree Weil polynomials as subgroups of W_2d, with
// exact interpolation certificates.

#include <cstdint>
#include <vector>

#include "avinv/mpnum.hpp"
#include "avinv/poly.hpp"
#include "avinv/roots.hpp"
#include "avinv/w2d.hpp"
#include "avinv/weil.hpp"

namespace avinv {

// Roots of a totally complex squarefree h indexed by encoded symbol: symbols
// 0..d-1 are the roots in the upper half plane, symbol d+i is the conjugate of i.
struct ComplexRootSet {
  IntPolynomial h;
  mpz_class q;
  std::uint64_t p = 0;
  unsigned n = 0;
  int d = 0;
  std::vector<CertifiedRoot> roots;
  mp::Bits precision = 0;
};

ComplexRootSet complex_roots(const WeilPolynomial& h, mp::Bits precision);

struct GaloisCertificate {
  int d = 0;
  IntPolynomial h;
  mpz_class q;
  std::uint64_t p = 0;
  unsigned n = 0;
  bool real_case = false;
  std::vector<long> theta_weights;
  IntPolynomial m_theta;                 // degree |G| (constant 1 in the real case)
  SignedSubgroup group;
  // alpha_j = N_j(theta) / m_theta'(theta); N_j has integer coefficients
  std::vector<IntPolynomial> interpolant_numerators;
  std::vector<mp::Complex> roots;           // numerical alpha_j
  int rejected_candidates = 0;              // proper candidates shown non-integral
  std::vector<std::uint64_t> frobenius_primes;
};

struct GaloisOptions {
  std::uint64_t seed = 0;  // auxiliary Frobenius primes
  int frobenius_checks = 5;
  long precision_bits = 128;  // starting root precision
};

GaloisCertificate galois_group(const ComplexRootSet& rs, const GaloisOptions& opt = {});
GaloisCertificate galois_group(const WeilPolynomial& h, const GaloisOptions& opt = {});

// Totally real h: trivial group (q square) or <(1 2)(b1 b2)> (h = T^2 - q).
GaloisCertificate real_case_group(const WeilPolynomial& h);

// A weighted block of a mixed representation.
struct RepBlock {
  SignedSubgroup group;
  Weighting w;
  mpz_class q = 0;  // 0 when unspecified
};

// Direct sum of blocks, re-sorted so that weights climb.
RepBlock direct_sum(const std::vector<RepBlock>& blocks);

// The sorted cycle-length multiset of h mod l, for l not dividing disc(h).
std::vector<int> frobenius_cycle_type(const IntPolynomial& h, std::uint64_t l);

}  // namespace avinv
