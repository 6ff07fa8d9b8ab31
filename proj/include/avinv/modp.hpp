#pragma once

// Polynomial arithmetic and factorization over the prime field F_p (p < 2^62).

#include <cstdint>
#include <utility>
#include <vector>

#include "avinv/poly.hpp"

namespace avinv::modp {

using Coeffs = std::vector<std::uint64_t>;  // constant term first, trimmed

struct Field {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

void trim(Coeffs& f);
Coeffs reduce(const IntPolynomial& f, std::uint64_t p);
IntPolynomial lift(const Coeffs& f);  // representatives in [0, p)

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b);
std::pair<Coeffs, Coeffs> divmod(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs monic(const Field& F, const Coeffs& a);
Coeffs gcd(const Field& F, Coeffs a, Coeffs b);
Coeffs derivative(const Field& F, const Coeffs& a);
Coeffs powmod(const Field& F, Coeffs base, const mpz_class& e, const Coeffs& m);
// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct Bezout {
  Coeffs g, s, t;
};
Bezout xgcd(const Field& F, const Coeffs& a, const Coeffs& b);

bool is_squarefree(const Field& F, const Coeffs& f);

// Complete factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficients). The leading coefficient is dropped.
std::vector<std::pair<Coeffs, int>> factor(const Field& F, const Coeffs& f);

// Factor degrees of a squarefree polynomial via distinct-degree factorization.
std::vector<int> factor_degrees(const Field& F, const Coeffs& f);

bool is_prime(std::uint64_t n);

}  // namespace avinv::modp
