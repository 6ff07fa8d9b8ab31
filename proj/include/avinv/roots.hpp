#pragma once

// Multiprecision complex roots of squarefree integer polynomials with
// inclusion disks.

#include <vector>

#include "avinv/mpnum.hpp"
#include "avinv/poly.hpp"

namespace avinv {

struct CertifiedRoot {
  mp::Complex z;
  mp::Real radius;  // a root of f lies within this distance of z
};

// Aberth-Ehrlich iteration followed by Newton refinement to `prec` bits.
// Disks are pairwise disjoint, so each contains exactly one root.
// Throws PrecisionExhausted if separation cannot be certified.
std::vector<CertifiedRoot> certified_roots(const IntPolynomial& f, mp::Bits prec);

// Horner evaluation of f and f' at z.
void eval_with_derivative(const IntPolynomial& f, const mp::Complex& z, mp::Complex& value, mp::Complex& deriv);

}  // namespace avinv
