#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "avinv/poly.hpp"

namespace avinv {

struct IntFactor {
  IntPolynomial poly;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

// Factorization over Z by Zassenhaus (mod-p factorization, Hensel lifting,
// recombination). The product of poly^multiplicity equals the input up to content.
// Factors are sorted by canonical_less.
std::vector<IntFactor> factor_over_Z(const IntPolynomial& f);

bool is_irreducible(const IntPolynomial& f);

// Hensel-lifts a factorization f = prod(factors) mod p of a monic f, where the
// monic factors are pairwise coprime mod p, to a factorization mod p^k.
std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f, const std::vector<IntPolynomial>& factors,
                                       std::uint64_t p, unsigned k);

// Symmetric residue of every coefficient modulo m.
IntPolynomial mods(const IntPolynomial& f, const mpz_class& m);

}  // namespace avinv
