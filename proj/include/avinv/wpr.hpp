#pragma once

// Weighted permutation representations: assembly, angle rank, divisor matrix
// and the divisor-map constraints.

#include <string>
#include <vector>

#include "avinv/localfield.hpp"
#include "avinv/splitting.hpp"
#include "avinv/w2d.hpp"

namespace avinv {

struct WeightedPermRep {
  int d = 0;
  Weighting w;
  SignedSubgroup group;
  int prime_orbit = 0;  // size of the G-orbit of the valuation function, 0 if unknown
};

// Checks w(j) + w(jbar) = 1, relabels so that w climbs, canonicalizes under Stab(w).
WeightedPermRep make_rep(const Weighting& w, const SignedSubgroup& h);
WeightedPermRep assemble(const GaloisCertificate& cert, const ValuationAssignment& vals);

// Weighting with the lower half of the slopes on 1..d, in increasing order.
Weighting standard_weighting(std::vector<mpq_class> slopes);
bool is_constant_half(const Weighting& w);

int rational_rank(std::vector<std::vector<mpq_class>> m);

struct AngleRankDetail {
  int columns = 0;     // rank of the |G| x 2d matrix w(sigma(j)), minus one
  int hyperplane = 0;  // rank of the matrix w(sigma(i)) - w(sigma(ibar)), i <= d
  int d_columns = 0;   // the d-column variant, minus one
  bool agree() const { return columns == hyperplane; }
};

AngleRankDetail angle_rank_detail(const Weighting& w, const SignedSubgroup& h);
// Throws InternalRankMismatch when the group contains iota and the two formulas differ.
int angle_rank(const Weighting& w, const SignedSubgroup& h);
int angle_rank(const WeightedPermRep& rep);

// Rows indexed by group elements, entry w(sigma^{-1}(j)).
std::vector<std::vector<mpq_class>> divisor_matrix(const WeightedPermRep& rep);

struct DivisorReport {
  bool pairing = true;
  bool transitive_symbols = true;
  bool transitive_primes = true;
  bool ramification_divides = true;  // lcm of slope denominators divides |Stab_G(w)|
  int ramification = 1;
  int stabilizer_order = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

DivisorReport check_divisor_properties(const WeightedPermRep& rep, const PadicFactorization& local);

enum class Realizability { Realizable, Excluded, Unknown };

struct ScreenResult {
  Realizability verdict = Realizability::Unknown;
  std::string reason;
};

ScreenResult realizability_screen(const Weighting& w, const SignedSubgroup& h);

std::string to_string(Realizability r);

}  // namespace avinv
