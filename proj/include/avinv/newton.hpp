#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "avinv/weil.hpp"

namespace avinv {

// Exponent of p in x (x != 0).
unsigned long vp(const mpz_class& x, std::uint64_t p);

struct NewtonPolygon {
  std::vector<std::pair<int, mpq_class>> vertices;
  std::vector<mpq_class> slopes;  // nondecreasing
  std::uint64_t p = 0;
  unsigned n = 0;
};

// Hull of the points (j, v_p(a_j)/n) where P = sum a_{2g-j} T^j.
NewtonPolygon newton_polygon(const WeilPolynomial& P);
NewtonPolygon newton_polygon(const IntPolynomial& f, std::uint64_t p, unsigned n);

struct NPType {
  int dimension = 0;
  std::string tag;  // "ordinary"/"supersingular" in dim 1, "A".."E" otherwise; empty in dim >= 4
};

NPType np_classify(const NewtonPolygon& np, int dimension);

std::string slopes_string(const std::vector<mpq_class>& slopes);

}  // namespace avinv
