#include <doctest.h>

#include <algorithm>

#include "avinv/localfield.hpp"
#include "avinv/modp.hpp"
#include "avinv/newton.hpp"

using namespace avinv;

namespace {
IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }
const IntPolynomial kEC = P({19, 8, 1});
const IntPolynomial kSextic = P({6859, 0, 171, -64, 9, 0, 1});

std::vector<mpq_class> sorted_values(const Weighting& w) {
  std::vector<mpq_class> v(w.begin(), w.end());
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("p-adic factor data") {
  auto a = factor_over_Qp(kEC, 19);
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].degree == 1);
  CHECK(a.factors[0].slope == 0);
  CHECK(a.factors[1].slope == 1);
  auto b = factor_over_Qp(P({-2, 0, 1}), 2);
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].degree == 2);
  CHECK(b.factors[0].slope == mpq_class(1, 2));
  CHECK(b.factors[0].e == 2);
  // T^2 + 4 over Q_2 needs one shift: Q_2(i) is ramified
  auto c = factor_over_Qp(P({4, 0, 1}), 2);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].degree == 2);
  CHECK(c.depth == 1);
}

TEST_CASE("p-adic factor degrees of the sextic match the mod-p oracle") {
  // ordinary and squarefree mod 19: unit-root factors are the Hensel lifts of the
  // factors of the reduction with nonzero roots
  auto fac = factor_over_Qp(kSextic, 19);
  int total = 0;
  std::vector<int> unit_degrees;
  for (const auto& f : fac.factors) {
    total += f.degree;
    if (f.slope == 0) unit_degrees.push_back(f.degree);
  }
  CHECK(total == 6);
  modp::Field F{19};
  auto red = modp::factor(F, modp::reduce(kSextic, 19));
  std::vector<int> oracle;
  for (const auto& [g, m] : red)
    if (!(g.size() == 2 && g[0] == 0)) oracle.push_back(static_cast<int>(g.size()) - 1);
  std::sort(oracle.begin(), oracle.end());
  std::sort(unit_degrees.begin(), unit_degrees.end());
  CHECK(unit_degrees == oracle);
}

TEST_CASE("Honda-Tate exponent from local data") {
  CHECK(honda_tate_e(validate_weil(P({-2, 0, 1}), 2, 1)) == 2);
  CHECK(honda_tate_e(validate_weil(P({-2, 1}), 2, 2)) == 2);
  CHECK(honda_tate_e(validate_weil(P({4, 0, 1}), 2, 2)) == 1);
  CHECK(honda_tate_e(validate_weil(P({4, -4, 3, -2, 1}), 2, 1)) == 1);
  CHECK(honda_tate_e(validate_weil(kEC, 19, 1)) == 1);
}

TEST_CASE("root valuations") {
  auto ec = root_valuations(galois_group(validate_weil(kEC, 19, 1)));
  CHECK(ec.v == Weighting{0, 1});
  auto sh = root_valuations(galois_group(validate_weil(kEC * kSextic, 19, 1)));
  CHECK(sorted_values(sh.v) == std::vector<mpq_class>{0, 0, 0, 0, 1, 1, 1, 1});
  for (int j = 0; j < 4; ++j) CHECK(sh.v[j] + sh.v[j + 4] == 1);
  // supersingular: T^2 + 2 over F_2
  auto ss = root_valuations(galois_group(validate_weil(P({2, 0, 1}), 2, 1)));
  CHECK(ss.v == Weighting{mpq_class(1, 2), mpq_class(1, 2)});
  // almost ordinary 2.2.ab_a
  auto ao = root_valuations(galois_group(validate_weil(P({4, -2, 0, -1, 1}), 2, 1)));
  CHECK(sorted_values(ao.v) == std::vector<mpq_class>{0, mpq_class(1, 2), mpq_class(1, 2), 1});
  CHECK(ao.orbit_size >= 1);
}
