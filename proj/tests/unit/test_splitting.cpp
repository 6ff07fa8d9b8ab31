#include <doctest.h>

#include <cmath>

#include "avinv/errors.hpp"
#include "avinv/factor.hpp"
#include "avinv/splitting.hpp"

using namespace avinv;

namespace {
IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }
const IntPolynomial kEC = P({19, 8, 1});
const IntPolynomial kSextic = P({6859, 0, 171, -64, 9, 0, 1});
}  // namespace

TEST_CASE("complex roots of an ordinary elliptic curve") {
  auto rs = complex_roots(validate_weil(kEC, 19, 1), 128);
  REQUIRE(rs.d == 1);
  // quadratic formula: -4 +- i sqrt(3)
  CHECK(rs.roots[0].z.re.to_double() == doctest::Approx(-4.0));
  CHECK(rs.roots[0].z.im.to_double() == doctest::Approx(std::sqrt(3.0)));
  CHECK(rs.roots[1].z.im.to_double() == doctest::Approx(-std::sqrt(3.0)));
}

TEST_CASE("Galois groups of small examples") {
  auto g1 = galois_group(validate_weil(kEC, 19, 1));
  CHECK(g1.group == SignedSubgroup::full(1));
  auto g2 = galois_group(validate_weil(P({4, -4, 3, -2, 1}), 2, 1));
  CHECK(g2.group.order() == 8);
  CHECK(g2.group.is_transitive());
  auto g3 = galois_group(validate_weil(kSextic, 19, 1));
  CHECK(g3.group.is_transitive());
  CHECK(g3.m_theta.degree() == g3.group.order());
}

TEST_CASE("Shioda fourfold radical has a group of order 6") {
  auto g = galois_group(validate_weil(kEC * kSextic, 19, 1));
  CHECK(g.group.order() == 6);
  CHECK(g.group.contains_iota());
  CHECK_FALSE(g.group.is_transitive());
  CHECK(g.interpolant_numerators.size() == 8);
}

TEST_CASE("real case groups") {
  auto a = real_case_group(validate_weil(P({-2, 1}), 2, 2));
  CHECK(a.group == SignedSubgroup::trivial(1));
  auto b = real_case_group(validate_weil(P({-2, 0, 1}), 2, 1));
  CHECK(b.group == SignedSubgroup::generated(2, {SignedPerm::parse(2, "(1 2)(b1 b2)")}));
  auto c = real_case_group(validate_weil(P({-2, 1}) * P({2, 1}), 2, 2));
  CHECK(c.group == SignedSubgroup::trivial(2));
  CHECK_THROWS_AS(real_case_group(validate_weil(kEC, 19, 1)), Error);
}

TEST_CASE("direct sums") {
  const mpq_class h(1, 2);
  RepBlock ec{SignedSubgroup::full(1), {0, 1}, 4};
  auto same = direct_sum({ec});
  CHECK(same.group == ec.group);
  RepBlock real{SignedSubgroup::generated(2, {SignedPerm::parse(2, "(1 2)(b1 b2)")}), {h, h, h, h}, 4};
  auto mix = direct_sum({real, ec});
  REQUIRE(mix.group.d() == 3);
  CHECK(mix.w == Weighting{0, h, h, 1, h, h});
  CHECK(mix.group.order() == 4);
  CHECK(mix.group.contains(SignedPerm::parse(3, "(1 b1)")));
  CHECK(mix.group.contains(SignedPerm::parse(3, "(2 3)(b2 b3)")));
  RepBlock t{SignedSubgroup::trivial(1), {h, h}, 4};
  auto tt = direct_sum({t, t});
  CHECK(tt.group == SignedSubgroup::trivial(2));
  CHECK(tt.w == Weighting{h, h, h, h});
  RepBlock other{SignedSubgroup::trivial(1), {h, h}, 9};
  CHECK_THROWS_AS(direct_sum({t, other}), Error);
}

TEST_CASE("Galois certificates on irreducible Weil polynomials") {
  // ordinary and non-ordinary quartics and sextics
  const std::vector<std::tuple<IntPolynomial, std::uint64_t, unsigned>> cases{
      {P({4, -2, 0, -1, 1}), 2, 1}, {P({9, -9, 5, -3, 1}), 3, 1}, {P({8, -4, 0, -2, 1, 0, 0}) , 2, 1},
      {P({8, -8, 6, -5, 3, -2, 1}), 2, 1}, {P({64, 0, 0, -4, 0, 0, 1}), 4, 1}};
  for (const auto& [f, p, n] : cases) {
    if (f.degree() < 2 || !is_irreducible(f)) continue;
    WeilPolynomial w;
    try {
      w = validate_weil(f, p, n);
    } catch (const Error&) {
      continue;
    }
    auto g = galois_group(w);
    CHECK(g.group.is_transitive());
    CHECK(g.group.contains_iota());
    CHECK(W2dContext::get(g.d).order() % g.group.order() == 0);
  }
}
