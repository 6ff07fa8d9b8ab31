#include <doctest.h>

#include "avinv/errors.hpp"
#include "avinv/wpr.hpp"

using namespace avinv;

namespace {
IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }
const mpq_class H(1, 2), T1(1, 3), T2(2, 3);
const IntPolynomial kEC = P({19, 8, 1});
const IntPolynomial kSextic = P({6859, 0, 171, -64, 9, 0, 1});

SignedSubgroup L(int d, const std::string& label) {
  auto h = subgroup_from_label(d, label);
  REQUIRE(h.has_value());
  return *h;
}

std::vector<Weighting> np_weightings(int d) {
  if (d == 1) return {{0, 1}, {H, H}};
  if (d == 2) return {{0, 0, 1, 1}, {0, H, 1, H}, {H, H, H, H}};
  return {{0, 0, 0, 1, 1, 1}, {0, 0, H, 1, 1, H}, {0, H, H, 1, H, H}, {T1, T1, T1, T2, T2, T2}, {H, H, H, H, H, H}};
}
}  // namespace

TEST_CASE("angle ranks of basic representations") {
  CHECK(angle_rank(make_rep({0, 1}, SignedSubgroup::full(1))) == 1);
  CHECK(angle_rank(make_rep({H, H}, SignedSubgroup::full(1))) == 0);
  CHECK(angle_rank(make_rep({0, H, 1, H}, SignedSubgroup::full(2))) == 2);
  CHECK(angle_rank(make_rep({H, H, H, H, H, H}, SignedSubgroup::full(3))) == 0);
  CHECK_THROWS_AS(make_rep({0, 0}, SignedSubgroup::full(1)), Error);
}

TEST_CASE("make_rep climbs") {
  auto rep = make_rep({1, H, 0, H}, SignedSubgroup::full(2));
  CHECK(rep.w == Weighting{0, H, 1, H});
}

TEST_CASE("Shioda fourfold representation") {
  auto cert = galois_group(validate_weil(kEC * kSextic, 19, 1));
  auto rep = assemble(cert, root_valuations(cert));
  CHECK(rep.w == Weighting{0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(rep.group.order() == 6);
  auto cited = SignedSubgroup::generated(4, {SignedPerm::parse(4, "(1 b2 b4 b1 2 4)(3 b3)")});
  CHECK(w_conjugate(rep.group, cited, rep.w).has_value());
  CHECK(angle_rank(rep) == 3);
  auto dm = divisor_matrix(rep);
  for (const auto& row : dm) {
    mpq_class s = 0;
    for (const auto& x : row) s += x;
    CHECK(s == 4);
  }
}

TEST_CASE("dual formulas on the atlas") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& h : enumerate_subgroups(d)) {
      for (const auto& w : np_weightings(d)) {
        auto det = angle_rank_detail(w, h);
        if (h.contains_iota()) CHECK(det.agree());
        CHECK(det.columns <= d);
        CHECK(det.columns >= 0);
        if (h == SignedSubgroup::full(d) && !is_constant_half(w)) CHECK(det.columns == d);
        if (is_constant_half(w)) CHECK(det.columns == 0);
      }
    }
  }
}

TEST_CASE("angle rank is invariant under w-conjugation") {
  for (const auto& h : enumerate_subgroups(3)) {
    if (!h.contains_iota()) continue;
    for (const auto& w : np_weightings(3)) {
      const int base = angle_rank(w, h);
      for (const auto& s : w_stabilizer(w).elements()) CHECK(angle_rank(w, h.conjugate_by(s)) == base);
    }
  }
}

TEST_CASE("realizability screen") {
  const Weighting ao3{0, 0, H, 1, 1, H};
  auto r = realizability_screen(ao3, L(3, "C6.6.t.a.2"));
  CHECK(r.verdict == Realizability::Excluded);
  CHECK(realizability_screen({0, 0, 1, 1}, SignedSubgroup::full(2)).verdict == Realizability::Realizable);
  CHECK(realizability_screen({H, H, H, H}, L(2, "C4.4.t.a.1")).verdict == Realizability::Unknown);
  CHECK(realizability_screen({0, H, 1, H}, L(2, "V4.4.t.a.1")).verdict == Realizability::Excluded);
  CHECK(realizability_screen({0, H, 1, H}, L(2, "C4.4.t.a.1")).verdict == Realizability::Excluded);
}

TEST_CASE("divisor properties of computed representations") {
  for (auto [f, p] : std::vector<std::pair<IntPolynomial, std::uint64_t>>{
           {kEC, 19}, {P({4, -4, 3, -2, 1}), 2}, {P({4, -2, 0, -1, 1}), 2}, {kSextic, 19}}) {
    auto W = validate_weil(f, p, 1);
    auto cert = galois_group(W);
    auto rep = assemble(cert, root_valuations(cert));
    auto rpt = check_divisor_properties(rep, factor_over_Qp(f, p));
    CHECK(rpt.ok());
  }
}
