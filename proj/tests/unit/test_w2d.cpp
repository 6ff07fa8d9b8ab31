#include "doctest.h"

#include <algorithm>
#include <set>

#include "avinv/errors.hpp"
#include "avinv/w2d.hpp"

using namespace avinv;

namespace {
SignedSubgroup gen(int d, std::initializer_list<const char*> gs) {
  std::vector<SignedPerm> v;
  for (auto g : gs) v.push_back(SignedPerm::parse(d, g));
  return SignedSubgroup::generated(d, v);
}
Weighting wt(std::initializer_list<const char*> xs) {
  Weighting w;
  for (auto x : xs) w.emplace_back(x);
  return w;
}
}  // namespace

TEST_CASE("signed permutation basics") {
  auto s = SignedPerm::parse(3, "(1 b2 3 b1 2 b3)");
  CHECK(s.order() == 6);
  CHECK(s.to_string() == "(1 b2 3 b1 2 b3)");
  CHECK((s * s.inverse()).is_identity());
  CHECK(SignedPerm::iota(2).to_string() == "(1 b1)(2 b2)");
  CHECK_THROWS_AS(SignedPerm::parse(2, "(1 2)"), Error);
  auto sh = SignedPerm::parse(4, "(1 b2 b4 b1 2 4)(3 b3)");
  CHECK(sh.to_string() == "(1 b2 b4 b1 2 4)(3 b3)");
}

TEST_CASE("group orders") {
  CHECK(W2dContext::get(1).order() == 2);
  CHECK(W2dContext::get(2).order() == 8);
  CHECK(W2dContext::get(3).order() == 48);
  CHECK(W2dContext::get(4).order() == 384);
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(enumerate_subgroups(1).size() == 2);
  const auto& s2 = enumerate_subgroups(2);
  CHECK(s2.size() == 10);
  CHECK(std::count_if(s2.begin(), s2.end(), [](auto& h) { return h.is_transitive(); }) == 3);
  const auto& s3 = enumerate_subgroups(3);
  std::vector<SignedSubgroup> ti;
  for (auto& h : s3)
    if (h.is_transitive() && h.contains_iota()) ti.push_back(h);
  CHECK(ti.size() == 10);
  std::vector<SignedSubgroup> reps;
  for (auto& h : ti) {
    bool found = false;
    for (auto& r : reps) found = found || w2d_conjugate(r, h);
    if (!found) reps.push_back(h);
  }
  CHECK(reps.size() == 4);
}

TEST_CASE("labels reproduce the atlas") {
  CHECK(label_of(gen(2, {"(1 2 b1 b2)"})).str() == "C4.4.t.a.1");
  CHECK(label_of(gen(3, {"(1 2 3 b1 b2 b3)"})).str() == "C6.6.t.a.2");
  CHECK(label_of(gen(2, {"(1 b1)(2 b2)"})).str() == "C2.4.nt.a.1");
  CHECK(label_of(gen(3, {"(1 2 b3 b1 b2 3)", "(2 3)(b2 b3)"})).str() == "D6.6.t.a.2");
  CHECK(label_of(gen(2, {"(1 b1)(2 b2)", "(1 2)(b1 b2)"})).str() == "V4.4.t.a.1");
  CHECK(label_of(SignedSubgroup::full(1)).str() == "W2.2.t.a.1");
  for (const auto& row : calibration_table()) {
    auto h = subgroup_from_label(row.d, row.label);
    REQUIRE(h.has_value());
  }
  std::set<std::string> all;
  for (int d = 1; d <= 3; ++d)
    for (auto& [h, l] : subgroup_labels(d)) CHECK(all.insert(l.str()).second);
}

TEST_CASE("weight stabilizers") {
  CHECK(w_stabilizer(wt({"1/2", "1/2", "1/2", "1/2"})).order() == 8);
  auto ord = w_stabilizer(wt({"0", "0", "1", "1"}));
  CHECK(ord.order() == 2);  // e and (1 2)(b1 b2)
  for (auto& g : ord.elements()) CHECK(g(0) < 2);
  auto ao = w_stabilizer(wt({"0", "1/2", "1", "1/2"}));
  CHECK(ao.order() == 2);
  CHECK(ao.contains(SignedPerm::parse(2, "(2 b2)")));
}

TEST_CASE("w-conjugacy in W4") {
  Weighting ordw = wt({"0", "0", "1", "1"});
  Weighting ssw = wt({"1/2", "1/2", "1/2", "1/2"});
  auto b1 = gen(2, {"(1 b1)"}), b2 = gen(2, {"(2 b2)"});
  auto c1 = gen(2, {"(1 2)(b1 b2)"}), c2 = gen(2, {"(1 b2)(b1 2)"});
  CHECK(w_conjugate(b1, b2, ordw).has_value());
  CHECK_FALSE(w_conjugate(c1, c2, ordw).has_value());
  CHECK(w_conjugate(c1, c2, ssw).has_value());
  CHECK(canonicalize_rep(ordw, b1) == canonicalize_rep(ordw, b2));
  auto c4 = gen(2, {"(1 2 b1 b2)"});
  CHECK(canonicalize_rep(ordw, canonicalize_rep(ordw, c4)) == canonicalize_rep(ordw, c4));
}

TEST_CASE("conjugate subgroups share signatures") {
  for (int d = 2; d <= 3; ++d) {
    const auto& subs = enumerate_subgroups(d);
    for (std::size_t i = 0; i < subs.size(); i += 7)
      for (auto& g : SignedSubgroup::full(d).elements()) {
        auto c = subs[i].conjugate_by(g);
        CHECK(c.order() == subs[i].order());
        CHECK(c.is_transitive() == subs[i].is_transitive());
        CHECK(c.contains_iota() == subs[i].contains_iota());
      }
  }
}
