#include "avinv/newton.hpp"

#include <map>

#include "avinv/errors.hpp"

namespace avinv {

unsigned long vp(const mpz_class& x, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class t = x;
  return mpz_remove(t.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

NewtonPolygon newton_polygon(const IntPolynomial& f, std::uint64_t p, unsigned n) {
  const int deg = f.degree();
  std::vector<std::pair<int, mpq_class>> pts;
  for (int j = 0; j <= deg; ++j) {
    const mpz_class& a = f.coeff(deg - j);
    if (a == 0) continue;
    pts.emplace_back(j, mpq_class(static_cast<unsigned long>(vp(a, p)), n));
    pts.back().second.canonicalize();
  }
  // monotone chain, lower hull; points already sorted by x
  std::vector<std::pair<int, mpq_class>> hull;
  auto cross = [](const auto& o, const auto& a, const auto& b) -> mpq_class {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonPolygon np{hull, {}, p, n};
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const int w = hull[i].first - hull[i - 1].first;
    mpq_class s = (hull[i].second - hull[i - 1].second) / w;
    for (int k = 0; k < w; ++k) np.slopes.push_back(s);
  }
  return np;
}

NewtonPolygon newton_polygon(const WeilPolynomial& P) { return newton_polygon(P.poly, P.p, P.n); }

NPType np_classify(const NewtonPolygon& np, int dimension) {
  if (static_cast<int>(np.slopes.size()) != 2 * dimension)
    throw Error(ErrorCode::UnrecognizedSlopeMultiset,
                "slope count " + std::to_string(np.slopes.size()) + " does not match dimension " + std::to_string(dimension));
  NPType t{dimension, ""};
  if (dimension >= 4) return t;
  std::map<mpq_class, int> m;
  for (const auto& s : np.slopes) ++m[s];
  auto is = [&](std::initializer_list<std::pair<mpq_class, int>> want) {
    if (m.size() != want.size()) return false;
    for (const auto& [s, c] : want) {
      auto it = m.find(s);
      if (it == m.end() || it->second != c) return false;
    }
    return true;
  };
  const mpq_class z(0), h(1, 2), o(1), t1(1, 3), t2(2, 3);
  if (dimension == 1) {
    if (is({{z, 1}, {o, 1}})) t.tag = "ordinary";
    else if (is({{h, 2}})) t.tag = "supersingular";
  } else if (dimension == 2) {
    if (is({{z, 2}, {o, 2}})) t.tag = "A";
    else if (is({{z, 1}, {h, 2}, {o, 1}})) t.tag = "B";
    else if (is({{h, 4}})) t.tag = "C";
  } else if (dimension == 3) {
    if (is({{z, 3}, {o, 3}})) t.tag = "A";
    else if (is({{z, 2}, {h, 2}, {o, 2}})) t.tag = "B";
    else if (is({{z, 1}, {h, 4}, {o, 1}})) t.tag = "C";
    else if (is({{t1, 3}, {t2, 3}})) t.tag = "D";
    else if (is({{h, 6}})) t.tag = "E";
  }
  if (t.tag.empty()) throw Error(ErrorCode::UnrecognizedSlopeMultiset, slopes_string(np.slopes));
  return t;
}

std::string slopes_string(const std::vector<mpq_class>& slopes) {
  std::string s = "{";
  for (std::size_t i = 0; i < slopes.size(); ++i) s += (i ? "," : "") + slopes[i].get_str();
  return s + "}";
}

}  // namespace avinv
