#include "avinv/wpr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "avinv/errors.hpp"

namespace avinv {

WeightedPermRep make_rep(const Weighting& w, const SignedSubgroup& h) {
  const int d = h.d();
  if (static_cast<int>(w.size()) != 2 * d) throw Error(ErrorCode::IncompatibleContexts, "weighting size");
  for (int j = 0; j < d; ++j)
    if (w[j] + w[j + d] != 1)
      throw Error(ErrorCode::WeightPairingViolation, "w(" + symbol_name(d, j) + ") + w(" + symbol_name(d, j + d) + ") != 1");
  const SignedPerm rho = climbing_relabel(w);
  WeightedPermRep rep;
  rep.d = d;
  rep.w = relabel_weighting(w, rho);
  rep.group = canonicalize_rep(rep.w, relabel_group(h, rho));
  return rep;
}

WeightedPermRep assemble(const GaloisCertificate& cert, const ValuationAssignment& vals) {
  WeightedPermRep rep = make_rep(vals.v, cert.group);
  rep.prime_orbit = vals.orbit_size;
  return rep;
}

Weighting standard_weighting(std::vector<mpq_class> slopes) {
  std::sort(slopes.begin(), slopes.end());
  const int d = static_cast<int>(slopes.size()) / 2;
  Weighting w(2 * d);
  for (int i = 0; i < d; ++i) {
    w[i] = slopes[i];
    w[i + d] = 1 - slopes[i];
  }
  return w;
}

bool is_constant_half(const Weighting& w) {
  return std::all_of(w.begin(), w.end(), [](const mpq_class& x) { return x == mpq_class(1, 2); });
}

int rational_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

AngleRankDetail angle_rank_detail(const Weighting& w, const SignedSubgroup& h) {
  const int d = h.d();
  std::vector<std::vector<mpq_class>> V, N, A;
  for (const auto& s : h.elements()) {
    std::vector<mpq_class> v(2 * d), nrow(d), a(d);
    for (int j = 0; j < 2 * d; ++j) v[j] = w[s(j)];
    for (int i = 0; i < d; ++i) {
      nrow[i] = w[s(i)] - w[s(i + d)];
      a[i] = w[s(i)];
    }
    V.push_back(std::move(v));
    N.push_back(std::move(nrow));
    A.push_back(std::move(a));
  }
  return AngleRankDetail{rational_rank(V) - 1, rational_rank(N), rational_rank(A) - 1};
}

int angle_rank(const Weighting& w, const SignedSubgroup& h) {
  const auto det = angle_rank_detail(w, h);
  if (h.contains_iota() && !det.agree())
    throw Error(ErrorCode::InternalRankMismatch,
                "column rank gives " + std::to_string(det.columns) + ", hyperplane rank gives " + std::to_string(det.hyperplane));
  return det.columns;
}

int angle_rank(const WeightedPermRep& rep) { return angle_rank(rep.w, rep.group); }

std::vector<std::vector<mpq_class>> divisor_matrix(const WeightedPermRep& rep) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& s : rep.group.elements()) {
    const SignedPerm inv = s.inverse();
    std::vector<mpq_class> row(2 * rep.d);
    for (int j = 0; j < 2 * rep.d; ++j) row[j] = rep.w[inv(j)];
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

int stabilizer_order_in(const Weighting& w, const SignedSubgroup& h) {
  int count = 0;
  for (const auto& s : h.elements()) {
    bool fixes = true;
    for (std::size_t x = 0; x < w.size() && fixes; ++x) fixes = w[s(static_cast<int>(x))] == w[x];
    count += fixes;
  }
  return count;
}

std::string fmt(const mpq_class& x) { return x.get_str(); }

}  // namespace

DivisorReport check_divisor_properties(const WeightedPermRep& rep, const PadicFactorization& local) {
  DivisorReport r;
  const int d = rep.d;
  for (int j = 0; j < d; ++j)
    if (rep.w[j] + rep.w[j + d] != 1) r.pairing = false;
  if (!r.pairing) r.violations.push_back("valuations of paired roots do not sum to 1");
  r.transitive_symbols = rep.group.is_transitive();
  if (!r.transitive_symbols) r.violations.push_back("group is not transitive on roots");
  std::set<Weighting> orbit;
  for (const auto& s : rep.group.elements()) {
    Weighting ws(2 * d);
    for (int j = 0; j < 2 * d; ++j) ws[j] = rep.w[s(j)];
    orbit.insert(ws);
  }
  r.transitive_primes = rep.prime_orbit == 0 || rep.prime_orbit == static_cast<int>(orbit.size());
  if (!r.transitive_primes) r.violations.push_back("valuation functions do not form one orbit");
  long ram = 1;
  for (const auto& f : local.factors) ram = std::lcm(ram, f.slope.get_den().get_si());
  r.ramification = static_cast<int>(ram);
  r.stabilizer_order = stabilizer_order_in(rep.w, rep.group);
  r.ramification_divides = r.stabilizer_order % r.ramification == 0;
  if (!r.ramification_divides)
    r.violations.push_back("ramification " + std::to_string(ram) + " does not divide |Stab_G(w)| = " +
                           std::to_string(r.stabilizer_order));
  return r;
}

ScreenResult realizability_screen(const Weighting& w, const SignedSubgroup& h) {
  const int d = h.d();
  if (is_constant_half(w)) return {Realizability::Unknown, "constant weighting 1/2: angle rank 0 gives no obstruction"};
  if (h == SignedSubgroup::full(d)) {
    const int delta = angle_rank(w, h);
    if (delta != d)
      return {Realizability::Excluded, "full group with angle rank " + std::to_string(delta) + " < " + std::to_string(d)};
    return {Realizability::Realizable, "full group, maximal angle rank " + std::to_string(d)};
  }
  long r = 1;
  for (const auto& x : w) r = std::lcm(r, x.get_den().get_si());
  const int stab = stabilizer_order_in(w, h);
  if (stab % r == 0) return {Realizability::Unknown, "no divisor-map obstruction"};
  std::ostringstream why;
  why << "a decomposition group has order divisible by " << r << " but fixes w, and |Stab_H(w)| = " << stab;
  const auto gens = h.generators();
  if (gens.size() == 1 && gens[0].order() == 2 * d) {
    // valuations along the cycle through symbol 1
    why << "; sequence (";
    int x = 0;
    for (int k = 0; k < 2 * d; ++k, x = gens[0](x)) why << (k ? "," : "") << fmt(w[x]);
    why << ") has no period k with " << r << " | " << 2 * d << "/k";
  }
  return {Realizability::Excluded, why.str()};
}

std::string to_string(Realizability r) {
  switch (r) {
    case Realizability::Realizable: return "realizable";
    case Realizability::Excluded: return "excluded";
    default: return "unknown";
  }
}

}  // namespace avinv
