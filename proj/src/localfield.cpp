#include "avinv/localfield.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "avinv/errors.hpp"
#include "avinv/factor.hpp"
#include "avinv/modp.hpp"
#include "avinv/newton.hpp"

namespace avinv {

namespace {

long vq(const mpq_class& x, std::uint64_t p) {
  return static_cast<long>(vp(x.get_num(), p)) - static_cast<long>(vp(x.get_den(), p));
}

mpq_class ppow(std::uint64_t p, long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? mpq_class(z) : mpq_class(1, z);
}

std::uint64_t reduce_unit(const mpq_class& u, std::uint64_t p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = u.get_num() % pz, den = u.get_den() % pz;
  if (num < 0) num += pz;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  return mpz_class(num * inv % pz).get_ui();
}

struct Splitter {
  std::uint64_t p;
  int max_depth;
  int depth_used = 0;
  std::vector<PadicFactor> out;

  // Factors the roots of g whose valuation exceeds `lower` (all roots when
  // `bounded` is false); `top` is the valuation reported for them.
  void run(const RatPolynomial& g, bool bounded, const mpq_class* top, int depth) {
    depth_used = std::max(depth_used, depth);
    std::vector<std::pair<int, long>> pts;
    for (int i = 0; i <= g.degree(); ++i)
      if (g.coeff(i) != 0) pts.emplace_back(i, vq(g.coeff(i), p));
    std::vector<std::pair<int, long>> hull;
    for (const auto& pt : pts) {
      while (hull.size() >= 2) {
        const auto& o = hull[hull.size() - 2];
        const auto& a = hull.back();
        long cr = (a.first - o.first) * (pt.second - o.second) - (a.second - o.second) * (pt.first - o.first);
        if (cr > 0) break;
        hull.pop_back();
      }
      hull.push_back(pt);
    }
    for (std::size_t s = 1; s < hull.size(); ++s) {
      const auto [i0, v0] = hull[s - 1];
      const auto [i1, v1] = hull[s];
      mpq_class mu(v0 - v1, i1 - i0);
      mu.canonicalize();
      if (bounded && mu <= 0) continue;
      const long c = mu.get_num().get_si();
      const int e = static_cast<int>(mu.get_den().get_si());
      const int t = (i1 - i0) / e;
      modp::Coeffs R(t + 1, 0);
      for (int k = 0; k <= t; ++k) {
        const mpq_class& a = g.coeff(i0 + k * e);
        if (a == 0 || vq(a, p) != v0 - c * k) continue;
        R[k] = reduce_unit(a / ppow(p, v0 - c * k), p);
      }
      modp::Field F{p};
      modp::trim(R);
      const mpq_class slope = top ? *top : mu;
      for (const auto& [psi, m] : modp::factor(F, R)) {
        const int fdeg = static_cast<int>(psi.size()) - 1;
        if (m == 1) {
          out.push_back({e * fdeg, slope, e, fdeg, true, e * fdeg});
        } else if (e == 1 && fdeg == 1 && depth < max_depth) {
          // shift to the cluster of roots reducing to r
          const std::uint64_t r = (p - psi[0]) % p;
          const mpq_class scale = ppow(p, c);
          RatPolynomial lin(std::vector<mpq_class>{scale * static_cast<unsigned long>(r), scale});
          const std::size_t before = out.size();
          run(g.compose(lin), true, &slope, depth + 1);
          int got = 0;
          for (std::size_t i = before; i < out.size(); ++i) got += out[i].degree;
          if (got != m) throw Error(ErrorCode::WildRamificationUnresolved, "cluster degree mismatch");
        } else {
          out.push_back({e * fdeg * m, slope, e, fdeg, false, e * fdeg});
        }
      }
    }
  }
};

}  // namespace

PadicFactorization factor_over_Qp(const IntPolynomial& f, std::uint64_t p, int max_depth) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "factor_over_Qp of a constant");
  Splitter sp{p, max_depth, 0, {}};
  sp.run(to_rational(f), false, nullptr, 0);
  std::sort(sp.out.begin(), sp.out.end(), [](const PadicFactor& a, const PadicFactor& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.f < b.f;
  });
  return PadicFactorization{p, sp.depth_used, sp.out};
}

std::vector<LocalFactorData> local_factor_data(const PadicFactorization& fac, unsigned n) {
  std::vector<LocalFactorData> out;
  for (const auto& g : fac.factors) {
    mpq_class s = g.slope / n;
    if (g.resolved) {
      out.push_back({g.degree, s});
      continue;
    }
    if (mpq_class(s * g.unit).get_den() != 1)
      throw Error(ErrorCode::WildRamificationUnresolved,
                  "block of degree " + std::to_string(g.degree) + " with slope " + s.get_str() + " not split");
    for (int k = 0; k < g.degree / g.unit; ++k) out.push_back({g.unit, s});
  }
  return out;
}

int honda_tate_e(const WeilPolynomial& h) {
  return honda_tate_e(h, local_factor_data(factor_over_Qp(h.poly, h.p), h.n));
}

}  // namespace avinv

namespace avinv {

namespace {

mp::Complex newton_refine(const IntPolynomial& h, const mp::Complex& z0, mp::Bits bits) {
  if (z0.prec() >= bits) return z0;
  mp::Complex z(bits);
  z.re += z0.re;
  z.im += z0.im;
  for (int it = 0; it < 200; ++it) {
    mp::Complex v(bits), dv(bits);
    eval_with_derivative(h, z, v, dv);
    mp::Complex step = v / dv;
    z -= step;
    if (step.abs().exponent() < z.abs().exponent() - bits + 8) break;
  }
  return z;
}

}  // namespace

ValuationAssignment root_valuations(const GaloisCertificate& cert) {
  const int d = cert.d;
  ValuationAssignment va;
  if (cert.real_case) {
    va.v.assign(2 * d, mpq_class(1, 2));
    va.orbit_size = 1;
    va.charpoly = IntPolynomial::constant(1);
    return va;
  }
  const std::uint64_t p = cert.p;
  const unsigned n = cert.n;
  // factor blocks of symbols with their slope multisets
  auto factors = factor_over_Z(cert.h);
  std::vector<int> block(2 * d);
  for (int j = 0; j < 2 * d; ++j) {
    int best = 0;
    double bestv = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      mp::Complex v(cert.roots[j].prec()), dv(cert.roots[j].prec());
      eval_with_derivative(factors[k].poly, cert.roots[j], v, dv);
      double a = v.abs().to_double();
      if (k == 0 || a < bestv) best = static_cast<int>(k), bestv = a;
    }
    block[j] = best;
  }
  std::vector<std::vector<mpq_class>> fslopes;
  long L = 1;
  for (const auto& f : factors) {
    fslopes.push_back(newton_polygon(f.poly, p, n).slopes);
    for (const auto& s : fslopes.back()) L = std::lcm(L, s.get_den().get_si());
  }
  const auto G = cert.group.elements();

  va.exponents.assign(2 * d, 0);
  long kj = 1, ksum = 0;
  for (int j = 0; j < d; ++j, kj *= (L + 1)) va.exponents[j] = kj, ksum += kj;

  std::vector<mpq_class> target;
  mp::Bits bits = static_cast<mp::Bits>(G.size() * (ksum * 0.5 * std::log2(cert.q.get_d()) + 2)) + 96;
  for (int attempt = 0;; ++attempt, bits *= 2) {
    if (attempt == 3) throw Error(ErrorCode::PrecisionExhausted, "characteristic polynomial of the test element");
    std::vector<mp::Complex> roots;
    for (const auto& z : cert.roots) roots.push_back(newton_refine(cert.h, z, bits));
    std::vector<mp::Complex> xs;
    for (const auto& s : G) {
      mp::Complex x(1L, bits);
      for (int j = 0; j < d; ++j) x *= mp::pow(roots[s(j)], static_cast<unsigned>(va.exponents[j]));
      xs.push_back(x);
    }
    std::vector<mp::Complex> c{mp::Complex(1L, bits)};
    for (const auto& x : xs) {
      std::vector<mp::Complex> next(c.size() + 1, mp::Complex(bits));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= c[i] * x;
      }
      c = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    bool integral = true;
    for (const auto& z : c) {
      mpz_class r = z.re.round_to_integer();
      if (mp::abs(z.re - mp::Real(r, bits)).exponent() > -32 || z.im.exponent() > -32) integral = false;
      coeffs.push_back(r);
    }
    if (!integral) continue;
    va.charpoly = IntPolynomial(coeffs);
    target = newton_polygon(va.charpoly, p, n).slopes;
    break;
  }

  // candidate valuation functions consistent with each factor's slopes
  std::vector<Weighting> matches;
  Weighting w(2 * d);
  auto value_multiset = [&](const Weighting& ww) {
    std::vector<mpq_class> vals;
    for (const auto& s : G) {
      mpq_class acc = 0;
      for (int j = 0; j < d; ++j) acc += ww[s(j)] * va.exponents[j];
      vals.push_back(acc);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
  };
  std::function<void(int)> rec = [&](int j) {
    if (j == d) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        std::vector<mpq_class> got;
        for (int x = 0; x < 2 * d; ++x)
          if (block[x] == static_cast<int>(k)) got.push_back(w[x]);
        std::sort(got.begin(), got.end());
        if (got != fslopes[k]) return;
      }
      if (value_multiset(w) == target) matches.push_back(w);
      return;
    }
    std::set<mpq_class> opts(fslopes[block[j]].begin(), fslopes[block[j]].end());
    for (const auto& s : opts) {
      w[j] = s;
      w[j + d] = 1 - s;
      rec(j + 1);
    }
  };
  rec(0);
  if (matches.empty()) throw Error(ErrorCode::PairingAmbiguous, "no valuation function matches the test element");
  std::set<Weighting> orbit;
  for (const auto& s : G) {
    Weighting ws(2 * d);
    for (int j = 0; j < 2 * d; ++j) ws[j] = matches[0][s(j)];
    orbit.insert(ws);
  }
  std::set<Weighting> mset(matches.begin(), matches.end());
  if (mset != orbit) throw Error(ErrorCode::PairingAmbiguous, "valuation candidates span several orbits");
  va.v = *orbit.begin();
  va.orbit_size = static_cast<int>(orbit.size());
  return va;
}

}  // namespace avinv
