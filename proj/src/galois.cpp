#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "avinv/errors.hpp"
#include "avinv/factor.hpp"
#include "avinv/modp.hpp"
#include "avinv/splitting.hpp"

namespace avinv {

namespace {

using CPoly = std::vector<mp::Complex>;  // constant term first

const long kGuardBits = 32;

mp::Complex eval(const IntPolynomial& f, const mp::Complex& z) {
  mp::Complex acc(z.prec());
  for (int k = f.degree(); k >= 0; --k) {
    acc *= z;
    acc.re += mp::Real(f.coeff(k), z.prec());
  }
  return acc;
}

CPoly product_of_linears(const std::vector<mp::Complex>& zs, mp::Bits prec) {
  CPoly c{mp::Complex(1L, prec)};
  for (const auto& z : zs) {
    CPoly next(c.size() + 1, mp::Complex(prec));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * z;
    }
    c = std::move(next);
  }
  return c;
}

// Rounds every coefficient if all lie within 2^-kGuardBits of an integer.
std::optional<IntPolynomial> round_integral(const CPoly& c) {
  std::vector<mpz_class> out;
  for (const auto& z : c) {
    mpz_class r = z.re.round_to_integer();
    mp::Real dr = mp::abs(z.re - mp::Real(r, z.prec()));
    if (dr.exponent() > -kGuardBits || z.im.exponent() > -kGuardBits) return std::nullopt;
    out.push_back(r);
  }
  return IntPolynomial(out);
}

CPoly divide_linear(const IntPolynomial& m, const mp::Complex& z) {
  const int n = m.degree();
  CPoly q(n, mp::Complex(z.prec()));
  mp::Complex carry(z.prec());
  for (int k = n; k >= 1; --k) {
    carry *= z;
    carry.re += mp::Real(m.coeff(k), z.prec());
    q[k - 1] = carry;
  }
  return q;
}

std::vector<std::vector<int>> sorted_partition(std::vector<std::vector<int>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

namespace {

// Roots recomputed at a higher precision, matched to the existing indexing.
ComplexRootSet refine(const ComplexRootSet& rs, mp::Bits prec) {
  if (prec <= rs.precision) return rs;
  auto fresh = certified_roots(rs.h, prec);
  ComplexRootSet out = rs;
  out.precision = prec;
  for (int j = 0; j < 2 * rs.d; ++j) {
    int best = -1;
    for (int k = 0; k < static_cast<int>(fresh.size()); ++k) {
      mp::Real dist = (fresh[k].z - rs.roots[j].z).abs();
      if (dist <= rs.roots[j].radius + fresh[k].radius) {
        if (best >= 0) throw Error(ErrorCode::PairingAmbiguous, "refined roots do not match");
        best = k;
      }
    }
    if (best < 0) throw Error(ErrorCode::PairingAmbiguous, "refined root lost");
    out.roots[j] = fresh[best];
  }
  return out;
}

std::vector<long> theta_weights(int d, long t) {
  std::vector<long> c(2 * d);
  long tp = 1;
  for (int i = 0; i < d; ++i, tp *= t) c[i] = tp;
  const long td = tp;
  tp = 1;
  for (int i = 0; i < d; ++i, tp *= t) c[d + i] = tp + 3 * td;
  return c;
}

mp::Complex theta_of(const SignedPerm& s, const std::vector<long>& c, const std::vector<CertifiedRoot>& roots, mp::Bits prec) {
  mp::Complex acc(prec);
  for (std::size_t j = 0; j < c.size(); ++j) acc += roots[s(static_cast<int>(j))].z * mp::Real(c[j], prec);
  return acc;
}

}  // namespace

GaloisCertificate galois_group(const ComplexRootSet& rs0, const GaloisOptions& opt) {
  const int d = rs0.d;
  if (d < 1 || d > kMaxD) throw Error(ErrorCode::UnsupportedDegree, "degree " + std::to_string(2 * d));
  const auto& W = W2dContext::get(d);
  const mp::Bits p0 = rs0.precision;

  // orbit partition from the factorization over Z
  auto factors = factor_over_Z(rs0.h);
  std::vector<int> block(2 * d, -1);
  std::vector<int> counts(factors.size(), 0);
  for (int j = 0; j < 2 * d; ++j) {
    int best = 0;
    mp::Real bestv(p0);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      mp::Real v = eval(factors[k].poly, rs0.roots[j].z).abs() / mp::Real(mpz_class(factors[k].poly.degree() + 1), p0);
      if (k == 0 || v < bestv) best = static_cast<int>(k), bestv = v;
    }
    block[j] = best;
    ++counts[best];
  }
  std::vector<std::vector<int>> parts(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (counts[k] != factors[k].poly.degree()) throw Error(ErrorCode::PrecisionExhausted, "root-to-factor assignment failed");
  }
  for (int j = 0; j < 2 * d; ++j) parts[block[j]].push_back(j);
  const auto partition = sorted_partition(parts);

  ElementSet amb;
  for (int i = 0; i < W.order(); ++i) {
    const auto& s = W.element(i);
    bool ok = true;
    for (int j = 0; j < 2 * d && ok; ++j) ok = block[s(j)] == block[j];
    if (ok) amb.set(i);
  }
  const SignedSubgroup ambient(d, amb);
  std::vector<SignedSubgroup> cands;
  auto consider = [&](const SignedSubgroup& H) {
    if (H.contains_iota() && H.is_subgroup_of(ambient) && sorted_partition(H.orbits()) == partition) cands.push_back(H);
  };
  if (d <= 3) {
    for (const auto& H : enumerate_subgroups(d)) consider(H);
  } else {
    for (const auto& H : enumerate_between(SignedSubgroup::generated(d, {SignedPerm::iota(d)}), ambient)) consider(H);
  }
  if (cands.empty()) throw Error(ErrorCode::CertificateFailed, "no candidate subgroup has the factor orbits");

  // theta weights: smallest t separating all ambient values
  const auto amb_elems = ambient.elements();
  auto separates = [&](const std::vector<long>& cw) {
    mp::Real err(0L, p0);
    for (int j = 0; j < 2 * d; ++j) err += rs0.roots[j].radius * mp::Real(std::labs(cw[j]), p0);
    std::vector<mp::Complex> vals;
    for (const auto& s : amb_elems) vals.push_back(theta_of(s, cw, rs0.roots, p0));
    const mp::Real sep = err * mp::Real(2L, p0) + mp::ldexp(mp::Real(1L, p0), -20);
    for (std::size_t a = 0; a < vals.size(); ++a)
      for (std::size_t b = a + 1; b < vals.size(); ++b)
        if ((vals[a] - vals[b]).abs() <= sep) return false;
    return true;
  };
  std::vector<long> c;
  bool found = false;
  for (long t = 1; t <= 16 && !found; ++t) found = separates(c = theta_weights(d, t));
  // roots with linear relations defeat the family above; use one power per symbol
  for (long t = 2; t <= 64 && !found; ++t) {
    c.assign(2 * d, 1);
    for (int j = 1; j < 2 * d; ++j) c[j] = c[j - 1] * t;
    found = separates(c);
  }
  if (!found) throw Error(ErrorCode::CollisionInOrbit, "no separating theta weights");

  double M = 0;
  for (long x : c) M += std::fabs(static_cast<double>(x));
  M *= std::sqrt(rs0.q.get_d());
  int max_order = 0;
  for (const auto& H : cands) max_order = std::max(max_order, H.order());
  mp::Bits bits = static_cast<mp::Bits>(max_order * std::log2(M + 2.0)) + 2 * kGuardBits + 64;
  bits = std::max<mp::Bits>(bits, p0);

  for (int attempt = 0; attempt < 3; ++attempt, bits *= 2) {
    const ComplexRootSet rs = refine(rs0, bits);
    GaloisCertificate cert;
    cert.d = d;
    cert.h = rs.h;
    cert.q = rs.q;
    cert.p = rs.p;
    cert.n = rs.n;
    cert.theta_weights = c;
    std::optional<IntPolynomial> m;
    std::vector<mp::Complex> thetas;
    for (const auto& H : cands) {
      thetas.clear();
      for (const auto& s : H.elements()) thetas.push_back(theta_of(s, c, rs.roots, bits));
      m = round_integral(product_of_linears(thetas, bits));
      if (m) {
        cert.group = H;
        break;
      }
      ++cert.rejected_candidates;
    }
    if (!m) continue;
    cert.m_theta = *m;
    if (cert.m_theta.degree() != cert.group.order() || !is_irreducible(cert.m_theta))
      throw Error(ErrorCode::CertificateFailed, "resolvent " + to_string(cert.m_theta) + " is reducible");

    // interpolants alpha_j = N_j(theta) / m'(theta)
    const auto G = cert.group.elements();
    std::vector<CPoly> quot;
    for (const auto& th : thetas) quot.push_back(divide_linear(cert.m_theta, th));
    const IntPolynomial dm = cert.m_theta.derivative();
    // powers of m' modulo m for the homogenised identity
    const int hd = rs.h.degree();
    std::vector<IntPolynomial> dpow{IntPolynomial::constant(1)};
    for (int k = 1; k <= hd; ++k) dpow.push_back(divmod_monic(dpow.back() * dm, cert.m_theta).second);
    bool ok = true;
    for (int j = 0; j < 2 * d && ok; ++j) {
      CPoly N(cert.m_theta.degree(), mp::Complex(bits));
      for (std::size_t s = 0; s < G.size(); ++s) {
        const mp::Complex& a = rs.roots[G[s](j)].z;
        for (std::size_t k = 0; k < N.size(); ++k) N[k] += quot[s][k] * a;
      }
      auto Nz = round_integral(N);
      if (!Nz) {
        ok = false;
        break;
      }
      for (std::size_t s = 0; s < G.size(); ++s) {
        mp::Complex lhs = eval(*Nz, thetas[s]);
        mp::Complex rhs = eval(dm, thetas[s]) * rs.roots[G[s](j)].z;
        if (mp::ldexp(rhs.abs(), -20) < (lhs - rhs).abs())
          throw Error(ErrorCode::CertificateFailed, "interpolant does not reproduce root " + symbol_name(d, j));
      }
      // m'^deg(h) * h(N_j / m') == 0 mod m_theta
      IntPolynomial acc = IntPolynomial::constant(rs.h.coeff(hd));
      for (int k = hd - 1; k >= 0; --k)
        acc = divmod_monic(acc * *Nz + dpow[hd - k] * rs.h.coeff(k), cert.m_theta).second;
      if (!acc.is_zero()) throw Error(ErrorCode::CertificateFailed, "h(N_j / m') is not divisible by m_theta");
      cert.interpolant_numerators.push_back(std::move(*Nz));
    }
    if (!ok) continue;

    // Frobenius sanity at auxiliary primes
    std::set<std::vector<int>> types;
    for (const auto& s : G) types.insert(s.cycle_type());
    const mpz_class disc = discriminant(rs.h);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(200, 200000);
    while (static_cast<int>(cert.frobenius_primes.size()) < opt.frobenius_checks) {
      std::uint64_t l = pick(rng);
      if (!modp::is_prime(l) || l == rs.p || mpz_divisible_ui_p(disc.get_mpz_t(), l)) continue;
      if (!types.count(frobenius_cycle_type(rs.h, l)))
        throw Error(ErrorCode::CertificateFailed, "Frobenius at " + std::to_string(l) + " has no matching cycle type");
      cert.frobenius_primes.push_back(l);
    }
    for (const auto& r : rs.roots) cert.roots.push_back(r.z);
    return cert;
  }
  throw Error(ErrorCode::PrecisionExhausted, "no integral resolvent found for " + to_string(rs0.h));
}

GaloisCertificate galois_group(const WeilPolynomial& h, const GaloisOptions& opt) {
  return galois_group(complex_roots(h, opt.precision_bits), opt);
}

}  // namespace avinv
