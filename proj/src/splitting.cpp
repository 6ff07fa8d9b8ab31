#include "avinv/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "avinv/errors.hpp"
#include "avinv/factor.hpp"
#include "avinv/modp.hpp"

namespace avinv {

namespace {

bool straddles_real_axis(const CertifiedRoot& r) { return mp::abs(r.z.im) <= r.radius; }

// Distance between disk centres exceeds the radii: the roots are distinct.
bool disks_overlap(const mp::Complex& a, const mp::Real& ra, const mp::Complex& b, const mp::Real& rb) {
  mp::Real dist = (a - b).abs();
  return dist <= ra + rb;
}

}  // namespace

ComplexRootSet complex_roots(const WeilPolynomial& h, mp::Bits precision) {
  if (h.degree() % 2) throw Error(ErrorCode::UnexpectedRealRootPattern, "odd degree " + to_string(h.poly));
  const int d = h.degree() / 2;
  for (int attempt = 0; attempt < 5; ++attempt, precision *= 2) {
    auto roots = certified_roots(h.poly, precision);
    std::vector<CertifiedRoot> upper, lower;
    bool ok = true;
    for (auto& r : roots) {
      if (straddles_real_axis(r)) {
        ok = false;
        break;
      }
      (r.z.im.sign() > 0 ? upper : lower).push_back(r);
    }
    if (!ok) continue;
    if (static_cast<int>(upper.size()) != d)
      throw Error(ErrorCode::UnexpectedRealRootPattern, "roots of " + to_string(h.poly) + " are not closed under conjugation");
    std::sort(upper.begin(), upper.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
      if (a.z.re > b.z.re) return true;
      if (b.z.re > a.z.re) return false;
      return a.z.im < b.z.im;
    });
    ComplexRootSet rs{h.poly, h.q, h.p, h.n, d, {}, precision};
    rs.roots.resize(2 * d, CertifiedRoot{mp::Complex(precision), mp::Real(precision)});
    for (int i = 0; i < d; ++i) {
      rs.roots[i] = upper[i];
      const mp::Complex c = upper[i].z.conj();
      int partner = -1;
      for (int k = 0; k < d; ++k) {
        if (!disks_overlap(c, upper[i].radius, lower[k].z, lower[k].radius)) continue;
        if (partner >= 0) throw Error(ErrorCode::PairingAmbiguous, "two conjugate candidates");
        partner = k;
      }
      if (partner < 0) throw Error(ErrorCode::PairingAmbiguous, "no conjugate partner found");
      rs.roots[i + d] = lower[partner];
      // alpha * conj(alpha) = q
      mp::Real err = (upper[i].z.abs() + upper[i].radius) * upper[i].radius * mp::Real(2L, precision);
      mp::Real dev = mp::abs(upper[i].z.norm() - mp::Real(h.q, precision));
      if (err < dev) throw Error(ErrorCode::RootOffCircle, "root modulus differs from sqrt(q)");
    }
    return rs;
  }
  throw Error(ErrorCode::PrecisionExhausted, "could not separate roots of " + to_string(h.poly) + " from the real axis");
}

std::vector<int> frobenius_cycle_type(const IntPolynomial& h, std::uint64_t l) {
  modp::Field F{l};
  std::vector<int> degs = modp::factor_degrees(F, modp::reduce(h, l));
  std::sort(degs.begin(), degs.end());
  return degs;
}

GaloisCertificate real_case_group(const WeilPolynomial& h) {
  GaloisCertificate c;
  c.h = h.poly;
  c.q = h.q;
  c.p = h.p;
  c.n = h.n;
  c.real_case = true;
  c.m_theta = IntPolynomial::constant(1);
  RealSplit split = split_real_roots(radical(h.poly), h.q);
  if (split.complex_part.degree() != 0 || split.real_factors.empty())
    throw Error(ErrorCode::UnexpectedRealRootPattern, to_string(h.poly) + " is not totally real");
  const int slots = split.real_factors.size() == 1 ? split.real_factors[0].degree() : 2;
  c.d = slots;
  const mp::Bits prec = 128;
  mp::Real s = mp::sqrt(mp::Real(h.q, prec));
  if (exact_sqrt(h.q)) {
    c.group = SignedSubgroup::trivial(c.d);
    // each real root fills a symbol and its partner
    std::vector<mp::Real> vals;
    for (const auto& f : split.real_factors) vals.push_back(mp::Real(mpz_class(-f.coeff(0)), prec));
    c.roots.assign(2 * c.d, mp::Complex(prec));
    for (int i = 0; i < c.d; ++i) {
      c.roots[i] = mp::Complex(vals[i], mp::Real(0L, prec));
      c.roots[i + c.d] = c.roots[i];
    }
  } else {
    if (split.real_factors.size() != 1 || split.real_factors[0].degree() != 2)
      throw Error(ErrorCode::UnexpectedRealRootPattern, to_string(h.poly));
    c.group = SignedSubgroup::generated(2, {SignedPerm::parse(2, "(1 2)(b1 b2)")});
    c.roots = {mp::Complex(s, mp::Real(0L, prec)), mp::Complex(-s, mp::Real(0L, prec)),
               mp::Complex(s, mp::Real(0L, prec)), mp::Complex(-s, mp::Real(0L, prec))};
  }
  return c;
}

RepBlock direct_sum(const std::vector<RepBlock>& blocks) {
  for (const auto& b : blocks)
    if (b.q != 0 && blocks[0].q != 0 && b.q != blocks[0].q)
      throw Error(ErrorCode::IncompatibleContexts, "blocks over q = " + blocks[0].q.get_str() + " and " + b.q.get_str());
  if (blocks.size() == 1) return blocks[0];
  int D = 0;
  for (const auto& b : blocks) D += b.group.d();
  if (D > kMaxD) throw Error(ErrorCode::UnsupportedDegree, "direct sum of total degree " + std::to_string(2 * D));
  Weighting w(2 * D);
  std::vector<SignedPerm> gens;
  int off = 0;
  for (const auto& b : blocks) {
    const int dk = b.group.d();
    auto embed = [&](int x) { return x < dk ? off + x : D + off + (x - dk); };
    for (int x = 0; x < 2 * dk; ++x) w[embed(x)] = b.w[x];
    for (const auto& g : b.group.generators()) {
      std::vector<int> img(2 * D);
      for (int x = 0; x < 2 * D; ++x) img[x] = x;
      for (int x = 0; x < 2 * dk; ++x) img[embed(x)] = embed(g(x));
      gens.emplace_back(img);
    }
    off += dk;
  }
  SignedSubgroup g = SignedSubgroup::generated(D, gens);
  SignedPerm rho = climbing_relabel(w);
  return RepBlock{relabel_group(g, rho), relabel_weighting(w, rho), blocks[0].q};
}

}  // namespace avinv
