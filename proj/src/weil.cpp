#include "avinv/weil.hpp"

#include <algorithm>
#include <sstream>

#include "avinv/errors.hpp"
#include "avinv/factor.hpp"
#include "avinv/modp.hpp"
#include "avinv/roots.hpp"

namespace avinv {

mpz_class prime_power(std::uint64_t p, unsigned n) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, n);
  return q;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& x) {
  if (x < 0) return std::nullopt;
  mpz_class r = sqrt(x);
  if (r * r == x) return r;
  return std::nullopt;
}

IntPolynomial radical(const IntPolynomial& f) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (auto& [g, m] : squarefree_decomposition(f)) r *= g;
  if (r.lead() < 0) r = -r;
  return r;
}

RealSplit split_real_roots(const IntPolynomial& f, const mpz_class& q) {
  RealSplit out;
  IntPolynomial rest = f;
  std::vector<IntPolynomial> candidates;
  if (auto s = exact_sqrt(q)) {
    candidates.push_back(IntPolynomial(std::vector<mpz_class>{-*s, 1}));
    candidates.push_back(IntPolynomial(std::vector<mpz_class>{*s, 1}));
  } else {
    candidates.push_back(IntPolynomial(std::vector<mpz_class>{-q, 0, 1}));
  }
  for (const auto& c : candidates) {
    IntPolynomial quo;
    if (divides_exactly(c, rest, &quo)) {
      out.real_factors.push_back(c);
      rest = quo;
    }
  }
  std::sort(out.real_factors.begin(), out.real_factors.end(),
            [](const IntPolynomial& a, const IntPolynomial& b) { return canonical_less(a, b); });
  out.complex_part = rest;
  return out;
}

namespace {

// Dickson-type substitution x = T + q/T for a symmetric polynomial of degree 2d.
IntPolynomial complex_trace(const IntPolynomial& c, const mpz_class& q) {
  const int d = c.degree() / 2;
  IntPolynomial d0 = IntPolynomial::constant(2), d1 = IntPolynomial::x();
  IntPolynomial acc = IntPolynomial::constant(c.coeff(d));
  std::vector<IntPolynomial> D{d0, d1};
  for (int j = 2; j <= d; ++j) D.push_back(IntPolynomial::x() * D[j - 1] - D[j - 2] * q);
  for (int j = 1; j <= d; ++j) acc += D[j] * c.coeff(d + j);
  return acc;
}

bool is_symmetric(const IntPolynomial& c, const mpz_class& q) {
  const int deg = c.degree();
  if (deg % 2) return false;
  const int d = deg / 2;
  for (int k = 0; k <= d; ++k) {
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), d - k);
    if (c.coeff(deg - k) * qp != c.coeff(k)) return false;
  }
  return true;
}

// Sign of A + B*sqrt(q) for rational A, B and non-square q.
int sign_surd(const mpq_class& A, const mpq_class& B, const mpz_class& q) {
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  mpq_class lhs = A * A, rhs = B * B * q;
  return lhs > rhs ? sa : sb;
}

// Sign of f(c * sqrt(q)).
int sign_at(const RatPolynomial& f, long c, const mpz_class& q, const std::optional<mpz_class>& s) {
  if (s) return sgn(f(mpq_class(*s * c)));
  mpq_class A = 0, B = 0;
  mpq_class pw = 1;  // (c^k) * q^{floor(k/2)}
  for (int k = 0; k <= f.degree(); ++k) {
    if (k % 2 == 0)
      A += f.coeff(k) * pw;
    else
      B += f.coeff(k) * pw;
    pw *= c;
    if (k % 2 == 1) pw *= q;
  }
  return sign_surd(A, B, q);
}

}  // namespace

int sturm_count_symmetric(const IntPolynomial& f, long c, const mpz_class& q) {
  if (f.degree() <= 0) return 0;
  const auto s = exact_sqrt(q);
  std::vector<RatPolynomial> seq{to_rational(f), to_rational(f.derivative())};
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto variations = [&](long cc) {
    int v = 0, last = 0;
    for (const auto& g : seq) {
      int sg = sign_at(g, cc, q, s);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  };
  int count = variations(-c) - variations(c);  // roots in (-c sqrt q, c sqrt q]
  if (sign_at(seq[0], -c, q, s) == 0) {
    // f has a root at the left endpoint; count it as well.
    ++count;
  }
  return count;
}

IntPolynomial trace_polynomial(const IntPolynomial& h, const mpz_class& q) {
  RealSplit split = split_real_roots(radical(h), q);
  if (split.complex_part.degree() % 2) throw Error(ErrorCode::OddDegreeWithoutRealHandling, to_string(h));
  if (!is_symmetric(split.complex_part, q))
    throw Error(ErrorCode::RootOffCircle, "complex part of " + to_string(h) + " violates the functional equation");
  IntPolynomial out = complex_trace(split.complex_part, q);
  // each real root r is doubled and contributes x - 2r
  for (const auto& rf : split.real_factors) {
    if (rf.degree() == 1)
      out *= IntPolynomial(std::vector<mpz_class>{2 * rf.coeff(0), 1});
    else
      out *= IntPolynomial(std::vector<mpz_class>{-4 * q, 0, 1});
  }
  return out;
}

IntPolynomial trace_polynomial(const WeilPolynomial& h) { return trace_polynomial(h.poly, h.q); }

WeilPolynomial validate_weil(const IntPolynomial& poly, std::uint64_t p, unsigned n) {
  if (!modp::is_prime(p)) throw Error(ErrorCode::Usage, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::Usage, "n must be positive");
  if (poly.degree() < 1) throw Error(ErrorCode::DegreeZero, "polynomial has degree " + std::to_string(poly.degree()));
  if (!poly.is_monic()) throw Error(ErrorCode::NotMonic, to_string(poly));
  const mpz_class q = prime_power(p, n);
  RealSplit split = split_real_roots(radical(poly), q);
  const IntPolynomial& c = split.complex_part;

  // interval tier
  if (c.degree() >= 1) {
    const mp::Bits prec = 128;
    mp::Real sq = mp::sqrt(mp::Real(q, prec));
    for (const auto& r : certified_roots(c, prec)) {
      mp::Real m = r.z.abs();
      mp::Real lo = m - r.radius, hi = m + r.radius;
      if (sq < lo || hi < sq) {
        std::ostringstream msg;
        msg << "root " << r.z.re.to_string(12) << (r.z.im.sign() < 0 ? "" : "+") << r.z.im.to_string(12)
            << "i has modulus in [" << lo.to_string(12) << ", " << hi.to_string(12) << "], sqrt(q) = " << sq.to_string(12);
        throw Error(ErrorCode::RootOffCircle, msg.str());
      }
    }
  }
  // exact tier
  if (c.degree() % 2 || !is_symmetric(c, q))
    throw Error(ErrorCode::RootOffCircle, to_string(poly) + " fails the functional equation for q = " + q.get_str());
  IntPolynomial plus = complex_trace(c, q);
  if (sturm_count_symmetric(plus, 2, q) != plus.degree())
    throw Error(ErrorCode::RootOffCircle, "trace polynomial " + to_string(plus, "x") + " has roots outside [-2sqrt(q), 2sqrt(q)]");
  return WeilPolynomial{poly, p, n, q};
}

FrobeniusDecomposition frobenius_decompose(const WeilPolynomial& P) {
  FrobeniusDecomposition out;
  out.h = IntPolynomial::constant(1);
  for (auto& f : factor_over_Z(P.poly)) {
    out.factors.push_back({WeilPolynomial{f.poly, P.p, P.n, P.q}, f.multiplicity});
    out.h *= f.poly;
  }
  out.simple = out.factors.size() == 1;
  return out;
}

int honda_tate_e(const WeilPolynomial& h, const std::vector<LocalFactorData>& local) {
  const mpz_class h0 = h.poly.coeff(0);
  for (int e = 1;; ++e) {
    if (h0 < 0 && e % 2) continue;
    bool ok = true;
    for (const auto& g : local) {
      mpq_class v = g.slope * g.degree * e;
      if (v.get_den() != 1) ok = false;
    }
    if (ok) return e;
  }
}

RootMultiset root_multiset(const IntPolynomial& f, const mpz_class& q) {
  RealSplit split = split_real_roots(f, q);
  RootMultiset r;
  r.complex_roots = std::max(0, split.complex_part.degree());
  int real = 0;
  for (const auto& rf : split.real_factors) real += rf.degree();
  r.d = r.complex_roots / 2 + real;
  r.real_flags.assign(2 * r.d, false);
  for (int i = r.complex_roots; i < 2 * r.d; ++i) r.real_flags[i] = true;
  return r;
}

}  // namespace avinv
