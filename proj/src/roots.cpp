#include "avinv/roots.hpp"

#include <cmath>

#include "avinv/errors.hpp"

namespace avinv {

void eval_with_derivative(const IntPolynomial& f, const mp::Complex& z, mp::Complex& value, mp::Complex& deriv) {
  const mp::Bits prec = z.prec();
  value = mp::Complex(0L, prec);
  deriv = mp::Complex(0L, prec);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + mp::Complex(mp::Real(*it, prec), mp::Real(0L, prec));
  }
}

namespace {

// Upper bound on the rounding error of Horner evaluation at z.
mp::Real horner_error(const IntPolynomial& f, const mp::Complex& z) {
  const mp::Bits prec = z.prec();
  mp::Real az = z.abs(), acc(0L, prec);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * az + mp::abs(mp::Real(*it, prec));
  return mp::ldexp(acc, -static_cast<long>(prec) + 4 + 2 * f.degree());
}

mp::Complex to_prec(const mp::Complex& z, mp::Bits prec) {
  mp::Real re(prec), im(prec);
  mpfr_set(re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(im.get(), z.im.get(), MPFR_RNDN);
  return mp::Complex(std::move(re), std::move(im));
}

std::vector<mp::Complex> aberth(const IntPolynomial& f, mp::Bits prec) {
  const int n = f.degree();
  // initial guesses on a circle of the geometric-mean radius
  double r0 = std::pow(std::abs(f.coeff(0).get_d()) / std::abs(f.lead().get_d()), 1.0 / n);
  if (!(r0 > 0) || !std::isfinite(r0)) r0 = 1.0;
  std::vector<mp::Complex> z;
  for (int k = 0; k < n; ++k) {
    double ang = 2 * M_PI * k / n + 0.4;
    z.emplace_back(mp::Real(r0 * std::cos(ang), prec), mp::Real(r0 * std::sin(ang), prec));
  }
  const mp::Real tol = mp::ldexp(mp::Real(1L, prec), -static_cast<long>(prec) + 16);
  for (int iter = 0; iter < 2000; ++iter) {
    bool done = true;
    for (int k = 0; k < n; ++k) {
      mp::Complex v(prec), dv(prec);
      eval_with_derivative(f, z[k], v, dv);
      if (v.norm().is_zero()) continue;
      mp::Complex w = v / dv;
      mp::Complex s(0L, prec);
      for (int j = 0; j < n; ++j)
        if (j != k) s += mp::Complex(1L, prec) / (z[k] - z[j]);
      mp::Complex step = w / (mp::Complex(1L, prec) - w * s);
      z[k] -= step;
      if (tol < step.abs() / (z[k].abs() + mp::Real(1L, prec))) done = false;
    }
    if (done) break;
  }
  return z;
}

}  // namespace

std::vector<CertifiedRoot> certified_roots(const IntPolynomial& f, mp::Bits prec) {
  const int n = f.degree();
  if (n < 1) return {};
  mp::Bits work = std::min<mp::Bits>(prec, 192);
  for (int attempt = 0; attempt < 6; ++attempt, work *= 2) {
    std::vector<mp::Complex> z = aberth(f, work);
    // Newton refinement up to the requested precision
    for (mp::Bits cur = work; cur < prec;) {
      cur = std::min<mp::Bits>(prec, 2 * cur);
      for (auto& zk : z) {
        zk = to_prec(zk, cur);
        for (int it = 0; it < 2; ++it) {
          mp::Complex v(cur), dv(cur);
          eval_with_derivative(f, zk, v, dv);
          if (dv.norm().is_zero()) break;
          zk -= v / dv;
        }
      }
    }
    const mp::Bits fin = std::max(prec, work);
    std::vector<CertifiedRoot> out;
    bool ok = true;
    for (auto& zk : z) {
      zk = to_prec(zk, fin);
      mp::Complex v(fin), dv(fin);
      eval_with_derivative(f, zk, v, dv);
      if (dv.norm().is_zero()) {
        ok = false;
        break;
      }
      mp::Real rad = mp::Real(static_cast<long>(n), fin) * (v.abs() + horner_error(f, zk)) / dv.abs();
      out.push_back({zk, rad});
    }
    for (int i = 0; ok && i < n; ++i)
      for (int j = i + 1; ok && j < n; ++j)
        if (!((out[i].radius + out[j].radius) < (out[i].z - out[j].z).abs())) ok = false;
    if (ok) return out;
    prec = std::max(prec, 2 * work);
  }
  throw Error(ErrorCode::PrecisionExhausted, "could not separate the roots of " + to_string(f));
}

}  // namespace avinv
