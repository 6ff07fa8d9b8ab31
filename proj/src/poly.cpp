#include "avinv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "avinv/modp.hpp"

namespace avinv {

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<mpq_class> q(a.degree() - db + 1, mpq_class(0));
  const mpq_class& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpq_class t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw std::domain_error("divmod_monic: divisor not monic");
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPolynomial(), a};
  std::vector<mpz_class> q(a.degree() - db + 1, mpz_class(0));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpz_class t = r[i];
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) return a.is_zero();
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  if (a.is_zero()) {
    if (quotient) *quotient = IntPolynomial();
    return true;
  }
  if (a.degree() < db) return false;
  std::vector<mpz_class> q(a.degree() - db + 1, mpz_class(0));
  const mpz_class& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(q));
  return true;
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<mpq_class> v;
  v.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) v.emplace_back(a);
  return RatPolynomial(std::move(v));
}

mpz_class content(const IntPolynomial& f) {
  mpz_class g = 0;
  for (const auto& a : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  mpz_class g = content(f);
  if (f.lead() < 0) g = -g;
  std::vector<mpz_class> v;
  for (const auto& a : f.coeffs()) v.emplace_back(a / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& f) {
  if (f.is_zero()) return IntPolynomial();
  mpz_class l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<mpz_class> v;
  for (const auto& a : f.coeffs()) {
    mpq_class s = a * l;
    v.emplace_back(s.get_num());
  }
  return primitive_part(IntPolynomial(std::move(v)));
}

RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  mpq_class l = x.lead();
  std::vector<mpq_class> v;
  for (const auto& c : x.coeffs()) v.emplace_back(c / l);
  return RatPolynomial(std::move(v));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  // Primitive remainder sequence keeps coefficient growth in check.
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPolynomial x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    // pseudo-remainder
    IntPolynomial r = x;
    const mpz_class& ly = y.lead();
    while (!r.is_zero() && r.degree() >= y.degree()) {
      mpz_class lr = r.lead();
      int shift = r.degree() - y.degree();
      r *= ly;
      r -= IntPolynomial::monomial(lr, shift) * y;
    }
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  mpz_class g = content(a);
  mpz_class h = content(b);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
  return x * g;
}

RatPolynomial inverse_mod(const RatPolynomial& a, const RatPolynomial& m) {
  RatPolynomial r0 = m, r1 = divmod(a, m).second;
  RatPolynomial s0, s1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
  mpq_class inv = 1 / r0.lead();
  return divmod(s0 * inv, m).second;
}

namespace {

// Determinant of an integer matrix by fraction-free elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.lead().get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.lead().get_mpz_t(), m);
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeffs()[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeffs()[n - j];
  return bareiss_det(std::move(s));
}

mpz_class discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) return 0;
  mpz_class r = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
  return r;
}

bool is_squarefree(const IntPolynomial& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f) {
  // Yun's algorithm over Q.
  std::vector<std::pair<IntPolynomial, int>> out;
  if (f.degree() <= 0) return out;
  // squarefree modulo a prime of good reduction implies squarefree over Q
  const IntPolynomial pf = primitive_part(f);
  for (std::uint64_t l : {10007ULL, 10009ULL, 10037ULL, 10039ULL, 10061ULL, 10067ULL}) {
    if (mpz_divisible_ui_p(pf.lead().get_mpz_t(), l)) continue;
    modp::Field F{l};
    if (modp::is_squarefree(F, modp::reduce(pf, l))) {
      out.emplace_back(pf, 1);
      return out;
    }
  }
  // Work over Q to avoid content bookkeeping.
  RatPolynomial A = to_rational(primitive_part(f));
  RatPolynomial B = monic_gcd(A, A.derivative());
  RatPolynomial C = divmod(A, B).first;
  RatPolynomial Y = divmod(A.derivative(), B).first;
  RatPolynomial Z = Y - C.derivative();
  int i = 1;
  while (C.degree() > 0) {
    RatPolynomial G = monic_gcd(C, Z);
    if (G.degree() > 0) out.emplace_back(primitive_part(G), i);
    RatPolynomial Cn = divmod(C, G).first;
    Y = divmod(Z, G).first;
    C = Cn;
    Z = Y - C.derivative();
    ++i;
  }
  return out;
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

namespace {

template <typename R>
std::string render(const Poly<R>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    R a = f.coeff(k);
    if (a == 0) continue;
    bool neg = a < 0;
    R mag = neg ? R(-a) : a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& f, const std::string& var) { return render(f, var); }
std::string to_string(const RatPolynomial& f, const std::string& var) { return render(f, var); }

}  // namespace avinv
