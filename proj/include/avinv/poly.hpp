#pragma once

// Dense univariate polynomials over Z and Q, coefficients constant term first.

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace avinv {

template <typename R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
  static Poly monomial(const R& a, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = a;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  void set_coeff(std::size_t k, const R& a) {
    if (k >= c_.size()) c_.resize(k + 1, R(0));
    c_[k] = a;
    trim();
  }

  R operator()(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(r));
  }

  Poly pow(unsigned e) const {
    Poly result = constant(R(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  // Composition this(g(T)).
  Poly compose(const Poly& g) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  // Reciprocal T^deg * f(1/T).
  Poly reversed() const {
    std::vector<R> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

 private:
  std::vector<R> c_;
};

using IntPolynomial = Poly<mpz_class>;
using RatPolynomial = Poly<mpq_class>;

// Division with remainder over Q.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
// Division of integer polynomials by a monic divisor; stays in Z[T].
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b);
// Exact division; returns false if b does not divide a in Z[T].
bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

RatPolynomial to_rational(const IntPolynomial& f);
// Scales by the lcm of denominators and returns the primitive integer multiple.
IntPolynomial primitive_part(const RatPolynomial& f);
IntPolynomial primitive_part(const IntPolynomial& f);
mpz_class content(const IntPolynomial& f);

RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// Inverse of a modulo m over Q; requires gcd(a, m) = 1.
RatPolynomial inverse_mod(const RatPolynomial& a, const RatPolynomial& m);
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);
mpz_class discriminant(const IntPolynomial& f);

bool is_squarefree(const IntPolynomial& f);
// Square-free decomposition f = lc * prod g_i^i over Q, returned as (g_i, i) with
// primitive integer g_i of positive degree.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f);

// Orders polynomials by degree, then constant-first lexicographic coefficients.
bool canonical_less(const IntPolynomial& a, const IntPolynomial& b);

std::string to_string(const IntPolynomial& f, const std::string& var = "T");
std::string to_string(const RatPolynomial& f, const std::string& var = "T");

}  // namespace avinv
