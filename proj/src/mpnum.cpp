#include "avinv/mpnum.hpp"

#include <memory>

namespace avinv::mp {

mpz_class Real::round_to_integer() const {
  mpz_class z;
  Real r(prec());
  mpfr_round(r.get(), v_);
  mpfr_get_z(z.get_mpz_t(), r.get(), MPFR_RNDN);
  return z;
}

std::string Real::to_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Complex pow(const Complex& z, unsigned e) {
  Complex result(1L, z.prec());
  Complex base = z;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= Complex(base);
  }
  return result;
}

}  // namespace avinv::mp
