#include "avinv/factor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "avinv/modp.hpp"

namespace avinv {

namespace {

IntPolynomial mod_nonneg(const IntPolynomial& f, const mpz_class& m) {
  std::vector<mpz_class> v;
  for (const auto& a : f.coeffs()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    v.push_back(r);
  }
  return IntPolynomial(std::move(v));
}

// Division by a monic divisor with all arithmetic reduced mod m.
std::pair<IntPolynomial, IntPolynomial> divmod_monic_mod(const IntPolynomial& a, const IntPolynomial& b,
                                                        const mpz_class& m) {
  auto [q, r] = divmod_monic(mod_nonneg(a, m), b);
  return {mod_nonneg(q, m), mod_nonneg(r, m)};
}

struct LiftState {
  IntPolynomial g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2.
LiftState hensel_step(const IntPolynomial& f, const LiftState& st, const mpz_class& m) {
  const mpz_class M = m * m;
  IntPolynomial e = mod_nonneg(f - st.g * st.h, M);
  auto [q, r] = divmod_monic_mod(st.s * e, st.h, M);
  IntPolynomial g2 = mod_nonneg(st.g + st.t * e + q * st.g, M);
  IntPolynomial h2 = mod_nonneg(st.h + r, M);
  IntPolynomial b = mod_nonneg(st.s * g2 + st.t * h2 - IntPolynomial::constant(1), M);
  auto [c, d] = divmod_monic_mod(st.s * b, h2, M);
  IntPolynomial s2 = mod_nonneg(st.s - d, M);
  IntPolynomial t2 = mod_nonneg(st.t - st.t * b - c * g2, M);
  return {g2, h2, s2, t2};
}

IntPolynomial product_mod(const std::vector<IntPolynomial>& fs, const mpz_class& m) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (const auto& f : fs) acc = mod_nonneg(acc * f, m);
  return acc;
}

std::vector<std::uint64_t> small_primes(std::size_t count, std::uint64_t start = 3) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = start; out.size() < count; ++n)
    if (modp::is_prime(n)) out.push_back(n);
  return out;
}

// Factors a monic squarefree integer polynomial.
std::vector<IntPolynomial> zassenhaus_monic(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  // Pick the prime with the fewest modular factors among a handful of good ones.
  std::uint64_t best_p = 0;
  std::size_t best_count = static_cast<std::size_t>(-1);
  int good = 0;
  for (std::uint64_t p : small_primes(200)) {
    modp::Field F{p};
    auto fp = modp::reduce(f, p);
    if (static_cast<int>(fp.size()) - 1 != n || !modp::is_squarefree(F, fp)) continue;
    std::size_t cnt = modp::factor_degrees(F, fp).size();
    if (cnt < best_count) {
      best_count = cnt;
      best_p = p;
    }
    if (cnt == 1 || ++good >= 8) break;
  }
  if (best_p == 0) throw std::runtime_error("zassenhaus: no good prime found");
  if (best_count == 1) return {f};

  modp::Field F{best_p};
  std::vector<IntPolynomial> modular;
  for (auto& [g, mult] : modp::factor(F, modp::reduce(f, best_p))) modular.push_back(modp::lift(g));

  // Mignotte-type bound on coefficients of any factor.
  mpz_class norm2 = 0;
  for (const auto& a : f.coeffs()) norm2 += a * a;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= n;
  bound *= 2;
  unsigned k = 1;
  mpz_class pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }
  std::vector<IntPolynomial> lifted = hensel_lift(f, modular, best_p, k);

  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::vector<IntPolynomial> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) -> bool {
      if (pos == s) {
        std::vector<IntPolynomial> sel;
        for (auto i : idx) sel.push_back(remaining[i]);
        IntPolynomial g = mods(product_mod(sel, pk), pk);
        if (rest.coeff(0) != 0 && g.coeff(0) != 0 &&
            !mpz_divisible_p(rest.coeff(0).get_mpz_t(), g.coeff(0).get_mpz_t()))
          return false;
        IntPolynomial quo;
        if (!divides_exactly(g, rest, &quo)) return false;
        found.push_back(g);
        rest = quo;
        std::vector<IntPolynomial> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        return true;
      }
      for (std::size_t i = from; i < remaining.size(); ++i) {
        idx[pos] = i;
        if (choose(pos + 1, i + 1)) return true;
      }
      return false;
    };
    while (2 * s <= remaining.size() && choose(0, 0)) progress = true;
    if (!progress) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

std::vector<IntPolynomial> factor_squarefree_primitive(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const mpz_class lc = f.lead();
  if (lc == 1) return zassenhaus_monic(f);
  // F(y) = lc^(n-1) f(y / lc) is monic.
  std::vector<mpz_class> v(n + 1);
  for (int i = 0; i <= n; ++i) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), lc.get_mpz_t(), n - 1 - i < 0 ? 0 : n - 1 - i);
    v[i] = (i == n) ? mpz_class(1) : f.coeffs()[i] * pw;
  }
  std::vector<IntPolynomial> out;
  for (const auto& g : zassenhaus_monic(IntPolynomial(std::move(v)))) {
    IntPolynomial scaled = g.compose(IntPolynomial{0, 1} * lc);
    out.push_back(primitive_part(scaled));
  }
  return out;
}

}  // namespace

IntPolynomial mods(const IntPolynomial& f, const mpz_class& m) {
  const mpz_class half = m / 2;
  std::vector<mpz_class> v;
  for (const auto& a : f.coeffs()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    v.push_back(r);
  }
  return IntPolynomial(std::move(v));
}

std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f, const std::vector<IntPolynomial>& factors,
                                       std::uint64_t p, unsigned k) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  if (factors.size() == 1) return {mod_nonneg(f, pk)};
  const std::size_t half = factors.size() / 2;
  std::vector<IntPolynomial> left(factors.begin(), factors.begin() + half);
  std::vector<IntPolynomial> right(factors.begin() + half, factors.end());
  const mpz_class P(static_cast<unsigned long>(p));
  modp::Field F{p};
  IntPolynomial g = product_mod(left, P), h = product_mod(right, P);
  auto bz = modp::xgcd(F, modp::reduce(g, p), modp::reduce(h, p));
  if (bz.g.size() != 1) throw std::runtime_error("hensel_lift: factors not coprime");
  LiftState st{g, h, modp::lift(bz.s), modp::lift(bz.t)};
  mpz_class m = P;
  while (m < pk) {
    st = hensel_step(f, st, m);
    m *= m;
  }
  IntPolynomial G = mod_nonneg(st.g, pk), H = mod_nonneg(st.h, pk);
  auto lg = hensel_lift(G, left, p, k);
  auto rh = hensel_lift(H, right, p, k);
  lg.insert(lg.end(), rh.begin(), rh.end());
  return lg;
}

std::vector<IntFactor> factor_over_Z(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("factor_over_Z: zero polynomial");
  std::vector<IntFactor> out;
  if (f.degree() == 0) return out;
  for (auto& [g, mult] : squarefree_decomposition(f))
    for (auto& h : factor_squarefree_primitive(primitive_part(g))) out.push_back({primitive_part(h), mult});
  std::sort(out.begin(), out.end(), [](const IntFactor& a, const IntFactor& b) {
    if (!(a.poly == b.poly)) return canonical_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const IntPolynomial& f) {
  if (f.degree() <= 0) return false;
  auto fs = factor_over_Z(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace avinv
