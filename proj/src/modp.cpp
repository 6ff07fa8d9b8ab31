#include "avinv/modp.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace avinv::modp {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Coeffs reduce(const IntPolynomial& f, std::uint64_t p) {
  Coeffs r;
  r.reserve(f.coeffs().size());
  mpz_class m(static_cast<unsigned long>(p));
  for (const auto& a : f.coeffs()) {
    mpz_class t;
    mpz_fdiv_r(t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    r.push_back(t.get_ui());
  }
  trim(r);
  return r;
}

IntPolynomial lift(const Coeffs& f) {
  std::vector<mpz_class> v;
  for (auto a : f) v.emplace_back(static_cast<unsigned long>(a));
  return IntPolynomial(std::move(v));
}

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Coeffs, Coeffs> divmod(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw std::domain_error("modp::divmod by zero");
  Coeffs r = a;
  if (r.size() < b.size()) return {{}, r};
  const std::size_t db = b.size() - 1;
  Coeffs q(r.size() - db, 0);
  std::uint64_t il = F.inv(b.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (!r[i]) continue;
    std::uint64_t t = F.mul(r[i], il);
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(t, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b) { return divmod(F, a, b).second; }

Coeffs monic(const Field& F, const Coeffs& a) {
  if (a.empty()) return a;
  std::uint64_t il = F.inv(a.back());
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], il);
  return r;
}

Coeffs gcd(const Field& F, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    Coeffs r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Coeffs derivative(const Field& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

Coeffs powmod(const Field& F, Coeffs base, const mpz_class& e, const Coeffs& m) {
  Coeffs r{1};
  base = rem(F, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(F, mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(F, mul(F, r, base), m);
  }
  return r;
}

Bezout xgcd(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    Coeffs s = sub(F, s0, mul(F, q, s1));
    Coeffs t = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  std::uint64_t il = F.inv(r0.back());
  for (auto& x : r0) x = F.mul(x, il);
  for (auto& x : s0) x = F.mul(x, il);
  for (auto& x : t0) x = F.mul(x, il);
  return {r0, s0, t0};
}

bool is_squarefree(const Field& F, const Coeffs& f) {
  if (f.size() <= 2) return true;
  Coeffs d = derivative(F, f);
  if (d.empty()) return false;
  return gcd(F, f, d).size() == 1;
}

namespace {

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Coeffs, int>> ddf(const Field& F, Coeffs f) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs x{0, 1};
  Coeffs h = x;
  mpz_class p(static_cast<unsigned long>(F.p));
  int i = 0;
  while (f.size() > 1) {
    ++i;
    if (2 * i > static_cast<int>(f.size()) - 1) {
      out.emplace_back(f, static_cast<int>(f.size()) - 1);
      break;
    }
    h = powmod(F, h, p, f);
    Coeffs g = gcd(F, f, sub(F, h, x));
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = divmod(F, f, g).first;
      h = rem(F, h, f);
    }
  }
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of degree-k irreducibles.
void edf(const Field& F, const Coeffs& f, int k, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == k) {
    out.push_back(monic(F, f));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  for (;;) {
    Coeffs a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Coeffs g = gcd(F, f, a);
    if (g.size() > 1 && g.size() < f.size()) {
      edf(F, g, k, rng, out);
      edf(F, divmod(F, f, g).first, k, rng, out);
      return;
    }
    Coeffs b;
    if (F.p == 2) {
      // trace map a + a^2 + ... + a^(2^(k-1))
      Coeffs t = a;
      b = a;
      for (int j = 1; j < k; ++j) {
        t = rem(F, mul(F, t, t), f);
        b = add(F, b, t);
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), F.p, k);
      e = (e - 1) / 2;
      b = sub(F, powmod(F, a, e, f), Coeffs{1});
    }
    g = gcd(F, f, b);
    if (g.size() > 1 && g.size() < f.size()) {
      edf(F, g, k, rng, out);
      edf(F, divmod(F, f, g).first, k, rng, out);
      return;
    }
  }
}

std::vector<Coeffs> factor_squarefree_monic(const Field& F, const Coeffs& f) {
  std::vector<Coeffs> out;
  std::mt19937_64 rng(0x5eedULL + F.p);
  for (auto& [g, k] : ddf(F, f)) edf(F, g, k, rng, out);
  return out;
}

bool coeff_less(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<std::pair<Coeffs, int>> factor(const Field& F, const Coeffs& f0) {
  std::vector<std::pair<Coeffs, int>> out;
  if (f0.size() <= 1) return out;
  Coeffs f = monic(F, f0);
  // Musser's square-free factorization, with p-th root extraction.
  std::vector<std::pair<Coeffs, int>> sqf;
  std::function<void(const Coeffs&, int)> rec = [&](const Coeffs& a, int mult) {
    if (a.size() <= 1) return;
    Coeffs d = derivative(F, a);
    if (d.empty()) {
      // a = b(x^p)
      Coeffs b((a.size() - 1) / F.p + 1, 0);
      for (std::size_t i = 0; i < a.size(); i += F.p) b[i / F.p] = a[i];
      rec(b, mult * static_cast<int>(F.p));
      return;
    }
    Coeffs c = gcd(F, a, d);
    Coeffs w = divmod(F, a, c).first;
    int i = 1;
    while (w.size() > 1) {
      Coeffs y = gcd(F, w, c);
      Coeffs z = divmod(F, w, y).first;
      if (z.size() > 1) sqf.emplace_back(monic(F, z), i * mult);
      ++i;
      w = y;
      c = divmod(F, c, y).first;
    }
    if (c.size() > 1) {
      Coeffs b((c.size() - 1) / F.p + 1, 0);
      for (std::size_t j = 0; j < c.size(); j += F.p) b[j / F.p] = c[j];
      rec(b, mult * static_cast<int>(F.p));
    }
  };
  rec(f, 1);
  for (auto& [g, m] : sqf)
    for (auto& h : factor_squarefree_monic(F, g)) out.emplace_back(h, m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return coeff_less(a.first, b.first);
    return a.second < b.second;
  });
  // merge duplicates that arise from different square-free layers
  std::vector<std::pair<Coeffs, int>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

std::vector<int> factor_degrees(const Field& F, const Coeffs& f) {
  std::vector<int> degs;
  for (auto& [g, k] : ddf(F, monic(F, f))) {
    int cnt = (static_cast<int>(g.size()) - 1) / k;
    for (int j = 0; j < cnt; ++j) degs.push_back(k);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  mpz_class m(std::to_string(n));
  return mpz_probab_prime_p(m.get_mpz_t(), 30) > 0;
}

}  // namespace avinv::modp
