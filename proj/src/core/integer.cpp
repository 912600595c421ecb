#include "linfin/core/integer.hpp"

#include <random>

#include "linfin/core/errors.hpp"

namespace linfin {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned ceil_log(std::uint64_t p, std::uint64_t n) {
  unsigned c = 0;
  unsigned __int128 v = 1;
  while (v < n) {
    v *= p;
    ++c;
  }
  return c;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw MathError("element not invertible modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) {
  Integer pz = from_u64(p);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  return to_u64(r);
}

std::optional<std::uint64_t> reduce_mod(const Rational& q, std::uint64_t p) {
  std::uint64_t den = reduce_mod(q.get_den(), p);
  if (den == 0) return std::nullopt;
  return mulmod(reduce_mod(q.get_num(), p), invmod(den, p), p);
}

bool fits_u64(const Integer& z) {
  return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& z) {
  if (!fits_u64(z)) throw InternalError("integer does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
  return v;
}

Integer from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

namespace {

// Pollard-Brent; returns a nontrivial factor or 0 when the budget runs out.
Integer brent_factor(const Integer& n, std::uint64_t& budget, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  while (budget > 0) {
    Integer c = from_u64(rng()) % (n - 1) + 1;
    Integer y = from_u64(rng()) % n;
    Integer g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      return Integer(t % n);
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += lim;
        budget = budget > lim ? budget - lim : 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

bool factor_into(const Integer& n, Factorization& out, std::uint64_t& budget,
                 std::mt19937_64& rng) {
  if (n == 1) return true;
  if (is_prime(n)) {
    ++out[n];
    return true;
  }
  Integer d = brent_factor(n, budget, rng);
  if (d == 0) return false;
  return factor_into(d, out, budget, rng) && factor_into(Integer(n / d), out, budget, rng);
}

}  // namespace

std::optional<Factorization> factor_integer(Integer n, std::uint64_t rho_iterations) {
  if (n < 1) throw DomainError("factor_integer: n must be positive");
  Factorization out;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uint64_t budget = rho_iterations;
  if (!factor_into(n, out, budget, rng)) return std::nullopt;
  return out;
}

Integer from_factorization(const Factorization& f) {
  Integer r = 1;
  for (const auto& [p, e] : f) r *= pow(p, e);
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace linfin
