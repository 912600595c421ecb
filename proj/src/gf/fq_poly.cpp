#include "linfin/gf/fq_poly.hpp"

#include <algorithm>
#include <random>

#include "linfin/core/errors.hpp"

namespace linfin::gf {

int degree(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(const FqField& F, FqPoly& f) {
  while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

FqPoly from_coefficients(const FqField& F, const std::vector<std::uint64_t>& prime_coeffs) {
  FqPoly f;
  f.reserve(prime_coeffs.size());
  for (auto c : prime_coeffs) f.push_back(F.from_u64(c));
  trim(F, f);
  return f;
}

FqPoly poly_add(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(F, r);
  return r;
}

FqPoly poly_sub(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(F, r);
  return r;
}

FqPoly poly_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) F.fma_into(a[i].data(), b[j].data(), r[i + j].data());
  }
  trim(F, r);
  return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw MathError("polynomial division by zero");
  FqPoly r = a;
  trim(F, r);
  if (r.size() < b.size()) return {{}, r};
  FqPoly q(r.size() - b.size() + 1, F.zero());
  auto lc_inv = F.inv(b.back());
  const int db = degree(b);
  for (int k = degree(r); k >= db; --k) {
    if (F.is_zero(r[k])) continue;
    auto c = F.mul(r[k], lc_inv);
    const int shift = k - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  trim(F, q);
  trim(F, r);
  return {q, r};
}

FqPoly poly_mod(const FqField& F, const FqPoly& a, const FqPoly& b) {
  return poly_divmod(F, a, b).second;
}

FqPoly poly_monic(const FqField& F, const FqPoly& a) {
  if (a.empty()) return a;
  auto c = F.inv(a.back());
  FqPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(F.mul(x, c));
  return r;
}

FqPoly poly_gcd(const FqField& F, FqPoly a, FqPoly b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    FqPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

FqPoly poly_derivative(const FqField& F, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1, F.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.scale(a[i], i % F.characteristic());
  trim(F, r);
  return r;
}

FqPoly poly_powmod(const FqField& F, FqPoly base, const Integer& e, const FqPoly& mod) {
  FqPoly result = {F.one()};
  result = poly_mod(F, result, mod);
  base = poly_mod(F, base, mod);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mod(F, poly_mul(F, result, base), mod);
    if (i + 1 < bits) base = poly_mod(F, poly_mul(F, base, base), mod);
  }
  return result;
}

FqField::Elem poly_eval(const FqField& F, const FqPoly& f, const FqField::Elem& x) {
  FqField::Elem acc = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

bool factor_less(const FqPoly& a, const FqPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = FqField::compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

// Inverse Frobenius on coefficients: x -> x^(p^(l-1)).
FqField::Elem pth_root(const FqField& F, const FqField::Elem& x) {
  if (F.degree() == 1) return x;
  Integer e = linfin::pow(linfin::from_u64(F.characteristic()), F.degree() - 1);
  return F.pow(x, e);
}

std::vector<FqFactor> squarefree(const FqField& F, const FqPoly& f) {
  std::vector<FqFactor> out;
  const std::uint64_t p = F.characteristic();
  FqPoly one = {F.one()};
  FqPoly d = poly_derivative(F, f);
  auto pth_root_poly = [&](const FqPoly& c) {
    FqPoly r;
    for (std::size_t i = 0; i < c.size(); i += p) r.push_back(pth_root(F, c[i]));
    trim(F, r);
    return r;
  };
  if (!d.empty()) {
    FqPoly c = poly_gcd(F, f, d);
    FqPoly w = poly_divmod(F, f, c).first;
    unsigned i = 1;
    while (degree(w) > 0) {
      FqPoly y = poly_gcd(F, w, c);
      FqPoly fac = poly_divmod(F, w, y).first;
      if (degree(fac) > 0) out.push_back({poly_monic(F, fac), i});
      w = y;
      c = poly_divmod(F, c, y).first;
      ++i;
    }
    if (degree(c) > 0) {
      for (auto& [g, m] : squarefree(F, poly_monic(F, pth_root_poly(c))))
        out.push_back({g, static_cast<unsigned>(m * p)});
    }
  } else {
    for (auto& [g, m] : squarefree(F, poly_monic(F, pth_root_poly(f))))
      out.push_back({g, static_cast<unsigned>(m * p)});
  }
  return out;
}

std::vector<std::pair<FqPoly, unsigned>> distinct_degree(const FqField& F, FqPoly f) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  const Integer q = F.size();
  FqPoly x = {F.zero(), F.one()};
  FqPoly h = x;
  unsigned d = 1;
  while (degree(f) >= 2 * static_cast<int>(d)) {
    h = poly_powmod(F, h, q, f);
    FqPoly g = poly_gcd(F, f, poly_sub(F, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = poly_divmod(F, f, g).first;
      h = poly_mod(F, h, f);
    }
    ++d;
  }
  if (degree(f) > 0) out.emplace_back(poly_monic(F, f), static_cast<unsigned>(degree(f)));
  return out;
}

void equal_degree(const FqField& F, const FqPoly& g, unsigned d, std::mt19937_64& rng,
                  std::vector<FqPoly>& out) {
  if (degree(g) == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = F.characteristic();
  const int n = degree(g);
  for (;;) {
    FqPoly a(n, F.zero());
    for (auto& c : a)
      for (auto& x : c) x = rng() % p;
    trim(F, a);
    if (degree(a) <= 0) continue;
    FqPoly b;
    if (p == 2) {
      // Absolute trace to GF(2) of the degree-d extension.
      FqPoly t = a;
      b = a;
      unsigned steps = F.degree() * d;
      for (unsigned i = 1; i < steps; ++i) {
        t = poly_mod(F, poly_mul(F, t, t), g);
        b = poly_add(F, b, t);
      }
    } else {
      Integer e = (linfin::pow(F.size(), d) - 1) / 2;
      b = poly_sub(F, poly_powmod(F, a, e, g), FqPoly{F.one()});
    }
    FqPoly h = poly_gcd(F, g, b);
    if (degree(h) > 0 && degree(h) < n) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, poly_divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FqFactor> factor(const FqField& F, const FqPoly& f_in) {
  FqPoly f = f_in;
  trim(F, f);
  if (f.empty()) throw DomainError("cannot factor the zero polynomial");
  std::vector<FqFactor> out;
  if (degree(f) == 0) return out;
  f = poly_monic(F, f);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (auto& [s, mult] : squarefree(F, f)) {
    for (auto& [g, d] : distinct_degree(F, s)) {
      std::vector<FqPoly> irr;
      equal_degree(F, g, d, rng, irr);
      for (auto& h : irr) out.push_back({poly_monic(F, h), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FqFactor& a, const FqFactor& b) { return factor_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const FqField& F, const FqPoly& f_in) {
  FqPoly f = f_in;
  trim(F, f);
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  f = poly_monic(F, f);
  const Integer q = F.size();
  FqPoly x = {F.zero(), F.one()};
  auto frob_power = [&](unsigned k) {
    FqPoly h = x;
    for (unsigned i = 0; i < k; ++i) h = poly_powmod(F, h, q, f);
    return h;
  };
  if (poly_sub(F, frob_power(static_cast<unsigned>(n)), x).size() != 0) return false;
  auto fac = factor_integer(Integer(n));
  for (const auto& [r, e] : *fac) {
    unsigned k = static_cast<unsigned>(n / r.get_ui());
    FqPoly g = poly_gcd(F, f, poly_sub(F, frob_power(k), x));
    if (degree(g) != 0) return false;
  }
  return true;
}

std::vector<FqField::Elem> roots(const FqField& F, const FqPoly& f) {
  std::vector<FqField::Elem> out;
  for (const auto& [g, m] : factor(F, f)) {
    if (degree(g) == 1) out.push_back(F.neg(g[0]));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return FqField::compare(a, b) < 0; });
  return out;
}

std::vector<std::uint64_t> first_irreducible(std::uint64_t p, unsigned deg) {
  if (deg == 0) throw DomainError("degree must be positive");
  auto Fp = FqField::prime_field(p);
  // digits[0] = c0 is the most significant digit of the counter.
  std::vector<std::uint64_t> coeffs(deg + 1, 0);
  coeffs[deg] = 1;
  for (;;) {
    if (is_irreducible(*Fp, from_coefficients(*Fp, coeffs))) return coeffs;
    int i = static_cast<int>(deg) - 1;
    while (i >= 0) {
      if (++coeffs[i] < p) break;
      coeffs[i] = 0;
      --i;
    }
    if (i < 0) throw InternalError("no irreducible polynomial found");
  }
}

}  // namespace linfin::gf
