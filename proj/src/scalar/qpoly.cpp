#include "linfin/scalar/qpoly.hpp"

#include <algorithm>

#include "linfin/core/errors.hpp"
#include "linfin/gf/fq_poly.hpp"

namespace linfin::scalar {

int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw MathError("polynomial division by zero");
  QPoly r = a, q;
  const int db = degree(b);
  if (degree(r) >= db) q.assign(degree(r) - db + 1, 0);
  for (int k = degree(r); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational c = r[k] / b.back();
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  trim(r);
  trim(q);
  return {q, r};
}

QPoly qpoly_monic(const QPoly& a) {
  if (a.empty()) return a;
  QPoly r = a;
  Rational lc = a.back();
  for (auto& c : r) c /= lc;
  return r;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = qpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qpoly_monic(a);
}

QPoly qpoly_derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

Rational qpoly_eval(const QPoly& f, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

gf::ZPoly primitive_part(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f) den = lcm(den, c.get_den());
  gf::ZPoly z;
  for (const auto& c : f) z.push_back(Integer(c * den));
  Integer g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (g == 0) return {};
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

namespace {

QPoly to_q(const gf::ZPoly& z) {
  QPoly r;
  for (const auto& c : z) r.emplace_back(c);
  return r;
}

// Exact quotient a / b over Z, or nullopt if b does not divide a.
std::optional<gf::ZPoly> zpoly_exact_div(const gf::ZPoly& a, const gf::ZPoly& b) {
  gf::ZPoly r = a;
  const int db = static_cast<int>(b.size()) - 1;
  int dr = static_cast<int>(r.size()) - 1;
  if (dr < db) return std::nullopt;
  gf::ZPoly q(dr - db + 1, 0);
  for (int k = dr; k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c = r[k] / b.back();
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

// Factors a squarefree primitive integer polynomial of positive degree.
std::vector<gf::ZPoly> factor_squarefree_z(gf::ZPoly A) {
  const int d = static_cast<int>(A.size()) - 1;
  if (d <= 1) return {A};
  Integer maxabs = 0;
  for (const auto& c : A) maxabs = std::max(maxabs, Integer(abs(c)));
  const Integer lc = A.back();
  Integer bound = (Integer(1) << d) * (d + 1) * maxabs * abs(lc);
  Integer start = 2 * bound + 1;
  if (start >= (Integer(1) << 61))
    throw ResourceError("coefficient bound too large for rational factorization");

  // Prime with lc nonzero and A squarefree modulo p.
  Integer cand = start;
  std::uint64_t p = 0;
  gf::FqFieldPtr F;
  std::vector<gf::FqPoly> modular;
  for (;;) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    if (cand >= (Integer(1) << 62))
      throw ResourceError("no suitable prime for rational factorization");
    p = to_u64(cand);
    if (reduce_mod(lc, p) == 0) continue;
    F = gf::FqField::prime_field(p);
    std::vector<std::uint64_t> c;
    for (const auto& x : A) c.push_back(reduce_mod(x, p));
    gf::FqPoly Ap = gf::from_coefficients(*F, c);
    if (gf::degree(gf::poly_gcd(*F, Ap, gf::poly_derivative(*F, Ap))) > 0) continue;
    for (auto& [g, m] : gf::factor(*F, Ap)) modular.push_back(g);
    break;
  }

  const Integer P = from_u64(p);
  auto lift = [&](const gf::FqPoly& g) {
    gf::ZPoly z;
    for (const auto& c : g) {
      Integer v = from_u64(c[0]);
      if (2 * v > P) v -= P;
      z.push_back(v);
    }
    return z;
  };

  std::vector<gf::ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      gf::FqPoly prod = {F->from_u64(reduce_mod(A.back(), p))};
      for (auto i : idx) prod = gf::poly_mul(*F, prod, modular[i]);
      gf::ZPoly G = primitive_part(to_q(lift(prod)));
      if (auto q = zpoly_exact_div(A, G)) {
        found.push_back(G);
        A = *q;
        for (std::size_t k = s; k-- > 0;) modular.erase(modular.begin() + static_cast<long>(idx[k]));
        hit = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == modular.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (A.size() > 1) found.push_back(A);
  return found;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<QFactor> factor_rational(const QPoly& f_in) {
  QPoly f = f_in;
  trim(f);
  if (f.empty()) throw DomainError("cannot factor the zero polynomial");
  std::vector<QFactor> out;
  if (degree(f) == 0) return out;
  f = qpoly_monic(f);

  // Yun's squarefree decomposition.
  QPoly df = qpoly_derivative(f);
  QPoly a0 = qpoly_gcd(f, df);
  QPoly b = qpoly_divmod(f, a0).first;
  QPoly c = qpoly_divmod(df, a0).first;
  QPoly d = qpoly_sub(c, qpoly_derivative(b));
  for (unsigned i = 1; degree(b) > 0; ++i) {
    QPoly a = qpoly_gcd(b, d);
    b = qpoly_divmod(b, a).first;
    c = qpoly_divmod(d, a).first;
    d = qpoly_sub(c, qpoly_derivative(b));
    if (degree(a) > 0)
      for (auto& z : factor_squarefree_z(primitive_part(a)))
        out.push_back({qpoly_monic(to_q(z)), i});
  }
  std::sort(out.begin(), out.end(),
            [](const QFactor& x, const QFactor& y) { return qpoly_less(x.factor, y.factor); });
  return out;
}

NormalizedMinpoly normalize_minpoly(const QPoly& f_in) {
  QPoly f = f_in;
  trim(f);
  if (degree(f) < 1) throw DomainError("minimal polynomial must have degree >= 1");
  f = qpoly_monic(f);
  auto fac = factor_rational(f);
  if (fac.size() != 1 || fac[0].multiplicity != 1)
    throw DomainError("minimal polynomial " + qpoly_to_string(f) +
                      " is reducible over Q: factor " + qpoly_to_string(fac[0].factor));
  Integer d = 1;
  for (const auto& c : f) d = lcm(d, c.get_den());
  const int k = degree(f);
  NormalizedMinpoly out{{}, d};
  for (int i = 0; i <= k; ++i) {
    Rational c = f[i] * pow(d, static_cast<unsigned long>(k - i));
    out.poly.push_back(c.get_num());
  }
  return out;
}

std::string qpoly_to_string(const QPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string s;
  for (int i = degree(f); i >= 0; --i) {
    const Rational& c = f[i];
    if (c == 0) continue;
    Rational a = abs(c);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty()) {
      term = linfin::to_string(a);
    } else if (a == 1) {
      term = mono;
    } else {
      term = linfin::to_string(a) + "*" + mono;
    }
    if (s.empty()) {
      s = c < 0 ? "-" + term : term;
    } else {
      s += c < 0 ? " - " + term : " + " + term;
    }
  }
  return s;
}

}  // namespace linfin::scalar
