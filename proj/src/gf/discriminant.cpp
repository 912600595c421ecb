#include "linfin/gf/discriminant.hpp"

#include "linfin/core/errors.hpp"

namespace linfin::gf {

namespace {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) g = linfin::gcd(g, c);
  return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = deg(b);
  const Integer& lb = b.back();
  int e = deg(a) - db + 1;
  while (deg(a) >= db && !a.empty()) {
    Integer la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    --e;
  }
  if (e > 0) {
    Integer m = linfin::pow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= m;
  }
  return a;
}

}  // namespace

Integer resultant(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Integer sign = 1;
  if (deg(a) < deg(b)) {
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  if (deg(b) == 0) return sign * linfin::pow(b[0], static_cast<unsigned long>(deg(a)));

  Integer ca = content(a), cb = content(b);
  for (auto& c : a) c /= ca;
  for (auto& c : b) c /= cb;
  Integer t = linfin::pow(ca, static_cast<unsigned long>(deg(b))) *
              linfin::pow(cb, static_cast<unsigned long>(deg(a)));

  Integer g = 1, h = 1;
  for (;;) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    Integer divisor = g * linfin::pow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) {
      if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
        throw InternalError("subresultant division not exact");
      c /= divisor;
    }
    b = std::move(r);
    g = a.back();
    // h = g^delta / h^(delta - 1)
    if (delta > 0) {
      h = linfin::pow(g, static_cast<unsigned long>(delta)) /
          linfin::pow(h, static_cast<unsigned long>(delta - 1));
    }
    if (deg(b) == 0) break;
  }
  const int da = deg(a);
  Integer hh = linfin::pow(b.back(), static_cast<unsigned long>(da));
  if (da >= 1) hh /= linfin::pow(h, static_cast<unsigned long>(da - 1));
  return sign * t * hh;
}

Integer discriminant(const ZPoly& f_in) {
  ZPoly f = f_in;
  trim(f);
  const int k = deg(f);
  if (k < 1) throw DomainError("discriminant needs degree >= 1");
  if (k == 1) return 1;
  ZPoly df(k);
  for (int i = 1; i <= k; ++i) df[i - 1] = f[i] * i;
  Integer res = resultant(f, df);
  Integer disc = res / f.back();
  if (((k * (k - 1)) / 2) % 2 == 1) disc = -disc;
  return disc;
}

}  // namespace linfin::gf
