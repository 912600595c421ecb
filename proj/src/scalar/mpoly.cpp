#include "linfin/scalar/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "linfin/core/errors.hpp"

namespace linfin::scalar {

bool grlex_greater(const Exponent& a, const Exponent& b) {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {

struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_greater(a, b); }
};

}  // namespace

MPoly PolyRing::constant(const BaseElem& c) const {
  if (base_->is_zero(c)) return {};
  return {Term{Exponent(nvars_, 0), c}};
}

MPoly PolyRing::variable(std::size_t i) const {
  if (i >= nvars_) throw DomainError("variable index out of range");
  Exponent e(nvars_, 0);
  e[i] = 1;
  return {Term{e, base_->one()}};
}

bool PolyRing::is_constant(const MPoly& a) const {
  if (a.empty()) return true;
  if (a.size() > 1) return false;
  for (auto e : a[0].exp)
    if (e) return false;
  return true;
}

bool PolyRing::is_one(const MPoly& a) const {
  return a.size() == 1 && is_constant(a) && base_->is_one(a[0].coef);
}

BaseElem PolyRing::constant_value(const MPoly& a) const {
  if (!is_constant(a)) throw InternalError("polynomial is not constant");
  return a.empty() ? base_->zero() : a[0].coef;
}

MPoly PolyRing::add(const MPoly& a, const MPoly& b) const {
  MPoly r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      r.push_back(b[j++]);
    } else {
      BaseElem c = base_->add(a[i].coef, b[j].coef);
      if (!base_->is_zero(c)) r.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly PolyRing::neg(const MPoly& a) const {
  MPoly r = a;
  for (auto& t : r) t.coef = base_->neg(t.coef);
  return r;
}

MPoly PolyRing::sub(const MPoly& a, const MPoly& b) const { return add(a, neg(b)); }

MPoly PolyRing::mul(const MPoly& a, const MPoly& b) const {
  if (a.empty() || b.empty()) return {};
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  std::map<Exponent, BaseElem, GrlexGreater> acc;
  Exponent e(nvars_);
  for (const auto& s : a) {
    for (const auto& t : b) {
      for (std::size_t k = 0; k < nvars_; ++k) {
        e[k] = s.exp[k] + t.exp[k];
        if (e[k] < s.exp[k]) throw ResourceError("polynomial degree overflow");
      }
      BaseElem c = base_->mul(s.coef, t.coef);
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, std::move(c));
      } else {
        it->second = base_->add(it->second, c);
      }
    }
  }
  MPoly r;
  r.reserve(acc.size());
  for (auto& [x, c] : acc)
    if (!base_->is_zero(c)) r.push_back(Term{x, std::move(c)});
  return r;
}

MPoly PolyRing::scale(const MPoly& a, const BaseElem& c) const {
  if (base_->is_zero(c)) return {};
  MPoly r = a;
  for (auto& t : r) t.coef = base_->mul(t.coef, c);
  return r;
}

MPoly PolyRing::monic(const MPoly& a) const {
  if (a.empty() || base_->is_one(a.front().coef)) return a;
  return scale(a, base_->inv(a.front().coef));
}

MPoly PolyRing::pow(const MPoly& a, unsigned long e) const {
  MPoly result = one(), b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

std::optional<MPoly> PolyRing::divide(const MPoly& a, const MPoly& b) const {
  if (b.empty()) throw MathError("polynomial division by zero");
  if (is_one(b)) return a;
  MPoly q, r = a;
  const BaseElem lcb_inv = base_->inv(b.front().coef);
  while (!r.empty()) {
    Term t{Exponent(nvars_), {}};
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (r.front().exp[k] < b.front().exp[k]) return std::nullopt;
      t.exp[k] = r.front().exp[k] - b.front().exp[k];
    }
    t.coef = base_->mul(r.front().coef, lcb_inv);
    MPoly tb = mul(MPoly{t}, b);
    r = sub(r, tb);
    q = add(q, MPoly{t});
  }
  return q;
}

MPoly PolyRing::divide_exact(const MPoly& a, const MPoly& b) const {
  auto q = divide(a, b);
  if (!q) throw InternalError("inexact polynomial division");
  return *q;
}

unsigned PolyRing::degree_in(const MPoly& a, std::size_t v) const {
  unsigned d = 0;
  for (const auto& t : a) d = std::max(d, t.exp[v]);
  return d;
}

unsigned PolyRing::total_degree(const MPoly& a) const {
  unsigned d = 0;
  for (const auto& t : a) {
    unsigned s = 0;
    for (auto e : t.exp) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<MPoly> PolyRing::coefficients_in(const MPoly& a, std::size_t v) const {
  std::vector<MPoly> c(a.empty() ? 0 : degree_in(a, v) + 1);
  for (const auto& t : a) {
    Term s = t;
    s.exp[v] = 0;
    c[t.exp[v]].push_back(std::move(s));
  }
  for (auto& p : c)
    std::sort(p.begin(), p.end(), [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
  return c;
}

MPoly PolyRing::from_coefficients_in(const std::vector<MPoly>& c, std::size_t v) const {
  MPoly r;
  for (std::size_t i = 0; i < c.size(); ++i) {
    MPoly shifted = c[i];
    for (auto& t : shifted) t.exp[v] += static_cast<unsigned>(i);
    std::sort(shifted.begin(), shifted.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
    r = add(r, shifted);
  }
  return r;
}

bool PolyRing::only_variable(const MPoly& a, std::size_t v) const {
  for (const auto& t : a)
    for (std::size_t k = 0; k < nvars_; ++k)
      if (k != v && t.exp[k]) return false;
  return true;
}

std::optional<std::size_t> PolyRing::main_variable(const MPoly& a, const MPoly& b) const {
  for (std::size_t v = nvars_; v-- > 0;) {
    if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
  }
  return std::nullopt;
}

MPoly PolyRing::univariate_gcd(const MPoly& a, const MPoly& b, std::size_t v) const {
  using Dense = std::vector<BaseElem>;
  auto dense = [&](const MPoly& p) {
    Dense d(degree_in(p, v) + 1, base_->zero());
    for (const auto& t : p) d[t.exp[v]] = t.coef;
    return d;
  };
  auto dtrim = [&](Dense& d) {
    while (!d.empty() && base_->is_zero(d.back())) d.pop_back();
  };
  Dense x = dense(a), y = dense(b);
  dtrim(x);
  dtrim(y);
  while (!y.empty()) {
    BaseElem inv = base_->inv(y.back());
    const std::size_t dy = y.size() - 1;
    while (x.size() >= y.size()) {
      BaseElem c = base_->mul(x.back(), inv);
      const std::size_t shift = x.size() - 1 - dy;
      for (std::size_t j = 0; j <= dy; ++j) x[shift + j] = base_->sub(x[shift + j], base_->mul(c, y[j]));
      x.pop_back();
      dtrim(x);
    }
    std::swap(x, y);
  }
  MPoly r;
  for (std::size_t i = x.size(); i-- > 0;) {
    if (base_->is_zero(x[i])) continue;
    Exponent e(nvars_, 0);
    e[v] = static_cast<unsigned>(i);
    r.push_back(Term{e, x[i]});
  }
  return monic(r);
}

MPoly PolyRing::content_in(const MPoly& a, std::size_t v) const {
  MPoly g;
  for (const auto& c : coefficients_in(a, v)) {
    if (c.empty()) continue;
    g = g.empty() ? monic(c) : gcd_rec(g, c);
    if (is_one(g)) break;
  }
  return g;
}

MPoly PolyRing::prem_in(const MPoly& a, const MPoly& b, std::size_t v) const {
  const unsigned db = degree_in(b, v);
  const MPoly lcb = coefficients_in(b, v)[db];
  MPoly r = a;
  while (!r.empty() && degree_in(r, v) >= db) {
    const unsigned dr = degree_in(r, v);
    MPoly lcr = coefficients_in(r, v)[dr];
    Exponent e(nvars_, 0);
    e[v] = dr - db;
    MPoly shift = mul(lcr, MPoly{Term{e, base_->one()}});
    r = sub(mul(lcb, r), mul(shift, b));
  }
  return r;
}

MPoly PolyRing::gcd_rec(const MPoly& a, const MPoly& b) const {
  if (a.empty()) return monic(b);
  if (b.empty()) return monic(a);
  auto mv = main_variable(a, b);
  if (!mv) return one();
  const std::size_t v = *mv;
  if (only_variable(a, v) && only_variable(b, v)) return univariate_gcd(a, b, v);
  if (degree_in(a, v) == 0) return gcd_rec(a, content_in(b, v));
  if (degree_in(b, v) == 0) return gcd_rec(b, content_in(a, v));

  MPoly ca = content_in(a, v), cb = content_in(b, v);
  MPoly A = divide_exact(a, ca), B = divide_exact(b, cb);
  if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);
  MPoly g;
  for (;;) {
    MPoly R = prem_in(A, B, v);
    if (R.empty()) {
      g = B;
      break;
    }
    if (degree_in(R, v) == 0) {
      g = one();
      break;
    }
    A = std::move(B);
    B = divide_exact(R, content_in(R, v));
  }
  g = divide_exact(g, content_in(g, v));
  return monic(mul(gcd_rec(ca, cb), g));
}

MPoly PolyRing::gcd(const MPoly& a, const MPoly& b) const { return gcd_rec(a, b); }

MPoly PolyRing::lcm(const MPoly& a, const MPoly& b) const {
  if (a.empty() || b.empty()) return {};
  return monic(divide_exact(mul(a, b), gcd(a, b)));
}

std::size_t PolyRing::max_bits(const MPoly& a) const {
  std::size_t b = 0;
  for (const auto& t : a) b = std::max(b, base_->max_bits(t.coef));
  return b;
}

namespace {

std::string monomial(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k]) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

std::string PolyRing::to_string(const MPoly& a, const std::vector<std::string>& names) const {
  std::vector<SignedTerm> terms;
  const bool char0 = base_->characteristic() == 0;
  for (const auto& t : a) {
    std::string mono = monomial(t.exp, names);
    bool negative = false;
    std::string coef;
    bool unit = false;
    if (base_->is_prime_field_elem(t.coef)) {
      Rational c = t.coef[0];
      if (char0 && c < 0) {
        negative = true;
        c = -c;
      }
      unit = c == 1;
      coef = linfin::to_string(c);
    } else {
      coef = base_->to_string(t.coef);
      if (!is_identifier(coef)) coef = "(" + coef + ")";
    }
    std::string body;
    if (mono.empty()) {
      body = coef;
    } else if (unit) {
      body = mono;
    } else {
      body = coef + "*" + mono;
    }
    terms.push_back({negative, body});
  }
  return join_terms(terms);
}

bool PolyRing::needs_parens_as_factor(const MPoly& a) const {
  if (a.size() != 1) return true;
  if (!base_->is_one(a[0].coef)) return true;
  unsigned vars = 0;
  for (auto e : a[0].exp) vars += e ? 1 : 0;
  return vars > 1;
}

}  // namespace linfin::scalar
