#include "linfin/scalar/field.hpp"

#include <algorithm>
#include <set>

#include "linfin/core/errors.hpp"

namespace linfin::scalar {

const char* field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Rationals:
      return "rationals";
    case FieldKind::NumberField:
      return "number_field";
    case FieldKind::RationalFunctionField:
      return "rational_function";
    case FieldKind::AlgebraicFunctionField:
      return "algebraic_function";
  }
  return "?";
}

Field::Field(FieldKind kind, BaseFieldPtr base, std::vector<std::string> vars, Limits limits)
    : kind_(kind), ring_(std::move(base), vars.size()), vars_(std::move(vars)), limits_(limits) {
  scale_ = RatFunc{ring_.one(), ring_.one()};
}

FieldPtr Field::rationals(Limits limits) {
  return FieldPtr(new Field(FieldKind::Rationals, BaseField::rationals(), {}, limits));
}

FieldPtr Field::number_field(BaseFieldPtr nf, Limits limits) {
  if (nf->kind() != BaseKind::NumberField) throw DomainError("number_field needs a number field base");
  return FieldPtr(new Field(FieldKind::NumberField, std::move(nf), {}, limits));
}

FieldPtr Field::rational_function_field(BaseFieldPtr base, std::vector<std::string> vars,
                                        Limits limits) {
  if (vars.empty()) throw DomainError("rational function field needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
    if (base->has_generator() && v == base->generator_name())
      throw DomainError("variable '" + v + "' clashes with the coefficient field generator");
  }
  return FieldPtr(new Field(FieldKind::RationalFunctionField, std::move(base), std::move(vars), limits));
}

namespace {

using LPoly = std::vector<RatFunc>;

void ltrim(const Field& F, LPoly& f) {
  while (!f.empty() && F.rf_is_zero(f.back())) f.pop_back();
}

std::pair<LPoly, LPoly> ldivmod(const Field& F, const LPoly& a, const LPoly& b) {
  LPoly r = a, q;
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(r.size()) - 1;
  if (da >= db) q.assign(da - db + 1, F.rf_zero());
  RatFunc inv = F.rf_inv(b.back());
  for (int k = da; k >= db; --k) {
    if (F.rf_is_zero(r[k])) continue;
    RatFunc c = F.rf_mul(r[k], inv);
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] = F.rf_sub(r[k - db + j], F.rf_mul(c, b[j]));
  }
  ltrim(F, r);
  ltrim(F, q);
  return {q, r};
}

}  // namespace

FieldPtr Field::algebraic_function_field(const FieldPtr& rf, const std::vector<Elem>& minpoly,
                                         std::string name) {
  if (rf->kind() != FieldKind::RationalFunctionField)
    throw DomainError("algebraic function field needs a rational function field base");
  const Field& L = *rf;
  LPoly f;
  for (const auto& c : minpoly) {
    if (c.size() != 1) throw DomainError("minimal polynomial coefficient outside the base");
    f.push_back(c[0]);
  }
  ltrim(L, f);
  if (f.size() < 2) throw DomainError("minimal polynomial must have degree >= 1");
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  if (name == L.base().generator_name() && L.base().has_generator())
    throw DomainError("generator '" + name + "' clashes with the coefficient field generator");
  for (const auto& v : L.var_names())
    if (v == name) throw DomainError("generator '" + name + "' clashes with a variable");

  std::vector<Elem> user;
  for (const auto& c : f) user.push_back({c});

  RatFunc lead_inv = L.rf_inv(f.back());
  for (auto& c : f) c = L.rf_mul(c, lead_inv);
  MPoly D = L.ring().one();
  for (unsigned i = 0; i < e; ++i) D = L.ring().lcm(D, f[i].den);

  // Separability: gcd(f, f') must be a unit.
  LPoly df;
  for (unsigned i = 1; i <= e; ++i) df.push_back(L.rf_mul(f[i], L.rf_from_poly(L.ring().constant(L.base().from_integer(i)))));
  ltrim(L, df);
  if (df.empty()) throw DomainError("minimal polynomial is inseparable (zero derivative)");
  LPoly x = f, y = df;
  while (!y.empty()) {
    auto r = ldivmod(L, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.size() > 1) throw DomainError("minimal polynomial is not squarefree");

  FieldPtr out(new Field(FieldKind::AlgebraicFunctionField, L.base_ptr(), L.var_names(), L.limits()));
  Field* F = const_cast<Field*>(out.get());
  F->e_ = e;
  F->name_ = std::move(name);
  F->rf_field_ = rf;
  F->user_minpoly_ = std::move(user);
  F->scale_ = L.rf_from_poly(D);
  RatFunc Dr = L.rf_from_poly(D);
  RatFunc Dpow = L.rf_one();
  F->minpoly_.assign(e + 1, MPoly{});
  F->minpoly_[e] = L.ring().one();
  for (unsigned i = e; i-- > 0;) {
    Dpow = L.rf_mul(Dpow, Dr);
    RatFunc c = L.rf_mul(f[i], Dpow);
    if (!L.ring().is_one(c.den)) throw InternalError("minimal polynomial rescaling left a denominator");
    F->minpoly_[i] = c.num;
  }
  return out;
}

FieldPtr Field::with_limits(Limits limits) const {
  std::shared_ptr<Field> copy(new Field(*this));
  copy->limits_ = limits;
  return copy;
}

Field::Elem Field::zero() const { return Elem(e_, rf_zero()); }

Field::Elem Field::one() const {
  Elem r = zero();
  r[0] = rf_one();
  return r;
}

Field::Elem Field::from_integer(const Integer& v) const { return from_base(base().from_integer(v)); }

Field::Elem Field::from_rational(const Rational& v) const { return from_base(base().from_rational(v)); }

Field::Elem Field::from_base(const BaseElem& c) const {
  Elem r = zero();
  r[0] = RatFunc{ring_.constant(c), ring_.one()};
  return r;
}

Field::Elem Field::from_ratfunc(const RatFunc& x) const {
  Elem r = zero();
  r[0] = x;
  return r;
}

Field::Elem Field::variable(std::size_t i) const {
  Elem r = zero();
  r[0] = RatFunc{ring_.variable(i), ring_.one()};
  return r;
}

Field::Elem Field::generator() const {
  if (kind_ != FieldKind::AlgebraicFunctionField) throw DomainError("field has no algebraic generator");
  Elem r = zero();
  RatFunc inv_scale = rf_inv(scale_);
  if (e_ == 1) {
    r[0] = rf_mul(rf_from_poly(ring_.neg(minpoly_[0])), inv_scale);
  } else {
    r[1] = inv_scale;
  }
  return r;
}

bool Field::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (!c.num.empty()) return false;
  return true;
}

bool Field::is_one(const Elem& a) const {
  if (!ring_.is_one(a[0].num) || !ring_.is_one(a[0].den)) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].num.empty()) return false;
  return true;
}

void Field::check_limits(const RatFunc& a) const {
  if (a.num.size() > limits_.max_terms || a.den.size() > limits_.max_terms)
    throw ResourceError("scalar exceeds the term budget");
  if (ring_.max_bits(a.num) > limits_.max_bits || ring_.max_bits(a.den) > limits_.max_bits)
    throw ResourceError("scalar exceeds the bit budget");
}

void Field::check_limits(const Elem& a) const {
  for (const auto& c : a) check_limits(c);
}

RatFunc Field::rf_normalize(MPoly num, MPoly den) const {
  if (den.empty()) throw MathError("division by zero");
  if (num.empty()) return rf_zero();
  if (ring_.nvars() == 0) {
    RatFunc r{std::move(num), ring_.one()};
    if (!ring_.is_one(den))
      r.num = ring_.constant(base().div(ring_.constant_value(r.num), ring_.constant_value(den)));
    check_limits(r);
    return r;
  }
  if (!ring_.is_one(den)) {
    MPoly g = ring_.gcd(num, den);
    if (!ring_.is_one(g)) {
      num = ring_.divide_exact(num, g);
      den = ring_.divide_exact(den, g);
    }
    const BaseElem& lc = ring_.leading_coefficient(den);
    if (!base().is_one(lc)) {
      BaseElem inv = base().inv(lc);
      num = ring_.scale(num, inv);
      den = ring_.scale(den, inv);
    }
  }
  RatFunc r{std::move(num), std::move(den)};
  check_limits(r);
  return r;
}

RatFunc Field::rf_make(MPoly num, MPoly den) const { return rf_normalize(std::move(num), std::move(den)); }

RatFunc Field::rf_add(const RatFunc& a, const RatFunc& b) const {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  if (a.den == b.den) return rf_normalize(ring_.add(a.num, b.num), a.den);
  return rf_normalize(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)),
                      ring_.mul(a.den, b.den));
}

RatFunc Field::rf_neg(const RatFunc& a) const { return RatFunc{ring_.neg(a.num), a.den}; }

RatFunc Field::rf_sub(const RatFunc& a, const RatFunc& b) const { return rf_add(a, rf_neg(b)); }

RatFunc Field::rf_mul(const RatFunc& a, const RatFunc& b) const {
  if (a.num.empty() || b.num.empty()) return rf_zero();
  if (ring_.nvars() > 0 && ring_.is_one(a.den) && ring_.is_one(b.den)) {
    RatFunc r{ring_.mul(a.num, b.num), ring_.one()};
    check_limits(r);
    return r;
  }
  return rf_normalize(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
}

RatFunc Field::rf_inv(const RatFunc& a) const {
  if (a.num.empty()) throw MathError("division by zero");
  return rf_normalize(a.den, a.num);
}

Field::Elem Field::add(const Elem& a, const Elem& b) const {
  Elem r(e_);
  for (unsigned i = 0; i < e_; ++i) r[i] = rf_add(a[i], b[i]);
  return r;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const {
  Elem r(e_);
  for (unsigned i = 0; i < e_; ++i) r[i] = rf_sub(a[i], b[i]);
  return r;
}

Field::Elem Field::neg(const Elem& a) const {
  Elem r(e_);
  for (unsigned i = 0; i < e_; ++i) r[i] = rf_neg(a[i]);
  return r;
}

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  if (e_ == 1) return {rf_mul(a[0], b[0])};
  std::vector<RatFunc> prod(2 * e_ - 1, rf_zero());
  for (unsigned i = 0; i < e_; ++i) {
    if (a[i].num.empty()) continue;
    for (unsigned j = 0; j < e_; ++j) {
      if (b[j].num.empty()) continue;
      prod[i + j] = rf_add(prod[i + j], rf_mul(a[i], b[j]));
    }
  }
  for (unsigned t = 2 * e_ - 2; t >= e_; --t) {
    if (prod[t].num.empty()) continue;
    const RatFunc c = prod[t];
    for (unsigned i = 0; i < e_; ++i) {
      if (minpoly_[i].empty()) continue;
      prod[t - e_ + i] = rf_sub(prod[t - e_ + i], rf_mul(c, rf_from_poly(minpoly_[i])));
    }
    prod[t] = rf_zero();
  }
  prod.resize(e_);
  return prod;
}

Field::Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw MathError("division by zero");
  if (e_ == 1) return {rf_inv(a[0])};
  LPoly r0, r1 = a, s0, s1 = {rf_one()};
  for (const auto& c : minpoly_) r0.push_back(rf_from_poly(c));
  ltrim(*this, r1);
  while (r1.size() > 1) {
    auto [q, r] = ldivmod(*this, r0, r1);
    LPoly qs1;
    if (!q.empty() && !s1.empty()) {
      qs1.assign(q.size() + s1.size() - 1, rf_zero());
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) qs1[i + j] = rf_add(qs1[i + j], rf_mul(q[i], s1[j]));
    }
    LPoly s(std::max(s0.size(), qs1.size()), rf_zero());
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] = rf_add(s[i], s0[i]);
    for (std::size_t i = 0; i < qs1.size(); ++i) s[i] = rf_sub(s[i], qs1[i]);
    ltrim(*this, s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw MathError("zero divisor: the defining polynomial is reducible");
  RatFunc c = rf_inv(r1[0]);
  Elem out = zero();
  for (std::size_t i = 0; i < s1.size() && i < e_; ++i) out[i] = rf_mul(s1[i], c);
  return out;
}

Field::Elem Field::pow(const Elem& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), Integer(-e));
  Elem result = one();
  if (e == 0) return result;
  Elem b = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, b);
    if (i + 1 < bits) b = mul(b, b);
  }
  return result;
}

Field::Elem Field::user_coordinates(const Elem& a) const {
  if (e_ == 1 || ring_.is_one(scale_.num)) return a;
  Elem r(e_);
  RatFunc s = rf_one();
  for (unsigned i = 0; i < e_; ++i) {
    r[i] = rf_mul(a[i], s);
    s = rf_mul(s, scale_);
  }
  return r;
}

std::string Field::rf_to_string(const RatFunc& a) const {
  if (ring_.nvars() == 0) return base().to_string(ring_.constant_value(a.num));
  std::string num = ring_.to_string(a.num, vars_);
  if (ring_.is_one(a.den)) return num;
  if (a.num.size() > 1) num = "(" + num + ")";
  std::string den = ring_.to_string(a.den, vars_);
  if (ring_.needs_parens_as_factor(a.den)) den = "(" + den + ")";
  return num + "/" + den;
}

std::string Field::to_string(const Elem& a) const {
  if (e_ == 1) return rf_to_string(a[0]);
  Elem u = user_coordinates(a);
  std::vector<SignedTerm> terms;
  for (unsigned i = 0; i < e_; ++i) {
    if (u[i].num.empty()) continue;
    std::string s = rf_to_string(u[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? name_ : name_ + "^" + std::to_string(i));
    bool negative = false;
    std::string body;
    if (s.find(' ') != std::string::npos) {
      body = "(" + s + ")";
    } else {
      negative = s[0] == '-';
      body = negative ? s.substr(1) : s;
    }
    if (!mono.empty()) body = body == "1" ? mono : body + "*" + mono;
    terms.push_back({negative, body});
  }
  return join_terms(terms);
}

bool Field::same_as(const Field& o) const {
  if (this == &o) return true;
  return kind_ == o.kind_ && base() == o.base() && vars_ == o.vars_ && e_ == o.e_ && name_ == o.name_ &&
         minpoly_ == o.minpoly_ && scale_ == o.scale_;
}

const Field& Scalar::check(const Scalar& o) const {
  if (!field_ || !o.field_) throw DomainError("uninitialized scalar");
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw DomainError("scalars over different fields");
  return *field_;
}

Scalar Scalar::operator+(const Scalar& o) const { return {field_, check(o).add(value_, o.value_)}; }
Scalar Scalar::operator-(const Scalar& o) const { return {field_, check(o).sub(value_, o.value_)}; }
Scalar Scalar::operator*(const Scalar& o) const { return {field_, check(o).mul(value_, o.value_)}; }
Scalar Scalar::operator/(const Scalar& o) const { return {field_, check(o).div(value_, o.value_)}; }
Scalar Scalar::operator-() const { return {field_, field_->neg(value_)}; }
bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return value_ == o.value_;
}
Scalar Scalar::inverse() const { return {field_, field_->inv(value_)}; }
Scalar Scalar::pow(const Integer& e) const { return {field_, field_->pow(value_, e)}; }

}  // namespace linfin::scalar
