#include "linfin/scalar/base_field.hpp"

#include "linfin/core/errors.hpp"

namespace linfin::scalar {

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, body] = terms[i];
    if (i > 0) {
      s += neg ? " - " : " + ";
      s += body;
      continue;
    }
    if (!neg) {
      s = body;
      continue;
    }
    // Unary minus binds to the base, so "-x^2" would read as (-x)^2.
    std::size_t end = body.find_first_of("*/");
    std::string head = body.substr(0, end);
    s = head.find('^') != std::string::npos ? "-1*" + body : "-" + body;
  }
  return s;
}

std::shared_ptr<const BaseField> BaseField::rationals() {
  static const std::shared_ptr<const BaseField> q(new BaseField());
  return q;
}

std::shared_ptr<const BaseField> BaseField::number_field(const QPoly& minpoly, std::string name) {
  auto norm = normalize_minpoly(minpoly);
  std::shared_ptr<BaseField> f(new BaseField());
  f->kind_ = BaseKind::NumberField;
  f->degree_ = static_cast<unsigned>(norm.poly.size() - 1);
  f->name_ = std::move(name);
  f->minpoly_ = std::move(norm.poly);
  f->scale_ = norm.scale;
  f->user_minpoly_ = qpoly_monic(minpoly);
  trim(f->user_minpoly_);
  return f;
}

std::shared_ptr<const BaseField> BaseField::finite_field(gf::FqFieldPtr fq, std::string name) {
  std::shared_ptr<BaseField> f(new BaseField());
  f->kind_ = BaseKind::FiniteField;
  f->degree_ = fq->degree();
  f->name_ = std::move(name);
  f->fq_ = std::move(fq);
  return f;
}

std::uint64_t BaseField::characteristic() const {
  return kind_ == BaseKind::FiniteField ? fq_->characteristic() : 0;
}

BaseElem BaseField::one() const {
  BaseElem r = zero();
  r[0] = 1;
  return r;
}

BaseElem BaseField::from_integer(const Integer& v) const {
  BaseElem r = zero();
  if (kind_ == BaseKind::FiniteField) {
    r[0] = from_u64(reduce_mod(v, fq_->characteristic()));
  } else {
    r[0] = v;
  }
  return r;
}

BaseElem BaseField::from_rational(const Rational& v) const {
  BaseElem r = zero();
  if (kind_ == BaseKind::FiniteField) {
    auto m = reduce_mod(v, fq_->characteristic());
    if (!m) throw MathError("division by zero in characteristic " + std::to_string(fq_->characteristic()));
    r[0] = from_u64(*m);
  } else {
    r[0] = v;
  }
  return r;
}

BaseElem BaseField::generator() const {
  if (!has_generator()) throw DomainError("coefficient field has no generator");
  BaseElem r = zero();
  if (kind_ == BaseKind::NumberField) {
    if (degree_ == 1) {
      // Root of a linear polynomial is rational: b = -m0, generator b/d.
      r[0] = Rational(-minpoly_[0]) / scale_;
    } else {
      r[1] = Rational(1) / scale_;
    }
  } else {
    r[1] = 1;
  }
  return r;
}

bool BaseField::is_zero(const BaseElem& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

bool BaseField::is_one(const BaseElem& a) const {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

bool BaseField::is_prime_field_elem(const BaseElem& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

gf::FqField::Elem BaseField::to_fq(const BaseElem& a) const {
  gf::FqField::Elem r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = to_u64(a[i].get_num());
  return r;
}

BaseElem BaseField::from_fq(const gf::FqField::Elem& a) const {
  BaseElem r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = from_u64(a[i]);
  return r;
}

BaseElem BaseField::add(const BaseElem& a, const BaseElem& b) const {
  if (kind_ == BaseKind::FiniteField) return from_fq(fq_->add(to_fq(a), to_fq(b)));
  BaseElem r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = a[i] + b[i];
  return r;
}

BaseElem BaseField::sub(const BaseElem& a, const BaseElem& b) const {
  if (kind_ == BaseKind::FiniteField) return from_fq(fq_->sub(to_fq(a), to_fq(b)));
  BaseElem r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = a[i] - b[i];
  return r;
}

BaseElem BaseField::neg(const BaseElem& a) const {
  if (kind_ == BaseKind::FiniteField) return from_fq(fq_->neg(to_fq(a)));
  BaseElem r(degree_);
  for (unsigned i = 0; i < degree_; ++i) r[i] = -a[i];
  return r;
}

BaseElem BaseField::mul(const BaseElem& a, const BaseElem& b) const {
  switch (kind_) {
    case BaseKind::Rationals:
      return {a[0] * b[0]};
    case BaseKind::FiniteField:
      return from_fq(fq_->mul(to_fq(a), to_fq(b)));
    case BaseKind::NumberField:
      break;
  }
  const unsigned k = degree_;
  if (k == 1) return {a[0] * b[0]};
  std::vector<Rational> prod(2 * k - 1);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] += a[i] * b[j];
  }
  for (unsigned t = 2 * k - 2; t >= k; --t) {
    if (prod[t] == 0) continue;
    Rational c = prod[t];
    for (unsigned i = 0; i < k; ++i) prod[t - k + i] -= c * minpoly_[i];
    prod[t] = 0;
  }
  prod.resize(k);
  return prod;
}

BaseElem BaseField::inv(const BaseElem& a) const {
  if (is_zero(a)) throw MathError("division by zero");
  switch (kind_) {
    case BaseKind::Rationals:
      return {1 / a[0]};
    case BaseKind::FiniteField:
      return from_fq(fq_->inv(to_fq(a)));
    case BaseKind::NumberField:
      break;
  }
  if (degree_ == 1) return {1 / a[0]};
  QPoly m;
  for (const auto& c : minpoly_) m.emplace_back(c);
  QPoly r0 = m, r1 = a;
  trim(r1);
  QPoly s0, s1 = {1};
  while (scalar::degree(r1) > 0) {
    auto [q, r] = qpoly_divmod(r0, r1);
    QPoly s = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalError("number field modulus not irreducible");
  BaseElem out = zero();
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / r1[0];
  return out;
}

std::vector<Rational> BaseField::user_coordinates(const BaseElem& a) const {
  if (kind_ != BaseKind::NumberField || scale_ == 1) return a;
  std::vector<Rational> r(a.size());
  Integer s = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] * s;
    s *= scale_;
  }
  return r;
}

std::string BaseField::to_string(const BaseElem& a) const {
  auto power = [&](std::size_t i) {
    return i == 1 ? name_ : name_ + "^" + std::to_string(i);
  };
  std::vector<SignedTerm> terms;
  if (kind_ == BaseKind::FiniteField) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      std::string c = linfin::to_string(a[i].get_num());
      if (i == 0) {
        terms.push_back({false, c});
      } else {
        terms.push_back({false, a[i] == 1 ? power(i) : c + "*" + power(i)});
      }
    }
    return join_terms(terms);
  }
  auto u = user_coordinates(a);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Rational m = abs(u[i]);
    std::string body;
    if (i == 0) {
      body = linfin::to_string(m);
    } else if (m == 1) {
      body = power(i);
    } else {
      body = linfin::to_string(m) + "*" + power(i);
    }
    terms.push_back({u[i] < 0, body});
  }
  return join_terms(terms);
}

std::size_t BaseField::max_bits(const BaseElem& a) const {
  std::size_t b = 0;
  for (const auto& c : a) {
    b = std::max(b, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    b = std::max(b, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return b;
}

bool BaseField::operator==(const BaseField& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || degree_ != o.degree_ || name_ != o.name_) return false;
  switch (kind_) {
    case BaseKind::Rationals:
      return true;
    case BaseKind::NumberField:
      return minpoly_ == o.minpoly_ && scale_ == o.scale_;
    case BaseKind::FiniteField:
      return *fq_ == *o.fq_;
  }
  return false;
}

}  // namespace linfin::scalar
