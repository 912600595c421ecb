#pragma once

#include <memory>
#include <string>
#include <vector>

#include "linfin/core/integer.hpp"
#include "linfin/gf/discriminant.hpp"
#include "linfin/gf/fq_field.hpp"
#include "linfin/scalar/qpoly.hpp"

namespace linfin::scalar {

// Coordinates of a coefficient-field element. Rationals: one entry.
// Number field: k rationals in the basis 1, b, ..., b^(k-1) where b is the
// integral generator (b = scale * user generator). Finite field GF(p^l):
// l integers in [0, p) in the basis 1, w, ..., w^(l-1).
using BaseElem = std::vector<Rational>;

enum class BaseKind { Rationals, NumberField, FiniteField };

class BaseField {
 public:
  static std::shared_ptr<const BaseField> rationals();
  // Normalizes and checks irreducibility; throws DomainError otherwise.
  static std::shared_ptr<const BaseField> number_field(const QPoly& minpoly,
                                                       std::string name = "a");
  static std::shared_ptr<const BaseField> finite_field(gf::FqFieldPtr fq,
                                                       std::string name = "w");

  BaseKind kind() const { return kind_; }
  unsigned degree() const { return degree_; }
  std::uint64_t characteristic() const;
  const std::string& generator_name() const { return name_; }
  bool has_generator() const { return degree_ > 1 || kind_ == BaseKind::NumberField; }

  // Number field data: monic integral minimal polynomial of b, the scale
  // d with b = d * user generator, and the polynomial as given.
  const gf::ZPoly& integral_minpoly() const { return minpoly_; }
  const Integer& scale() const { return scale_; }
  const QPoly& user_minpoly() const { return user_minpoly_; }
  const gf::FqFieldPtr& fq() const { return fq_; }

  BaseElem zero() const { return BaseElem(degree_, 0); }
  BaseElem one() const;
  BaseElem from_integer(const Integer& v) const;
  // Throws MathError when the denominator vanishes in characteristic p.
  BaseElem from_rational(const Rational& v) const;
  // The user-visible generator (number field root or residue w).
  BaseElem generator() const;

  bool is_zero(const BaseElem& a) const;
  bool is_one(const BaseElem& a) const;
  // Only the constant coordinate is nonzero.
  bool is_prime_field_elem(const BaseElem& a) const;

  BaseElem add(const BaseElem& a, const BaseElem& b) const;
  BaseElem sub(const BaseElem& a, const BaseElem& b) const;
  BaseElem neg(const BaseElem& a) const;
  BaseElem mul(const BaseElem& a, const BaseElem& b) const;
  BaseElem inv(const BaseElem& a) const;
  BaseElem div(const BaseElem& a, const BaseElem& b) const { return mul(a, inv(b)); }

  gf::FqField::Elem to_fq(const BaseElem& a) const;
  BaseElem from_fq(const gf::FqField::Elem& a) const;

  // Coordinates in the user generator's basis (number fields rescale).
  std::vector<Rational> user_coordinates(const BaseElem& a) const;

  // Expression in the scalar grammar.
  std::string to_string(const BaseElem& a) const;

  // Largest bit size among numerators and denominators.
  std::size_t max_bits(const BaseElem& a) const;

  bool operator==(const BaseField& o) const;
  bool operator!=(const BaseField& o) const { return !(*this == o); }

 private:
  BaseField() = default;

  BaseKind kind_ = BaseKind::Rationals;
  unsigned degree_ = 1;
  std::string name_;
  gf::ZPoly minpoly_;
  Integer scale_ = 1;
  QPoly user_minpoly_;
  gf::FqFieldPtr fq_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;

// Joins signed terms into an expression that re-parses to the same value.
struct SignedTerm {
  bool negative;
  std::string body;
};
std::string join_terms(const std::vector<SignedTerm>& terms);

}  // namespace linfin::scalar
