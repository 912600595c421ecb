#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "linfin/scalar/base_field.hpp"
#include "linfin/scalar/mpoly.hpp"

namespace linfin::scalar {

// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
struct RatFunc {
  MPoly num;
  MPoly den;
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
};

enum class FieldKind { Rationals, NumberField, RationalFunctionField, AlgebraicFunctionField };

const char* field_kind_name(FieldKind k);

struct Limits {
  std::size_t max_bits = std::size_t{1} << 20;
  std::size_t max_terms = std::size_t{1} << 14;
};

// F = P(x1..xm)(alpha) with [F : P(x)] = e. Rationals and number fields
// are the cases m = 0, e = 1. An element is a vector of e coordinates in
// P(x) with respect to 1, b, ..., b^(e-1), where b = scale * alpha is a
// root of a monic polynomial with coefficients in P[x].
class Field {
 public:
  using Elem = std::vector<RatFunc>;

  static std::shared_ptr<const Field> rationals(Limits limits = {});
  static std::shared_ptr<const Field> number_field(BaseFieldPtr nf, Limits limits = {});
  static std::shared_ptr<const Field> rational_function_field(BaseFieldPtr base,
                                                              std::vector<std::string> vars,
                                                              Limits limits = {});
  // `minpoly` lists coefficients c0..ce in P(x); normalized to a monic
  // polynomial over P[x] by rescaling the generator. Must be squarefree.
  static std::shared_ptr<const Field> algebraic_function_field(
      const std::shared_ptr<const Field>& rational_functions, const std::vector<Elem>& minpoly,
      std::string name = "a");

  FieldKind kind() const { return kind_; }
  const BaseField& base() const { return ring_.base(); }
  const BaseFieldPtr& base_ptr() const { return ring_.base_ptr(); }
  const PolyRing& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.nvars(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  unsigned ext_degree() const { return e_; }
  const std::string& generator_name() const { return name_; }
  std::uint64_t characteristic() const { return base().characteristic(); }
  const Limits& limits() const { return limits_; }

  // Monic defining polynomial of b over P[x] (e+1 coefficients) and the
  // scale with b = scale * alpha.
  const std::vector<MPoly>& integral_minpoly() const { return minpoly_; }
  const RatFunc& scale() const { return scale_; }
  const std::vector<Elem>& user_minpoly() const { return user_minpoly_; }
  // The rational function field P(x) below an algebraic function field.
  const std::shared_ptr<const Field>& rational_functions() const { return rf_field_; }

  Elem zero() const;
  Elem one() const;
  Elem from_integer(const Integer& v) const;
  Elem from_rational(const Rational& v) const;
  Elem from_base(const BaseElem& c) const;
  Elem from_ratfunc(const RatFunc& r) const;
  Elem variable(std::size_t i) const;
  // User generator alpha of the top extension.
  Elem generator() const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, const Integer& e) const;

  // Rational-function arithmetic on P(x).
  RatFunc rf_make(MPoly num, MPoly den) const;
  RatFunc rf_zero() const { return RatFunc{{}, ring_.one()}; }
  RatFunc rf_one() const { return RatFunc{ring_.one(), ring_.one()}; }
  RatFunc rf_from_poly(const MPoly& p) const { return RatFunc{p, ring_.one()}; }
  RatFunc rf_add(const RatFunc& a, const RatFunc& b) const;
  RatFunc rf_sub(const RatFunc& a, const RatFunc& b) const;
  RatFunc rf_neg(const RatFunc& a) const;
  RatFunc rf_mul(const RatFunc& a, const RatFunc& b) const;
  RatFunc rf_inv(const RatFunc& a) const;
  RatFunc rf_div(const RatFunc& a, const RatFunc& b) const { return rf_mul(a, rf_inv(b)); }
  bool rf_is_zero(const RatFunc& a) const { return a.num.empty(); }

  // Coordinates with respect to 1, alpha, ..., alpha^(e-1).
  Elem user_coordinates(const Elem& a) const;

  std::string to_string(const Elem& a) const;
  std::string rf_to_string(const RatFunc& a) const;

  // Throws ResourceError when a exceeds the configured size budget.
  void check_limits(const Elem& a) const;
  void check_limits(const RatFunc& a) const;

  // Structural equality of descriptors.
  bool same_as(const Field& o) const;

  // Copy with different size limits.
  std::shared_ptr<const Field> with_limits(Limits limits) const;

 private:
  Field(FieldKind kind, BaseFieldPtr base, std::vector<std::string> vars, Limits limits);

  RatFunc rf_normalize(MPoly num, MPoly den) const;

  FieldKind kind_;
  PolyRing ring_;
  std::vector<std::string> vars_;
  unsigned e_ = 1;
  std::string name_;
  std::vector<MPoly> minpoly_;
  RatFunc scale_;
  std::vector<Elem> user_minpoly_;
  std::shared_ptr<const Field> rf_field_;
  Limits limits_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Field element bound to its field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldPtr f, Field::Elem v) : field_(std::move(f)), value_(std::move(v)) {}

  const FieldPtr& field() const { return field_; }
  const Field::Elem& value() const { return value_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(const Integer& e) const;
  bool is_zero() const { return field_->is_zero(value_); }
  std::string to_string() const { return field_->to_string(value_); }

 private:
  const Field& check(const Scalar& o) const;

  FieldPtr field_;
  Field::Elem value_;
};

}  // namespace linfin::scalar
