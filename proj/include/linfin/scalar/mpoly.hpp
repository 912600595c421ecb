#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linfin/scalar/base_field.hpp"

namespace linfin::scalar {

using Exponent = std::vector<unsigned>;

struct Term {
  Exponent exp;
  BaseElem coef;
  bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
};

// Sparse polynomial: nonzero terms in strictly decreasing graded
// lexicographic order (x1 > x2 > ... within a degree).
using MPoly = std::vector<Term>;

bool grlex_greater(const Exponent& a, const Exponent& b);

// Polynomial ring P[x1..xm] over a coefficient field.
class PolyRing {
 public:
  PolyRing(BaseFieldPtr base, std::size_t nvars) : base_(std::move(base)), nvars_(nvars) {}

  const BaseField& base() const { return *base_; }
  const BaseFieldPtr& base_ptr() const { return base_; }
  std::size_t nvars() const { return nvars_; }

  MPoly zero() const { return {}; }
  MPoly one() const { return constant(base_->one()); }
  MPoly constant(const BaseElem& c) const;
  MPoly variable(std::size_t i) const;

  bool is_zero(const MPoly& a) const { return a.empty(); }
  bool is_one(const MPoly& a) const;
  bool is_constant(const MPoly& a) const;
  BaseElem constant_value(const MPoly& a) const;
  const BaseElem& leading_coefficient(const MPoly& a) const { return a.front().coef; }

  MPoly add(const MPoly& a, const MPoly& b) const;
  MPoly sub(const MPoly& a, const MPoly& b) const;
  MPoly neg(const MPoly& a) const;
  MPoly mul(const MPoly& a, const MPoly& b) const;
  MPoly scale(const MPoly& a, const BaseElem& c) const;
  MPoly monic(const MPoly& a) const;
  MPoly pow(const MPoly& a, unsigned long e) const;

  // Exact quotient; nullopt when b does not divide a.
  std::optional<MPoly> divide(const MPoly& a, const MPoly& b) const;
  MPoly divide_exact(const MPoly& a, const MPoly& b) const;

  // Monic greatest common divisor (zero only for gcd(0, 0)).
  MPoly gcd(const MPoly& a, const MPoly& b) const;
  MPoly lcm(const MPoly& a, const MPoly& b) const;

  unsigned degree_in(const MPoly& a, std::size_t v) const;
  unsigned total_degree(const MPoly& a) const;
  // Coefficients of a as a polynomial in x_v (index = power of x_v).
  std::vector<MPoly> coefficients_in(const MPoly& a, std::size_t v) const;
  MPoly from_coefficients_in(const std::vector<MPoly>& c, std::size_t v) const;

  std::size_t max_bits(const MPoly& a) const;

  // Grammar expression using the given variable names.
  std::string to_string(const MPoly& a, const std::vector<std::string>& names) const;
  // True when to_string needs parentheses to act as a single factor.
  bool needs_parens_as_factor(const MPoly& a) const;

 private:
  MPoly gcd_rec(const MPoly& a, const MPoly& b) const;
  MPoly content_in(const MPoly& a, std::size_t v) const;
  MPoly prem_in(const MPoly& a, const MPoly& b, std::size_t v) const;
  MPoly univariate_gcd(const MPoly& a, const MPoly& b, std::size_t v) const;
  std::optional<std::size_t> main_variable(const MPoly& a, const MPoly& b) const;
  bool only_variable(const MPoly& a, std::size_t v) const;

  BaseFieldPtr base_;
  std::size_t nvars_;
};

}  // namespace linfin::scalar
