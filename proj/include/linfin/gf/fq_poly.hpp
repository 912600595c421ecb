#pragma once

#include <utility>
#include <vector>

#include "linfin/gf/fq_field.hpp"

namespace linfin::gf {

// Dense univariate polynomial over an FqField, lowest degree first, no
// trailing zeros (the zero polynomial is empty).
using FqPoly = std::vector<FqField::Elem>;

struct FqFactor {
  FqPoly factor;
  unsigned multiplicity;
};

int degree(const FqPoly& f);
void trim(const FqField& F, FqPoly& f);
FqPoly from_coefficients(const FqField& F, const std::vector<std::uint64_t>& prime_coeffs);

FqPoly poly_add(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const FqField& F, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> poly_divmod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_monic(const FqField& F, const FqPoly& a);
FqPoly poly_gcd(const FqField& F, FqPoly a, FqPoly b);
FqPoly poly_derivative(const FqField& F, const FqPoly& a);
FqPoly poly_powmod(const FqField& F, FqPoly base, const Integer& e, const FqPoly& mod);
FqField::Elem poly_eval(const FqField& F, const FqPoly& f, const FqField::Elem& x);

// Complete factorization into monic irreducibles with multiplicities:
// squarefree decomposition, distinct-degree, then equal-degree splitting
// with a fixed-seed splitting sequence. Sorted by (degree, coefficient
// sequence lowest-first in the field's element order).
std::vector<FqFactor> factor(const FqField& F, const FqPoly& f);

bool is_irreducible(const FqField& F, const FqPoly& f);

// Roots in F, ascending in the element order.
std::vector<FqField::Elem> roots(const FqField& F, const FqPoly& f);

// Lexicographically first monic irreducible polynomial of the given degree
// over GF(p), enumerating lower coefficients as a base-p counter.
std::vector<std::uint64_t> first_irreducible(std::uint64_t p, unsigned degree);

// Ordering used for factor lists.
bool factor_less(const FqPoly& a, const FqPoly& b);

}  // namespace linfin::gf
