#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linfin/core/integer.hpp"
#include "linfin/gf/discriminant.hpp"

namespace linfin::scalar {

// Dense univariate polynomial over Q, lowest degree first, trimmed.
using QPoly = std::vector<Rational>;

int degree(const QPoly& f);
void trim(QPoly& f);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
QPoly qpoly_monic(const QPoly& a);
QPoly qpoly_gcd(QPoly a, QPoly b);
QPoly qpoly_derivative(const QPoly& a);
Rational qpoly_eval(const QPoly& f, const Rational& x);

// Primitive integer polynomial with positive leading coefficient that is a
// rational multiple of f.
gf::ZPoly primitive_part(const QPoly& f);

struct QFactor {
  QPoly factor;  // monic
  unsigned multiplicity;
};

// Factorization over Q into monic irreducibles, sorted by degree and then
// by coefficient sequence (lowest first). Squarefree decomposition, then a
// single large prime with subset recombination. Throws ResourceError if the
// coefficient bound needs a prime beyond machine size.
std::vector<QFactor> factor_rational(const QPoly& f);

struct NormalizedMinpoly {
  gf::ZPoly poly;  // monic integer polynomial with root scale * alpha
  Integer scale;
};

// Rescales an irreducible rational polynomial to a monic integer one.
// Throws DomainError naming a factor when f is reducible over Q.
NormalizedMinpoly normalize_minpoly(const QPoly& f);

std::string qpoly_to_string(const QPoly& f, const std::string& var = "t");

}  // namespace linfin::scalar
