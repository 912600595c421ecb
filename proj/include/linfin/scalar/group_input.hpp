#pragma once

#include <string>
#include <vector>

#include "linfin/scalar/matrix.hpp"

namespace linfin::scalar {

// Clears every denominator of the generator entries: for each entry b,
// integer_part * poly_part * b has integral polynomial coordinates.
// Over Q and number fields poly_part is 1.
struct DenominatorClearer {
  Integer integer_part = 1;
  MPoly poly_part;
};

DenominatorClearer compute_mu(const Field& field, const std::vector<Matrix>& mats);

// Finitely generated subgroup of GL(n, F) with exact inverses.
struct GroupInput {
  FieldPtr field;
  std::size_t n = 0;
  std::vector<Matrix> gens;
  std::vector<Matrix> inverses;
  DenominatorClearer mu;

  // Checks invertibility and computes inverses and mu. At least one
  // generator is required.
  static GroupInput make(FieldPtr field, std::vector<Matrix> gens);

  std::size_t rank() const { return gens.size(); }
};

std::string mu_to_string(const Field& field, const DenominatorClearer& mu);

}  // namespace linfin::scalar
