#include "linfin/scalar/group_input.hpp"

#include "linfin/core/errors.hpp"

namespace linfin::scalar {

DenominatorClearer compute_mu(const Field& F, const std::vector<Matrix>& mats) {
  const PolyRing& R = F.ring();
  DenominatorClearer mu;
  mu.poly_part = R.one();
  for (const auto& M : mats)
    for (const auto& x : M.entries())
      for (const auto& c : x) mu.poly_part = R.lcm(mu.poly_part, c.den);
  if (F.characteristic() != 0) return mu;
  for (const auto& M : mats)
    for (const auto& x : M.entries())
      for (const auto& c : x) {
        MPoly cleared = R.mul(c.num, R.divide_exact(mu.poly_part, c.den));
        for (const auto& t : cleared)
          for (const auto& q : t.coef) mu.integer_part = lcm(mu.integer_part, q.get_den());
      }
  return mu;
}

GroupInput GroupInput::make(FieldPtr field, std::vector<Matrix> gens) {
  if (gens.empty()) throw DomainError("a group needs at least one generator");
  GroupInput g;
  g.field = field;
  g.n = gens[0].degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& M = gens[i];
    if (M.degree() != g.n) throw DomainError("generators have different degrees");
    if (M.field_ptr() != field && !M.field().same_as(*field))
      throw DomainError("generator over a different field");
    try {
      g.inverses.push_back(M.inverse());
    } catch (const MathError&) {
      throw DomainError("generator " + std::to_string(i + 1) + " is singular");
    }
  }
  g.gens = std::move(gens);
  std::vector<Matrix> all = g.gens;
  all.insert(all.end(), g.inverses.begin(), g.inverses.end());
  g.mu = compute_mu(*field, all);
  return g;
}

std::string mu_to_string(const Field& F, const DenominatorClearer& mu) {
  std::string p = F.ring().to_string(mu.poly_part, F.var_names());
  if (F.nvars() == 0) return linfin::to_string(mu.integer_part);
  if (F.characteristic() != 0 || mu.integer_part == 1) return p;
  return linfin::to_string(mu.integer_part) + "*(" + p + ")";
}

}  // namespace linfin::scalar
