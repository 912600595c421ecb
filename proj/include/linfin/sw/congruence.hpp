#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "linfin/gf/fq_matrix.hpp"
#include "linfin/scalar/group_input.hpp"

namespace linfin::sw {

enum class MapKind { Phi1, Phi2, Phi3, Phi4 };
enum class KernelProperty { TorsionFree, TorsionUnipotent };

const char* map_kind_name(MapKind k);
const char* kernel_property_name(KernelProperty k);

struct PrimeConstraints {
  Integer min_exclusive = 2;
  std::vector<Integer> forbid_divisors;
};

// The (skip+1)-th prime p >= 3 with p > min_exclusive dividing none of the
// forbidden values (zero entries are ignored).
std::uint64_t select_prime(const PrimeConstraints& c, std::size_t skip);

// A substitution point for the variables of a function field.
struct Point {
  // Characteristic 0: integer coordinates.
  std::vector<Rational> values;
  // Characteristic p: coordinates in the extension of degree `extension`
  // over the coefficient field F_q, realized as `field`; `base_image` is
  // the image of the generator of F_q (empty when F_q is a prime field).
  gf::FqFieldPtr field;
  gf::FqField::Elem base_image;
  std::vector<gf::FqField::Elem> coords;
  unsigned extension = 1;

  nlohmann::json to_json() const;
};

// Enumeration order: characteristic 0 coordinates run through 1, -1, 2,
// -2, ...; tuples by max-abs, then lexicographically. Characteristic p:
// tuples over F_q in element order, then tuples over F_{q^2} not already
// over a smaller field, and so on. Returns the (skip+1)-th point with
// mu(point) != 0; ResourceError after `budget` candidates.
Point select_point(const scalar::Field& field, const scalar::MPoly& mu, std::size_t skip,
                   std::size_t budget = std::size_t{1} << 20);

// Evaluates scalars of one field at a point given as images in a finite
// field.
class Reduction;
// Substitutes a characteristic-0 point into a function field, landing in
// the coefficient field or a number field over it.
class Substitution;

class CongruenceMap {
 public:
  MapKind kind() const { return kind_; }
  std::uint64_t prime() const { return p_; }
  const std::optional<Point>& point() const { return point_; }
  const std::string& factor() const { return factor_; }
  const gf::FqFieldPtr& target() const { return target_; }
  KernelProperty kernel_property() const { return kernel_; }
  const std::string& justification() const { return justification_; }
  // Phi1/Phi2 applied after a characteristic-0 substitution.
  const std::shared_ptr<const CongruenceMap>& outer() const { return outer_; }

  gf::FqField::Elem apply(const scalar::Field::Elem& x) const;
  // Throws MathError when an entry's denominator is not invertible.
  gf::FqMatrix apply(const scalar::Matrix& m) const;

  nlohmann::json certificate() const;

 private:
  friend CongruenceMap build_sw(const scalar::GroupInput& G, std::size_t skip);
  friend struct MapBuilder;

  MapKind kind_ = MapKind::Phi1;
  std::uint64_t p_ = 0;
  std::optional<Point> point_;
  std::string factor_;
  gf::FqFieldPtr target_;
  KernelProperty kernel_ = KernelProperty::TorsionFree;
  std::string justification_;
  std::shared_ptr<const Reduction> reduction_;
  std::shared_ptr<const Substitution> substitution_;
  std::shared_ptr<const CongruenceMap> outer_;
  std::size_t n_ = 0;
};

// Deterministic SW-homomorphism for G; distinct skips give maps with a
// different prime or point.
CongruenceMap build_sw(const scalar::GroupInput& G, std::size_t skip);

nlohmann::json field_json(const gf::FqField& F);
// Rows of entry strings, with "w" for the field generator.
nlohmann::json matrix_json(const gf::FqMatrix& m);

}  // namespace linfin::sw
