#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linfin/core/integer.hpp"

namespace linfin::gf {

// GF(p^l) = GF(p)[t]/(modulus). Elements are residues of degree < l,
// stored as l coefficients in [0, p), lowest degree first.
class FqField {
 public:
  using Elem = std::vector<std::uint64_t>;

  // `modulus` is monic of degree l >= 1, lowest coefficient first, and
  // irreducible over GF(p); both conditions are verified.
  FqField(std::uint64_t p, std::vector<std::uint64_t> modulus);

  static std::shared_ptr<const FqField> prime_field(std::uint64_t p);
  static std::shared_ptr<const FqField> make(std::uint64_t p,
                                             std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return l_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  Integer size() const;

  Elem zero() const { return Elem(l_, 0); }
  Elem one() const;
  Elem from_int(std::int64_t v) const;
  Elem from_u64(std::uint64_t v) const;
  // Residue class of t.
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
  Elem scale(const Elem& a, std::uint64_t c) const;

  // Raw kernels on l-coefficient buffers; `out` may alias inputs for add.
  void add_into(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
  void mul_into(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
  // out += a*b
  void fma_into(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;

  // Integer sum c_i p^i; defines the fixed element order.
  Integer encode(const Elem& a) const;
  Elem decode(Integer v) const;
  // Three-way comparison in the fixed element order.
  static int compare(const Elem& a, const Elem& b);

  bool operator==(const FqField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }
  bool operator!=(const FqField& o) const { return !(*this == o); }

  std::string to_string(const Elem& a, const std::string& gen = "w") const;

 private:
  std::uint64_t p_;
  unsigned l_;
  std::vector<std::uint64_t> modulus_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

}  // namespace linfin::gf
