#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linfin/core/integer.hpp"
#include "linfin/gf/fq_field.hpp"

namespace linfin::gf {

// Square matrix over GF(p^l); entries stored row-major as packed
// l-coefficient residues.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FqFieldPtr field, std::size_t n);

  static FqMatrix identity(FqFieldPtr field, std::size_t n);
  static FqMatrix from_entries(FqFieldPtr field, std::size_t n,
                               const std::vector<FqField::Elem>& row_major);

  std::size_t degree() const { return n_; }
  const FqField& field() const { return *field_; }
  const FqFieldPtr& field_ptr() const { return field_; }

  FqField::Elem at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FqField::Elem& v);

  FqMatrix operator*(const FqMatrix& o) const;
  bool operator==(const FqMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }

  bool is_identity() const;
  bool is_invertible() const;
  // Throws MathError when singular.
  FqMatrix inverse() const;
  FqMatrix pow(const Integer& e) const;

  std::size_t hash() const;
  const std::vector<std::uint64_t>& data() const { return data_; }

 private:
  const std::uint64_t* entry(std::size_t i, std::size_t j) const {
    return data_.data() + (i * n_ + j) * field_->degree();
  }
  std::uint64_t* entry(std::size_t i, std::size_t j) {
    return data_.data() + (i * n_ + j) * field_->degree();
  }

  FqFieldPtr field_;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix& m) const { return m.hash(); }
};

// Factored E = p^ceil(log_p n) * lcm(q^i - 1 : 1 <= i <= n); every element
// of GL(n, q) has order dividing E. Throws ResourceError when the
// factorization budget is exhausted.
Factorization fq_group_exponent_factor(std::size_t n, const FqField& field,
                                       std::uint64_t rho_budget = std::uint64_t{1} << 24);

// Exact multiplicative order. Falls back to iterative powering (bounded by
// E) when the exponent cannot be factored within budget.
Integer fq_matrix_order(const FqMatrix& m);

}  // namespace linfin::gf
