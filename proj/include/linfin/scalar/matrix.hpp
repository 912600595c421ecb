#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linfin/scalar/field.hpp"

namespace linfin::scalar {

// Square matrix over a Field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t n);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_entries(FieldPtr field, std::size_t n, std::vector<Field::Elem> row_major);
  // Parses n*n scalar expressions.
  static Matrix parse(FieldPtr field, const std::vector<std::vector<std::string>>& rows);

  std::size_t degree() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  const Field::Elem& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Field::Elem v) { data_[i * n_ + j] = std::move(v); }
  Scalar scalar(std::size_t i, std::size_t j) const { return Scalar(field_, at(i, j)); }
  const std::vector<Field::Elem>& entries() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_identity() const;
  bool is_zero() const;
  Field::Elem determinant() const;
  bool is_invertible() const { return !field_->is_zero(determinant()); }
  // Gauss-Jordan; throws MathError when singular. Verified by multiplication.
  Matrix inverse() const;
  Matrix pow(const Integer& e) const;
  Matrix scaled(const Field::Elem& c) const;

  std::size_t hash() const;
  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  void check(const Matrix& o) const;

  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Field::Elem> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

Matrix kronecker(const Matrix& a, const Matrix& b);
// p^-1 * a * p
Matrix conjugate(const Matrix& a, const Matrix& p);

}  // namespace linfin::scalar
