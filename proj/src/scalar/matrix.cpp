#include "linfin/scalar/matrix.hpp"

#include <functional>

#include "linfin/core/errors.hpp"
#include "linfin/scalar/parse.hpp"

namespace linfin::scalar {

Matrix::Matrix(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), data_(n * n, field_->zero()) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = m.field_->one();
  return m;
}

Matrix Matrix::from_entries(FieldPtr field, std::size_t n, std::vector<Field::Elem> row_major) {
  if (row_major.size() != n * n) throw DomainError("matrix needs n*n entries");
  Matrix m(std::move(field), n);
  m.data_ = std::move(row_major);
  return m;
}

Matrix Matrix::parse(FieldPtr field, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Field::Elem> e;
  for (const auto& r : rows) {
    if (r.size() != n) throw DomainError("matrix is not square");
    for (const auto& s : r) e.push_back(parse_elem(*field, s));
  }
  return from_entries(std::move(field), n, std::move(e));
}

void Matrix::check(const Matrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix dimension mismatch");
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw DomainError("matrices over different fields");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check(o);
  const Field& F = *field_;
  Matrix r(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& a = at(i, k);
      if (F.is_zero(a)) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& b = o.at(k, j);
        if (F.is_zero(b)) continue;
        r.data_[i * n_ + j] = F.add(r.data_[i * n_ + j], F.mul(a, b));
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check(o);
  Matrix r(field_, n_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check(o);
  Matrix r(field_, n_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->sub(data_[i], o.data_[i]);
  return r;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& x = at(i, j);
      if (i == j ? !field_->is_one(x) : !field_->is_zero(x)) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!field_->is_zero(x)) return false;
  return true;
}

Field::Elem Matrix::determinant() const {
  const Field& F = *field_;
  std::vector<Field::Elem> a = data_;
  Field::Elem det = F.one();
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && F.is_zero(a[p * n_ + c])) ++p;
    if (p == n_) return F.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[p * n_ + j], a[c * n_ + j]);
      det = F.neg(det);
    }
    det = F.mul(det, a[c * n_ + c]);
    Field::Elem inv = F.inv(a[c * n_ + c]);
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (F.is_zero(a[r * n_ + c])) continue;
      Field::Elem f = F.mul(a[r * n_ + c], inv);
      for (std::size_t k = c; k < n_; ++k) a[r * n_ + k] = F.sub(a[r * n_ + k], F.mul(f, a[c * n_ + k]));
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  const Field& F = *field_;
  std::vector<Field::Elem> a = data_;
  Matrix inv = identity(field_, n_);
  auto& b = inv.data_;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && F.is_zero(a[p * n_ + c])) ++p;
    if (p == n_) throw MathError("singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a[p * n_ + j], a[c * n_ + j]);
        std::swap(b[p * n_ + j], b[c * n_ + j]);
      }
    }
    Field::Elem pinv = F.inv(a[c * n_ + c]);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!F.is_zero(a[c * n_ + j])) a[c * n_ + j] = F.mul(a[c * n_ + j], pinv);
      if (!F.is_zero(b[c * n_ + j])) b[c * n_ + j] = F.mul(b[c * n_ + j], pinv);
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || F.is_zero(a[r * n_ + c])) continue;
      Field::Elem f = a[r * n_ + c];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!F.is_zero(a[c * n_ + j])) a[r * n_ + j] = F.sub(a[r * n_ + j], F.mul(f, a[c * n_ + j]));
        if (!F.is_zero(b[c * n_ + j])) b[r * n_ + j] = F.sub(b[r * n_ + j], F.mul(f, b[c * n_ + j]));
      }
    }
  }
  if (!(*this * inv).is_identity()) throw InternalError("matrix inverse failed verification");
  return inv;
}

Matrix Matrix::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  Matrix result = identity(field_, n_);
  if (e == 0) return result;
  Matrix b = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * b;
    if (i + 1 < bits) b = b * b;
  }
  return result;
}

Matrix Matrix::scaled(const Field::Elem& c) const {
  Matrix r(field_, n_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->mul(data_[i], c);
  return r;
}

namespace {

void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }

void hash_poly(std::size_t& h, const MPoly& p) {
  for (const auto& t : p) {
    for (auto e : t.exp) mix(h, e);
    for (const auto& c : t.coef) {
      mix(h, mpz_get_ui(c.get_num_mpz_t()));
      mix(h, static_cast<std::size_t>(mpz_sgn(c.get_num_mpz_t()) + 1));
      mix(h, mpz_get_ui(c.get_den_mpz_t()));
    }
  }
}

}  // namespace

std::size_t Matrix::hash() const {
  std::size_t h = n_;
  for (const auto& x : data_)
    for (const auto& r : x) {
      hash_poly(h, r.num);
      mix(h, 0x51);
      hash_poly(h, r.den);
    }
  return h;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i].push_back(field_->to_string(at(i, j)));
  return rows;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += field_->to_string(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field_ptr() != b.field_ptr() && !a.field().same_as(b.field()))
    throw DomainError("matrices over different fields");
  const std::size_t n = a.degree(), m = b.degree();
  const Field& F = a.field();
  std::vector<Field::Elem> e(n * m * n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          e[(i * m + k) * (n * m) + (j * m + l)] = F.mul(a.at(i, j), b.at(k, l));
  return Matrix::from_entries(a.field_ptr(), n * m, std::move(e));
}

Matrix conjugate(const Matrix& a, const Matrix& p) { return p.inverse() * a * p; }

}  // namespace linfin::scalar
