#include "linfin/gf/fq_matrix.hpp"

#include <functional>

#include "linfin/core/errors.hpp"

namespace linfin::gf {

FqMatrix::FqMatrix(FqFieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), data_(n * n * field_->degree(), 0) {}

FqMatrix FqMatrix::identity(FqFieldPtr field, std::size_t n) {
  FqMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i)[0] = 1;
  return m;
}

FqMatrix FqMatrix::from_entries(FqFieldPtr field, std::size_t n,
                                const std::vector<FqField::Elem>& row_major) {
  if (row_major.size() != n * n) throw DomainError("FqMatrix: wrong number of entries");
  FqMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, row_major[i * n + j]);
  return m;
}

FqField::Elem FqMatrix::at(std::size_t i, std::size_t j) const {
  const std::uint64_t* e = entry(i, j);
  return FqField::Elem(e, e + field_->degree());
}

void FqMatrix::set(std::size_t i, std::size_t j, const FqField::Elem& v) {
  if (v.size() != field_->degree()) throw DomainError("FqMatrix: element of wrong field");
  std::copy(v.begin(), v.end(), entry(i, j));
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (n_ != o.n_ || *field_ != *o.field_) throw DomainError("FqMatrix: incompatible operands");
  FqMatrix r(field_, n_);
  const FqField& F = *field_;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t* a = entry(i, k);
      if (F.is_zero(FqField::Elem(a, a + F.degree()))) continue;
      for (std::size_t j = 0; j < n_; ++j) F.fma_into(a, o.entry(k, j), r.entry(i, j));
    }
  }
  return r;
}

bool FqMatrix::is_identity() const {
  const unsigned l = field_->degree();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const std::uint64_t* e = entry(i, j);
      for (unsigned c = 0; c < l; ++c) {
        std::uint64_t want = (i == j && c == 0) ? 1 : 0;
        if (e[c] != want) return false;
      }
    }
  }
  return true;
}

namespace {

// Gauss-Jordan on [A | I]; returns false when A is singular.
bool gauss_jordan(const FqField& F, std::size_t n, std::vector<FqField::Elem>& a,
                  std::vector<FqField::Elem>& inv) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && F.is_zero(a[piv * n + col])) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    }
    auto c = F.inv(a[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = F.mul(a[col * n + j], c);
      inv[col * n + j] = F.mul(inv[col * n + j], c);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || F.is_zero(a[i * n + col])) continue;
      auto f = a[i * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[col * n + j]));
        inv[i * n + j] = F.sub(inv[i * n + j], F.mul(f, inv[col * n + j]));
      }
    }
  }
  return true;
}

}  // namespace

bool FqMatrix::is_invertible() const {
  std::vector<FqField::Elem> a, inv;
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    a.push_back(at(i / n_, i % n_));
    inv.push_back(field_->zero());
  }
  return gauss_jordan(*field_, n_, a, inv);
}

FqMatrix FqMatrix::inverse() const {
  std::vector<FqField::Elem> a, inv;
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    a.push_back(at(i / n_, i % n_));
    inv.push_back(i / n_ == i % n_ ? field_->one() : field_->zero());
  }
  if (!gauss_jordan(*field_, n_, a, inv)) throw MathError("singular matrix over finite field");
  return from_entries(field_, n_, inv);
}

FqMatrix FqMatrix::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  FqMatrix result = identity(field_, n_);
  FqMatrix base = *this;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

std::size_t FqMatrix::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : data_) {
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

int moebius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Phi_d(q) = prod_{e | d} (q^e - 1)^mu(d/e).
Integer cyclotomic_value(const Integer& q, unsigned d) {
  Integer num = 1, den = 1;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = moebius(d / e);
    if (mu == 1) num *= linfin::pow(q, e) - 1;
    if (mu == -1) den *= linfin::pow(q, e) - 1;
  }
  return num / den;
}

}  // namespace

Factorization fq_group_exponent_factor(std::size_t n, const FqField& field,
                                       std::uint64_t rho_budget) {
  const std::uint64_t p = field.characteristic();
  const Integer q = field.size();
  std::vector<Factorization> phi(n + 1);
  for (unsigned d = 1; d <= n; ++d) {
    auto f = factor_integer(cyclotomic_value(q, d), rho_budget);
    if (!f) throw ResourceError("factorization budget exhausted for group exponent");
    phi[d] = std::move(*f);
  }
  Factorization E;
  for (unsigned i = 1; i <= n; ++i) {
    Factorization vi;
    for (unsigned d = 1; d <= i; ++d) {
      if (i % d) continue;
      for (const auto& [r, e] : phi[d]) vi[r] += e;
    }
    for (const auto& [r, e] : vi) E[r] = std::max(E[r], e);
  }
  unsigned c = ceil_log(p, n);
  if (c > 0) E[linfin::from_u64(p)] += c;
  return E;
}

Integer fq_matrix_order(const FqMatrix& m) {
  if (!m.is_invertible()) throw MathError("order of a singular matrix");
  Factorization E;
  try {
    E = fq_group_exponent_factor(m.degree(), m.field());
  } catch (const ResourceError&) {
    // Iterative powering up to the (unfactored) exponent bound.
    Integer bound = 1;
    const Integer q = m.field().size();
    for (std::size_t i = 1; i <= m.degree(); ++i) bound = lcm(bound, linfin::pow(q, i) - 1);
    bound *= linfin::pow(linfin::from_u64(m.field().characteristic()),
                         ceil_log(m.field().characteristic(), m.degree()));
    if (bound > Integer(1) << 26) throw;
    FqMatrix x = m;
    for (Integer k = 1; k <= bound; ++k) {
      if (x.is_identity()) return k;
      x = x * m;
    }
    throw InternalError("matrix order exceeds group exponent");
  }
  Integer d = from_factorization(E);
  if (!m.pow(d).is_identity()) throw InternalError("matrix order does not divide group exponent");
  for (const auto& [r, e] : E) {
    for (unsigned k = 0; k < e; ++k) {
      if (d % r != 0) break;
      if (m.pow(Integer(d / r)).is_identity()) {
        d /= r;
      } else {
        break;
      }
    }
  }
  return d;
}

}  // namespace linfin::gf
