#include "linfin/gf/fq_field.hpp"

#include <sstream>

#include "linfin/core/errors.hpp"
#include "linfin/gf/fq_poly.hpp"

namespace linfin::gf {

namespace {

inline std::uint64_t mul_small(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return p < (std::uint64_t{1} << 32) ? (a * b) % p : mulmod(a, b, p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

}  // namespace

FqField::FqField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (p < 2 || !is_prime_u64(p)) throw DomainError("field characteristic is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw DomainError("field characteristic too large");
  if (modulus_.size() < 2) throw DomainError("field modulus must have degree >= 1");
  for (auto& c : modulus_) c %= p;
  if (modulus_.back() != 1) throw DomainError("field modulus must be monic");
  l_ = static_cast<unsigned>(modulus_.size() - 1);
  if (l_ > 1) {
    auto Fp = prime_field(p);
    if (!is_irreducible(*Fp, from_coefficients(*Fp, modulus_))) {
      throw DomainError("field modulus is reducible over GF(" + std::to_string(p) + ")");
    }
  }
}

std::shared_ptr<const FqField> FqField::prime_field(std::uint64_t p) {
  return std::make_shared<const FqField>(p, std::vector<std::uint64_t>{0, 1});
}

std::shared_ptr<const FqField> FqField::make(std::uint64_t p,
                                             std::vector<std::uint64_t> modulus) {
  return std::make_shared<const FqField>(p, std::move(modulus));
}

Integer FqField::size() const { return linfin::pow(linfin::from_u64(p_), l_); }

FqField::Elem FqField::one() const {
  Elem e(l_, 0);
  e[0] = 1 % p_;
  return e;
}

FqField::Elem FqField::from_int(std::int64_t v) const {
  Elem e(l_, 0);
  // p < 2^62 by construction.
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  e[0] = static_cast<std::uint64_t>(r);
  return e;
}

FqField::Elem FqField::from_u64(std::uint64_t v) const {
  Elem e(l_, 0);
  e[0] = v % p_;
  return e;
}

FqField::Elem FqField::generator() const {
  Elem e(l_, 0);
  if (l_ == 1) {
    // t == -modulus[0] in GF(p)[t]/(t + m0).
    e[0] = modulus_[0] == 0 ? 0 : p_ - modulus_[0];
  } else {
    e[1] = 1;
  }
  return e;
}

bool FqField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

bool FqField::is_one(const Elem& a) const {
  if (a[0] != 1 % p_) return false;
  for (unsigned i = 1; i < l_; ++i)
    if (a[i]) return false;
  return true;
}

void FqField::add_into(const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* out) const {
  for (unsigned i = 0; i < l_; ++i) out[i] = add_mod(a[i], b[i], p_);
}

void FqField::mul_into(const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* out) const {
  if (l_ == 1) {
    out[0] = mul_small(a[0], b[0], p_);
    return;
  }
  std::uint64_t buf[64];
  std::vector<std::uint64_t> heap;
  std::uint64_t* prod = buf;
  if (2 * l_ - 1 > 64) {
    heap.assign(2 * l_ - 1, 0);
    prod = heap.data();
  } else {
    std::fill(buf, buf + 2 * l_ - 1, 0);
  }
  for (unsigned i = 0; i < l_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < l_; ++j) {
      if (!b[j]) continue;
      prod[i + j] = add_mod(prod[i + j], mul_small(a[i], b[j], p_), p_);
    }
  }
  // Reduce with the monic modulus from the top down.
  for (unsigned d = 2 * l_ - 2; d >= l_; --d) {
    std::uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < l_; ++i) {
      if (!modulus_[i]) continue;
      std::uint64_t t = mul_small(c, modulus_[i], p_);
      prod[d - l_ + i] = add_mod(prod[d - l_ + i], p_ - t == p_ ? 0 : p_ - t, p_);
    }
  }
  for (unsigned i = 0; i < l_; ++i) out[i] = prod[i];
}

void FqField::fma_into(const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* out) const {
  if (l_ == 1) {
    out[0] = add_mod(out[0], mul_small(a[0], b[0], p_), p_);
    return;
  }
  std::uint64_t tmp[64];
  std::vector<std::uint64_t> heap;
  std::uint64_t* t = tmp;
  if (l_ > 64) {
    heap.resize(l_);
    t = heap.data();
  }
  mul_into(a, b, t);
  add_into(out, t, out);
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
  Elem r(l_);
  add_into(a.data(), b.data(), r.data());
  return r;
}

FqField::Elem FqField::neg(const Elem& a) const {
  Elem r(l_);
  for (unsigned i = 0; i < l_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
  return r;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
  Elem r(l_);
  mul_into(a.data(), b.data(), r.data());
  return r;
}

FqField::Elem FqField::scale(const Elem& a, std::uint64_t c) const {
  Elem r(l_);
  c %= p_;
  for (unsigned i = 0; i < l_; ++i) r[i] = mul_small(a[i], c, p_);
  return r;
}

FqField::Elem FqField::inv(const Elem& a) const {
  if (is_zero(a)) throw MathError("division by zero in GF(" + linfin::to_string(size()) + ")");
  if (l_ == 1) return Elem{invmod(a[0], p_)};
  // Extended Euclid in GF(p)[t] against the modulus.
  auto Fp = prime_field(p_);
  FqPoly r0 = from_coefficients(*Fp, modulus_);
  FqPoly r1 = from_coefficients(*Fp, a);
  FqPoly s0, s1 = {Fp->one()};
  while (gf::degree(r1) > 0) {
    auto [q, r] = poly_divmod(*Fp, r0, r1);
    FqPoly s = poly_sub(*Fp, s0, poly_mul(*Fp, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalError("modulus not irreducible");
  std::uint64_t c = invmod(r1[0][0], p_);
  Elem out(l_, 0);
  for (std::size_t i = 0; i < s1.size() && i < l_; ++i) out[i] = mul_small(s1[i][0], c, p_);
  return out;
}

FqField::Elem FqField::pow(const Elem& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), Integer(-e));
  Elem r = one();
  Elem b = a;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
    if (i + 1 < bits) b = mul(b, b);
  }
  return r;
}

Integer FqField::encode(const Elem& a) const {
  Integer v = 0;
  Integer pz = linfin::from_u64(p_);
  for (unsigned i = l_; i-- > 0;) v = v * pz + linfin::from_u64(a[i]);
  return v;
}

FqField::Elem FqField::decode(Integer v) const {
  Elem e(l_, 0);
  Integer pz = linfin::from_u64(p_);
  for (unsigned i = 0; i < l_; ++i) {
    Integer r = v % pz;
    e[i] = linfin::to_u64(r);
    v /= pz;
  }
  return e;
}

int FqField::compare(const Elem& a, const Elem& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::string FqField::to_string(const Elem& a, const std::string& gen) const {
  if (l_ == 1) return std::to_string(a[0]);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = l_; i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i] << "*";
    os << gen;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace linfin::gf
