#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace linfin {

using Integer = mpz_class;
using Rational = mpq_class;

// Prime factorization as prime -> exponent, ascending.
using Factorization = std::map<Integer, unsigned>;

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
Integer factorial(unsigned long n);

bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

// Smallest c >= 0 with p^c >= n.
unsigned ceil_log(std::uint64_t p, std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Residue of a rational modulo p; nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod(const Rational& q, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& z, std::uint64_t p);

bool fits_u64(const Integer& z);
std::uint64_t to_u64(const Integer& z);
Integer from_u64(std::uint64_t v);

// Trial division followed by Pollard-Brent rho. `rho_iterations` bounds
// the total rho work; nullopt when it is exhausted.
std::optional<Factorization> factor_integer(Integer n,
                                            std::uint64_t rho_iterations =
                                                std::uint64_t{1} << 26);

Integer from_factorization(const Factorization& f);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace linfin
