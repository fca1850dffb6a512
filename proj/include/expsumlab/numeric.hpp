#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace expsumlab {

bool is_prime(std::uint64_t n);

/// p-adic valuation of a nonzero integer.
long valuation(const mpz_class& a, std::uint32_t p);
/// p-adic valuation of a nonzero rational.
long valuation(const mpq_class& a, std::uint32_t p);

/// Valuation of s! via Legendre: (s - digitsum_p(s)) / (p - 1).
mpq_class factorial_valuation(std::uint64_t s, std::uint32_t p);
std::uint64_t digit_sum(std::uint64_t s, std::uint32_t p);

/// The rational with the smallest denominator (then smallest numerator in
/// absolute value) inside the closed interval [lo, hi].
mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi);

/// Parses "a", "-a" or "a/b" into a canonical rational.
mpq_class parse_rational(const std::string& text);
std::string to_string(const mpq_class& q);
std::string to_string(const mpz_class& z);

}  // namespace expsumlab
