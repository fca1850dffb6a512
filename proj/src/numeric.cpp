#include "expsumlab/numeric.hpp"

#include "expsumlab/error.hpp"

namespace expsumlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

long valuation(const mpz_class& a, std::uint32_t p) {
  if (a == 0) throw DomainError("valuation of zero");
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const mpq_class& a, std::uint32_t p) {
  return valuation(mpz_class(a.get_num()), p) - valuation(mpz_class(a.get_den()), p);
}

std::uint64_t digit_sum(std::uint64_t s, std::uint32_t p) {
  std::uint64_t total = 0;
  while (s > 0) {
    total += s % p;
    s /= p;
  }
  return total;
}

mpq_class factorial_valuation(std::uint64_t s, std::uint32_t p) {
  mpq_class v(mpz_class(std::to_string(s - digit_sum(s, p))), mpz_class(p - 1));
  v.canonicalize();
  return v;
}

namespace {

mpz_class floor_of(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Stern-Brocot descent for 0 <= lo <= hi.
mpq_class simplest_nonnegative(const mpq_class& lo, const mpq_class& hi) {
  mpz_class fl = floor_of(lo);
  if (fl == lo) return mpq_class(fl);
  if (fl + 1 <= hi) return mpq_class(fl + 1);
  // lo and hi share the integer part; recurse on the reciprocals of the
  // fractional parts (order flips).
  mpq_class lo_frac = lo - fl;
  mpq_class hi_frac = hi - fl;
  mpq_class inner = simplest_nonnegative(1 / hi_frac, 1 / lo_frac);
  return mpq_class(fl) + 1 / inner;
}

}  // namespace

mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) throw DomainError("empty interval");
  if (lo <= 0 && hi >= 0) return mpq_class(0);
  if (hi < 0) return -simplest_nonnegative(-hi, -lo);
  return simplest_nonnegative(lo, hi);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw DomainError("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }
std::string to_string(const mpz_class& z) { return z.get_str(); }

}  // namespace expsumlab
