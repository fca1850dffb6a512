#include <doctest.h>

#include "expsumlab/error.hpp"
#include "expsumlab/lfun.hpp"
#include "generators.hpp"

using namespace expsumlab;

namespace {

TruncatedSeries series_of(std::uint32_t p, std::vector<long> c) {
  TruncatedSeries s;
  s.p = p;
  for (long x : c) s.coeffs.emplace_back(p, x);
  return s;
}

std::vector<CyclotomicRat> rat_sums(std::uint32_t p, std::vector<long> c) {
  std::vector<CyclotomicRat> out;
  for (long x : c) out.emplace_back(p, x);
  return out;
}

}  // namespace

TEST_CASE("exp_power_sums examples") {
  const auto a = exp_power_sums(3, rat_sums(3, {3, 9, 27, 81}));
  CHECK(a.order() == 4);
  for (std::uint32_t k = 0; k <= 4; ++k) CHECK(a.coeffs[k] == CyclotomicRat(3, long(std::pow(3, k))));
  const auto b = exp_power_sums(5, rat_sums(5, {0, 0, 0}));
  CHECK(b.coeffs == series_of(5, {1, 0, 0, 0}).coeffs);
  const auto c = exp_power_sums(5, rat_sums(5, {-1, -1, -1}));
  CHECK(c.coeffs == series_of(5, {1, -1, 0, 0}).coeffs);
}

TEST_CASE("exp of S times exp of -S is 1") {
  gen::Source src(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::vector<CyclotomicRat> s, neg;
    for (int i = 0; i < 7; ++i) {
      s.push_back(src.cyclotomic_rat(p));
      neg.push_back(-s.back());
    }
    const CycPoly prod = exp_power_sums(p, s).as_polynomial() * exp_power_sums(p, neg).as_polynomial();
    CHECK(prod.truncated(7) == CycPoly::constant(CyclotomicRat(p, 1L)));
  }
}

TEST_CASE("pade_reconstruct examples") {
  const auto l = pade_reconstruct(series_of(3, {1, 3, 9, 27, 81}), 0, 1);
  CHECK(l.numerator == CycPoly::from_integers(3, {1}));
  CHECK(l.denominator == CycPoly::from_integers(3, {1, -3}));
  CHECK(l.certified_order == 4);
  const auto l2 = pade_reconstruct(series_of(5, {1, -1, 0, 0, 0}), 1, 0);
  CHECK(l2.numerator == CycPoly::from_integers(5, {1, -1}));
  CHECK(l2.denominator == CycPoly::from_integers(5, {1}));
  const auto l3 = pade_reconstruct(series_of(5, {1, 1, 2, 4, 8}), 1, 1);
  CHECK(l3.numerator == CycPoly::from_integers(5, {1, -1}));
  CHECK(l3.denominator == CycPoly::from_integers(5, {1, -2}));
  CHECK((l3.bezout_u * l3.numerator + l3.bezout_v * l3.denominator) == CycPoly::from_integers(5, {1}));
}

TEST_CASE("pade_reconstruct errors") {
  CHECK_THROWS_AS(pade_reconstruct(series_of(3, {1, 3, 9}), 1, 1), DomainError);
  // 1/(1 - t - t^2) is not of shape (0, 1).
  CHECK_THROWS_AS(pade_reconstruct(series_of(3, {1, 1, 2, 3, 5, 8}), 0, 1), Uncertified);
  CHECK_THROWS_AS(reconstruct_auto(series_of(3, {1, 1, 2, 3})), Uncertified);
}

TEST_CASE("degree and total degree") {
  const auto a = pade_reconstruct(series_of(3, {1, 3, 9, 27}), 0, 1);
  CHECK(degree(a) == 1);
  CHECK(total_degree(a) == 1);
  const auto b = pade_reconstruct(series_of(3, {1, -1, 0, 0}), 1, 0);
  CHECK(degree(b) == -1);
  CHECK(total_degree(b) == 1);
  const auto c = pade_reconstruct(series_of(3, {1, 1, 2, 4, 8}), 1, 1);
  CHECK(degree(c) == 0);
  CHECK(total_degree(c) == 2);
}

TEST_CASE("round trip on random rational functions") {
  gen::Source src(101);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    const long dp = src.integer(0, 2);
    const long dq = src.integer(0, 2);
    CycPoly num = src.unit_constant_poly(p, dp);
    CycPoly den = src.unit_constant_poly(p, dq);
    if (gcd(num, den).degree() != 0) continue;
    const std::size_t order = dp + dq + 1 + src.integer(0, 2);
    TruncatedSeries s;
    s.p = p;
    s.coeffs = series_quotient(num, den, order);
    const LSeries l = pade_reconstruct(s, dp, dq);
    CHECK(l.numerator == num);
    CHECK(l.denominator == den);
    const LSeries a = reconstruct_auto(s, order - (dp + dq + 1));
    CHECK(a.numerator == num);
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("log derivative reproduces the power sums") {
  gen::Source src(5);
  for (std::uint32_t p : {3u, 5u}) {
    CycPoly num = src.unit_constant_poly(p, 2);
    CycPoly den = src.unit_constant_poly(p, 1);
    TruncatedSeries s;
    s.p = p;
    s.coeffs = series_quotient(num, den, 8);
    const LSeries l = reconstruct_auto(s);
    const auto logd = log_derivative(l, 8);
    // Power sums from Newton's identities, the inverse of exp_power_sums.
    std::vector<CyclotomicRat> sums;
    for (std::size_t k = 1; k <= 8; ++k) {
      CyclotomicRat acc = s.coeffs[k] * mpq_class(static_cast<long>(k));
      for (std::size_t j = 1; j < k; ++j) acc -= sums[j - 1] * s.coeffs[k - j];
      sums.push_back(acc);
    }
    for (std::size_t m = 1; m <= 8; ++m) CHECK(logd[m] == sums[m - 1]);
    CHECK(exp_power_sums(p, sums).coeffs == s.coeffs);
  }
}

TEST_CASE("non-rational coefficients in Q(zeta_5)") {
  const std::uint32_t p = 5;
  const CyclotomicRat z(CyclotomicInt::zeta_power(p, 1));
  const CycPoly den(p, {CyclotomicRat(p, 1L), -z, z * z});
  TruncatedSeries s;
  s.p = p;
  s.coeffs = series_quotient(CycPoly::from_integers(p, {1}), den, 6);
  const auto l = reconstruct_auto(s);
  CHECK(l.denominator == den);
  CHECK(l.degree() == 2);
}
