#include "expsumlab/lfun.hpp"

#include <string>

#include "expsumlab/error.hpp"

namespace expsumlab {

std::vector<CyclotomicRat> LSeries::expand(std::size_t order) const {
  return series_quotient(numerator, denominator, order);
}

TruncatedSeries exp_power_sums(std::uint32_t p, const std::vector<CyclotomicRat>& sums) {
  TruncatedSeries s;
  s.p = p;
  s.coeffs.assign(sums.size() + 1, CyclotomicRat(p));
  s.coeffs[0] = CyclotomicRat(p, 1);
  for (std::size_t k = 1; k <= sums.size(); ++k) {
    CyclotomicRat acc(p);
    for (std::size_t j = 1; j <= k; ++j) acc += sums[j - 1] * s.coeffs[k - j];
    s.coeffs[k] = acc * mpq_class(1, static_cast<unsigned long>(k));
  }
  return s;
}

TruncatedSeries exp_power_sums(const PowerSumSequence& seq) {
  std::vector<CyclotomicRat> sums;
  for (const auto& v : seq.values) sums.emplace_back(v);
  return exp_power_sums(seq.p, sums);
}

LSeries pade_reconstruct(const TruncatedSeries& s, std::uint32_t max_num_degree, std::uint32_t max_den_degree) {
  const std::uint32_t p = s.p;
  if (s.coeffs.empty()) throw DomainError("empty series");
  const std::uint32_t order = s.order();
  if (std::uint64_t{max_num_degree} + max_den_degree + 1 > order) {
    throw DomainError("degree bounds (" + std::to_string(max_num_degree) + ", " +
                      std::to_string(max_den_degree) + ") need more than " + std::to_string(order) +
                      " series terms");
  }
  const CycPoly series = s.as_polynomial();
  const auto why = [&](const std::string& reason) {
    return Uncertified("no rational function with degrees <= (" + std::to_string(max_num_degree) + ", " +
                       std::to_string(max_den_degree) + ") matches through order " +
                       std::to_string(order) + ": " + reason);
  };

  // Extended Euclid on (t^{M+1}, S) until the remainder has degree <= dP;
  // each remainder satisfies r = v * S mod t^{M+1}.
  CycPoly r0 = CycPoly::monomial(CyclotomicRat(p, 1), order + 1);
  CycPoly r1 = series;
  CycPoly v0(p);
  CycPoly v1 = CycPoly::constant(CyclotomicRat(p, 1));
  while (r1.degree() > static_cast<long>(max_num_degree)) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    CycPoly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  CycPoly num = r1;
  CycPoly den = v1;
  if (num.is_zero() || den.is_zero()) throw why("degenerate remainder");

  const CycPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  if (den.coeff(0).is_zero()) throw why("denominator vanishes at t = 0");
  const CyclotomicRat scale = inverse(den.coeff(0));
  num = num * scale;
  den = den * scale;
  if (num.coeff(0) != CyclotomicRat(p, 1)) throw why("normalization P(0) = 1 impossible");
  if (num.degree() > static_cast<long>(max_num_degree) || den.degree() > static_cast<long>(max_den_degree)) {
    throw why("degree bounds exceeded");
  }
  // Re-expansion check through the full order.
  if ((num - den * series).truncated(order) != CycPoly(p)) throw why("expansion mismatch");

  LSeries out;
  const Bezout b = extended_gcd(num, den);
  if (b.g.degree() != 0) throw why("numerator and denominator not coprime");
  out.numerator = std::move(num);
  out.denominator = std::move(den);
  out.certified_order = order;
  out.bezout_u = b.u;
  out.bezout_v = b.v;
  return out;
}

LSeries reconstruct_auto(const TruncatedSeries& s, std::uint32_t slack) {
  const std::uint32_t order = s.order();
  for (std::uint32_t total = 0; total + 1 + slack <= order; ++total) {
    for (std::uint32_t dp = 0; dp <= total; ++dp) {
      try {
        return pade_reconstruct(s, dp, total - dp);
      } catch (const Uncertified&) {
      }
    }
  }
  throw Uncertified("no rational function certified with " + std::to_string(slack) +
                    " spare coefficients at order " + std::to_string(order));
}

std::vector<CyclotomicRat> log_derivative(const LSeries& l, std::size_t order) {
  const CycPoly& P = l.numerator;
  const CycPoly& Q = l.denominator;
  const std::uint32_t p = P.p();
  const CycPoly t = CycPoly::monomial(CyclotomicRat(p, 1), 1);
  const CycPoly top = t * (P.derivative() * Q - P * Q.derivative());
  return series_quotient(top, P * Q, order);
}

ScaledDegreeReport scaled_degree_check(const VarietySpec& v, const FieldPtr& base, const FqElem& c,
                                       std::uint32_t max_level, const EnumerationOptions& opts) {
  if (c.ctx() != base) throw ContextMismatch("scaling constant is not in the base field");
  if (c.is_zero()) throw DomainError("scaling constant must be nonzero");
  ScaledDegreeReport r;
  r.original_sums = power_sum_table(v, base, max_level, opts);
  r.scaled_sums = power_sum_table(v.scaled(c), base, max_level, opts);
  r.original = reconstruct_auto(exp_power_sums(r.original_sums));
  r.scaled = reconstruct_auto(exp_power_sums(r.scaled_sums));
  r.degrees_match = r.original.degree() == r.scaled.degree() &&
                    r.original.total_degree() == r.scaled.total_degree();
  bool in_prime_field = true;
  for (std::size_t i = 1; i < c.coeffs().size(); ++i) in_prime_field &= c.coeffs()[i] == 0;
  if (in_prime_field) {
    r.twist_checked = true;
    r.twist_matches = true;
    for (std::uint32_t m = 1; m <= max_level; ++m) {
      r.twist_matches &= r.scaled_sums.at(m) == galois_twist(r.original_sums.at(m), c.coeffs()[0]);
    }
  }
  return r;
}

}  // namespace expsumlab
