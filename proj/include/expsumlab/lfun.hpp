#pragma once

#include <cstdint>
#include <vector>

#include "expsumlab/cyclotomic.hpp"
#include "expsumlab/expsum.hpp"
#include "expsumlab/series.hpp"

namespace expsumlab {

/// c_0..c_M of a power series over Q(zeta_p).
struct TruncatedSeries {
  std::uint32_t p = 0;
  std::vector<CyclotomicRat> coeffs;

  std::uint32_t order() const { return static_cast<std::uint32_t>(coeffs.size()) - 1; }
  CycPoly as_polynomial() const { return CycPoly(p, coeffs); }
};

/// L(t) = P(t)/Q(t), coprime, P(0) = Q(0) = 1, matching its source series
/// through certified_order. u*P + v*Q = 1 is the stored coprimality
/// certificate.
struct LSeries {
  CycPoly numerator;
  CycPoly denominator;
  std::uint32_t certified_order = 0;
  CycPoly bezout_u;
  CycPoly bezout_v;

  /// deg Q - deg P.
  long degree() const { return denominator.degree() - numerator.degree(); }
  /// deg P + deg Q.
  long total_degree() const { return denominator.degree() + numerator.degree(); }
  std::vector<CyclotomicRat> expand(std::size_t order) const;
};

/// Truncation to order M of exp(sum_{m<=M} S_m t^m / m), via
/// k c_k = sum_{j=1}^{k} S_j c_{k-j}.
TruncatedSeries exp_power_sums(std::uint32_t p, const std::vector<CyclotomicRat>& sums);
TruncatedSeries exp_power_sums(const PowerSumSequence& seq);

/// Rational function with deg P <= max_num_degree, deg Q <= max_den_degree
/// whose expansion matches the series through its full order. Requires
/// max_num_degree + max_den_degree + 1 <= order; throws Uncertified when no
/// such function exists.
LSeries pade_reconstruct(const TruncatedSeries& s, std::uint32_t max_num_degree, std::uint32_t max_den_degree);

/// Sweeps dP + dQ upward, keeping `slack` spare coefficients beyond the
/// dP + dQ + 1 needed, and returns the first certified reconstruction.
LSeries reconstruct_auto(const TruncatedSeries& s, std::uint32_t slack = 2);

/// Coefficients 0..order of t (P'Q - PQ') / (PQ), i.e. t L'/L; entry m
/// must equal S_m.
std::vector<CyclotomicRat> log_derivative(const LSeries& l, std::size_t order);

inline long degree(const LSeries& l) { return l.degree(); }
inline long total_degree(const LSeries& l) { return l.total_degree(); }

/// Degree comparison between L_f and L_{c f}.
struct ScaledDegreeReport {
  LSeries original;
  LSeries scaled;
  PowerSumSequence original_sums;
  PowerSumSequence scaled_sums;
  bool degrees_match = false;
  /// Set when c lies in F_p: S_m(c f) equals the Galois twist of S_m(f).
  bool twist_checked = false;
  bool twist_matches = false;
};

ScaledDegreeReport scaled_degree_check(const VarietySpec& v, const FieldPtr& base, const FqElem& c,
                                       std::uint32_t max_level, const EnumerationOptions& opts = {});

}  // namespace expsumlab
