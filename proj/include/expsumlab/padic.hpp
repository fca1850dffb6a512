#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace expsumlab {

/// Element sum a_i pi^i of Q[pi]/(pi^{p-1} + p). For p = 2 the ring is Q
/// and pi = -2.
class PiNumber {
 public:
  PiNumber() = default;
  explicit PiNumber(std::uint32_t p);
  PiNumber(std::uint32_t p, const mpq_class& rational);
  PiNumber(std::uint32_t p, std::vector<mpq_class> coords);

  static PiNumber pi(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  const std::vector<mpq_class>& coords() const { return coords_; }
  bool is_zero() const;

  /// min_i (v_p(a_i) + i/(p-1)); nullopt for zero.
  std::optional<mpq_class> valuation() const;

  PiNumber operator+(const PiNumber& o) const;
  PiNumber operator-(const PiNumber& o) const;
  PiNumber operator-() const;
  PiNumber operator*(const PiNumber& o) const;
  PiNumber operator*(const mpq_class& c) const;
  PiNumber inverse() const;
  PiNumber& operator+=(const PiNumber& o) { return *this = *this + o; }
  PiNumber& operator-=(const PiNumber& o) { return *this = *this - o; }
  bool operator==(const PiNumber& o) const;

  std::string to_string() const;

 private:
  void check(const PiNumber& o) const;

  std::uint32_t p_ = 0;
  std::vector<mpq_class> coords_;
};

/// Dense polynomial in x over Q(pi).
class PolyPi {
 public:
  PolyPi() = default;
  explicit PolyPi(std::uint32_t p);
  PolyPi(std::uint32_t p, std::vector<PiNumber> coeffs);

  static PolyPi constant(const PiNumber& c);
  static PolyPi monomial(const PiNumber& c, std::size_t k);

  std::uint32_t p() const { return p_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<PiNumber>& coeffs() const { return coeffs_; }
  PiNumber coeff(std::size_t k) const;

  PolyPi operator+(const PolyPi& o) const;
  PolyPi operator-(const PolyPi& o) const;
  PolyPi operator*(const PolyPi& o) const;
  PolyPi operator*(const PiNumber& c) const;
  PolyPi derivative() const;
  bool operator==(const PolyPi& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

  /// min_i (v(a_i) + i lambda); nullopt for the zero polynomial.
  std::optional<mpq_class> gauss_valuation(const mpq_class& lambda) const;
  /// Number of monomials attaining the Gauss valuation.
  std::size_t dominant_terms(const mpq_class& lambda) const;

  std::string to_string() const;

 private:
  void trim();

  std::uint32_t p_ = 0;
  std::vector<PiNumber> coeffs_;
};

std::pair<PolyPi, PolyPi> divmod(const PolyPi& a, const PolyPi& b);
PolyPi gcd(PolyPi a, PolyPi b);

class RationalFunctionPi {
 public:
  RationalFunctionPi() = default;
  RationalFunctionPi(PolyPi numerator, PolyPi denominator);
  explicit RationalFunctionPi(PolyPi numerator);

  /// c x^k for k of either sign.
  static RationalFunctionPi monomial(const PiNumber& c, long k);

  std::uint32_t p() const { return num_.p(); }
  const PolyPi& numerator() const { return num_; }
  const PolyPi& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionPi operator+(const RationalFunctionPi& o) const;
  RationalFunctionPi operator-(const RationalFunctionPi& o) const;
  RationalFunctionPi operator*(const RationalFunctionPi& o) const;
  RationalFunctionPi derivative() const;
  /// Equality as functions, by cross multiplication.
  bool operator==(const RationalFunctionPi& o) const;

  /// Cancels the common factor and makes the denominator monic.
  RationalFunctionPi reduced() const;

  std::string to_string() const;

 private:
  PolyPi num_;
  PolyPi den_;
};

/// Valuation of the rho-Gauss norm, rho = p^{-lambda}; nullopt means +inf.
std::optional<mpq_class> gauss_valuation(const RationalFunctionPi& f, const mpq_class& lambda);

/// b_0..b_{s_max} with b_0 = 1 and b_{s+1} = b_s' + g b_s.
std::vector<RationalFunctionPi> symbol_sequence(const RationalFunctionPi& g, std::size_t s_max);

struct RadiusSample {
  mpq_class lambda;
  mpq_class r;        ///< -log_p R(rho)
  mpq_class r_lower;  ///< rigorous enclosure of r
  mpq_class r_upper;
  bool stabilized = false;
  mpq_class oscillation;  ///< spread of (v(s!) - v(b_s))/s over the final window
  bool pole_on_circle = false;
};

struct RadiusProfile {
  std::uint32_t p = 0;
  std::size_t s_max = 0;
  std::vector<RadiusSample> samples;  ///< sorted by increasing lambda
  /// dr/dlambda from the two largest-rho samples and the two smallest-rho samples.
  std::optional<std::pair<mpq_class, mpq_class>> endpoint_slopes;

  bool stabilized() const;
};

std::vector<mpq_class> default_lambda_grid();

RadiusProfile radius_profile(const RationalFunctionPi& g, std::vector<mpq_class> grid,
                             std::size_t s_max = 200, unsigned threads = 1);

/// Slope at the inner endpoint minus slope at the outer endpoint.
long robba_index(const RadiusProfile& profile);
long robba_index(const mpq_class& inner_slope, const mpq_class& outer_slope);

/// g + pi/x^2.
RationalFunctionPi dwork_twist(const RationalFunctionPi& g);

/// Gauss valuation of sum_{nu=1}^{truncation} y^nu / t^{nu+1} with t of
/// weight lambda and y of weight r_weight; equals r_weight - 2 lambda.
mpq_class taylor_norm_check(const mpq_class& lambda, const mpq_class& r_weight, std::uint32_t p,
                            std::size_t truncation = 16);

}  // namespace expsumlab
