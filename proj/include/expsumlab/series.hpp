#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "expsumlab/cyclotomic.hpp"

namespace expsumlab {

/// Polynomial in t over Q(zeta_p), lowest degree first, without trailing zeros.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::uint32_t p) : p_(p) {}
  CycPoly(std::uint32_t p, std::vector<CyclotomicRat> coeffs);

  static CycPoly constant(const CyclotomicRat& c);
  static CycPoly monomial(const CyclotomicRat& c, std::size_t k);
  /// Integer coefficients, lowest first.
  static CycPoly from_integers(std::uint32_t p, const std::vector<long>& coeffs);

  std::uint32_t p() const { return p_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<CyclotomicRat>& coeffs() const { return coeffs_; }
  CyclotomicRat coeff(std::size_t k) const;

  CycPoly operator-() const;
  friend CycPoly operator+(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator-(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(const CycPoly& a, const CyclotomicRat& c);
  friend bool operator==(const CycPoly& a, const CycPoly& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

  CycPoly derivative() const;
  /// Terms of degree <= max_degree.
  CycPoly truncated(std::size_t max_degree) const;
  /// Divides by the leading coefficient.
  CycPoly monic() const;

 private:
  void trim();

  std::uint32_t p_ = 0;
  std::vector<CyclotomicRat> coeffs_;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<CycPoly, CycPoly> divmod(const CycPoly& a, const CycPoly& b);
/// Monic gcd (zero only when both inputs are zero).
CycPoly gcd(const CycPoly& a, const CycPoly& b);

struct Bezout {
  CycPoly g;  ///< monic gcd
  CycPoly u;  ///< u*a + v*b = g
  CycPoly v;
};
Bezout extended_gcd(const CycPoly& a, const CycPoly& b);

/// Power series a/b to the given order; b(0) must be invertible.
std::vector<CyclotomicRat> series_quotient(const CycPoly& a, const CycPoly& b, std::size_t order);

}  // namespace expsumlab
