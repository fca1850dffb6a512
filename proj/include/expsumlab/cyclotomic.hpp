#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expsumlab/error.hpp"

namespace expsumlab {

/// Element of Z[zeta_p] (T = mpz_class) or Q(zeta_p) (T = mpq_class), stored
/// in the basis 1, zeta, ..., zeta^{p-2}. zeta^{p-1} is always rewritten as
/// -(1 + zeta + ... + zeta^{p-2}); for p = 2 the ring is Z with zeta = -1.
template <class T>
class Cyclotomic {
 public:
  explicit Cyclotomic(std::uint32_t p) : p_(p), coords_(width(p)) {}
  Cyclotomic(std::uint32_t p, std::vector<T> coords) : p_(p), coords_(std::move(coords)) {
    if (coords_.size() != width(p)) throw DomainError("cyclotomic coordinate count mismatch");
  }
  Cyclotomic(std::uint32_t p, long integer) : Cyclotomic(p) { coords_[0] = integer; }

  template <class U>
  explicit Cyclotomic(const Cyclotomic<U>& other) : p_(other.p()), coords_(width(other.p())) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = T(other.coords()[i]);
  }

  /// zeta^a for any integer a.
  static Cyclotomic zeta_power(std::uint32_t p, std::int64_t a) {
    std::vector<T> full(p);
    full[reduce_exponent(a, p)] = 1;
    return from_full(p, full);
  }

  /// Sum over a of counts[a] * zeta^a, counts indexed 0..p-1.
  template <class Count>
  static Cyclotomic from_counts(std::uint32_t p, const std::vector<Count>& counts) {
    std::vector<T> full(p);
    for (std::uint32_t a = 0; a < p; ++a) full[a] = T(counts.at(a));
    return from_full(p, full);
  }

  std::uint32_t p() const { return p_; }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }
  /// True when the element lies in the prime ring (all zeta-coordinates zero).
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
      if (coords_[i] != 0) return false;
    }
    return true;
  }

  Cyclotomic operator-() const {
    Cyclotomic out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
  }
  Cyclotomic& operator+=(const Cyclotomic& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& rhs) {
    check_same(rhs);
    if (p_ == 2) {
      coords_[0] *= rhs.coords_[0];
      return *this;
    }
    // Convolution modulo zeta^p - 1, then canonical reduction.
    std::vector<T> full(p_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coords_.size(); ++j) {
        if (rhs.coords_[j] == 0) continue;
        full[(i + j) % p_] += coords_[i] * rhs.coords_[j];
      }
    }
    *this = from_full(p_, full);
    return *this;
  }
  Cyclotomic& operator*=(const T& scalar) {
    for (auto& c : coords_) c *= scalar;
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const T& s) { return a *= s; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.coords_ == b.coords_;
  }

  /// The automorphism zeta -> zeta^u, gcd(u, p) = 1.
  Cyclotomic twisted(std::int64_t u) const {
    const std::uint32_t e = reduce_exponent(u, p_);
    if (e == 0) throw DomainError("Galois twist by a multiple of p");
    std::vector<T> full(p_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      full[(i * e) % p_] += coords_[i];
    }
    return from_full(p_, full);
  }

  /// Complex value under zeta -> exp(2 pi i u / p).
  std::complex<double> embed(std::int64_t u = 1) const {
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const double angle = 2.0 * std::numbers::pi * double(reduce_exponent(u * std::int64_t(i), p_)) / p_;
      z += to_double(coords_[i]) * std::polar(1.0, angle);
    }
    if (p_ == 2) z = to_double(coords_[0]);
    return z;
  }

  /// Largest absolute value over all complex embeddings.
  double max_conjugate_abs() const {
    double m = 0;
    for (std::int64_t u = 1; u < std::int64_t(p_); ++u) m = std::max(m, std::abs(embed(u)));
    return m;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      std::string c = coords_[i].get_str();
      if (!out.empty()) out += (c[0] == '-') ? " - " : " + ";
      else if (c[0] == '-') out += "-";
      if (c[0] == '-') c.erase(0, 1);
      out += (i == 0) ? c : (c == "1" ? "" : c + "*") + (i == 1 ? std::string("z") : "z^" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::size_t width(std::uint32_t p) { return p == 2 ? 1 : p - 1; }

  static std::uint32_t reduce_exponent(std::int64_t a, std::uint32_t p) {
    std::int64_t r = a % std::int64_t(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }

  // full has p entries (coefficients of zeta^0..zeta^{p-1}).
  static Cyclotomic from_full(std::uint32_t p, const std::vector<T>& full) {
    Cyclotomic out(p);
    const T& top = full[p - 1];
    for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] = full[i] - top;
    return out;
  }

  static double to_double(const mpz_class& z) { return z.get_d(); }
  static double to_double(const mpq_class& q) { return q.get_d(); }

  void check_same(const Cyclotomic& other) const {
    if (p_ != other.p_) throw ContextMismatch("cyclotomic elements for different primes");
  }

  std::uint32_t p_;
  std::vector<T> coords_;
};

using CyclotomicInt = Cyclotomic<mpz_class>;
using CyclotomicRat = Cyclotomic<mpq_class>;

/// psi(a) = zeta^a for the fixed character psi(1) = zeta_p.
inline CyclotomicInt additive_character(std::uint32_t p, std::int64_t a) {
  return CyclotomicInt::zeta_power(p, a);
}

inline CyclotomicInt galois_twist(const CyclotomicInt& v, std::int64_t u) { return v.twisted(u); }

/// Multiplicative inverse in Q(zeta_p), by Gaussian elimination on the
/// multiplication-by-x matrix.
CyclotomicRat inverse(const CyclotomicRat& x);

inline CyclotomicRat operator/(const CyclotomicRat& a, const CyclotomicRat& b) { return a * inverse(b); }

}  // namespace expsumlab
