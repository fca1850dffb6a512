#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace expsumlab {

/// Coefficient vector over F_p, lowest degree first.
using Coeffs = std::vector<std::uint32_t>;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// The field F_{p^n} = F_p[x]/(modulus). Immutable once built.
class FieldCtx {
 public:
  /// Uses the smallest monic irreducible modulus of degree n, where
  /// candidates are ordered by the integer sum c_i p^i of their lower
  /// coefficients.
  static FieldPtr build(std::uint32_t p, std::uint32_t n);
  /// Uses a caller-chosen modulus (monic, degree >= 1, lowest degree first).
  static FieldPtr with_modulus(std::uint32_t p, Coeffs modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return n_; }
  /// Monic modulus including the leading 1 (size degree() + 1).
  const Coeffs& modulus() const { return modulus_; }
  /// p^n; fields must satisfy p^n < 2^62.
  std::uint64_t order() const { return order_; }

 private:
  FieldCtx(std::uint32_t p, Coeffs modulus);

  std::uint32_t p_;
  std::uint32_t n_;
  Coeffs modulus_;
  std::uint64_t order_;
};

bool is_irreducible(const Coeffs& monic, std::uint32_t p);

/// Element of a FieldCtx in the polynomial basis 1, x, ..., x^{n-1}.
class FqElem {
 public:
  explicit FqElem(FieldPtr ctx);
  FqElem(FieldPtr ctx, Coeffs coeffs);

  static FqElem from_int(FieldPtr ctx, std::int64_t value);
  /// Inverse of index(): digit i of the base-p expansion is coefficient i.
  static FqElem from_index(FieldPtr ctx, std::uint64_t index);
  /// The class of x.
  static FqElem root(FieldPtr ctx);

  const FieldPtr& ctx() const { return ctx_; }
  const Coeffs& coeffs() const { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& rhs);
  FqElem& operator-=(const FqElem& rhs);
  FqElem& operator*=(const FqElem& rhs);
  FqElem& operator/=(const FqElem& rhs);
  friend FqElem operator+(FqElem lhs, const FqElem& rhs) { return lhs += rhs; }
  friend FqElem operator-(FqElem lhs, const FqElem& rhs) { return lhs -= rhs; }
  friend FqElem operator*(FqElem lhs, const FqElem& rhs) { return lhs *= rhs; }
  friend FqElem operator/(FqElem lhs, const FqElem& rhs) { return lhs /= rhs; }
  friend bool operator==(const FqElem& a, const FqElem& b);

  FqElem scaled(std::uint32_t c) const;
  FqElem inverse() const;
  FqElem pow(std::uint64_t e) const;
  /// x -> x^{p^k}.
  FqElem frobenius(std::uint32_t k = 1) const;
  /// Sum of the conjugates x^{p^{i*sub_degree}} for i < n / sub_degree.
  FqElem trace(std::uint32_t sub_degree) const;
  /// Trace down to F_p, as an integer in [0, p).
  std::uint32_t absolute_trace() const;

 private:
  void check_same(const FqElem& other) const;

  FieldPtr ctx_;
  Coeffs coeffs_;
};

}  // namespace expsumlab
