#pragma once

#include <cstdint>
#include <vector>

#include "expsumlab/ffield.hpp"

namespace expsumlab {

/// One term c * x_1^{e_1} ... x_d^{e_d}. The coefficient is an element of
/// the base field F_q in its polynomial basis (a single entry for F_p).
struct Term {
  Coeffs coeff;
  std::vector<std::int32_t> exponents;
};

/// Laurent polynomial in nvars variables with coefficients in F_q.
struct LaurentPoly {
  std::size_t nvars = 0;
  std::vector<Term> terms;

  bool has_negative_exponent() const;
  LaurentPoly scaled(const FqElem& c) const;
};

enum class VarietyKind { AffineSpace, Torus, HypersurfaceComplement, SL2 };

const char* to_string(VarietyKind kind);

/// A variety X together with the regular function f on it.
///  - AffineSpace(dim): f is a polynomial.
///  - Torus(dim): f is a Laurent polynomial.
///  - HypersurfaceComplement(dim, h): f = g / h^pole_order, g and h polynomials.
///  - SL2: f(A) = sum_n a_n Tr(Sym^n A), with a_1..a_N in sl2_coeffs.
struct VarietySpec {
  VarietyKind kind = VarietyKind::AffineSpace;
  std::size_t dim = 0;
  LaurentPoly f;
  LaurentPoly h;
  std::uint32_t pole_order = 0;
  std::vector<Coeffs> sl2_coeffs;

  static VarietySpec affine(std::size_t dim, LaurentPoly f);
  static VarietySpec torus(std::size_t dim, LaurentPoly f);
  static VarietySpec complement(std::size_t dim, LaurentPoly g, LaurentPoly h, std::uint32_t pole_order);
  static VarietySpec sl2(std::vector<Coeffs> coeffs);

  /// Throws DomainError when the description is malformed for base field F_q.
  void validate(const FieldCtx& base) const;
  /// The same variety with f replaced by c * f.
  VarietySpec scaled(const FqElem& c) const;
};

/// Convenience for tests and built-in cases: integer coefficients, reduced mod p.
LaurentPoly make_poly(std::uint32_t p, std::size_t nvars,
                      std::initializer_list<std::pair<std::int64_t, std::vector<std::int32_t>>> terms);

}  // namespace expsumlab
