#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace expsumlab {

/// Hypersurface data on P^n: line bundles O(d_i) with multiplicities e_i.
struct ChernSpec {
  std::uint32_t n = 1;
  std::vector<long> d;
  std::vector<long> e;
  void validate() const;
};

/// A degree-d map from a genus-g curve; m poles, and c punctures of V that
/// lie outside the polar locus.
struct CurveSpec {
  long g = 0;
  long c = 0;
  long m = 1;
  long d = 1;
  void validate() const;
};

/// Reduced Betti numbers b~_1..b~_{n-1} of the Milnor fiber of a
/// homogeneous polynomial in n variables.
struct BettiSpec {
  std::uint32_t n = 1;
  std::vector<long> reduced_betti;
  void validate() const;
};

/// Exponent support of a Laurent polynomial on the n-torus, n <= 4.
struct NewtonSpec {
  std::uint32_t n = 1;
  std::vector<std::vector<long>> support;
  void validate() const;
};

/// Degree magnitude plus the signed Euler characteristic of the twisted
/// de Rham cohomology. The signed value is what the L-series degree
/// deg Q - deg P should equal.
struct Prediction {
  mpz_class predicted_degree;
  mpz_class signed_euler;
  std::optional<mpz_class> total_bound;
  std::vector<std::string> flags;
};

/// (-1)^n [h^n] (1+h)^{n+1} / ((1 + E h) prod_i (1 + d_i h)), E = sum e_i d_i.
mpz_class chern_degree(const ChernSpec& s);
Prediction chern_prediction(const ChernSpec& s);

/// 2g + c + m + d - 2.
long curve_degree(const CurveSpec& s);
Prediction curve_prediction(const CurveSpec& s);

struct BettiDegree {
  long degree = 0;
  long total_bound = 0;
  long signed_euler = 0;
};
BettiDegree betti_degree(const BettiSpec& s);
Prediction betti_prediction(const BettiSpec& s);

struct NewtonDegree {
  mpz_class value;  ///< n! Vol(conv(support + origin))
  bool degenerate = false;
};
NewtonDegree newton_degree(const NewtonSpec& s);
Prediction newton_prediction(const NewtonSpec& s);

/// 2N for f = sum_{n<=N} a_n Tr(Sym^n A) on SL2.
long sl2_degree(long top_power);
Prediction sl2_prediction(long top_power);

/// Fermat case on P^n: the specialized Chern integral (n+1)^n, the Newton
/// volume of the matching torus support, and the closed form n^n (n+1).
struct FermatReport {
  std::uint32_t n = 0;
  mpz_class chern;
  mpz_class newton;
  mpz_class closed_form;
  bool discrepancy = false;
};
FermatReport fermat_report(std::uint32_t n);

}  // namespace expsumlab
