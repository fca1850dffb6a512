#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "expsumlab/cyclotomic.hpp"
#include "expsumlab/ffield.hpp"
#include "expsumlab/field_tables.hpp"
#include "expsumlab/variety.hpp"

namespace expsumlab {

struct EnumerationOptions {
  /// Refuse jobs whose estimated point evaluations exceed this.
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 1;
  std::uint64_t max_field_order = FieldTables::kDefaultMaxOrder;
  /// Builds F_{p^degree} for each level; defaults to FieldCtx::build.
  std::function<FieldPtr(std::uint32_t p, std::uint32_t degree)> field_factory;
  /// Which root of the base modulus (in discovery order) embeds F_q into
  /// each level field.
  std::uint32_t embedding_choice = 0;
};

struct LevelStats {
  std::uint32_t m = 0;
  std::uint64_t points_visited = 0;
  double seconds = 0;
};

/// S_1..S_M for one variety over F_q, q = p^n.
struct PowerSumSequence {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<CyclotomicInt> values;
  std::vector<LevelStats> stats;

  std::size_t levels() const { return values.size(); }
  const CyclotomicInt& at(std::uint32_t m) const { return values.at(m - 1); }
};

/// s_0..s_N with s_n = Tr(Sym^n A) for any A in SL2 with trace t.
std::vector<FqElem> sym_trace(const FqElem& t, std::uint32_t max_order);

/// #X(k_m), k_m = F_{q^m}.
mpz_class count_points(const VarietySpec& v, const FieldPtr& base, std::uint32_t m,
                       const EnumerationOptions& opts = {});

/// Point evaluations needed to enumerate levels 1..max_level.
mpz_class estimated_work(const VarietySpec& v, const FieldCtx& base, std::uint32_t max_level);

/// S_m(f) = sum over X(k_m) of psi(Tr f(x)), exactly.
CyclotomicInt power_sum(const VarietySpec& v, const FieldPtr& base, std::uint32_t m,
                        const EnumerationOptions& opts = {}, LevelStats* stats = nullptr);

PowerSumSequence power_sum_table(const VarietySpec& v, const FieldPtr& base, std::uint32_t max_level,
                                 const EnumerationOptions& opts = {});

/// A level field F_{q^m} with its tables and the chosen embedding of F_q.
class LevelField {
 public:
  LevelField(const FieldPtr& base, std::uint32_t m, const EnumerationOptions& opts);

  const FieldTables& tables() const { return tables_; }
  /// Image of a base-field element (polynomial-basis coordinates) in log form.
  FieldTables::Log embed(const Coeffs& base_coords) const;
  FieldTables::Log theta() const { return theta_; }

 private:
  FieldTables tables_;
  std::uint32_t base_degree_;
  FieldTables::Log theta_;
};

}  // namespace expsumlab
