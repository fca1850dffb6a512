#pragma once

#include <cstdint>
#include <vector>

#include "expsumlab/ffield.hpp"

namespace expsumlab {

/// Discrete-log tables for a FieldCtx: every nonzero element is g^k for a
/// fixed primitive g, and zero is the sentinel zero(). Multiplication is
/// addition of logs, addition goes through the Zech table, and the absolute
/// trace of g^k is a single lookup.
class FieldTables {
 public:
  using Log = std::uint32_t;

  /// Default cap on the field order for table construction.
  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 22;

  explicit FieldTables(FieldPtr ctx, std::uint64_t max_order = kDefaultMaxOrder);

  const FieldPtr& ctx() const { return ctx_; }
  std::uint32_t p() const { return ctx_->p(); }
  /// q - 1, the order of the multiplicative group.
  Log group_order() const { return group_order_; }
  Log zero() const { return group_order_; }
  Log one() const { return 0; }
  const FqElem& generator() const { return generator_; }

  Log log_of(const FqElem& x) const;
  Log log_of_index(std::uint64_t index) const { return log_[index]; }
  FqElem element(Log k) const;
  std::uint64_t index_of(Log k) const { return k == zero() ? 0 : exp_[k]; }

  Log mul(Log a, Log b) const {
    if (a == zero() || b == zero()) return zero();
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Log>(s >= group_order_ ? s - group_order_ : s);
  }
  Log inv(Log a) const { return a == 0 ? 0 : group_order_ - a; }
  Log pow(Log a, std::int64_t e) const;
  Log add(Log a, Log b) const {
    if (a == zero()) return b;
    if (b == zero()) return a;
    // g^a + g^b = g^a (1 + g^{b-a})
    const Log diff = b >= a ? b - a : b + group_order_ - a;
    const Log z = zech_[diff];
    return z == zero() ? zero() : mul(a, z);
  }
  Log neg(Log a) const { return a == zero() ? a : mul(a, minus_one_); }
  Log sub(Log a, Log b) const { return add(a, neg(b)); }
  /// Element c * 1 of the prime field.
  Log from_int(std::int64_t c) const;

  /// Absolute trace of g^k (and 0 for zero()).
  std::uint32_t trace(Log k) const { return k == zero() ? 0 : trace_[k]; }
  const std::vector<std::uint16_t>& trace_by_log() const { return trace_; }

 private:
  FieldPtr ctx_;
  Log group_order_;
  FqElem generator_;
  Log minus_one_;
  std::vector<std::uint32_t> exp_;
  std::vector<Log> log_;
  std::vector<Log> zech_;
  std::vector<std::uint16_t> trace_;
};

}  // namespace expsumlab
