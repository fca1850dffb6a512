#include "expsumlab/field_tables.hpp"

#include <string>

#include "expsumlab/error.hpp"

namespace expsumlab {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FqElem find_primitive(const FieldPtr& ctx) {
  const std::uint64_t order = ctx->order() - 1;
  const auto factors = prime_factors(order);
  const FqElem one = FqElem::from_int(ctx, 1);
  for (std::uint64_t idx = 1; idx < ctx->order(); ++idx) {
    FqElem g = FqElem::from_index(ctx, idx);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (g.pow(order / r) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return one;  // only reached for F_2, where the group is trivial
}

}  // namespace

FieldTables::FieldTables(FieldPtr ctx, std::uint64_t max_order)
    : ctx_(std::move(ctx)), group_order_(0), generator_(ctx_), minus_one_(0) {
  const std::uint64_t q = ctx_->order();
  if (q > max_order) {
    throw BudgetExceeded("field of order " + std::to_string(q) + " exceeds the table limit " +
                      std::to_string(max_order));
  }
  if (ctx_->p() > 0xFFFF) throw DomainError("characteristic too large for trace tables");
  group_order_ = static_cast<Log>(q - 1);
  generator_ = find_primitive(ctx_);

  const std::uint32_t p = ctx_->p();
  const std::uint32_t n = ctx_->degree();
  exp_.assign(group_order_, 0);
  log_.assign(q, zero());
  // g * v = sum_j g_j (x^j v); g is found in index order, so it has low degree.
  const Coeffs& gc = generator_.coeffs();
  std::size_t gdeg = gc.size();
  while (gdeg > 1 && gc[gdeg - 1] == 0) --gdeg;
  const Coeffs& mod = ctx_->modulus();
  Coeffs cur(n, 0), shifted(n), next(n);
  cur[0] = 1;
  for (Log k = 0; k < group_order_; ++k) {
    std::uint64_t idx = 0;
    for (std::uint32_t i = n; i-- > 0;) idx = idx * p + cur[i];
    exp_[k] = static_cast<std::uint32_t>(idx);
    log_[idx] = k;
    shifted = cur;
    for (std::uint32_t i = 0; i < n; ++i) next[i] = static_cast<std::uint32_t>(std::uint64_t{cur[i]} * gc[0] % p);
    for (std::size_t j = 1; j < gdeg; ++j) {
      // shifted <- x * shifted mod modulus
      const std::uint64_t top = shifted[n - 1];
      for (std::uint32_t i = n - 1; i > 0; --i) shifted[i] = shifted[i - 1];
      shifted[0] = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        shifted[i] = static_cast<std::uint32_t>((shifted[i] + (p - mod[i]) * top) % p);
      }
      if (gc[j] == 0) continue;
      for (std::uint32_t i = 0; i < n; ++i) {
        next[i] = static_cast<std::uint32_t>((next[i] + std::uint64_t{shifted[i]} * gc[j]) % p);
      }
    }
    cur.swap(next);
  }

  zech_.assign(group_order_, zero());
  for (Log k = 0; k < group_order_; ++k) {
    const std::uint64_t idx = exp_[k];
    const std::uint64_t d0 = idx % p;
    const std::uint64_t plus_one = idx - d0 + (d0 + 1) % p;
    zech_[k] = log_[plus_one];
  }
  minus_one_ = log_[p - 1];

  // Trace is F_p-linear: Tr(sum c_i x^i) = sum c_i Tr(x^i).
  std::vector<std::uint32_t> basis_trace(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Coeffs basis(n, 0);
    basis[i] = 1;
    basis_trace[i] = FqElem(ctx_, basis).absolute_trace();
  }
  trace_.assign(group_order_, 0);
  for (Log k = 0; k < group_order_; ++k) {
    std::uint64_t idx = exp_[k];
    std::uint64_t t = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      t += (idx % p) * basis_trace[i];
      idx /= p;
    }
    trace_[k] = static_cast<std::uint16_t>(t % p);
  }
}

FieldTables::Log FieldTables::log_of(const FqElem& x) const {
  if (x.ctx() != ctx_) throw ContextMismatch("element does not belong to the tabulated field");
  return log_[x.index()];
}

FqElem FieldTables::element(Log k) const {
  if (k == zero()) return FqElem(ctx_);
  return FqElem::from_index(ctx_, exp_[k]);
}

FieldTables::Log FieldTables::pow(Log a, std::int64_t e) const {
  if (a == zero()) {
    if (e <= 0) throw DomainError("non-positive power of zero");
    return zero();
  }
  const auto order = static_cast<std::int64_t>(group_order_);
  std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(a) * e) % order);
  if (r < 0) r += order;
  return static_cast<Log>(r);
}

FieldTables::Log FieldTables::from_int(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(ctx_->p());
  std::int64_t r = c % p;
  if (r < 0) r += p;
  return log_[static_cast<std::uint64_t>(r)];
}

}  // namespace expsumlab
