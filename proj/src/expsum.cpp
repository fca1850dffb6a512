#include "expsumlab/expsum.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>
#include <thread>

#include "expsumlab/error.hpp"

namespace expsumlab {

namespace {

using Log = FieldTables::Log;
using Counts = std::vector<std::uint64_t>;

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class level_order(const FieldCtx& base, std::uint32_t m) {
  return ipow(mpz_class(base.p()), static_cast<unsigned long>(base.degree()) * m);
}

mpz_class level_work(const VarietySpec& v, const FieldCtx& base, std::uint32_t m) {
  const mpz_class q = level_order(base, m);
  switch (v.kind) {
    case VarietyKind::AffineSpace:
    case VarietyKind::HypersurfaceComplement:
      return ipow(q, v.dim);
    case VarietyKind::Torus:
      return ipow(q - 1, v.dim);
    case VarietyKind::SL2:
      return q * q * q;
  }
  return 0;
}

FieldPtr make_level_field(const FieldPtr& base, std::uint32_t m, const EnumerationOptions& opts) {
  if (m < 1) throw DomainError("level m must be at least 1");
  const mpz_class order = level_order(*base, m);
  if (order > mpz_class(std::to_string(opts.max_field_order))) {
    throw BudgetExceeded("level field of order " + order.get_str() + " exceeds the table limit " +
                      std::to_string(opts.max_field_order));
  }
  const std::uint32_t degree = base->degree() * m;
  FieldPtr f = opts.field_factory ? opts.field_factory(base->p(), degree) : FieldCtx::build(base->p(), degree);
  if (f->p() != base->p() || f->degree() != degree) {
    throw DomainError("field factory returned a field of the wrong size");
  }
  return f;
}

// Splits [0, total) into contiguous chunks, one per worker, each with a
// private counter vector; counters are summed afterwards.
template <class Fn>
Counts run_partitioned(std::uint64_t total, unsigned threads, std::size_t width, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || total < 2) {
    Counts c(width, 0);
    fn(std::uint64_t{0}, total, c);
    return c;
  }
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Counts> partial(workers, Counts(width, 0));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back([&, begin, end, w] { fn(begin, end, partial[w]); });
  }
  for (auto& t : pool) t.join();
  Counts c(width, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < width; ++i) c[i] += part[i];
  }
  return c;
}

// A term with its coefficient in log form and exponents reduced mod q - 1.
struct LogTerm {
  Log coeff;
  std::vector<Log> exps;
};

std::vector<LogTerm> to_log_terms(const LaurentPoly& poly, const LevelField& level,
                                  const std::vector<bool>* zero_coords) {
  const FieldTables& t = level.tables();
  const auto q1 = static_cast<std::int64_t>(t.group_order());
  std::vector<LogTerm> out;
  for (const auto& term : poly.terms) {
    const Log c = level.embed(term.coeff);
    if (c == t.zero()) continue;
    LogTerm lt{c, {}};
    bool vanishes = false;
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      const std::int64_t e = term.exponents[i];
      if (zero_coords && (*zero_coords)[i]) {
        if (e > 0) vanishes = true;
        continue;
      }
      lt.exps.push_back(static_cast<Log>(((e % q1) + q1) % q1));
    }
    if (!vanishes) out.push_back(std::move(lt));
  }
  return out;
}

// Sum of psi(Tr f) over the torus (F^x)^dim for a Laurent polynomial given
// by log terms. Tr is additive, so Tr f(x) = sum_j Tr(c_j x^{e_j}) and every
// term reduces to a trace-table lookup at c_j + <e_j, log x> mod (q - 1).
class TorusWalker {
 public:
  TorusWalker(const FieldTables& t, const std::vector<LogTerm>& terms, std::size_t dim)
      : terms_(terms), dim_(dim), q1_(t.group_order()), tr_(t.trace_by_log().data()), p_(t.p()) {}

  std::size_t raw_width() const { return std::size_t{p_} * (terms_.size() + 1); }

  void run(std::uint64_t begin, std::uint64_t end, Counts& raw) const {
    std::vector<std::vector<Log>> scratch(dim_, std::vector<Log>(terms_.size()));
    std::vector<Log> start(terms_.size());
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      start[j] = static_cast<Log>((std::uint64_t{terms_[j].coeff} +
                                   std::uint64_t{terms_[j].exps[0]} * begin) % q1_);
    }
    walk(0, start.data(), begin, end, raw, scratch);
  }

 private:
  void walk(std::size_t depth, const Log* e_in, std::uint64_t begin, std::uint64_t end, Counts& raw,
            std::vector<std::vector<Log>>& scratch) const {
    if (depth + 1 == dim_) {
      inner(depth, e_in, end - begin, raw);
      return;
    }
    auto& e = scratch[depth];
    std::copy(e_in, e_in + terms_.size(), e.begin());
    for (std::uint64_t k = begin; k < end; ++k) {
      walk(depth + 1, e.data(), 0, q1_, raw, scratch);
      for (std::size_t j = 0; j < terms_.size(); ++j) {
        Log x = e[j] + terms_[j].exps[depth];
        e[j] = x >= q1_ ? x - q1_ : x;
      }
    }
  }

  void inner(std::size_t depth, const Log* e_in, std::uint64_t count, Counts& raw) const {
    std::uint32_t base = 0;
    Log vary_e[8];
    Log vary_step[8];
    std::size_t nvary = 0;
    std::vector<Log> extra_e, extra_step;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      const Log step = terms_[j].exps[depth];
      if (step == 0) {
        base += tr_[e_in[j]];
      } else if (nvary < 8) {
        vary_e[nvary] = e_in[j];
        vary_step[nvary] = step;
        ++nvary;
      } else {
        extra_e.push_back(e_in[j]);
        extra_step.push_back(step);
      }
    }
    std::uint64_t* out = raw.data() + base;
    const Log q1 = q1_;
    if (nvary == 0) {
      out[0] += count;
    } else if (nvary == 1) {
      Log e = vary_e[0];
      const Log s = vary_step[0];
      for (std::uint64_t k = 0; k < count; ++k) {
        ++out[tr_[e]];
        e += s;
        if (e >= q1) e -= q1;
      }
    } else {
      for (std::uint64_t k = 0; k < count; ++k) {
        std::uint32_t r = 0;
        for (std::size_t j = 0; j < nvary; ++j) {
          r += tr_[vary_e[j]];
          const Log x = vary_e[j] + vary_step[j];
          vary_e[j] = x >= q1 ? x - q1 : x;
        }
        for (std::size_t j = 0; j < extra_e.size(); ++j) {
          r += tr_[extra_e[j]];
          const Log x = extra_e[j] + extra_step[j];
          extra_e[j] = x >= q1 ? x - q1 : x;
        }
        ++out[r];
      }
    }
  }

  const std::vector<LogTerm>& terms_;
  std::size_t dim_;
  Log q1_;
  const std::uint16_t* tr_;
  std::uint32_t p_;
};

void fold_into(const Counts& raw, std::uint32_t p, Counts& counts) {
  for (std::size_t r = 0; r < raw.size(); ++r) counts[r % p] += raw[r];
}

void torus_counts(const LevelField& level, const std::vector<LogTerm>& terms, std::size_t dim,
                  unsigned threads, Counts& counts, std::uint64_t& visited) {
  const FieldTables& t = level.tables();
  const std::uint32_t p = t.p();
  if (dim == 0) {
    std::uint64_t r = 0;
    for (const auto& term : terms) r += t.trace(term.coeff);
    counts[r % p] += 1;
    visited += 1;
    return;
  }
  TorusWalker walker(t, terms, dim);
  Counts raw = run_partitioned(t.group_order(), threads, walker.raw_width(),
                               [&](std::uint64_t b, std::uint64_t e, Counts& c) { walker.run(b, e, c); });
  fold_into(raw, p, counts);
  std::uint64_t pts = 1;
  for (std::size_t i = 0; i < dim; ++i) pts *= t.group_order();
  visited += pts;
}

Counts monomial_counts(const VarietySpec& v, const LevelField& level, unsigned threads,
                       std::uint64_t& visited) {
  const std::uint32_t p = level.tables().p();
  Counts counts(p, 0);
  if (v.kind == VarietyKind::Torus) {
    torus_counts(level, to_log_terms(v.f, level, nullptr), v.dim, threads, counts, visited);
    return counts;
  }
  // Affine space is the disjoint union over zero patterns of tori.
  const std::size_t dim = v.dim;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    std::vector<bool> zero(dim);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      zero[i] = (mask >> i) & 1;
      if (!zero[i]) ++nonzero;
    }
    torus_counts(level, to_log_terms(v.f, level, &zero), nonzero, threads, counts, visited);
  }
  return counts;
}

Log eval_poly(const FieldTables& t, const std::vector<LogTerm>& terms, const Log* x, std::size_t dim) {
  const Log zero = t.zero();
  const std::uint64_t q1 = t.group_order();
  Log acc = zero;
  for (const auto& term : terms) {
    std::uint64_t e = term.coeff;
    bool vanishes = false;
    for (std::size_t i = 0; i < dim; ++i) {
      const Log ei = term.exps[i];
      if (ei == 0) continue;
      if (x[i] == zero) {
        vanishes = true;
        break;
      }
      e = (e + std::uint64_t{ei} * x[i]) % q1;
    }
    if (!vanishes) acc = t.add(acc, static_cast<Log>(e));
  }
  return acc;
}

// Monomials with a zero exponent vector must survive at zero coordinates,
// so exponents are kept unreduced-as-zero here: e = 0 means "absent".
std::vector<LogTerm> to_eval_terms(const LaurentPoly& poly, const LevelField& level) {
  const FieldTables& t = level.tables();
  const std::uint64_t q1 = t.group_order();
  std::vector<LogTerm> out;
  for (const auto& term : poly.terms) {
    const Log c = level.embed(term.coeff);
    if (c == t.zero()) continue;
    LogTerm lt{c, {}};
    for (auto e : term.exponents) {
      // Positive exponents that are multiples of q - 1 still vanish at 0.
      Log r = static_cast<Log>(static_cast<std::uint64_t>(e) % q1);
      if (e > 0 && r == 0) r = static_cast<Log>(q1);
      lt.exps.push_back(r);
    }
    out.push_back(std::move(lt));
  }
  return out;
}

// Enumerates F^dim (zero encoded as the zero() log) and calls fn(x) for each
// point, with the outermost coordinate partitioned across workers.
template <class Fn>
Counts enumerate_affine(const FieldTables& t, std::size_t dim, unsigned threads, std::size_t width, Fn&& fn) {
  const std::uint64_t q = std::uint64_t{t.group_order()} + 1;
  if (dim == 0) {
    Counts c(width, 0);
    fn(nullptr, c);
    return c;
  }
  return run_partitioned(q, threads, width, [&](std::uint64_t begin, std::uint64_t end, Counts& c) {
    std::vector<Log> x(dim, 0);
    for (std::uint64_t k0 = begin; k0 < end; ++k0) {
      x[0] = static_cast<Log>(k0);
      std::fill(x.begin() + 1, x.end(), 0);
      for (;;) {
        fn(x.data(), c);
        bool carry = true;
        for (std::size_t i = dim; i > 1;) {
          --i;
          if (++x[i] < q) {
            carry = false;
            break;
          }
          x[i] = 0;
        }
        if (carry) break;
      }
    }
  });
}

Counts complement_counts(const VarietySpec& v, const LevelField& level, unsigned threads,
                         bool constant_function, std::uint64_t& visited) {
  const FieldTables& t = level.tables();
  const std::uint32_t p = t.p();
  const auto g = to_eval_terms(v.f, level);
  const auto h = to_eval_terms(v.h, level);
  const std::uint64_t q1 = t.group_order();
  const std::size_t dim = v.dim;
  // Slot p counts points on the hypersurface (excluded).
  Counts c = enumerate_affine(t, dim, threads, p + 1, [&](const Log* x, Counts& out) {
    const Log hv = eval_poly(t, h, x, dim);
    if (hv == t.zero()) {
      ++out[p];
      return;
    }
    if (constant_function) {
      ++out[0];
      return;
    }
    const Log gv = eval_poly(t, g, x, dim);
    Log val = gv;
    if (gv != t.zero() && v.pole_order > 0) {
      const std::uint64_t hk = (std::uint64_t{hv} * v.pole_order) % q1;
      val = t.mul(gv, static_cast<Log>((q1 - hk) % q1));
    }
    ++out[t.trace(val)];
  });
  std::uint64_t pts = 1;
  for (std::size_t i = 0; i < dim; ++i) pts *= q1 + 1;
  visited += pts;
  c.pop_back();
  return c;
}

Counts sl2_counts(const VarietySpec& v, const LevelField& level, unsigned threads, std::uint64_t& visited) {
  const FieldTables& t = level.tables();
  const std::uint32_t p = t.p();
  const Log zero = t.zero();
  const Log q1 = t.group_order();
  // f depends only on the trace: tabulate Tr f over all possible traces.
  std::vector<Log> coeffs;
  for (const auto& a : v.sl2_coeffs) coeffs.push_back(level.embed(a));
  std::vector<std::uint16_t> trace_of_f(std::size_t{q1} + 1, 0);
  for (Log tr = 0; tr <= q1; ++tr) {
    Log s_prev = t.one();  // s_0
    Log s_cur = tr;        // s_1
    Log value = zero;
    for (std::size_t n = 1; n <= coeffs.size(); ++n) {
      value = t.add(value, t.mul(coeffs[n - 1], s_cur));
      const Log s_next = t.sub(t.mul(tr, s_cur), s_prev);
      s_prev = s_cur;
      s_cur = s_next;
    }
    trace_of_f[tr] = static_cast<std::uint16_t>(t.trace(value));
  }
  const Log one = t.one();
  // a ranges over zero() and the q - 1 units; a = 0 gives b != 0, c = -1/b, d free.
  Counts c = run_partitioned(std::uint64_t{q1} + 1, threads, p, [&](std::uint64_t begin, std::uint64_t end, Counts& out) {
    for (std::uint64_t ai = begin; ai < end; ++ai) {
      const Log a = static_cast<Log>(ai);
      if (a == zero) {
        for (Log b = 0; b < q1; ++b) {
          for (Log d = 0; d <= q1; ++d) ++out[trace_of_f[d]];
        }
        continue;
      }
      const Log a_inv = t.inv(a);
      for (Log b = 0; b <= q1; ++b) {
        for (Log cc = 0; cc <= q1; ++cc) {
          const Log d = t.mul(t.add(one, t.mul(b, cc)), a_inv);
          ++out[trace_of_f[t.add(a, d)]];
        }
      }
    }
  });
  const std::uint64_t q = std::uint64_t{q1} + 1;
  visited += q * q1 + q1 * q * q;
  return c;
}

Counts level_counts(const VarietySpec& v, const LevelField& level, unsigned threads,
                    std::uint64_t& visited) {
  switch (v.kind) {
    case VarietyKind::AffineSpace:
    case VarietyKind::Torus:
      return monomial_counts(v, level, threads, visited);
    case VarietyKind::HypersurfaceComplement:
      return complement_counts(v, level, threads, false, visited);
    case VarietyKind::SL2:
      return sl2_counts(v, level, threads, visited);
  }
  throw DomainError("unsupported variety kind");
}

void check_budget(const mpz_class& work, const EnumerationOptions& opts) {
  if (work > mpz_class(std::to_string(opts.budget))) {
    throw BudgetExceeded("estimated work " + work.get_str() + " point evaluations exceeds budget " +
                         std::to_string(opts.budget));
  }
}

}  // namespace

LevelField::LevelField(const FieldPtr& base, std::uint32_t m, const EnumerationOptions& opts)
    : tables_(make_level_field(base, m, opts), opts.max_field_order),
      base_degree_(base->degree()),
      theta_(tables_.zero()) {
  if (base_degree_ == 1) return;
  const Coeffs& mod = base->modulus();
  std::uint32_t found = 0;
  for (Log k = 0; k < tables_.group_order(); ++k) {
    Log acc = tables_.zero();
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = tables_.add(tables_.mul(acc, k), tables_.from_int(mod[i]));
    }
    if (acc == tables_.zero()) {
      if (found == opts.embedding_choice) {
        theta_ = k;
        return;
      }
      ++found;
    }
  }
  throw DomainError("embedding choice " + std::to_string(opts.embedding_choice) +
                    " exceeds the number of roots of the base modulus");
}

FieldTables::Log LevelField::embed(const Coeffs& base_coords) const {
  if (base_degree_ == 1) {
    return base_coords.empty() ? tables_.zero() : tables_.from_int(base_coords[0]);
  }
  Log acc = tables_.zero();
  for (std::size_t i = 0; i < base_coords.size(); ++i) {
    if (base_coords[i] == 0) continue;
    acc = tables_.add(acc, tables_.mul(tables_.from_int(base_coords[i]),
                                       tables_.pow(theta_, static_cast<std::int64_t>(i))));
  }
  return acc;
}

std::vector<FqElem> sym_trace(const FqElem& t, std::uint32_t max_order) {
  std::vector<FqElem> s;
  s.reserve(max_order + 1);
  s.push_back(FqElem::from_int(t.ctx(), 1));
  if (max_order >= 1) s.push_back(t);
  for (std::uint32_t n = 2; n <= max_order; ++n) s.push_back(t * s[n - 1] - s[n - 2]);
  return s;
}

mpz_class estimated_work(const VarietySpec& v, const FieldCtx& base, std::uint32_t max_level) {
  mpz_class total = 0;
  for (std::uint32_t m = 1; m <= max_level; ++m) total += level_work(v, base, m);
  return total;
}

mpz_class count_points(const VarietySpec& v, const FieldPtr& base, std::uint32_t m,
                       const EnumerationOptions& opts) {
  if (m < 1) throw DomainError("level m must be at least 1");
  v.validate(*base);
  const mpz_class q = level_order(*base, m);
  switch (v.kind) {
    case VarietyKind::AffineSpace:
      return ipow(q, v.dim);
    case VarietyKind::Torus:
      return ipow(q - 1, v.dim);
    case VarietyKind::SL2:
      return q * q * q - q;
    case VarietyKind::HypersurfaceComplement: {
      check_budget(level_work(v, *base, m), opts);
      LevelField level(base, m, opts);
      std::uint64_t visited = 0;
      Counts c = complement_counts(v, level, opts.threads, true, visited);
      return mpz_class(std::to_string(c[0]));
    }
  }
  throw DomainError("unsupported variety kind");
}

CyclotomicInt power_sum(const VarietySpec& v, const FieldPtr& base, std::uint32_t m,
                        const EnumerationOptions& opts, LevelStats* stats) {
  if (m < 1) throw DomainError("level m must be at least 1");
  v.validate(*base);
  check_budget(level_work(v, *base, m), opts);
  const auto start = std::chrono::steady_clock::now();
  LevelField level(base, m, opts);
  std::uint64_t visited = 0;
  Counts counts = level_counts(v, level, opts.threads, visited);
  if (stats) {
    stats->m = m;
    stats->points_visited = visited;
    stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return CyclotomicInt::from_counts(base->p(), counts);
}

PowerSumSequence power_sum_table(const VarietySpec& v, const FieldPtr& base, std::uint32_t max_level,
                                 const EnumerationOptions& opts) {
  if (max_level < 1) throw DomainError("need at least one level");
  v.validate(*base);
  check_budget(estimated_work(v, *base, max_level), opts);
  PowerSumSequence seq;
  seq.p = base->p();
  seq.n = base->degree();
  EnumerationOptions unlimited = opts;
  unlimited.budget = std::numeric_limits<std::uint64_t>::max();
  for (std::uint32_t m = 1; m <= max_level; ++m) {
    LevelStats st;
    seq.values.push_back(power_sum(v, base, m, unlimited, &st));
    seq.stats.push_back(st);
  }
  return seq;
}

}  // namespace expsumlab
