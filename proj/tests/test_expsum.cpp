#include <doctest.h>

#include <optional>

#include "expsumlab/error.hpp"
#include "expsumlab/expsum.hpp"
#include "expsumlab/lfun.hpp"
#include "generators.hpp"

using namespace expsumlab;

namespace {

CyclotomicInt ints(std::uint32_t p, std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return CyclotomicInt(p, z);
}

FqElem lift(const FieldPtr& level, std::uint32_t c) { return FqElem::from_int(level, c); }

FqElem eval_monomials(const LaurentPoly& f, const FieldPtr& level, const std::vector<FqElem>& x) {
  FqElem acc(level);
  for (const auto& t : f.terms) {
    FqElem term = lift(level, t.coeff.empty() ? 0 : t.coeff[0]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int e = t.exponents[i];
      term *= e >= 0 ? x[i].pow(e) : x[i].inverse().pow(-e);
    }
    acc += term;
  }
  return acc;
}

// Direct enumeration over F_{p^m}^dim with F_p coefficients.
CyclotomicInt brute_force(const VarietySpec& v, std::uint32_t p, std::uint32_t m) {
  const FieldPtr level = FieldCtx::build(p, m);
  std::vector<long> counts(p, 0);
  const std::uint64_t q = level->order();
  std::vector<std::uint64_t> idx(v.dim, 0);
  while (true) {
    std::vector<FqElem> x;
    for (auto i : idx) x.push_back(FqElem::from_index(level, i));
    std::optional<FqElem> value;
    const bool on_torus = std::all_of(x.begin(), x.end(), [](const FqElem& e) { return !e.is_zero(); });
    if (v.kind == VarietyKind::AffineSpace || (v.kind == VarietyKind::Torus && on_torus)) {
      value = eval_monomials(v.f, level, x);
    } else if (v.kind == VarietyKind::HypersurfaceComplement) {
      const FqElem h = eval_monomials(v.h, level, x);
      if (!h.is_zero()) value = eval_monomials(v.f, level, x) / h.pow(v.pole_order);
    }
    if (value) ++counts[value->absolute_trace()];
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == q) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return CyclotomicInt::from_counts(p, counts);
}

CyclotomicInt brute_force_sl2(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& a) {
  const FieldPtr level = FieldCtx::build(p, m);
  const std::uint64_t q = level->order();
  const FqElem one = FqElem::from_int(level, 1);
  std::vector<long> counts(p, 0);
  for (std::uint64_t i0 = 0; i0 < q; ++i0) {
    for (std::uint64_t i1 = 0; i1 < q; ++i1) {
      for (std::uint64_t i2 = 0; i2 < q; ++i2) {
        for (std::uint64_t i3 = 0; i3 < q; ++i3) {
          const FqElem A = FqElem::from_index(level, i0), B = FqElem::from_index(level, i1);
          const FqElem C = FqElem::from_index(level, i2), D = FqElem::from_index(level, i3);
          if (!(A * D - B * C == one)) continue;
          // Tr Sym^n from the eigenvalue power sums: h_n = t h_{n-1} - h_{n-2}.
          const FqElem t = A + D;
          FqElem prev = one, cur = t, f(level);
          for (std::size_t n = 1; n <= a.size(); ++n) {
            f += cur * lift(level, a[n - 1]);
            const FqElem next = t * cur - prev;
            prev = cur;
            cur = next;
          }
          ++counts[f.absolute_trace()];
        }
      }
    }
  }
  return CyclotomicInt::from_counts(p, counts);
}

Coeffs largest_irreducible(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = count; idx-- > 0;) {
    Coeffs c;
    std::uint64_t r = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      c.push_back(static_cast<std::uint32_t>(r % p));
      r /= p;
    }
    c.push_back(1);
    if (is_irreducible(c, p)) return c;
  }
  throw Error("none");
}

LaurentPoly zero_poly(std::size_t nvars) {
  LaurentPoly f;
  f.nvars = nvars;
  return f;
}

}  // namespace

TEST_CASE("count_points examples") {
  CHECK(count_points(VarietySpec::affine(2, zero_poly(2)), FieldCtx::build(3, 1), 1) == 9);
  CHECK(count_points(VarietySpec::torus(1, zero_poly(1)), FieldCtx::build(2, 2), 1) == 3);
  CHECK(count_points(VarietySpec::sl2({{1}}), FieldCtx::build(2, 1), 1) == 6);
  CHECK(count_points(VarietySpec::sl2({{1}}), FieldCtx::build(3, 1), 2) == 720);
  const auto h = make_poly(5, 2, {{1, {1, 1}}, {-1, {0, 0}}});
  CHECK(count_points(VarietySpec::complement(2, zero_poly(2), h, 1), FieldCtx::build(5, 1), 1) == 21);
  CHECK_THROWS_AS(count_points(VarietySpec::affine(1, zero_poly(1)), FieldCtx::build(3, 1), 0), DomainError);
}

TEST_CASE("sym_trace examples") {
  const auto f5 = FieldCtx::build(5, 1);
  const auto s = sym_trace(FqElem::from_int(f5, 2), 4);
  CHECK(s[0] == FqElem::from_int(f5, 1));
  CHECK(s[1] == FqElem::from_int(f5, 2));
  CHECK(s[2] == FqElem::from_int(f5, 3));
  CHECK(s[4] == FqElem::from_int(f5, 5));
  CHECK(sym_trace(FqElem::from_int(f5, 3), 0).size() == 1);
}

TEST_CASE("power_sum examples") {
  const auto f3 = FieldCtx::build(3, 1);
  const auto f5 = FieldCtx::build(5, 1);
  CHECK(power_sum(VarietySpec::affine(2, make_poly(3, 2, {{1, {2, 1}}, {-1, {1, 0}}})), f3, 1) == CyclotomicInt(3, 3L));
  CHECK(power_sum(VarietySpec::affine(1, make_poly(5, 1, {{1, {1}}})), f5, 1).is_zero());
  CHECK(power_sum(VarietySpec::torus(1, make_poly(5, 1, {{1, {1}}})), f5, 2) == CyclotomicInt(5, -1L));
  CHECK(power_sum(VarietySpec::sl2({{1}}), FieldCtx::build(2, 1), 1) == CyclotomicInt(2, 2L));
}

TEST_CASE("power_sum_table examples") {
  const auto f3 = FieldCtx::build(3, 1);
  const auto nd = power_sum_table(VarietySpec::affine(2, make_poly(3, 2, {{1, {2, 1}}, {-1, {1, 0}}})), f3, 4);
  for (std::uint32_t m = 1; m <= 4; ++m) CHECK(nd.at(m) == CyclotomicInt(3, long(std::pow(3, m))));
  const auto zero = power_sum_table(VarietySpec::affine(1, zero_poly(1)), f3, 2);
  CHECK(zero.at(1) == CyclotomicInt(3, 3L));
  CHECK(zero.at(2) == CyclotomicInt(3, 9L));
  const auto lin = power_sum_table(VarietySpec::torus(1, make_poly(3, 1, {{1, {1}}})), f3, 3);
  for (std::uint32_t m = 1; m <= 3; ++m) CHECK(lin.at(m) == CyclotomicInt(3, -1L));
  CHECK(lin.stats.size() == 3);
  CHECK(lin.stats[2].points_visited == 26);
}

TEST_CASE("empty complement of dimension zero is a single point") {
  auto one = make_poly(3, 0, {{1, {}}});
  auto zero = make_poly(3, 0, {{0, {}}});
  const auto seq = power_sum_table(VarietySpec::complement(0, zero, one, 1), FieldCtx::build(3, 1), 3);
  for (std::uint32_t m = 1; m <= 3; ++m) CHECK(seq.at(m) == CyclotomicInt(3, 1L));
}

TEST_CASE("enumerators agree with direct evaluation") {
  struct Case {
    VarietySpec v;
    std::uint32_t p;
    std::uint32_t max_m;
  };
  const std::vector<Case> cases{
      {VarietySpec::torus(2, make_poly(5, 2, {{1, {1, -1}}, {2, {2, 0}}, {1, {0, -3}}})), 5, 2},
      {VarietySpec::torus(1, make_poly(7, 1, {{1, {1}}, {3, {-2}}})), 7, 2},
      {VarietySpec::affine(2, make_poly(3, 2, {{1, {3, 0}}, {2, {1, 1}}, {1, {0, 0}}})), 3, 2},
      {VarietySpec::affine(3, make_poly(2, 3, {{1, {1, 1, 0}}, {1, {0, 0, 1}}})), 2, 3},
      {VarietySpec::complement(2, make_poly(5, 2, {{1, {1, 0}}, {1, {0, 2}}}), make_poly(5, 2, {{1, {1, 1}}, {-1, {0, 0}}}), 1),
       5, 2},
      {VarietySpec::complement(1, make_poly(3, 1, {{1, {0}}, {1, {1}}}), make_poly(3, 1, {{1, {2}}, {1, {0}}}), 2), 3, 3},
  };
  for (const auto& c : cases) {
    const auto base = FieldCtx::build(c.p, 1);
    for (std::uint32_t m = 1; m <= c.max_m; ++m) {
      CAPTURE(m);
      CHECK(power_sum(c.v, base, m) == brute_force(c.v, c.p, m));
    }
  }
}

TEST_CASE("SL2 enumeration agrees with a four-fold loop") {
  CHECK(power_sum(VarietySpec::sl2({{1}}), FieldCtx::build(2, 1), 2) == brute_force_sl2(2, 2, {1}));
  CHECK(power_sum(VarietySpec::sl2({{1}, {1}}), FieldCtx::build(3, 1), 1) == brute_force_sl2(3, 1, {1, 1}));
  CHECK(power_sum(VarietySpec::sl2({{2}, {0}, {1}}), FieldCtx::build(5, 1), 1) == brute_force_sl2(5, 1, {2, 0, 1}));
  CHECK(power_sum(VarietySpec::sl2({{1}, {2}}), FieldCtx::build(3, 1), 2) == brute_force_sl2(3, 2, {1, 2}));
}

TEST_CASE("Galois equivariance under scaling by units of F_p") {
  const std::vector<std::pair<VarietySpec, std::uint32_t>> cases{
      {VarietySpec::torus(1, make_poly(5, 1, {{1, {1}}, {1, {-1}}})), 5},
      {VarietySpec::affine(2, make_poly(7, 2, {{1, {2, 1}}, {3, {0, 1}}})), 7},
      {VarietySpec::sl2({{1}, {1}}), 3},
  };
  for (const auto& [v, p] : cases) {
    const auto base = FieldCtx::build(p, 1);
    for (std::uint32_t u = 1; u < p; ++u) {
      const VarietySpec scaled = v.scaled(FqElem::from_int(base, u));
      for (std::uint32_t m = 1; m <= 2; ++m) {
        CHECK(power_sum(scaled, base, m) == galois_twist(power_sum(v, base, m), u));
      }
    }
  }
}

TEST_CASE("constant function sums to the point count") {
  const auto base = FieldCtx::build(3, 1);
  const std::vector<VarietySpec> cases{
      VarietySpec::affine(2, zero_poly(2)), VarietySpec::torus(3, zero_poly(3)),
      VarietySpec::complement(2, zero_poly(2), make_poly(3, 2, {{1, {2, 0}}, {1, {0, 1}}}), 3),
      VarietySpec::sl2({{0}})};
  for (const auto& v : cases) {
    for (std::uint32_t m = 1; m <= 2; ++m) {
      CHECK(power_sum(v, base, m) == CyclotomicInt(3, count_points(v, base, m).get_si()));
    }
  }
}

TEST_CASE("affine line splits as torus plus origin") {
  gen::Source src(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 3;
    const auto base = FieldCtx::build(p, 1);
    const long c0 = src.integer(0, p - 1);
    const auto f = make_poly(p, 1, {{c0, {0}}, {src.integer(0, p - 1), {1}}, {src.integer(0, p - 1), {3}}});
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const CyclotomicInt origin = additive_character(p, (m * c0) % p);
      CHECK(power_sum(VarietySpec::affine(1, f), base, m) == power_sum(VarietySpec::torus(1, f), base, m) + origin);
    }
  }
}

TEST_CASE("results do not depend on the worker partition") {
  const auto base = FieldCtx::build(3, 1);
  const std::vector<VarietySpec> cases{
      VarietySpec::affine(2, make_poly(3, 2, {{1, {2, 1}}, {2, {1, 0}}, {1, {0, 2}}})),
      VarietySpec::torus(2, make_poly(3, 2, {{1, {1, -1}}, {1, {-1, 2}}})),
      VarietySpec::complement(2, make_poly(3, 2, {{1, {1, 0}}}), make_poly(3, 2, {{1, {1, 1}}, {1, {0, 0}}}), 1),
      VarietySpec::sl2({{1}, {2}})};
  for (const auto& v : cases) {
    EnumerationOptions one;
    const auto ref = power_sum(v, base, 3, one);
    for (unsigned t : {2u, 3u, 5u}) {
      EnumerationOptions opts;
      opts.threads = t;
      CHECK(power_sum(v, base, 3, opts) == ref);
    }
  }
}

TEST_CASE("sums over F_q do not depend on the embedding or the level modulus") {
  const auto f4 = FieldCtx::build(2, 2);
  // f = alpha x + x^3 y with alpha a generator of F_4.
  LaurentPoly f;
  f.nvars = 2;
  f.terms = {{{0, 1}, {1, 0}}, {{1}, {3, 1}}};
  const VarietySpec v = VarietySpec::affine(2, f);
  EnumerationOptions other_root;
  other_root.embedding_choice = 1;
  EnumerationOptions other_modulus;
  other_modulus.field_factory = [](std::uint32_t p, std::uint32_t n) {
    return FieldCtx::with_modulus(p, largest_irreducible(p, n));
  };
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const auto ref = power_sum(v, f4, m);
    CHECK(power_sum(v, f4, m, other_root) == ref);
    CHECK(power_sum(v, f4, m, other_modulus) == ref);
  }
  const auto t9 = VarietySpec::torus(1, LaurentPoly{1, {{{1, 1}, {1}}, {{2}, {-1}}}});
  const auto f9 = FieldCtx::build(3, 2);
  for (std::uint32_t m = 1; m <= 2; ++m) CHECK(power_sum(t9, f9, m, other_modulus) == power_sum(t9, f9, m));
  EnumerationOptions bad;
  bad.embedding_choice = 2;
  CHECK_THROWS_AS(power_sum(v, f4, 1, bad), DomainError);
}

TEST_CASE("every conjugate of S_m is bounded by the point count") {
  const auto base = FieldCtx::build(5, 1);
  const auto v = VarietySpec::torus(2, make_poly(5, 2, {{1, {1, 0}}, {1, {0, 1}}, {2, {-1, -1}}}));
  for (std::uint32_t m = 1; m <= 2; ++m) {
    const auto s = power_sum(v, base, m);
    CHECK(s.max_conjugate_abs() <= count_points(v, base, m).get_d() + 1e-9);
  }
}

TEST_CASE("budget and table limits are enforced") {
  const auto base = FieldCtx::build(3, 1);
  EnumerationOptions tight;
  tight.budget = 100;
  const auto v = VarietySpec::affine(2, make_poly(3, 2, {{1, {1, 0}}}));
  CHECK_THROWS_AS(power_sum_table(v, base, 3, tight), BudgetExceeded);
  CHECK_NOTHROW(power_sum_table(v, base, 2, tight));
  CHECK_THROWS_AS(power_sum(VarietySpec::torus(1, make_poly(2, 1, {{1, {1}}})), FieldCtx::build(2, 1), 23),
                  BudgetExceeded);
}

TEST_CASE("malformed varieties are rejected") {
  const auto base = FieldCtx::build(3, 1);
  CHECK_THROWS_AS(VarietySpec::affine(1, make_poly(3, 1, {{1, {-1}}})).validate(*base), DomainError);
  CHECK_THROWS_AS(VarietySpec::torus(2, make_poly(3, 1, {{1, {1}}})).validate(*base), DomainError);
  CHECK_THROWS_AS(VarietySpec::sl2({{1, 1}}).validate(*base), DomainError);
}

TEST_CASE("scaled_degree_check examples") {
  const auto f5 = FieldCtx::build(5, 1);
  const auto torus = VarietySpec::torus(1, make_poly(5, 1, {{1, {1}}}));
  const auto r = scaled_degree_check(torus, f5, FqElem::from_int(f5, 2), 6);
  CHECK(r.degrees_match);
  CHECK(r.original.degree() == -1);
  CHECK(r.scaled.degree() == -1);
  CHECK(r.scaled.total_degree() == 1);
  CHECK(r.twist_checked);
  CHECK(r.twist_matches);
  for (std::uint32_t m = 1; m <= 6; ++m) CHECK(r.scaled_sums.at(m) == galois_twist(r.original_sums.at(m), 2));

  const auto f3 = FieldCtx::build(3, 1);
  const auto nd = VarietySpec::affine(2, make_poly(3, 2, {{1, {2, 1}}, {-1, {1, 0}}}));
  const auto r2 = scaled_degree_check(nd, f3, FqElem::from_int(f3, 2), 5);
  CHECK(r2.degrees_match);
  CHECK(r2.original.degree() == 1);
  CHECK(r2.scaled.total_degree() == 1);

  const auto r1 = scaled_degree_check(torus, f5, FqElem::from_int(f5, 1), 6);
  CHECK(r1.original.numerator == r1.scaled.numerator);
  CHECK(r1.original.denominator == r1.scaled.denominator);
  CHECK_THROWS_AS(scaled_degree_check(torus, f5, FqElem(f5), 6), DomainError);
}

TEST_CASE("scaling by a non-prime-field constant keeps the degrees") {
  const auto f4 = FieldCtx::build(2, 2);
  const auto v = VarietySpec::torus(1, LaurentPoly{1, {{{1}, {1}}, {{1}, {-1}}}});
  const auto r = scaled_degree_check(v, f4, FqElem::root(f4), 5);
  CHECK(r.degrees_match);
  CHECK_FALSE(r.twist_checked);
  CHECK(r.original.degree() == -2);
}
