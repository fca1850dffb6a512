#include "expsumlab/predict.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "expsumlab/error.hpp"

namespace expsumlab {

void ChernSpec::validate() const {
  if (n < 1) throw DomainError("Chern data needs n >= 1");
  if (d.size() != e.size()) throw DomainError("degrees and multiplicities differ in length");
  for (long x : d) {
    if (x <= 0) throw DomainError("line bundle degrees must be positive");
  }
  for (long x : e) {
    if (x < 0) throw DomainError("multiplicities must be non-negative");
  }
}

void CurveSpec::validate() const {
  if (g < 0 || c < 0) throw DomainError("genus and puncture count must be non-negative");
  if (m < 1) throw DomainError("at least one pole is required");
  if (d < 1) throw DomainError("the map must have degree >= 1");
}

void BettiSpec::validate() const {
  if (n < 1) throw DomainError("ambient dimension must be >= 1");
  if (reduced_betti.size() + 1 != n) {
    throw DomainError("expected " + std::to_string(n - 1) + " reduced Betti numbers");
  }
  for (long b : reduced_betti) {
    if (b < 0) throw DomainError("Betti numbers must be non-negative");
  }
}

void NewtonSpec::validate() const {
  if (n < 1 || n > 4) throw DomainError("Newton volumes are supported for 1 <= n <= 4");
  if (support.empty()) throw DomainError("empty support");
  for (const auto& v : support) {
    if (v.size() != n) throw DomainError("exponent vector of wrong length");
  }
}

mpz_class chern_degree(const ChernSpec& s) {
  s.validate();
  const std::uint32_t n = s.n;
  // (1+h)^{n+1} truncated at h^n.
  std::vector<mpz_class> series(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) {
    mpz_bin_uiui(series[k].get_mpz_t(), n + 1, k);
  }
  const auto divide_by = [&](const mpz_class& a) {
    // multiply by 1/(1 + a h) = sum (-a)^k h^k
    for (std::uint32_t k = 1; k <= n; ++k) series[k] -= a * series[k - 1];
  };
  mpz_class big_e = 0;
  for (std::size_t i = 0; i < s.d.size(); ++i) big_e += mpz_class(s.e[i]) * s.d[i];
  divide_by(big_e);
  for (long di : s.d) divide_by(mpz_class(di));
  return (n % 2 == 0) ? series[n] : mpz_class(-series[n]);
}

Prediction chern_prediction(const ChernSpec& s) {
  const mpz_class v = chern_degree(s);
  Prediction out;
  out.predicted_degree = abs(v);
  out.signed_euler = (s.n % 2 == 0) ? v : mpz_class(-v);
  return out;
}

long curve_degree(const CurveSpec& s) {
  s.validate();
  return 2 * s.g + s.c + s.m + s.d - 2;
}

Prediction curve_prediction(const CurveSpec& s) {
  Prediction out;
  out.predicted_degree = curve_degree(s);
  // Cohomology sits in degree 1 only.
  out.signed_euler = -out.predicted_degree;
  out.total_bound = out.predicted_degree;
  return out;
}

BettiDegree betti_degree(const BettiSpec& s) {
  s.validate();
  BettiDegree out;
  // b~_i contributes to twisted de Rham cohomology in degree i + 1.
  for (std::size_t i = 0; i < s.reduced_betti.size(); ++i) {
    const long b = s.reduced_betti[i];
    const long degree_in_cohomology = static_cast<long>(i) + 2;
    out.signed_euler += (degree_in_cohomology % 2 == 0) ? b : -b;
    out.total_bound += b;
  }
  out.degree = std::labs(out.signed_euler);
  return out;
}

Prediction betti_prediction(const BettiSpec& s) {
  const BettiDegree b = betti_degree(s);
  Prediction out;
  out.predicted_degree = b.degree;
  out.signed_euler = b.signed_euler;
  out.total_bound = b.total_bound;
  return out;
}

namespace {

using Point = std::vector<mpq_class>;

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

std::size_t rank_of(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// det(v_1 - v_0, ..., v_{n-1} - v_0, q - v_0) for facet vertices v_0..v_{n-1}.
mpq_class orientation(const std::vector<Point>& pts, const std::vector<std::size_t>& facet, const Point& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<mpq_class>> m;
  const Point& v0 = pts[facet[0]];
  for (std::size_t i = 1; i < facet.size(); ++i) {
    std::vector<mpq_class> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = pts[facet[i]][k] - v0[k];
    m.push_back(std::move(row));
  }
  std::vector<mpq_class> row(n);
  for (std::size_t k = 0; k < n; ++k) row[k] = q[k] - v0[k];
  m.push_back(std::move(row));
  return determinant(std::move(m));
}

int sign(const mpq_class& x) { return sgn(x); }

}  // namespace

NewtonDegree newton_degree(const NewtonSpec& s) {
  s.validate();
  const std::size_t n = s.n;
  std::set<std::vector<long>> unique(s.support.begin(), s.support.end());
  unique.insert(std::vector<long>(n, 0));
  std::vector<Point> pts;
  for (const auto& v : unique) {
    Point p;
    for (long x : v) p.emplace_back(x);
    pts.push_back(std::move(p));
  }

  // Initial full-dimensional simplex, greedily.
  std::vector<std::size_t> simplex{0};
  std::vector<std::vector<mpq_class>> diffs;
  for (std::size_t i = 1; i < pts.size() && simplex.size() < n + 1; ++i) {
    std::vector<mpq_class> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = pts[i][k] - pts[0][k];
    auto trial = diffs;
    trial.push_back(d);
    if (rank_of(trial) == trial.size()) {
      diffs = std::move(trial);
      simplex.push_back(i);
    }
  }
  NewtonDegree out;
  if (simplex.size() < n + 1) {
    out.value = 0;
    out.degenerate = true;
    return out;
  }

  Point center(n, mpq_class(0));
  for (std::size_t idx : simplex) {
    for (std::size_t k = 0; k < n; ++k) center[k] += pts[idx][k];
  }
  for (auto& c : center) c /= static_cast<long>(n + 1);

  struct Facet {
    std::vector<std::size_t> verts;  // sorted
    int inner_sign;
  };
  std::vector<Facet> facets;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Facet f;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != skip) f.verts.push_back(simplex[j]);
    }
    std::sort(f.verts.begin(), f.verts.end());
    f.inner_sign = sign(orientation(pts, f.verts, center));
    facets.push_back(std::move(f));
  }
  const std::vector<std::size_t> rest(simplex.begin() + 1, simplex.end());
  mpq_class total = abs(orientation(pts, rest, pts[simplex[0]]));
  std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());

  for (std::size_t qi = 0; qi < pts.size(); ++qi) {
    if (in_simplex.count(qi)) continue;
    const Point& q = pts[qi];
    std::vector<bool> visible(facets.size(), false);
    bool any = false;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      const mpq_class o = orientation(pts, facets[fi].verts, q);
      if (sign(o) == -facets[fi].inner_sign) {
        visible[fi] = true;
        any = true;
        total += abs(o);
      }
    }
    if (!any) continue;
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      if (!visible[fi]) continue;
      for (std::size_t drop = 0; drop < facets[fi].verts.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t j = 0; j < facets[fi].verts.size(); ++j) {
          if (j != drop) ridge.push_back(facets[fi].verts[j]);
        }
        ++ridge_count[ridge];
      }
    }
    std::vector<Facet> next;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      if (!visible[fi]) next.push_back(std::move(facets[fi]));
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      Facet f;
      f.verts = ridge;
      f.verts.push_back(qi);
      std::sort(f.verts.begin(), f.verts.end());
      f.inner_sign = sign(orientation(pts, f.verts, center));
      next.push_back(std::move(f));
    }
    facets = std::move(next);
  }
  // n! Vol of a lattice polytope is an integer.
  out.value = total.get_num();
  return out;
}

Prediction newton_prediction(const NewtonSpec& s) {
  const NewtonDegree nd = newton_degree(s);
  Prediction out;
  out.predicted_degree = nd.value;
  // Cohomology concentrated in degree n.
  out.signed_euler = (s.n % 2 == 0) ? nd.value : mpz_class(-nd.value);
  if (nd.degenerate) out.flags.push_back("degenerate-hull");
  return out;
}

long sl2_degree(long top_power) {
  if (top_power < 0) throw DomainError("top symmetric power must be non-negative");
  return 2 * top_power;
}

Prediction sl2_prediction(long top_power) {
  Prediction out;
  out.predicted_degree = sl2_degree(top_power);
  // Dimensions N-1 and N+1 in degrees 1 and 3.
  out.signed_euler = -out.predicted_degree;
  out.total_bound = out.predicted_degree;
  return out;
}

FermatReport fermat_report(std::uint32_t n) {
  if (n < 1 || n > 4) throw DomainError("Fermat report supports 1 <= n <= 4");
  FermatReport r;
  r.n = n;
  ChernSpec c;
  c.n = n;
  c.d.assign(n + 1, 1);
  c.e.assign(n + 1, 1);
  r.chern = chern_degree(c);
  // Torus chart of x_0^{n+1} + ... + x_n^{n+1} over x_0 x_1...x_n: the
  // exponents -1 + (n+1) e_i together with (-1, ..., -1).
  NewtonSpec ns;
  ns.n = n;
  ns.support.push_back(std::vector<long>(n, -1));
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<long> v(n, -1);
    v[i] += static_cast<long>(n) + 1;
    ns.support.push_back(std::move(v));
  }
  r.newton = newton_degree(ns).value;
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  r.closed_form = nn * (n + 1);
  r.discrepancy = r.chern != r.closed_form || r.newton != r.closed_form;
  return r;
}

}  // namespace expsumlab
