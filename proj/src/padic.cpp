#include "expsumlab/padic.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "expsumlab/error.hpp"
#include "expsumlab/numeric.hpp"

namespace expsumlab {

namespace {

std::size_t width_for(std::uint32_t p) { return p == 2 ? 1 : p - 1; }

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime, got " + std::to_string(p));
}

}  // namespace

PiNumber::PiNumber(std::uint32_t p) : p_(p) {
  require_prime(p);
  coords_.assign(width_for(p), mpq_class(0));
}

PiNumber::PiNumber(std::uint32_t p, const mpq_class& rational) : PiNumber(p) { coords_[0] = rational; }

PiNumber::PiNumber(std::uint32_t p, std::vector<mpq_class> coords) : PiNumber(p) {
  if (coords.size() > coords_.size()) throw DomainError("too many coordinates for Q(pi)");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords_[i] = coords[i];
    coords_[i].canonicalize();
  }
}

PiNumber PiNumber::pi(std::uint32_t p) {
  PiNumber out(p);
  if (p == 2) {
    out.coords_[0] = -2;
  } else {
    out.coords_[1] = 1;
  }
  return out;
}

bool PiNumber::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& a) { return a == 0; });
}

std::optional<mpq_class> PiNumber::valuation() const {
  std::optional<mpq_class> best;
  const long e = static_cast<long>(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    mpq_class v = mpq_class(expsumlab::valuation(coords_[i], p_)) + mpq_class(static_cast<long>(i), e);
    v.canonicalize();
    if (!best || v < *best) best = v;
  }
  return best;
}

void PiNumber::check(const PiNumber& o) const {
  if (p_ != o.p_) throw ContextMismatch("Q(pi) elements over different primes");
}

PiNumber PiNumber::operator+(const PiNumber& o) const {
  check(o);
  PiNumber r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

PiNumber PiNumber::operator-(const PiNumber& o) const {
  check(o);
  PiNumber r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

PiNumber PiNumber::operator-() const {
  PiNumber r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

PiNumber PiNumber::operator*(const PiNumber& o) const {
  check(o);
  const std::size_t e = coords_.size();
  std::vector<mpq_class> full(2 * e, mpq_class(0));
  for (std::size_t i = 0; i < e; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (o.coords_[j] == 0) continue;
      full[i + j] += coords_[i] * o.coords_[j];
    }
  }
  if (p_ != 2) {
    // pi^{p-1} = -p
    for (std::size_t k = 2 * e - 1; k >= e; --k) {
      if (full[k] != 0) {
        full[k - e] -= full[k] * p_;
        full[k] = 0;
      }
    }
  }
  full.resize(e);
  PiNumber r(p_);
  r.coords_ = std::move(full);
  return r;
}

PiNumber PiNumber::operator*(const mpq_class& c) const {
  PiNumber r = *this;
  for (auto& a : r.coords_) a *= c;
  return r;
}

PiNumber PiNumber::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(pi)");
  const std::size_t e = coords_.size();
  // Column j of the multiplication matrix is this * pi^j.
  std::vector<std::vector<mpq_class>> m(e, std::vector<mpq_class>(e + 1));
  PiNumber col = *this;
  const PiNumber pi_elem = pi(p_);
  for (std::size_t j = 0; j < e; ++j) {
    for (std::size_t i = 0; i < e; ++i) m[i][j] = col.coords_[i];
    col = col * pi_elem;
  }
  m[0][e] = 1;
  for (std::size_t c = 0; c < e; ++c) {
    std::size_t piv = c;
    while (piv < e && m[piv][c] == 0) ++piv;
    if (piv == e) throw DomainError("singular multiplication matrix in Q(pi)");
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < e; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= e; ++k) m[r][k] -= f * m[c][k];
    }
  }
  PiNumber out(p_);
  for (std::size_t i = 0; i < e; ++i) out.coords_[i] = m[i][e] / m[i][i];
  return out;
}

bool PiNumber::operator==(const PiNumber& o) const { return p_ == o.p_ && coords_ == o.coords_; }

std::string PiNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << expsumlab::to_string(coords_[i]);
    if (i == 1) os << "*pi";
    if (i > 1) os << "*pi^" << i;
  }
  if (first) os << "0";
  return os.str();
}

PolyPi::PolyPi(std::uint32_t p) : p_(p) { require_prime(p); }

PolyPi::PolyPi(std::uint32_t p, std::vector<PiNumber> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  for (const auto& c : coeffs_) {
    if (c.p() != p) throw ContextMismatch("coefficient over a different prime");
  }
  trim();
}

PolyPi PolyPi::constant(const PiNumber& c) { return PolyPi(c.p(), {c}); }

PolyPi PolyPi::monomial(const PiNumber& c, std::size_t k) {
  std::vector<PiNumber> v(k + 1, PiNumber(c.p()));
  v[k] = c;
  return PolyPi(c.p(), std::move(v));
}

PiNumber PolyPi::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : PiNumber(p_); }

void PolyPi::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyPi PolyPi::operator+(const PolyPi& o) const {
  if (p_ != o.p_) throw ContextMismatch("polynomials over different primes");
  std::vector<PiNumber> r(std::max(coeffs_.size(), o.coeffs_.size()), PiNumber(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return PolyPi(p_, std::move(r));
}

PolyPi PolyPi::operator-(const PolyPi& o) const {
  if (p_ != o.p_) throw ContextMismatch("polynomials over different primes");
  std::vector<PiNumber> r(std::max(coeffs_.size(), o.coeffs_.size()), PiNumber(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return PolyPi(p_, std::move(r));
}

PolyPi PolyPi::operator*(const PolyPi& o) const {
  if (p_ != o.p_) throw ContextMismatch("polynomials over different primes");
  if (is_zero() || o.is_zero()) return PolyPi(p_);
  std::vector<PiNumber> r(coeffs_.size() + o.coeffs_.size() - 1, PiNumber(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return PolyPi(p_, std::move(r));
}

PolyPi PolyPi::operator*(const PiNumber& c) const {
  std::vector<PiNumber> r = coeffs_;
  for (auto& a : r) a = a * c;
  return PolyPi(p_, std::move(r));
}

PolyPi PolyPi::derivative() const {
  if (coeffs_.size() <= 1) return PolyPi(p_);
  std::vector<PiNumber> r;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * mpq_class(static_cast<long>(i)));
  return PolyPi(p_, std::move(r));
}

std::optional<mpq_class> PolyPi::gauss_valuation(const mpq_class& lambda) const {
  std::optional<mpq_class> best;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto v = coeffs_[i].valuation();
    if (!v) continue;
    mpq_class t = *v + lambda * static_cast<long>(i);
    if (!best || t < *best) best = t;
  }
  return best;
}

std::size_t PolyPi::dominant_terms(const mpq_class& lambda) const {
  const auto best = gauss_valuation(lambda);
  if (!best) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto v = coeffs_[i].valuation();
    if (v && *v + lambda * static_cast<long>(i) == *best) ++count;
  }
  return count;
}

std::string PolyPi::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string() << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

std::pair<PolyPi, PolyPi> divmod(const PolyPi& a, const PolyPi& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::uint32_t p = a.p();
  std::vector<PiNumber> rem = a.coeffs();
  const long db = b.degree();
  const PiNumber lead_inv = b.coeffs().back().inverse();
  std::vector<PiNumber> quot(std::max<long>(a.degree() - db + 1, 0), PiNumber(p));
  for (long k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const PiNumber f = rem[k] * lead_inv;
    quot[k - db] = f;
    for (long j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {PolyPi(p, std::move(quot)), PolyPi(p, std::move(rem))};
}

PolyPi gcd(PolyPi a, PolyPi b) {
  while (!b.is_zero()) {
    PolyPi r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.coeffs().back().inverse();
}

RationalFunctionPi::RationalFunctionPi(PolyPi numerator, PolyPi denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.p() != den_.p()) throw ContextMismatch("numerator and denominator over different primes");
}

RationalFunctionPi::RationalFunctionPi(PolyPi numerator)
    : RationalFunctionPi(numerator, PolyPi::constant(PiNumber(numerator.p(), mpq_class(1)))) {}

RationalFunctionPi RationalFunctionPi::monomial(const PiNumber& c, long k) {
  const PiNumber one(c.p(), mpq_class(1));
  if (k >= 0) return RationalFunctionPi(PolyPi::monomial(c, k));
  return RationalFunctionPi(PolyPi::constant(c), PolyPi::monomial(one, -k));
}

RationalFunctionPi RationalFunctionPi::operator+(const RationalFunctionPi& o) const {
  if (den_ == o.den_) return RationalFunctionPi(num_ + o.num_, den_);
  return RationalFunctionPi(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionPi RationalFunctionPi::operator-(const RationalFunctionPi& o) const {
  if (den_ == o.den_) return RationalFunctionPi(num_ - o.num_, den_);
  return RationalFunctionPi(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionPi RationalFunctionPi::operator*(const RationalFunctionPi& o) const {
  return RationalFunctionPi(num_ * o.num_, den_ * o.den_);
}

RationalFunctionPi RationalFunctionPi::derivative() const {
  return RationalFunctionPi(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

bool RationalFunctionPi::operator==(const RationalFunctionPi& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunctionPi RationalFunctionPi::reduced() const {
  const std::uint32_t p = num_.p();
  if (num_.is_zero()) return RationalFunctionPi(PolyPi(p));
  const PolyPi g = gcd(num_, den_);
  PolyPi n = divmod(num_, g).first;
  PolyPi d = divmod(den_, g).first;
  const PiNumber lead_inv = d.coeffs().back().inverse();
  return RationalFunctionPi(n * lead_inv, d * lead_inv);
}

std::string RationalFunctionPi::to_string() const {
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

std::optional<mpq_class> gauss_valuation(const RationalFunctionPi& f, const mpq_class& lambda) {
  const auto vn = f.numerator().gauss_valuation(lambda);
  if (!vn) return std::nullopt;
  return *vn - *f.denominator().gauss_valuation(lambda);
}

namespace {

// b_s = N_s / B^s for g = A/B.
struct Symbols {
  PolyPi base;
  std::vector<PolyPi> numerators;
};

Symbols build_symbols(const RationalFunctionPi& g, std::size_t s_max) {
  const std::uint32_t p = g.p();
  Symbols out;
  out.base = g.denominator();
  const PolyPi& a = g.numerator();
  const PolyPi db = out.base.derivative();
  out.numerators.reserve(s_max + 1);
  out.numerators.push_back(PolyPi::constant(PiNumber(p, mpq_class(1))));
  for (std::size_t s = 0; s < s_max; ++s) {
    const PolyPi& n = out.numerators.back();
    PolyPi next = n.derivative() * out.base + a * n;
    if (!db.is_zero() && s > 0) {
      next = next - n * db * PiNumber(p, mpq_class(static_cast<long>(s)));
    }
    out.numerators.push_back(std::move(next));
  }
  return out;
}

// v(N_s[i]) for each coefficient, computed once and shared across lambdas.
using CoeffValuations = std::vector<std::vector<std::optional<mpq_class>>>;

CoeffValuations coefficient_valuations(const Symbols& sym) {
  CoeffValuations out;
  out.reserve(sym.numerators.size());
  for (const auto& n : sym.numerators) {
    std::vector<std::optional<mpq_class>> row;
    row.reserve(n.coeffs().size());
    for (const auto& c : n.coeffs()) row.push_back(c.valuation());
    out.push_back(std::move(row));
  }
  return out;
}

RadiusSample sample_at(const mpq_class& lambda, const Symbols& sym, const CoeffValuations& cv,
                       std::uint32_t p, std::size_t s_max) {
  RadiusSample out;
  out.lambda = lambda;
  out.pole_on_circle = sym.base.degree() > 0 && sym.base.dominant_terms(lambda) > 1;
  const mpq_class v_base = *sym.base.gauss_valuation(lambda);

  std::vector<std::optional<mpq_class>> vb(s_max + 1);
  for (std::size_t s = 0; s <= s_max; ++s) {
    std::optional<mpq_class> best;
    for (std::size_t i = 0; i < cv[s].size(); ++i) {
      if (!cv[s][i]) continue;
      mpq_class t = *cv[s][i] + lambda * static_cast<long>(i);
      if (!best || t < *best) best = t;
    }
    if (best) vb[s] = *best - v_base * static_cast<long>(s);
  }

  std::vector<mpq_class> vfact(s_max + 1);
  for (std::size_t s = 0; s <= s_max; ++s) vfact[s] = factorial_valuation(s, p);
  const mpq_class inv_e(1, static_cast<long>(p == 2 ? 1 : p - 1));

  const std::size_t window = (s_max + 3) / 4;
  mpq_class lo = lambda;
  std::optional<mpq_class> up;
  std::optional<mpq_class> window_min;
  std::optional<mpq_class> window_max;
  std::optional<mpq_class> last_estimate;
  bool constant = true;
  bool consistent = true;
  for (std::size_t s = 1; s <= s_max; ++s) {
    const mpq_class sq(static_cast<long>(s));
    if (vb[s]) {
      mpq_class q = (vfact[s] - *vb[s]) / sq;
      if (q > lo) lo = q;
      if (s + window > s_max) {
        if (!window_min || q < *window_min) window_min = q;
        if (!window_max || q > *window_max) window_max = q;
      }
    }
    std::optional<mpq_class> inner;
    for (std::size_t k = 0; k <= s; ++k) {
      if (!vb[s - k]) continue;
      mpq_class t = vfact[s] - vfact[s - k] - lambda * static_cast<long>(k) + *vb[s - k];
      if (!inner || t < *inner) inner = t;
    }
    mpq_class u = inv_e - *inner / sq;
    if (!up || u < *up) up = u;
    if (s + window > s_max) {
      if (lo > *up) {
        consistent = false;
        continue;
      }
      const mpq_class est = simplest_between(lo, *up);
      if (last_estimate && *last_estimate != est) constant = false;
      last_estimate = est;
    }
  }
  out.r_lower = lo;
  out.r_upper = *up;
  out.r = consistent ? simplest_between(lo, *up) : lo;
  out.stabilized = consistent && constant;
  out.oscillation = (window_min && window_max) ? mpq_class(*window_max - *window_min) : mpq_class(0);
  return out;
}

}  // namespace

std::vector<RationalFunctionPi> symbol_sequence(const RationalFunctionPi& g, std::size_t s_max) {
  if (s_max < 1) throw DomainError("s_max must be >= 1");
  const Symbols sym = build_symbols(g, s_max);
  std::vector<RationalFunctionPi> out;
  PolyPi power = PolyPi::constant(PiNumber(g.p(), mpq_class(1)));
  for (std::size_t s = 0; s <= s_max; ++s) {
    out.emplace_back(sym.numerators[s], power);
    power = power * sym.base;
  }
  return out;
}

bool RadiusProfile::stabilized() const {
  return std::all_of(samples.begin(), samples.end(), [](const RadiusSample& s) { return s.stabilized; });
}

std::vector<mpq_class> default_lambda_grid() {
  return {mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(3, 2), mpq_class(2)};
}

RadiusProfile radius_profile(const RationalFunctionPi& g, std::vector<mpq_class> grid, std::size_t s_max,
                             unsigned threads) {
  if (s_max < 1) throw DomainError("s_max must be >= 1");
  if (grid.empty()) throw DomainError("empty lambda grid");
  for (auto& l : grid) l.canonicalize();
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const RationalFunctionPi h = g.reduced();
  const Symbols sym = build_symbols(h, s_max);
  const CoeffValuations cv = coefficient_valuations(sym);

  RadiusProfile out;
  out.p = g.p();
  out.s_max = s_max;
  out.samples.resize(grid.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, grid.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out.samples[i] = sample_at(grid[i], sym, cv, out.p, s_max);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += workers) {
          out.samples[i] = sample_at(grid[i], sym, cv, out.p, s_max);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  if (out.samples.size() >= 2) {
    const auto slope = [&](std::size_t i, std::size_t j) {
      const auto& a = out.samples[i];
      const auto& b = out.samples[j];
      return mpq_class((b.r - a.r) / (b.lambda - a.lambda));
    };
    const std::size_t n = out.samples.size();
    out.endpoint_slopes = std::make_pair(slope(0, 1), slope(n - 2, n - 1));
  }
  return out;
}

long robba_index(const mpq_class& inner_slope, const mpq_class& outer_slope) {
  const mpq_class d = inner_slope - outer_slope;
  if (d.get_den() != 1) throw Uncertified("non-integral slope difference " + to_string(d));
  return d.get_num().get_si();
}

long robba_index(const RadiusProfile& profile) {
  if (!profile.endpoint_slopes) throw Uncertified("profile needs at least two samples");
  const std::size_t n = profile.samples.size();
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1}) {
    if (!profile.samples[i].stabilized) throw Uncertified("endpoint samples did not stabilize");
  }
  // The inner endpoint is the smallest rho, i.e. the largest lambda.
  return robba_index(profile.endpoint_slopes->second, profile.endpoint_slopes->first);
}

RationalFunctionPi dwork_twist(const RationalFunctionPi& g) {
  return (g + RationalFunctionPi::monomial(PiNumber::pi(g.p()), -2)).reduced();
}

mpq_class taylor_norm_check(const mpq_class& lambda, const mpq_class& r_weight, std::uint32_t p,
                            std::size_t truncation) {
  require_prime(p);
  if (r_weight <= lambda) throw DomainError("the y-weight must exceed lambda");
  if (truncation < 1) throw DomainError("truncation must keep at least the nu = 1 term");
  const PiNumber one(p, mpq_class(1));
  std::optional<mpq_class> best;
  std::size_t argmin = 0;
  for (std::size_t nu = 1; nu <= truncation; ++nu) {
    const long e = static_cast<long>(nu);
    const mpq_class v = *one.valuation() + r_weight * e - lambda * (e + 1);
    if (!best || v < *best) {
      best = v;
      argmin = nu;
    }
  }
  if (argmin == truncation && truncation > 1) throw Uncertified("supremum not attained inside the truncation");
  return *best;
}

}  // namespace expsumlab
