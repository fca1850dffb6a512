#include "expsumlab/series.hpp"

#include "expsumlab/error.hpp"

namespace expsumlab {

CycPoly::CycPoly(std::uint32_t p, std::vector<CyclotomicRat> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.p() != p_) throw ContextMismatch("coefficient over a different cyclotomic field");
  }
  trim();
}

CycPoly CycPoly::constant(const CyclotomicRat& c) { return CycPoly(c.p(), {c}); }

CycPoly CycPoly::monomial(const CyclotomicRat& c, std::size_t k) {
  std::vector<CyclotomicRat> v(k + 1, CyclotomicRat(c.p()));
  v[k] = c;
  return CycPoly(c.p(), std::move(v));
}

CycPoly CycPoly::from_integers(std::uint32_t p, const std::vector<long>& coeffs) {
  std::vector<CyclotomicRat> v;
  for (long c : coeffs) v.emplace_back(p, c);
  return CycPoly(p, std::move(v));
}

void CycPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CyclotomicRat CycPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : CyclotomicRat(p_);
}

CycPoly CycPoly::operator-() const {
  CycPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
  if (a.p_ != b.p_) throw ContextMismatch("polynomials over different cyclotomic fields");
  std::vector<CyclotomicRat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), CyclotomicRat(a.p_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return CycPoly(a.p_, std::move(v));
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) { return a + (-b); }

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  if (a.p_ != b.p_) throw ContextMismatch("polynomials over different cyclotomic fields");
  if (a.is_zero() || b.is_zero()) return CycPoly(a.p_);
  std::vector<CyclotomicRat> v(a.coeffs_.size() + b.coeffs_.size() - 1, CyclotomicRat(a.p_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycPoly(a.p_, std::move(v));
}

CycPoly operator*(const CycPoly& a, const CyclotomicRat& c) {
  std::vector<CyclotomicRat> v = a.coeffs_;
  for (auto& x : v) x = x * c;
  return CycPoly(a.p_, std::move(v));
}

CycPoly CycPoly::derivative() const {
  std::vector<CyclotomicRat> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * mpq_class(static_cast<long>(i)));
  return CycPoly(p_, std::move(v));
}

CycPoly CycPoly::truncated(std::size_t max_degree) const {
  std::vector<CyclotomicRat> v(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), max_degree + 1));
  return CycPoly(p_, std::move(v));
}

CycPoly CycPoly::monic() const {
  if (is_zero()) return *this;
  return *this * inverse(coeffs_.back());
}

std::pair<CycPoly, CycPoly> divmod(const CycPoly& a, const CycPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::uint32_t p = a.p();
  const CyclotomicRat lead_inv = inverse(b.coeffs().back());
  std::vector<CyclotomicRat> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (r.size() <= db) return {CycPoly(p), a};
  std::vector<CyclotomicRat> q(r.size() - db, CyclotomicRat(p));
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const CyclotomicRat c = r[k] * lead_inv;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * b.coeffs()[i];
  }
  return {CycPoly(p, std::move(q)), CycPoly(p, std::move(r))};
}

CycPoly gcd(const CycPoly& a, const CycPoly& b) { return extended_gcd(a, b).g; }

Bezout extended_gcd(const CycPoly& a, const CycPoly& b) {
  const std::uint32_t p = a.p();
  CycPoly r0 = a, r1 = b;
  CycPoly u0 = CycPoly::constant(CyclotomicRat(p, 1)), u1(p);
  CycPoly v0(p), v1 = CycPoly::constant(CyclotomicRat(p, 1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    CycPoly u2 = u0 - q * u1;
    CycPoly v2 = v0 - q * v1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const CyclotomicRat inv = inverse(r0.coeffs().back());
  return {r0 * inv, u0 * inv, v0 * inv};
}

std::vector<CyclotomicRat> series_quotient(const CycPoly& a, const CycPoly& b, std::size_t order) {
  const std::uint32_t p = a.p();
  if (b.coeff(0).is_zero()) throw DomainError("series denominator vanishes at t = 0");
  const CyclotomicRat b0_inv = inverse(b.coeff(0));
  std::vector<CyclotomicRat> out(order + 1, CyclotomicRat(p));
  for (std::size_t k = 0; k <= order; ++k) {
    CyclotomicRat acc = a.coeff(k);
    for (std::size_t j = 1; j <= k && j < b.coeffs().size(); ++j) acc -= b.coeffs()[j] * out[k - j];
    out[k] = acc * b0_inv;
  }
  return out;
}

}  // namespace expsumlab
