#include "expsumlab/ffield.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "expsumlab/error.hpp"
#include "expsumlab/numeric.hpp"

namespace expsumlab {

namespace {

using Wide = std::uint64_t;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^{p-2}.
  Wide result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero b, both trimmed.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const Wide c = Wide{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<Wide> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + Wide{a[i]} * b[j]) % p;
    }
  }
  Coeffs out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  return poly_rem(poly_mul(a, b, p), m, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t p) {
  Coeffs result{1};
  base = poly_rem(std::move(base), m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^{p^k} mod m.
Coeffs x_pow_p_pow(std::uint32_t k, const Coeffs& m, std::uint32_t p) {
  Coeffs h = poly_rem(Coeffs{0, 1}, m, p);
  for (std::uint32_t i = 0; i < k; ++i) h = poly_powmod(h, p, m, p);
  return h;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) {
      throw DomainError("field of order " + std::to_string(p) + "^" + std::to_string(n) +
                        " is too large");
    }
    q *= p;
  }
  return q;
}

}  // namespace

bool is_irreducible(const Coeffs& monic, std::uint32_t p) {
  Coeffs m = monic;
  trim(m);
  if (m.size() < 2) return false;
  const auto n = static_cast<std::uint32_t>(m.size() - 1);
  if (n == 1) return true;
  if (m[0] == 0) return false;
  // Rabin: x^{p^n} = x mod m, and gcd(x^{p^{n/r}} - x, m) = 1 for primes r | n.
  const Coeffs x{0, 1};
  if (poly_sub(x_pow_p_pow(n, m, p), x, p) != Coeffs{}) return false;
  for (std::uint32_t r : prime_divisors(n)) {
    Coeffs g = poly_gcd(m, poly_sub(x_pow_p_pow(n / r, m, p), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, Coeffs modulus)
    : p_(p),
      n_(static_cast<std::uint32_t>(modulus.size() - 1)),
      modulus_(std::move(modulus)),
      order_(checked_order(p_, n_)) {}

FieldPtr FieldCtx::build(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw DomainError("characteristic too large");
  if (n < 1) throw DomainError("extension degree must be at least 1");
  const std::uint64_t candidates = checked_order(p, n);
  Coeffs m(n + 1, 0);
  m[n] = 1;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      m[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(m, p)) return FieldPtr(new FieldCtx(p, m));
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

FieldPtr FieldCtx::with_modulus(std::uint32_t p, Coeffs modulus) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw DomainError("modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(modulus, p)) throw DomainError("modulus is reducible");
  return FieldPtr(new FieldCtx(p, std::move(modulus)));
}

FqElem::FqElem(FieldPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->degree(), 0) {}

FqElem::FqElem(FieldPtr ctx, Coeffs coeffs) : ctx_(std::move(ctx)) {
  const std::uint32_t p = ctx_->p();
  for (auto& c : coeffs) c %= p;
  coeffs = poly_rem(std::move(coeffs), ctx_->modulus(), p);
  coeffs.resize(ctx_->degree(), 0);
  coeffs_ = std::move(coeffs);
}

FqElem FqElem::from_int(FieldPtr ctx, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(ctx->p());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return FqElem(std::move(ctx), Coeffs{static_cast<std::uint32_t>(r)});
}

FqElem FqElem::from_index(FieldPtr ctx, std::uint64_t index) {
  if (index >= ctx->order()) throw DomainError("element index out of range");
  Coeffs c(ctx->degree(), 0);
  for (auto& digit : c) {
    digit = static_cast<std::uint32_t>(index % ctx->p());
    index /= ctx->p();
  }
  return FqElem(std::move(ctx), std::move(c));
}

FqElem FqElem::root(FieldPtr ctx) { return FqElem(std::move(ctx), Coeffs{0, 1}); }

std::uint64_t FqElem::index() const {
  std::uint64_t idx = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) idx = idx * ctx_->p() + *it;
  return idx;
}

bool FqElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

void FqElem::check_same(const FqElem& other) const {
  if (ctx_ != other.ctx_) throw ContextMismatch("field elements belong to different contexts");
}

FqElem FqElem::operator-() const {
  FqElem out(*this);
  const std::uint32_t p = ctx_->p();
  for (auto& c : out.coeffs_) c = (p - c) % p;
  return out;
}

FqElem& FqElem::operator+=(const FqElem& rhs) {
  check_same(rhs);
  const std::uint32_t p = ctx_->p();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = static_cast<std::uint32_t>((Wide{coeffs_[i]} + rhs.coeffs_[i]) % p);
  }
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& rhs) { return *this += -rhs; }

FqElem& FqElem::operator*=(const FqElem& rhs) {
  check_same(rhs);
  Coeffs prod = poly_mulmod(coeffs_, rhs.coeffs_, ctx_->modulus(), ctx_->p());
  prod.resize(ctx_->degree(), 0);
  coeffs_ = std::move(prod);
  return *this;
}

FqElem& FqElem::operator/=(const FqElem& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FqElem& a, const FqElem& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

FqElem FqElem::scaled(std::uint32_t c) const {
  FqElem out(*this);
  const std::uint32_t p = ctx_->p();
  for (auto& x : out.coeffs_) x = static_cast<std::uint32_t>(Wide{x} * (c % p) % p);
  return out;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  // The multiplicative group has order q - 1.
  return pow(ctx_->order() - 2);
}

FqElem FqElem::pow(std::uint64_t e) const {
  Coeffs r = poly_powmod(coeffs_, e, ctx_->modulus(), ctx_->p());
  return FqElem(ctx_, std::move(r));
}

FqElem FqElem::frobenius(std::uint32_t k) const {
  FqElem out(*this);
  for (std::uint32_t i = 0; i < k % ctx_->degree(); ++i) out = out.pow(ctx_->p());
  return out;
}

FqElem FqElem::trace(std::uint32_t sub_degree) const {
  const std::uint32_t n = ctx_->degree();
  if (sub_degree == 0 || n % sub_degree != 0) {
    throw DomainError("subfield degree " + std::to_string(sub_degree) + " does not divide " +
                      std::to_string(n));
  }
  FqElem sum(ctx_);
  FqElem conj(*this);
  for (std::uint32_t i = 0; i < n / sub_degree; ++i) {
    sum += conj;
    conj = conj.frobenius(sub_degree);
  }
  return sum;
}

std::uint32_t FqElem::absolute_trace() const { return trace(1).coeffs_[0]; }

}  // namespace expsumlab
