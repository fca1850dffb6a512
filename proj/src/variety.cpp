#include "expsumlab/variety.hpp"

#include <string>

#include "expsumlab/error.hpp"

namespace expsumlab {

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& t : terms) {
    for (auto e : t.exponents) {
      if (e < 0) return true;
    }
  }
  return false;
}

LaurentPoly LaurentPoly::scaled(const FqElem& c) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms) t.coeff = (FqElem(c.ctx(), t.coeff) * c).coeffs();
  return out;
}

const char* to_string(VarietyKind kind) {
  switch (kind) {
    case VarietyKind::AffineSpace: return "affine";
    case VarietyKind::Torus: return "torus";
    case VarietyKind::HypersurfaceComplement: return "complement";
    case VarietyKind::SL2: return "sl2";
  }
  return "?";
}

VarietySpec VarietySpec::affine(std::size_t dim, LaurentPoly f) {
  VarietySpec v;
  v.kind = VarietyKind::AffineSpace;
  v.dim = dim;
  v.f = std::move(f);
  return v;
}

VarietySpec VarietySpec::torus(std::size_t dim, LaurentPoly f) {
  VarietySpec v;
  v.kind = VarietyKind::Torus;
  v.dim = dim;
  v.f = std::move(f);
  return v;
}

VarietySpec VarietySpec::complement(std::size_t dim, LaurentPoly g, LaurentPoly h,
                                    std::uint32_t pole_order) {
  VarietySpec v;
  v.kind = VarietyKind::HypersurfaceComplement;
  v.dim = dim;
  v.f = std::move(g);
  v.h = std::move(h);
  v.pole_order = pole_order;
  return v;
}

VarietySpec VarietySpec::sl2(std::vector<Coeffs> coeffs) {
  VarietySpec v;
  v.kind = VarietyKind::SL2;
  v.dim = 3;
  v.sl2_coeffs = std::move(coeffs);
  return v;
}

namespace {

void check_poly(const LaurentPoly& poly, std::size_t dim, const FieldCtx& base, const char* what) {
  if (poly.nvars != dim) {
    throw DomainError(std::string(what) + " has " + std::to_string(poly.nvars) +
                      " variables, expected " + std::to_string(dim));
  }
  for (const auto& t : poly.terms) {
    if (t.exponents.size() != dim) {
      throw DomainError(std::string(what) + ": exponent vector of wrong length");
    }
    if (t.coeff.size() > base.degree()) {
      throw DomainError(std::string(what) + ": coefficient has more coordinates than the base field degree");
    }
    for (auto c : t.coeff) {
      if (c >= base.p()) throw DomainError(std::string(what) + ": coefficient not reduced mod p");
    }
  }
}

}  // namespace

void VarietySpec::validate(const FieldCtx& base) const {
  switch (kind) {
    case VarietyKind::AffineSpace:
      check_poly(f, dim, base, "f");
      if (f.has_negative_exponent()) throw DomainError("f must be a polynomial on affine space");
      break;
    case VarietyKind::Torus:
      check_poly(f, dim, base, "f");
      break;
    case VarietyKind::HypersurfaceComplement:
      check_poly(f, dim, base, "g");
      check_poly(h, dim, base, "h");
      if (f.has_negative_exponent() || h.has_negative_exponent()) {
        throw DomainError("g and h must be polynomials on the hypersurface complement");
      }
      break;
    case VarietyKind::SL2:
      for (const auto& a : sl2_coeffs) {
        if (a.size() > base.degree()) throw DomainError("SL2 coefficient has too many coordinates");
        for (auto c : a) {
          if (c >= base.p()) throw DomainError("SL2 coefficient not reduced mod p");
        }
      }
      break;
  }
}

VarietySpec VarietySpec::scaled(const FqElem& c) const {
  if (c.is_zero()) throw DomainError("scaling constant must be nonzero");
  VarietySpec out = *this;
  out.f = f.scaled(c);
  for (auto& a : out.sl2_coeffs) a = (FqElem(c.ctx(), a) * c).coeffs();
  return out;
}

LaurentPoly make_poly(std::uint32_t p, std::size_t nvars,
                      std::initializer_list<std::pair<std::int64_t, std::vector<std::int32_t>>> terms) {
  LaurentPoly poly;
  poly.nvars = nvars;
  for (const auto& [c, exps] : terms) {
    Term t;
    const auto r = ((c % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p);
    t.coeff = {static_cast<std::uint32_t>(r)};
    t.exponents = exps;
    poly.terms.push_back(std::move(t));
  }
  return poly;
}

}  // namespace expsumlab
