#include "expsumlab/json_io.hpp"

#include <set>

#include "expsumlab/error.hpp"
#include "expsumlab/numeric.hpp"

namespace expsumlab {

namespace {

const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string(where) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

long require_int(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(std::string(where) + ": '" + key + "' must be an integer");
  return v.get<long>();
}

std::vector<long> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
  std::vector<long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<long>());
  }
  return out;
}

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) throw SchemaError(std::string(where) + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) throw SchemaError(std::string(where) + ": unknown field '" + key + "'");
  }
}

Coeffs coeff_from_json(const Json& j, const FieldCtx& base) {
  const auto reduce = [&](const Json& v) {
    if (!v.is_number_integer()) throw SchemaError("coefficients must be integers");
    const long p = base.p();
    long r = v.get<long>() % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  };
  Coeffs out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(reduce(v));
  } else {
    out.push_back(reduce(j));
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j, std::size_t nvars, const FieldCtx& base) {
  if (!j.is_array()) throw SchemaError("polynomial must be an array of terms");
  LaurentPoly out;
  out.nvars = nvars;
  for (const auto& t : j) {
    only_keys(t, {"coeff", "exponents"}, "term");
    Term term;
    term.coeff = coeff_from_json(require(t, "coeff", "term"), base);
    for (long e : int_list(require(t, "exponents", "term"), "exponents")) {
      term.exponents.push_back(static_cast<std::int32_t>(e));
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace

Json big_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class big_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw SchemaError("expected an integer");
}

std::string rational_string(const mpq_class& q) { return to_string(q); }

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("expected a rational as an integer or a string \"a/b\"");
}

Json to_json(const CyclotomicInt& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(big_to_json(c));
  return out;
}

Json to_json(const CyclotomicRat& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(Json::array({big_to_json(c.get_num()), big_to_json(c.get_den())}));
  return out;
}

Json to_json(const CycPoly& poly) {
  Json out = Json::array();
  for (const auto& c : poly.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const LSeries& l) {
  return Json{{"P", to_json(l.numerator)},
              {"Q", to_json(l.denominator)},
              {"degree", l.degree()},
              {"total_degree", l.total_degree()},
              {"certified_order", l.certified_order}};
}

Json sums_to_json(const PowerSumSequence& seq) {
  Json out = Json::array();
  for (std::uint32_t m = 1; m <= seq.levels(); ++m) out.push_back(Json{{"m", m}, {"coords", to_json(seq.at(m))}});
  return out;
}

Json to_json(const Prediction& pr) {
  Json out{{"predicted_degree", big_to_json(pr.predicted_degree)}, {"signed_euler", big_to_json(pr.signed_euler)}};
  if (pr.total_bound) out["total_bound"] = big_to_json(*pr.total_bound);
  if (!pr.flags.empty()) out["flags"] = pr.flags;
  return out;
}

Json to_json(const FermatReport& r) {
  return Json{{"n", r.n},
              {"chern", big_to_json(r.chern)},
              {"newton", big_to_json(r.newton)},
              {"closed_form", big_to_json(r.closed_form)},
              {"discrepancy", r.discrepancy}};
}

Json to_json(const RadiusProfile& profile) {
  Json samples = Json::array();
  for (const auto& s : profile.samples) {
    samples.push_back(Json{{"lambda", rational_string(s.lambda)},
                           {"r", rational_string(s.r)},
                           {"r_lower", rational_string(s.r_lower)},
                           {"r_upper", rational_string(s.r_upper)},
                           {"stabilized", s.stabilized},
                           {"oscillation", rational_string(s.oscillation)},
                           {"pole_on_circle", s.pole_on_circle}});
  }
  Json out{{"p", profile.p}, {"s_max", profile.s_max}, {"samples", samples}, {"stabilized", profile.stabilized()}};
  if (profile.endpoint_slopes) {
    out["endpoint_slopes"] = Json{{"outer", rational_string(profile.endpoint_slopes->first)},
                                  {"inner", rational_string(profile.endpoint_slopes->second)}};
  }
  return out;
}

FieldPtr field_from_json(const Json& j) {
  only_keys(j, {"p", "n"}, "field");
  const long p = require_int(j, "p", "field");
  const long n = j.contains("n") ? require_int(j, "n", "field") : 1;
  if (p < 2 || n < 1) throw SchemaError("field: need p >= 2 and n >= 1");
  return FieldCtx::build(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
}

VarietySpec variety_from_json(const Json& j, const FieldCtx& base) {
  only_keys(j, {"kind", "dim", "f", "h", "pole_order", "coeffs"}, "variety");
  const Json& kind = require(j, "kind", "variety");
  if (!kind.is_string()) throw SchemaError("variety: 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  VarietySpec v;
  if (k == "sl2") {
    std::vector<Coeffs> coeffs;
    const Json& c = require(j, "coeffs", "variety");
    if (!c.is_array()) throw SchemaError("variety: 'coeffs' must be an array");
    for (const auto& a : c) coeffs.push_back(coeff_from_json(a, base));
    v = VarietySpec::sl2(std::move(coeffs));
  } else {
    const long dim = require_int(j, "dim", "variety");
    if (dim < 0) throw SchemaError("variety: negative dimension");
    const auto d = static_cast<std::size_t>(dim);
    LaurentPoly f = poly_from_json(require(j, "f", "variety"), d, base);
    if (k == "affine") {
      v = VarietySpec::affine(d, std::move(f));
    } else if (k == "torus") {
      v = VarietySpec::torus(d, std::move(f));
    } else if (k == "complement") {
      LaurentPoly h = poly_from_json(require(j, "h", "variety"), d, base);
      const long k_pole = j.contains("pole_order") ? require_int(j, "pole_order", "variety") : 0;
      if (k_pole < 0) throw SchemaError("variety: negative pole order");
      v = VarietySpec::complement(d, std::move(f), std::move(h), static_cast<std::uint32_t>(k_pole));
    } else {
      throw SchemaError("variety: unknown kind '" + k + "'");
    }
  }
  v.validate(base);
  return v;
}

ChernSpec chern_from_json(const Json& j) {
  only_keys(j, {"kind", "n", "d", "e"}, "chern");
  ChernSpec s;
  s.n = static_cast<std::uint32_t>(require_int(j, "n", "chern"));
  s.d = int_list(require(j, "d", "chern"), "d");
  s.e = int_list(require(j, "e", "chern"), "e");
  return s;
}

CurveSpec curve_from_json(const Json& j) {
  only_keys(j, {"kind", "g", "c", "m", "d"}, "curve");
  CurveSpec s;
  s.g = require_int(j, "g", "curve");
  s.c = require_int(j, "c", "curve");
  s.m = require_int(j, "m", "curve");
  s.d = require_int(j, "d", "curve");
  return s;
}

BettiSpec betti_from_json(const Json& j) {
  only_keys(j, {"kind", "n", "b"}, "betti");
  BettiSpec s;
  s.n = static_cast<std::uint32_t>(require_int(j, "n", "betti"));
  s.reduced_betti = int_list(require(j, "b", "betti"), "b");
  return s;
}

NewtonSpec newton_from_json(const Json& j) {
  only_keys(j, {"kind", "n", "support"}, "newton");
  NewtonSpec s;
  s.n = static_cast<std::uint32_t>(require_int(j, "n", "newton"));
  const Json& sup = require(j, "support", "newton");
  if (!sup.is_array()) throw SchemaError("newton: 'support' must be an array");
  for (const auto& v : sup) s.support.push_back(int_list(v, "support vector"));
  return s;
}

PiNumber pi_number_from_json(const Json& j, std::uint32_t p) {
  if (j.is_array()) {
    std::vector<mpq_class> coords;
    for (const auto& a : j) coords.push_back(rational_from_json(a));
    // Reduce powers pi^k, k >= p - 1, through pi^{p-1} = -p.
    PiNumber out(p);
    PiNumber power(p, mpq_class(1));
    const PiNumber pi = PiNumber::pi(p);
    for (const auto& c : coords) {
      out += power * c;
      power = power * pi;
    }
    return out;
  }
  return PiNumber(p, rational_from_json(j));
}

RationalFunctionPi rational_function_from_json(const Json& j, std::uint32_t p) {
  if (j.is_array()) {
    RationalFunctionPi out{PolyPi(p)};
    for (const auto& t : j) {
      only_keys(t, {"coeff", "power"}, "g term");
      const PiNumber c = pi_number_from_json(require(t, "coeff", "g term"), p);
      out = out + RationalFunctionPi::monomial(c, require_int(t, "power", "g term"));
    }
    return out.reduced();
  }
  only_keys(j, {"numerator", "denominator"}, "g");
  const auto poly = [&](const Json& coeffs) {
    if (!coeffs.is_array()) throw SchemaError("g: coefficient lists must be arrays");
    std::vector<PiNumber> cs;
    for (const auto& c : coeffs) cs.push_back(pi_number_from_json(c, p));
    return PolyPi(p, std::move(cs));
  };
  PolyPi den = j.contains("denominator") ? poly(j.at("denominator"))
                                         : PolyPi::constant(PiNumber(p, mpq_class(1)));
  if (den.is_zero()) throw SchemaError("g: zero denominator");
  return RationalFunctionPi(poly(require(j, "numerator", "g")), std::move(den)).reduced();
}

}  // namespace expsumlab
