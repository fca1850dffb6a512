#include "expsumlab/verify.hpp"

#include <map>

#include "expected_records.hpp"
#include "expsumlab/error.hpp"
#include "expsumlab/numeric.hpp"

namespace expsumlab {

namespace {

EnumerationOptions options(const Overrides& ov) {
  EnumerationOptions opts;
  if (ov.budget) opts.budget = *ov.budget;
  if (ov.threads) opts.threads = *ov.threads;
  return opts;
}

Json sums_json(const PowerSumSequence& seq) {
  Json out = Json::array();
  for (const auto& v : seq.values) out.push_back(to_json(v));
  return out;
}

// Integer polynomial as exponent vector -> coefficient.
using IntPoly = std::map<std::vector<std::int32_t>, long>;

IntPoly product_of_linear_forms(const std::vector<std::vector<long>>& forms) {
  IntPoly acc{{{0, 0, 0}, 1}};
  for (const auto& form : forms) {
    IntPoly next;
    for (const auto& [exps, c] : acc) {
      for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        auto e = exps;
        ++e[i];
        next[e] += c * form[i];
      }
    }
    acc.clear();
    for (const auto& [e, c] : next) {
      if (c != 0) acc[e] = c;
    }
  }
  return acc;
}

LaurentPoly to_laurent(const IntPoly& poly, std::uint32_t p) {
  LaurentPoly out;
  out.nvars = 3;
  for (const auto& [e, c] : poly) {
    long r = c % static_cast<long>(p);
    if (r < 0) r += p;
    if (r == 0) continue;
    out.terms.push_back(Term{{static_cast<std::uint32_t>(r)}, e});
  }
  return out;
}

LaurentPoly a3_polynomial(std::uint32_t p) {
  return to_laurent(product_of_linear_forms({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}), p);
}

LaurentPoly b3_polynomial(std::uint32_t p) {
  return to_laurent(product_of_linear_forms({{1, 0, 0},
                                             {0, 1, 0},
                                             {0, 0, 1},
                                             {1, 1, 0},
                                             {1, -1, 0},
                                             {1, 0, 1},
                                             {1, 0, -1},
                                             {0, 1, 1},
                                             {0, 1, -1}}),
                    p);
}

Json arrangement(const BettiSpec& b, const LaurentPoly& f, const Overrides& ov) {
  const BettiDegree d = betti_degree(b);
  const FieldPtr base = FieldCtx::build(5, 1);
  const PowerSumSequence seq = power_sum_table(VarietySpec::affine(3, f), base, 2, options(ov));
  return Json{{"degree", d.degree}, {"total_bound", d.total_bound}, {"signed_euler", d.signed_euler},
              {"sums_p5", sums_json(seq)}};
}

Json newton_degenerate(const Overrides& ov) {
  const FieldPtr base = FieldCtx::build(3, 1);
  const auto v = VarietySpec::affine(2, make_poly(3, 2, {{1, {2, 1}}, {-1, {1, 0}}}));
  const PowerSumSequence seq = power_sum_table(v, base, 6, options(ov));
  const LSeries l = reconstruct_auto(exp_power_sums(seq));
  return Json{{"sums", sums_json(seq)},
              {"P", to_json(l.numerator)},
              {"Q", to_json(l.denominator)},
              {"degree", l.degree()},
              {"total_degree", l.total_degree()},
              {"certified_order", l.certified_order}};
}

Json torus_linear(const Overrides& ov) {
  const FieldPtr base = FieldCtx::build(5, 1);
  const auto f = make_poly(5, 1, {{1, {1}}});
  const PowerSumSequence torus = power_sum_table(VarietySpec::torus(1, f), base, 6, options(ov));
  const PowerSumSequence affine = power_sum_table(VarietySpec::affine(1, f), base, 6, options(ov));
  const LSeries lt = reconstruct_auto(exp_power_sums(torus));
  const LSeries la = reconstruct_auto(exp_power_sums(affine));
  return Json{{"torus_sums", sums_json(torus)},
              {"torus_degree", lt.degree()},
              {"torus_total_degree", lt.total_degree()},
              {"affine_sums", sums_json(affine)},
              {"affine_degree", la.degree()},
              {"affine_total_degree", la.total_degree()}};
}

Json kloosterman(const Overrides& ov) {
  const FieldPtr base = FieldCtx::build(5, 1);
  const auto v = VarietySpec::torus(1, make_poly(5, 1, {{1, {1}}, {1, {-1}}}));
  const PowerSumSequence seq = power_sum_table(v, base, 6, options(ov));
  const LSeries l = pade_reconstruct(exp_power_sums(seq), 2, 2);
  const Prediction pr = curve_prediction(CurveSpec{0, 0, 2, 2});
  return Json{{"sums", sums_json(seq)},
              {"numerator_degree", l.numerator.degree()},
              {"denominator_degree", l.denominator.degree()},
              {"degree", l.degree()},
              {"total_degree", l.total_degree()},
              {"curve_degree", big_to_json(pr.predicted_degree)},
              {"signed_euler", big_to_json(pr.signed_euler)}};
}

Json sl2_trace(const Overrides& ov) {
  const FieldPtr base = FieldCtx::build(2, 1);
  const PowerSumSequence seq = power_sum_table(VarietySpec::sl2({{1}}), base, 8, options(ov));
  const LSeries l = reconstruct_auto(exp_power_sums(seq));
  const Prediction pr = sl2_prediction(1);
  return Json{{"sums", sums_json(seq)},
              {"numerator_degree", l.numerator.degree()},
              {"denominator_degree", l.denominator.degree()},
              {"degree", l.degree()},
              {"total_degree", l.total_degree()},
              {"sl2_degree", big_to_json(pr.predicted_degree)},
              {"signed_euler", big_to_json(pr.signed_euler)}};
}

Json fermat() {
  const FermatReport r = fermat_report(2);
  return to_json(r);
}

Json slopes_json(const RadiusProfile& profile) {
  return Json{{"outer", to_string(profile.endpoint_slopes->first)},
              {"inner", to_string(profile.endpoint_slopes->second)}};
}

Json dwork_radius(const Overrides& ov) {
  const auto g = RationalFunctionPi::monomial(PiNumber::pi(3), -2);
  const RadiusProfile profile = radius_profile(g, default_lambda_grid(), 200, ov.threads.value_or(1));
  Json r = Json::array();
  bool doubled = true;
  for (const auto& s : profile.samples) {
    r.push_back(to_string(s.r));
    doubled = doubled && s.r == 2 * s.lambda;
  }
  return Json{{"r", r}, {"r_equals_2lambda", doubled}, {"stabilized", profile.stabilized()},
              {"slopes", slopes_json(profile)}};
}

Json robba(const Overrides& ov) {
  const auto g = dwork_twist(RationalFunctionPi::monomial(PiNumber(3, mpq_class(1, 2)), -1));
  const RadiusProfile profile = radius_profile(g, default_lambda_grid(), 200, ov.threads.value_or(1));
  return Json{{"index", robba_index(profile)}, {"stabilized", profile.stabilized()}, {"slopes", slopes_json(profile)}};
}

Json scale_invariance(const Overrides& ov) {
  struct Case {
    const char* name;
    VarietySpec v;
    FieldPtr base;
    std::uint32_t levels;
  };
  const std::vector<Case> cases{
      {"newton-degenerate", VarietySpec::affine(2, make_poly(5, 2, {{1, {2, 1}}, {-1, {1, 0}}})),
       FieldCtx::build(5, 1), 4},
      {"torus-linear", VarietySpec::torus(1, make_poly(5, 1, {{1, {1}}})), FieldCtx::build(5, 1), 6},
      {"kloosterman", VarietySpec::torus(1, make_poly(5, 1, {{1, {1}}, {1, {-1}}})), FieldCtx::build(5, 1), 6},
      {"sl2-trace", VarietySpec::sl2({{1}}), FieldCtx::build(2, 1), 6},
  };
  long checked = 0;
  bool degrees = true;
  bool twists = true;
  Json by_case = Json::object();
  for (const auto& c : cases) {
    for (std::uint64_t idx = 1; idx < c.base->order(); ++idx) {
      const ScaledDegreeReport r =
          scaled_degree_check(c.v, c.base, FqElem::from_index(c.base, idx), c.levels, options(ov));
      ++checked;
      degrees = degrees && r.degrees_match;
      twists = twists && (!r.twist_checked || r.twist_matches);
      by_case[c.name] = Json{{"degree", r.original.degree()}, {"total_degree", r.original.total_degree()}};
    }
  }
  return Json{{"checked", checked}, {"all_degrees_match", degrees}, {"all_twists_match", twists}, {"cases", by_case}};
}

std::string compact(const Json& j) {
  std::string s = j.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

}  // namespace

const std::vector<std::string>& verify_case_names() {
  static const std::vector<std::string> names{"newton-degenerate", "torus-linear",       "kloosterman",
                                              "sl2-trace",         "a3-betti",           "b3-betti",
                                              "fermat-discrepancy", "dwork-radius",      "robba-index",
                                              "scale-invariance"};
  return names;
}

Json expected_record(const std::string& name) {
  for (const auto& [key, text] : kExpectedRecords) {
    if (name == key) return Json::parse(text);
  }
  throw SchemaError("unknown verify case '" + name + "'");
}

Json verify_observables(const std::string& name, const Overrides& ov) {
  if (name == "newton-degenerate") return newton_degenerate(ov);
  if (name == "torus-linear") return torus_linear(ov);
  if (name == "kloosterman") return kloosterman(ov);
  if (name == "sl2-trace") return sl2_trace(ov);
  if (name == "a3-betti") return arrangement(BettiSpec{3, {7, 18}}, a3_polynomial(5), ov);
  if (name == "b3-betti") return arrangement(BettiSpec{3, {8, 79}}, b3_polynomial(5), ov);
  if (name == "fermat-discrepancy") return fermat();
  if (name == "dwork-radius") return dwork_radius(ov);
  if (name == "robba-index") return robba(ov);
  if (name == "scale-invariance") return scale_invariance(ov);
  throw SchemaError("unknown verify case '" + name + "'");
}

JobResult verify_case(const std::string& name, const Overrides& overrides) {
  const Json record = expected_record(name);
  const Json actual = verify_observables(name, overrides);
  JobResult out;
  Json checks = Json::array();
  bool pass = true;
  std::vector<std::vector<std::string>> rows{{"case", "key", "expected", "actual", "result"}};
  for (const auto& [key, expected] : record.at("expect").items()) {
    const Json got = actual.contains(key) ? actual.at(key) : Json();
    const bool ok = got == expected;
    pass = pass && ok;
    checks.push_back(Json{{"key", key}, {"expected", expected}, {"actual", got}, {"pass", ok}});
    rows.push_back({name, key, compact(expected), compact(got), ok ? "PASS" : "FAIL"});
  }
  out.report = Json{{"command", "verify"}, {"case", name}, {"checks", checks}, {"pass", pass}};
  out.table = aligned_table(rows);
  out.exit_code = pass ? kExitOk : kExitMismatch;
  return out;
}

JobResult verify_all(const Overrides& overrides) {
  JobResult out;
  Json cases = Json::array();
  bool pass = true;
  for (const auto& name : verify_case_names()) {
    const JobResult r = verify_case(name, overrides);
    pass = pass && r.exit_code == kExitOk;
    cases.push_back(r.report);
    out.table += r.table + "\n";
  }
  out.report = Json{{"command", "verify"}, {"case", "all"}, {"cases", cases}, {"pass", pass}};
  out.exit_code = pass ? kExitOk : kExitMismatch;
  return out;
}

}  // namespace expsumlab
