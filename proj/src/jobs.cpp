#include "expsumlab/jobs.hpp"

#include <set>
#include <sstream>

#include "expsumlab/error.hpp"
#include "expsumlab/numeric.hpp"
#include "expsumlab/verify.hpp"

namespace expsumlab {

namespace {

void check_keys(const Json& job, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  ok.insert("command");
  for (const auto& [key, value] : job.items()) {
    if (!ok.count(key)) throw SchemaError("unknown field '" + key + "' for command " + job.at("command").get<std::string>());
  }
}

const Json& need(const Json& job, const char* key) {
  if (!job.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return job.at(key);
}

std::uint64_t positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw SchemaError(std::string(what) + " must be a positive integer");
  return j.get<std::uint64_t>();
}

EnumerationOptions enumeration_options(const Json& job, const Overrides& ov) {
  EnumerationOptions opts;
  if (job.contains("budget")) opts.budget = positive_int(job.at("budget"), "budget");
  if (job.contains("threads")) opts.threads = static_cast<unsigned>(positive_int(job.at("threads"), "threads"));
  if (ov.budget) opts.budget = *ov.budget;
  if (ov.threads) opts.threads = *ov.threads;
  return opts;
}

std::string cyc_string(const CyclotomicInt& v) { return v.to_string(); }

std::string poly_string(const CycPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    const auto& c = poly.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k == 1) out += "t";
    if (k > 1) out += "t^" + std::to_string(k);
  }
  return out;
}

Prediction prediction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw SchemaError("prediction: missing string field 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "chern") return chern_prediction(chern_from_json(j));
  if (kind == "curve") return curve_prediction(curve_from_json(j));
  if (kind == "betti") return betti_prediction(betti_from_json(j));
  if (kind == "newton") return newton_prediction(newton_from_json(j));
  if (kind == "sl2") {
    for (const auto& [key, value] : j.items()) {
      if (key != "kind" && key != "N") throw SchemaError("sl2 prediction: unknown field '" + key + "'");
    }
    const Json& n = need(j, "N");
    if (!n.is_number_integer()) throw SchemaError("sl2 prediction: 'N' must be an integer");
    return sl2_prediction(n.get<long>());
  }
  throw SchemaError("prediction: unknown kind '" + kind + "'");
}

// Table rows shared by sum and lfun.
std::vector<std::vector<std::string>> sum_rows(const PowerSumSequence& seq) {
  std::vector<std::vector<std::string>> rows{{"m", "points", "S_m"}};
  for (std::uint32_t m = 1; m <= seq.levels(); ++m) {
    rows.push_back({std::to_string(m), std::to_string(seq.stats[m - 1].points_visited), cyc_string(seq.at(m))});
  }
  return rows;
}

std::string sums_csv(const PowerSumSequence& seq) {
  std::ostringstream os;
  os << "m,points";
  const std::size_t width = seq.values.empty() ? 0 : seq.values[0].coords().size();
  for (std::size_t i = 0; i < width; ++i) os << ",c" << i;
  os << "\n";
  for (std::uint32_t m = 1; m <= seq.levels(); ++m) {
    os << m << "," << seq.stats[m - 1].points_visited;
    for (const auto& c : seq.at(m).coords()) os << "," << c.get_str();
    os << "\n";
  }
  return os.str();
}

Json field_json(const FieldCtx& f) {
  Json mod = Json::array();
  for (auto c : f.modulus()) mod.push_back(c);
  return Json{{"p", f.p()}, {"n", f.degree()}, {"modulus", mod}};
}

JobResult run_sum(const Json& job, const Overrides& ov, bool with_lfun) {
  if (with_lfun) {
    check_keys(job, {"field", "variety", "levels", "budget", "threads", "bounds", "prediction", "scale"});
  } else {
    check_keys(job, {"field", "variety", "levels", "budget", "threads"});
  }
  const FieldPtr base = field_from_json(need(job, "field"));
  const VarietySpec v = variety_from_json(need(job, "variety"), *base);
  const auto levels = static_cast<std::uint32_t>(positive_int(need(job, "levels"), "levels"));
  const std::optional<Prediction> prediction =
      (with_lfun && job.contains("prediction")) ? std::optional(prediction_from_json(job.at("prediction")))
                                                : std::nullopt;
  const EnumerationOptions opts = enumeration_options(job, ov);

  const PowerSumSequence seq = power_sum_table(v, base, levels, opts);
  JobResult out;
  out.report = Json{{"command", with_lfun ? "lfun" : "sum"},
                    {"field", field_json(*base)},
                    {"variety", to_string(v.kind)},
                    {"levels", levels},
                    {"sums", sums_to_json(seq)}};
  Json points = Json::array();
  for (const auto& s : seq.stats) points.push_back(Json{{"m", s.m}, {"points_visited", s.points_visited}});
  out.report["progress"] = points;
  auto rows = sum_rows(seq);
  out.csv = sums_csv(seq);
  if (!with_lfun) {
    out.table = aligned_table(rows);
    return out;
  }

  const TruncatedSeries series = exp_power_sums(seq);
  LSeries l;
  std::string bounds_source = "sweep";
  const auto bounds_from = [](const Prediction& pr) {
    const long chi = pr.signed_euler.get_si();
    if (pr.total_bound) {
      const long total = pr.total_bound->get_si();
      return std::make_pair((total - chi) / 2, (total + chi) / 2);
    }
    return std::make_pair(std::max(0L, -chi), std::max(0L, chi));
  };
  if (job.contains("bounds")) {
    const Json& b = job.at("bounds");
    if (!b.is_object() || !b.contains("P") || !b.contains("Q")) throw SchemaError("bounds needs fields P and Q");
    for (const auto& [key, value] : b.items()) {
      if (key != "P" && key != "Q") throw SchemaError("bounds: unknown field '" + key + "'");
      if (!value.is_number_integer() || value.get<long>() < 0) throw SchemaError("bounds must be non-negative integers");
    }
    l = pade_reconstruct(series, b.at("P").get<std::uint32_t>(), b.at("Q").get<std::uint32_t>());
    bounds_source = "job";
  } else if (prediction) {
    const auto [dp, dq] = bounds_from(*prediction);
    try {
      l = pade_reconstruct(series, static_cast<std::uint32_t>(dp), static_cast<std::uint32_t>(dq));
      bounds_source = "prediction";
    } catch (const Uncertified&) {
      l = reconstruct_auto(series);
      bounds_source = "sweep after prediction bounds failed";
    } catch (const DomainError&) {
      l = reconstruct_auto(series);
      bounds_source = "sweep, too few levels for prediction bounds";
    }
  } else {
    l = reconstruct_auto(series);
  }
  const auto logd = log_derivative(l, levels);
  bool log_ok = true;
  for (std::uint32_t m = 1; m <= levels; ++m) log_ok = log_ok && logd[m] == CyclotomicRat(seq.at(m));
  if (!log_ok) throw Uncertified("log-derivative of the reconstruction does not reproduce the sums");

  out.report["lseries"] = to_json(l);
  out.report["bounds_source"] = bounds_source;
  out.report["log_derivative_check"] = log_ok;
  rows.push_back({"", "", ""});
  rows.push_back({"P", "", poly_string(l.numerator)});
  rows.push_back({"Q", "", poly_string(l.denominator)});
  rows.push_back({"degree", "", std::to_string(l.degree())});
  rows.push_back({"total degree", "", std::to_string(l.total_degree())});
  rows.push_back({"certified order", "", std::to_string(l.certified_order)});

  if (prediction) {
    const bool magnitude = std::labs(l.degree()) == prediction->predicted_degree;
    const bool sign = l.degree() == prediction->signed_euler;
    Json pj = to_json(*prediction);
    pj["magnitude_match"] = magnitude;
    pj["signed_match"] = sign;
    pj["verdict"] = (magnitude && sign) ? "match" : "mismatch";
    out.report["prediction"] = pj;
    rows.push_back({"predicted degree", "", prediction->predicted_degree.get_str()});
    rows.push_back({"signed euler", "", prediction->signed_euler.get_str()});
    rows.push_back({"verdict", "", (magnitude && sign) ? "match" : "mismatch"});
    if (!(magnitude && sign)) out.exit_code = kExitMismatch;
  }

  if (job.contains("scale")) {
    const Coeffs c = [&] {
      const Json& s = job.at("scale");
      Coeffs cs;
      const auto one = [&](const Json& v) {
        if (!v.is_number_integer()) throw SchemaError("scale must be integer coordinates");
        long r = v.get<long>() % static_cast<long>(base->p());
        if (r < 0) r += base->p();
        cs.push_back(static_cast<std::uint32_t>(r));
      };
      if (s.is_array()) {
        for (const auto& v : s) one(v);
      } else {
        one(s);
      }
      return cs;
    }();
    const FqElem ce(base, c);
    if (ce.is_zero()) throw DomainError("scale must be nonzero");
    const ScaledDegreeReport sr = scaled_degree_check(v, base, ce, levels, opts);
    out.report["scale"] = Json{{"lseries", to_json(sr.scaled)},
                               {"degrees_match", sr.degrees_match},
                               {"twist_checked", sr.twist_checked},
                               {"twist_matches", sr.twist_matches}};
    rows.push_back({"scaled degree", "", std::to_string(sr.scaled.degree())});
    rows.push_back({"scaled total degree", "", std::to_string(sr.scaled.total_degree())});
    if (!sr.degrees_match || (sr.twist_checked && !sr.twist_matches)) out.exit_code = kExitMismatch;
  }
  out.table = aligned_table(rows);
  return out;
}

JobResult run_predict(const Json& job) {
  check_keys(job, {"prediction"});
  const Json& pj = need(job, "prediction");
  JobResult out;
  std::vector<std::vector<std::string>> rows;
  if (pj.is_object() && pj.contains("kind") && pj.at("kind") == "fermat") {
    for (const auto& [key, value] : pj.items()) {
      if (key != "kind" && key != "n") throw SchemaError("fermat: unknown field '" + key + "'");
    }
    const Json& n = need(pj, "n");
    if (!n.is_number_integer() || n.get<long>() < 1) throw SchemaError("fermat: 'n' must be a positive integer");
    const FermatReport r = fermat_report(n.get<std::uint32_t>());
    out.report = Json{{"command", "predict"}, {"fermat", to_json(r)}};
    rows = {{"chern", r.chern.get_str()},
            {"newton", r.newton.get_str()},
            {"closed form n^n(n+1)", r.closed_form.get_str()},
            {"discrepancy", r.discrepancy ? "yes" : "no"}};
  } else {
    const Prediction pr = prediction_from_json(pj);
    out.report = Json{{"command", "predict"}, {"kind", pj.at("kind")}, {"prediction", to_json(pr)}};
    rows = {{"predicted degree", pr.predicted_degree.get_str()}, {"signed euler", pr.signed_euler.get_str()}};
    if (pr.total_bound) rows.push_back({"total bound", pr.total_bound->get_str()});
    for (const auto& f : pr.flags) rows.push_back({"flag", f});
  }
  out.table = aligned_table(rows);
  return out;
}

JobResult run_radius(const Json& job, const Overrides& ov, bool index) {
  check_keys(job, {"p", "g", "grid", "s_max", "twist", "threads"});
  const Json& pj = need(job, "p");
  if (!pj.is_number_integer() || pj.get<long>() < 2) throw SchemaError("'p' must be a prime");
  const auto p = pj.get<std::uint32_t>();
  RationalFunctionPi g = rational_function_from_json(need(job, "g"), p);
  if (job.contains("twist")) {
    if (!job.at("twist").is_boolean()) throw SchemaError("'twist' must be a boolean");
    if (job.at("twist").get<bool>()) g = dwork_twist(g);
  }
  std::vector<mpq_class> grid = default_lambda_grid();
  if (job.contains("grid")) {
    if (!job.at("grid").is_array()) throw SchemaError("'grid' must be an array of rationals");
    grid.clear();
    for (const auto& l : job.at("grid")) grid.push_back(rational_from_json(l));
  }
  if (ov.grid) grid = *ov.grid;
  for (const auto& l : grid) {
    if (l <= 0) throw DomainError("grid values must be positive");
  }
  std::size_t s_max = job.contains("s_max") ? positive_int(job.at("s_max"), "s_max") : 200;
  if (ov.s_max) s_max = *ov.s_max;
  unsigned threads = job.contains("threads") ? static_cast<unsigned>(positive_int(job.at("threads"), "threads")) : 1;
  if (ov.threads) threads = *ov.threads;

  const RadiusProfile profile = radius_profile(g, grid, s_max, threads);
  JobResult out;
  out.report = Json{{"command", index ? "index" : "radius"}, {"g", g.to_string()}, {"profile", to_json(profile)}};
  std::vector<std::vector<std::string>> rows{{"lambda", "r", "r_lower", "r_upper", "stabilized", "pole"}};
  std::ostringstream csv;
  csv << "lambda,r,r_lower,r_upper,stabilized,pole_on_circle\n";
  for (const auto& s : profile.samples) {
    rows.push_back({to_string(s.lambda), to_string(s.r), to_string(s.r_lower), to_string(s.r_upper),
                    s.stabilized ? "yes" : "no", s.pole_on_circle ? "yes" : "no"});
    csv << to_string(s.lambda) << "," << to_string(s.r) << "," << to_string(s.r_lower) << ","
        << to_string(s.r_upper) << "," << (s.stabilized ? 1 : 0) << "," << (s.pole_on_circle ? 1 : 0) << "\n";
  }
  if (profile.endpoint_slopes) {
    rows.push_back({"slopes", to_string(profile.endpoint_slopes->first) + " (outer)",
                    to_string(profile.endpoint_slopes->second) + " (inner)", "", "", ""});
  }
  if (index) {
    const long chi = robba_index(profile);
    out.report["index"] = chi;
    rows.push_back({"index", std::to_string(chi), "", "", "", ""});
  }
  out.table = aligned_table(rows);
  out.csv = csv.str();
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"sum", "lfun", "predict", "radius", "index", "verify"};
  return names;
}

JobResult run_job(const Json& job, const Overrides& overrides) {
  if (!job.is_object()) throw SchemaError("job must be a JSON object");
  if (!job.contains("command") || !job.at("command").is_string()) throw SchemaError("job needs a string 'command'");
  const std::string cmd = job.at("command").get<std::string>();
  if (cmd == "sum") return run_sum(job, overrides, false);
  if (cmd == "lfun") return run_sum(job, overrides, true);
  if (cmd == "predict") return run_predict(job);
  if (cmd == "radius") return run_radius(job, overrides, false);
  if (cmd == "index") return run_radius(job, overrides, true);
  if (cmd == "verify") {
    check_keys(job, {"case", "budget", "threads"});
    const Json& c = need(job, "case");
    if (!c.is_string()) throw SchemaError("'case' must be a string");
    Overrides ov = overrides;
    const EnumerationOptions opts = enumeration_options(job, overrides);
    ov.budget = opts.budget;
    ov.threads = opts.threads;
    return c.get<std::string>() == "all" ? verify_all(ov) : verify_case(c.get<std::string>(), ov);
  }
  throw SchemaError("unknown command '" + cmd + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SchemaError*>(&e)) return kExitSchema;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kExitBudget;
  if (dynamic_cast<const Uncertified*>(&e)) return kExitUncertified;
  return kExitOther;
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

}  // namespace expsumlab
