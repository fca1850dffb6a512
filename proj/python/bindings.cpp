#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expsumlab/error.hpp"
#include "expsumlab/expsum.hpp"
#include "expsumlab/jobs.hpp"
#include "expsumlab/json_io.hpp"
#include "expsumlab/padic.hpp"
#include "expsumlab/predict.hpp"
#include "expsumlab/verify.hpp"

namespace py = pybind11;
using namespace expsumlab;

namespace {

py::tuple result_tuple(const JobResult& r) { return py::make_tuple(r.report.dump(), r.table, r.csv, r.exit_code); }

Overrides overrides(std::optional<std::uint64_t> budget, std::optional<std::size_t> s_max,
                    std::optional<unsigned> threads) {
  Overrides o;
  o.budget = budget;
  o.s_max = s_max;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact exponential sums, L-series and p-adic radii";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ContextMismatch>(m, "ContextMismatch", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<Uncertified>(m, "Uncertified", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());

  m.def(
      "run_job",
      [](const std::string& job, std::optional<std::uint64_t> budget, std::optional<std::size_t> s_max,
         std::optional<unsigned> threads) {
        const Json parsed = Json::parse(job);
        JobResult r;
        {
          py::gil_scoped_release release;
          r = run_job(parsed, overrides(budget, s_max, threads));
        }
        return result_tuple(r);
      },
      py::arg("job"), py::arg("budget") = py::none(), py::arg("s_max") = py::none(), py::arg("threads") = py::none());

  m.def("verify", [](const std::string& name) {
    py::gil_scoped_release release;
    const JobResult r = name == "all" ? verify_all() : verify_case(name);
    py::gil_scoped_acquire acquire;
    return result_tuple(r);
  });
  m.def("verify_cases", &verify_case_names);
  m.def("commands", &command_names);

  m.def(
      "power_sums",
      [](std::uint32_t p, std::uint32_t n, const std::string& variety, std::uint32_t levels, unsigned threads) {
        const FieldPtr field = FieldCtx::build(p, n);
        const VarietySpec v = variety_from_json(Json::parse(variety), *field);
        EnumerationOptions opts;
        opts.threads = threads;
        PowerSumSequence seq;
        {
          py::gil_scoped_release release;
          seq = power_sum_table(v, field, levels, opts);
        }
        std::vector<std::vector<std::string>> out;
        for (const auto& s : seq.values) {
          std::vector<std::string> coords;
          for (const auto& c : s.coords()) coords.push_back(c.get_str());
          out.push_back(std::move(coords));
        }
        return out;
      },
      py::arg("p"), py::arg("n"), py::arg("variety"), py::arg("levels"), py::arg("threads") = 1);

  m.def("chern_degree", [](std::uint32_t n, std::vector<long> d, std::vector<long> e) {
    return chern_degree(ChernSpec{n, std::move(d), std::move(e)}).get_str();
  });
  m.def("curve_degree", [](long g, long c, long mm, long d) { return curve_degree(CurveSpec{g, c, mm, d}); });
  m.def("betti_degree", [](std::uint32_t n, std::vector<long> betti) {
    const BettiDegree b = betti_degree(BettiSpec{n, std::move(betti)});
    return py::make_tuple(b.degree, b.total_bound, b.signed_euler);
  });
  m.def("newton_degree", [](std::uint32_t n, std::vector<std::vector<long>> support) {
    const NewtonDegree nd = newton_degree(NewtonSpec{n, std::move(support)});
    return py::make_tuple(nd.value.get_str(), nd.degenerate);
  });
  m.def("sl2_degree", &sl2_degree);
  m.def("fermat_report", [](std::uint32_t n) { return to_json(fermat_report(n)).dump(); });

  m.def(
      "radius_profile",
      [](std::uint32_t p, const std::string& g, std::vector<std::string> grid, std::size_t s_max, unsigned threads) {
        const RationalFunctionPi f = rational_function_from_json(Json::parse(g), p);
        std::vector<mpq_class> lambdas;
        for (const auto& s : grid) lambdas.push_back(rational_from_json(Json(s)));
        if (lambdas.empty()) lambdas = default_lambda_grid();
        RadiusProfile prof;
        {
          py::gil_scoped_release release;
          prof = radius_profile(f, lambdas, s_max, threads);
        }
        return to_json(prof).dump();
      },
      py::arg("p"), py::arg("g"), py::arg("grid") = std::vector<std::string>{}, py::arg("s_max") = 200,
      py::arg("threads") = 1);
  m.def("robba_index", [](const std::string& inner, const std::string& outer) {
    return robba_index(rational_from_json(Json(inner)), rational_from_json(Json(outer)));
  });
}
