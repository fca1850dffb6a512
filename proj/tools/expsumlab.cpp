#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "expsumlab/error.hpp"
#include "expsumlab/jobs.hpp"
#include "expsumlab/numeric.hpp"
#include "expsumlab/verify.hpp"

using namespace expsumlab;

namespace {

Json read_job(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::vector<mpq_class> parse_grid(const std::string& text) {
  std::vector<mpq_class> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      grid.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw SchemaError(e.what());
    }
  }
  if (grid.empty()) throw SchemaError("empty --grid");
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exponential sums, L-series, degree predictions and p-adic radii"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t budget = 0;
  std::size_t smax = 0;
  std::string grid;
  unsigned threads = 0;
  std::string out_path;
  std::string csv_path;
  bool json_stdout = false;
  app.add_option("--budget", budget, "maximum point evaluations per job");
  app.add_option("--smax", smax, "number of symbol terms for radius estimates");
  app.add_option("--grid", grid, "comma-separated lambda values, e.g. 1/4,1/2,1");
  app.add_option("--threads", threads, "worker threads (default from EXPSUMLAB_THREADS)");
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_option("--csv", csv_path, "write the table as CSV (sum, lfun, radius, index)");
  app.add_flag("--json", json_stdout, "print the JSON report instead of the table");

  std::string job_path;
  std::string case_name;
  std::string selected;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, name == "verify" ? "run a named example case, or all" : name + " job from a file, or - for stdin");
    if (name == "verify") {
      sub->add_option("case", case_name, "case name or 'all'")->required();
    } else {
      sub->add_option("job", job_path, "job file, or - for stdin")->required();
    }
    sub->callback([&selected, name] { selected = name; });
  }
  auto* list = app.add_subcommand("cases", "list verify case names");
  list->callback([&selected] { selected = "cases"; });
  auto* run = app.add_subcommand("run", "run a job file, dispatching on its command field");
  run->add_option("job", job_path, "job file, or - for stdin")->required();
  run->callback([&selected] { selected = "run"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitSchema;
  }

  if (selected == "cases") {
    for (const auto& n : verify_case_names()) std::cout << n << "\n";
    return kExitOk;
  }

  try {
    Overrides ov;
    if (budget) ov.budget = budget;
    if (smax) ov.s_max = smax;
    if (!grid.empty()) ov.grid = parse_grid(grid);
    if (threads) {
      ov.threads = threads;
    } else if (const char* env = std::getenv("EXPSUMLAB_THREADS")) {
      const long t = std::strtol(env, nullptr, 10);
      if (t > 0) ov.threads = static_cast<unsigned>(t);
    }

    Json job;
    if (selected == "verify") {
      job = Json{{"command", "verify"}, {"case", case_name}};
    } else {
      job = read_job(job_path);
      if (!job.is_object()) throw SchemaError("job must be a JSON object");
      if (selected != "run") {
        if (job.contains("command") && job.at("command") != selected) {
          throw SchemaError("job command does not match subcommand " + selected);
        }
        job["command"] = selected;
      }
    }

    const JobResult result = run_job(job, ov);
    const std::string report = result.report.dump(2) + "\n";
    if (json_stdout) {
      std::cout << report;
    } else {
      std::cout << result.table;
    }
    if (!out_path.empty()) write_file(out_path, report);
    if (!csv_path.empty()) {
      if (result.csv.empty()) throw SchemaError("no CSV output for this command");
      write_file(csv_path, result.csv);
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "expsumlab: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
