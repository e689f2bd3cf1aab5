#include "rebench/bench.hpp"
#include "rebench/problems.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"real-world multi-objective benchmark harness"};
  app.require_subcommand(1);

  CLI::App* cat = app.add_subcommand("catalog", "print the problem catalog as JSON");
  cat->callback([] { std::cout << rebench::registry().catalog_json() << "\n"; });

  CLI::App* cal = app.add_subcommand("calibrate", "estimate normalization bounds for a problem");
  std::string cal_problem;
  int cal_effort = 100000;
  int cal_runs = 31;
  std::uint64_t cal_seed = 1;
  std::string cal_bounds_out = "bounds.json";
  std::string cal_archive_out;
  cal->add_option("problem", cal_problem, "problem id")->required();
  cal->add_option("--effort", cal_effort, "evaluations per calibration run");
  cal->add_option("--runs", cal_runs, "calibration runs per algorithm");
  cal->add_option("--seed", cal_seed, "base seed");
  cal->add_option("--bounds-out", cal_bounds_out, "bounds file to create or update");
  cal->add_option("--archive-out", cal_archive_out, "optional CSV for the reference archive");
  cal->callback([&] {
    rebench::CalibrationResult res =
        rebench::calibrate(cal_problem, cal_effort, cal_runs, cal_seed);
    rebench::BoundsTable table;
    if (std::ifstream probe(cal_bounds_out); probe.good())
      table = rebench::load_bounds(cal_bounds_out);
    table.insert_or_assign(cal_problem, res.bounds);
    rebench::save_bounds(table, cal_bounds_out);
    if (!cal_archive_out.empty()) {
      std::vector<rebench::Vec> fs;
      for (const rebench::Solution& s : res.archive) fs.push_back(s.f);
      rebench::export_front(cal_problem, fs, static_cast<int>(fs.size()), cal_archive_out);
    }
    std::cout << "calibrated " << cal_problem << ": archive " << res.archive.size()
              << " points, bounds written to " << cal_bounds_out << "\n";
  });

  CLI::App* runc = app.add_subcommand("run", "execute the benchmark experiment");
  std::string run_config;
  std::vector<std::string> run_problems;
  std::vector<std::string> run_algorithms;
  int run_runs = 31;
  int run_budget = 10000;
  std::string run_bounds;
  int run_cal_effort = 100000;
  int run_cal_runs = 31;
  std::string run_outdir = "results";
  std::uint64_t run_seed = 1;
  runc->add_option("--config", run_config, "JSON experiment config");
  runc->add_option("--problems", run_problems, "problem ids (default: all unconstrained)")
      ->delimiter(',');
  runc->add_option("--algorithms", run_algorithms, "algorithm ids (default: all six)")
      ->delimiter(',');
  runc->add_option("--runs", run_runs, "independent runs per cell");
  runc->add_option("--budget", run_budget, "evaluations per run");
  runc->add_option("--bounds", run_bounds, "bounds file (default: self-calibrate)");
  runc->add_option("--calibrate-effort", run_cal_effort, "evaluations per calibration run");
  runc->add_option("--calibrate-runs", run_cal_runs, "calibration runs per algorithm");
  runc->add_option("--output-dir", run_outdir, "result directory");
  runc->add_option("--seed", run_seed, "base seed");
  runc->callback([&] {
    rebench::ExperimentConfig cfg;
    if (!run_config.empty()) cfg = rebench::config_from_json(run_config);
    if (runc->count("--problems")) cfg.problems = run_problems;
    if (runc->count("--algorithms")) {
      cfg.algorithms.clear();
      for (const std::string& id : run_algorithms) {
        rebench::AlgorithmConfig a;
        a.algorithm_id = id;
        cfg.algorithms.push_back(a);
      }
    }
    if (runc->count("--runs")) cfg.runs = run_runs;
    if (runc->count("--budget")) cfg.budget = run_budget;
    if (runc->count("--bounds")) cfg.bounds_file = run_bounds;
    if (runc->count("--calibrate-effort")) cfg.calibrate_effort = run_cal_effort;
    if (runc->count("--calibrate-runs")) cfg.calibrate_runs = run_cal_runs;
    if (runc->count("--output-dir")) cfg.output_dir = run_outdir;
    if (runc->count("--seed")) cfg.base_seed = run_seed;
    rebench::run_experiment(cfg);
    std::cout << "results in " << rebench::resolve_output_dir(cfg.output_dir) << "\n";
  });

  CLI::App* sum = app.add_subcommand("summarize", "rank algorithms from a result directory");
  std::string sum_dir = rebench::resolve_output_dir("results");
  sum->add_option("dir", sum_dir, "result directory");
  sum->callback([&] { std::cout << rebench::summarize(sum_dir); });

  CLI::App* exp = app.add_subcommand("export-front", "subsample a reference archive to CSV");
  std::string exp_problem;
  std::string exp_archive;
  std::string exp_results = rebench::resolve_output_dir("results");
  std::string exp_out;
  int exp_k = 0;
  exp->add_option("problem", exp_problem, "problem id")->required();
  exp->add_option("--archive", exp_archive, "archive CSV (default: <results>/archive/<id>.csv)");
  exp->add_option("--results", exp_results, "result directory holding archives");
  exp->add_option("--out", exp_out, "output CSV (default: <id>_front.csv)");
  exp->add_option("--k", exp_k, "points to keep (default: 500 per objective)");
  exp->callback([&] {
    const std::string in = exp_archive.empty()
                               ? exp_results + "/archive/" + exp_problem + ".csv"
                               : exp_archive;
    const std::string out = exp_out.empty() ? exp_problem + "_front.csv" : exp_out;
    std::vector<rebench::Vec> fs = rebench::load_archive_objectives(in);
    rebench::export_front(exp_problem, fs, exp_k, out);
    std::cout << "wrote " << out << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const rebench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
