#include "rebench/bench.hpp"

#include "rebench/indicators.hpp"
#include "rebench/problems.hpp"
#include "rebench/stats.hpp"
#include "rebench/weights.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace rebench {
namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string solution_csv(const std::vector<Solution>& sols, int d, int m) {
  std::ostringstream out;
  for (int j = 1; j <= d; ++j) out << "x_" << j << ",";
  for (int j = 1; j <= m; ++j) out << "f_" << j << (j == m ? "" : ",");
  out << "\n";
  for (const Solution& s : sols) {
    for (Eigen::Index j = 0; j < s.x.size(); ++j) out << fmt17(s.x[j]) << ",";
    for (Eigen::Index j = 0; j < s.f.size(); ++j)
      out << fmt17(s.f[j]) << (j + 1 == s.f.size() ? "" : ",");
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::vector<std::string> default_problem_ids() {
  std::vector<std::string> out;
  for (const std::string& id : registry().ids())
    if (id.rfind("RE", 0) == 0) out.push_back(id);
  return out;
}

std::vector<AlgorithmConfig> default_algorithms() {
  std::vector<AlgorithmConfig> out;
  for (const std::string& id : algorithm_ids()) {
    AlgorithmConfig c;
    c.algorithm_id = id;
    out.push_back(c);
  }
  return out;
}

struct Cell {
  std::string problem;
  std::string algorithm;
  bool absent = false;
};

}  // namespace

std::uint64_t run_seed(std::uint64_t base, const std::string& problem,
                       const std::string& algorithm, int run) {
  return base + fnv1a(problem + "|" + algorithm + "|" + std::to_string(run));
}

std::string resolve_output_dir(const std::string& configured) {
  const char* env = std::getenv("REBENCH_OUTPUT_DIR");
  if (env && *env) return env;
  return configured;
}

CalibrationResult calibrate(const std::string& problem_id, int effort, int runs,
                            std::uint64_t base_seed) {
  const ProblemDescriptor& desc = registry().descriptor(problem_id);
  const int m = desc.m_objectives;
  if (effort < 1 || runs < 1) throw ConfigError("calibrate: effort and runs must be positive");

  Vec ideal = Vec::Constant(m, std::numeric_limits<double>::infinity());
  RunHooks hooks;
  hooks.on_evaluate = [&](const Solution& s) {
    if (all_finite(s.f)) ideal = ideal.cwiseMin(s.f);
  };

  std::vector<Solution> pool;
  static const char* kCalibrators[] = {"nsga2", "moead_tch", "moead_pbi", "ibea", "nsga3"};
  for (const char* alg : kCalibrators) {
    for (int r = 0; r < runs; ++r) {
      AlgorithmConfig c;
      c.algorithm_id = alg;
      c.budget = effort;
      c.seed = run_seed(base_seed, problem_id, std::string("cal-") + alg, r);
      if (c.budget < population_size_for(m, c.algorithm_id))
        throw ConfigError("calibrate: effort below population size for " + std::string(alg));
      RunRecord rec = run(problem_id, c, std::nullopt, &hooks);
      for (Solution& s : rec.nondominated_archive)
        if (all_finite(s.f)) pool.push_back(std::move(s));
    }
  }
  for (int obj = 0; obj < m; ++obj) {
    std::vector<Solution> log;
    minimize_single(problem_id, obj, effort,
                    run_seed(base_seed, problem_id, "cal-de-" + std::to_string(obj), 0),
                    [&](const Solution& s) {
                      if (all_finite(s.f)) {
                        ideal = ideal.cwiseMin(s.f);
                        log.push_back(s);
                      }
                    });
    std::vector<Vec> fs;
    fs.reserve(log.size());
    for (const Solution& s : log) fs.push_back(s.f);
    for (int i : nondominated_indices(fs)) pool.push_back(std::move(log[static_cast<std::size_t>(i)]));
  }

  // Final archive: de-duplicate exact objective vectors, then keep only the
  // mutually non-dominated subset, in pool order.
  std::vector<char> drop(pool.size(), 0);
  {
    std::vector<int> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Vec& p = pool[static_cast<std::size_t>(a)].f;
      const Vec& q = pool[static_cast<std::size_t>(b)].f;
      for (Eigen::Index d = 0; d < p.size(); ++d)
        if (p[d] != q[d]) return p[d] < q[d];
      return a < b;
    });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (pool[static_cast<std::size_t>(order[i])].f == pool[static_cast<std::size_t>(order[i - 1])].f)
        drop[static_cast<std::size_t>(order[i])] = 1;
  }
  std::vector<Solution> unique_pool;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!drop[i]) unique_pool.push_back(std::move(pool[i]));
  std::vector<Vec> fs;
  fs.reserve(unique_pool.size());
  for (const Solution& s : unique_pool) fs.push_back(s.f);
  CalibrationResult result;
  for (int i : nondominated_indices(fs))
    result.archive.push_back(std::move(unique_pool[static_cast<std::size_t>(i)]));

  Vec nadir(m);
  if (result.archive.empty()) {
    std::cerr << "calibrate " << problem_id << ": no finite evaluations, using unit bounds\n";
    ideal = Vec::Zero(m);
    nadir = Vec::Ones(m);
  } else {
    nadir = result.archive.front().f;
    for (const Solution& s : result.archive) nadir = nadir.cwiseMax(s.f);
    for (int i = 0; i < m; ++i)
      if (!std::isfinite(ideal[i])) ideal[i] = 0.0;
    for (int i = 0; i < m; ++i)
      if (!(nadir[i] > ideal[i]))
        std::cerr << "calibrate " << problem_id << ": objective " << i + 1
                  << " degenerate, widening nadir\n";
  }
  result.bounds = make_bounds(std::move(ideal), std::move(nadir));
  return result;
}

BoundsTable load_bounds(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError("bounds file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("bounds file " + path + ": expected an object");
  BoundsTable table;
  for (const auto& [id, entry] : doc.items()) {
    if (!entry.is_object() || !entry.contains("ideal") || !entry.contains("nadir"))
      throw ConfigError("bounds file " + path + ": entry " + id + " needs ideal and nadir");
    const auto& ji = entry.at("ideal");
    const auto& jn = entry.at("nadir");
    if (!ji.is_array() || !jn.is_array() || ji.size() != jn.size() || ji.empty())
      throw ConfigError("bounds file " + path + ": entry " + id + " malformed");
    Vec ideal(static_cast<Eigen::Index>(ji.size()));
    Vec nadir(static_cast<Eigen::Index>(jn.size()));
    for (std::size_t i = 0; i < ji.size(); ++i) {
      ideal[static_cast<Eigen::Index>(i)] = ji[i].get<double>();
      nadir[static_cast<Eigen::Index>(i)] = jn[i].get<double>();
    }
    table.emplace(id, make_bounds(std::move(ideal), std::move(nadir)));
  }
  return table;
}

void save_bounds(const BoundsTable& table, const std::string& path) {
  ordered_json doc = ordered_json::object();
  for (const auto& [id, b] : table) {
    ordered_json entry;
    entry["ideal"] = std::vector<double>(b.z_ideal.begin(), b.z_ideal.end());
    entry["nadir"] = std::vector<double>(b.z_nadir.begin(), b.z_nadir.end());
    doc[id] = std::move(entry);
  }
  atomic_write(path, doc.dump(2) + "\n");
}

void run_experiment(const ExperimentConfig& cfg) {
  const ProblemRegistry& reg = registry();
  std::vector<std::string> problems =
      cfg.problems.empty() ? default_problem_ids() : cfg.problems;
  std::vector<AlgorithmConfig> algorithms =
      cfg.algorithms.empty() ? default_algorithms() : cfg.algorithms;
  if (cfg.runs < 1) throw ConfigError("runs must be at least 1");
  for (const std::string& p : problems)
    if (!reg.contains(p)) throw ConfigError("unknown problem: " + p);
  for (std::size_t i = 0; i < problems.size(); ++i)
    for (std::size_t j = i + 1; j < problems.size(); ++j)
      if (problems[i] == problems[j]) throw ConfigError("duplicate problem: " + problems[i]);
  const auto& known = algorithm_ids();
  for (const AlgorithmConfig& a : algorithms)
    if (std::find(known.begin(), known.end(), a.algorithm_id) == known.end())
      throw ConfigError("unknown algorithm: " + a.algorithm_id);
  for (std::size_t i = 0; i < algorithms.size(); ++i)
    for (std::size_t j = i + 1; j < algorithms.size(); ++j)
      if (algorithms[i].algorithm_id == algorithms[j].algorithm_id)
        throw ConfigError("duplicate algorithm: " + algorithms[i].algorithm_id);

  const fs::path outdir = resolve_output_dir(cfg.output_dir);
  fs::create_directories(outdir);

  BoundsTable bounds;
  if (!cfg.bounds_file.empty()) {
    bounds = load_bounds(cfg.bounds_file);
    for (const std::string& p : problems)
      if (!bounds.count(p)) throw ConfigError("bounds file lacks problem " + p);
  } else {
    for (const std::string& p : problems) {
      std::cerr << "calibrating " << p << "\n";
      CalibrationResult cal = calibrate(p, cfg.calibrate_effort, cfg.calibrate_runs, cfg.base_seed);
      bounds.emplace(p, cal.bounds);
      atomic_write(outdir / "archive" / (p + ".csv"),
                   solution_csv(cal.archive, reg.descriptor(p).n_variables,
                                reg.descriptor(p).m_objectives));
    }
  }
  save_bounds(bounds, (outdir / "bounds.json").string());

  std::vector<Cell> cells;
  for (const std::string& p : problems) {
    const ProblemDescriptor& desc = reg.descriptor(p);
    for (const AlgorithmConfig& a : algorithms) {
      Cell cell{p, a.algorithm_id, false};
      if (a.algorithm_id == "smsemoa" && desc.m_objectives > 3) {
        cell.absent = true;
        cells.push_back(cell);
        continue;
      }
      std::cerr << "running " << p << " / " << a.algorithm_id << "\n";
      std::vector<double> hvs;
      hvs.reserve(static_cast<std::size_t>(cfg.runs));
      for (int r = 0; r < cfg.runs; ++r) {
        AlgorithmConfig c = a;
        c.budget = cfg.budget;
        c.seed = run_seed(cfg.base_seed, p, a.algorithm_id, r);
        RunRecord rec = run(p, c, bounds.at(p));
        const fs::path cell_dir = outdir / "runs" / p / a.algorithm_id;
        atomic_write(cell_dir / ("run_" + std::to_string(r) + ".csv"),
                     solution_csv(rec.final_population.members, desc.n_variables,
                                  desc.m_objectives));
        ordered_json side;
        side["problem"] = p;
        side["algorithm"] = a.algorithm_id;
        side["run"] = r;
        side["seed"] = rec.seed;
        side["budget"] = cfg.budget;
        side["evaluations"] = rec.evaluations_used;
        side["mu"] = rec.final_population.capacity;
        if (std::isfinite(rec.hv))
          side["hv"] = rec.hv;
        else
          side["hv"] = nullptr;
        side["archive_size"] = rec.nondominated_archive.size();
        atomic_write(cell_dir / ("run_" + std::to_string(r) + ".json"), side.dump(2) + "\n");
        hvs.push_back(rec.hv);
      }
      std::string hv_text;
      for (double v : hvs) hv_text += fmt17(v) + "\n";
      atomic_write(outdir / "hv" / p / (a.algorithm_id + ".csv"), hv_text);
      cells.push_back(cell);
    }
  }

  ordered_json manifest;
  manifest["problems"] = problems;
  {
    std::vector<std::string> algs;
    for (const AlgorithmConfig& a : algorithms) algs.push_back(a.algorithm_id);
    manifest["algorithms"] = algs;
  }
  manifest["runs"] = cfg.runs;
  manifest["budget"] = cfg.budget;
  manifest["base_seed"] = cfg.base_seed;
  manifest["bounds_file"] = cfg.bounds_file;
  manifest["cells"] = ordered_json::array();
  for (const Cell& c : cells) {
    ordered_json jc;
    jc["problem"] = c.problem;
    jc["algorithm"] = c.algorithm;
    jc["status"] = c.absent ? "absent" : "done";
    manifest["cells"].push_back(std::move(jc));
  }
  atomic_write(outdir / "manifest.json", manifest.dump(2) + "\n");
}

std::string summarize(const std::string& result_dir) {
  const fs::path dir = result_dir;
  json manifest;
  try {
    manifest = json::parse(read_file(dir / "manifest.json"));
  } catch (const json::exception& e) {
    throw ConfigError("manifest: " + std::string(e.what()));
  }
  const std::vector<std::string> problems = manifest.at("problems").get<std::vector<std::string>>();
  const std::vector<std::string> algorithms =
      manifest.at("algorithms").get<std::vector<std::string>>();
  std::map<std::string, std::map<std::string, bool>> absent;
  for (const auto& cell : manifest.at("cells"))
    absent[cell.at("problem").get<std::string>()][cell.at("algorithm").get<std::string>()] =
        cell.at("status").get<std::string>() == "absent";

  struct Row {
    std::vector<double> hv;
    double mean = 0.0;
    double stdev = 0.0;
    int score = -1;  // -1: not comparable
    int rank = 0;
    bool present = false;
  };
  std::map<std::string, std::map<std::string, Row>> table;

  for (const std::string& p : problems) {
    for (const std::string& a : algorithms) {
      Row row;
      const fs::path hv_path = dir / "hv" / p / (a + ".csv");
      if (!absent[p][a] && fs::exists(hv_path)) {
        std::istringstream in(read_file(hv_path));
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) row.hv.push_back(std::strtod(line.c_str(), nullptr));
        row.present = !row.hv.empty();
      }
      if (row.present) {
        double sum = 0.0;
        for (double v : row.hv) sum += v;
        row.mean = sum / static_cast<double>(row.hv.size());
        if (row.hv.size() > 1) {
          double ss = 0.0;
          for (double v : row.hv) ss += (v - row.mean) * (v - row.mean);
          row.stdev = std::sqrt(ss / static_cast<double>(row.hv.size() - 1));
        }
      }
      table[p][a] = std::move(row);
    }
    // Pairwise comparison among cells with enough runs.
    std::vector<std::string> compared;
    std::vector<std::vector<double>> samples;
    for (const std::string& a : algorithms) {
      const Row& row = table[p][a];
      if (row.present && row.hv.size() >= 2) {
        compared.push_back(a);
        samples.push_back(row.hv);
      }
    }
    if (compared.size() >= 2) {
      std::vector<int> scores = performance_scores(samples);
      std::vector<int> ranks = rank_from_scores(scores);
      for (std::size_t i = 0; i < compared.size(); ++i) {
        table[p][compared[i]].score = scores[i];
        table[p][compared[i]].rank = ranks[i];
      }
    } else if (compared.size() == 1) {
      table[p][compared[0]].score = 0;
      table[p][compared[0]].rank = 1;
    }
  }

  std::ostringstream csv;
  csv << "problem,algorithm,mean_hv,std_hv,score,rank,n_runs\n";
  for (const std::string& p : problems)
    for (const std::string& a : algorithms) {
      const Row& row = table[p][a];
      csv << p << "," << a << ",";
      if (row.present)
        csv << fmt17(row.mean) << "," << fmt17(row.stdev) << ",";
      else
        csv << ",,";
      if (row.score >= 0)
        csv << row.score << "," << row.rank << ",";
      else
        csv << ",,";
      csv << row.hv.size() << "\n";
    }
  atomic_write(dir / "summary.csv", csv.str());

  std::size_t pw = 7;
  for (const std::string& p : problems) pw = std::max(pw, p.size());
  std::ostringstream text;
  text << std::string(pw + 2, ' ');
  for (const std::string& a : algorithms) {
    text << a;
    text << std::string(a.size() < 18 ? 18 - a.size() : 1, ' ');
  }
  text << "\n";
  for (const std::string& p : problems) {
    text << p << std::string(pw + 2 - p.size(), ' ');
    for (const std::string& a : algorithms) {
      const Row& row = table[p][a];
      char buf[32];
      std::string cell;
      if (!row.present) {
        cell = "-";
      } else {
        std::snprintf(buf, sizeof buf, "%.3e", row.mean);
        cell = buf;
        if (row.score >= 0) {
          cell += " (" + std::to_string(row.rank) + ")";
          if (row.rank == 1) cell += "*";
        }
      }
      text << cell;
      text << std::string(cell.size() < 18 ? 18 - cell.size() : 1, ' ');
    }
    text << "\n";
  }
  atomic_write(dir / "summary.txt", text.str());
  return text.str();
}

void export_front(const std::string& problem_id, const std::vector<Vec>& archive, int k,
                  const std::string& out_path) {
  const ProblemDescriptor& desc = registry().descriptor(problem_id);
  if (k <= 0) k = 500 * desc.m_objectives;
  for (const Vec& f : archive)
    if (f.size() != desc.m_objectives)
      throw ConfigError("export_front: archive dimensionality does not match " + problem_id);
  std::vector<Vec> picked = subset_select(archive, k);
  std::ostringstream out;
  for (int j = 1; j <= desc.m_objectives; ++j)
    out << "f_" << j << (j == desc.m_objectives ? "" : ",");
  out << "\n";
  for (const Vec& f : picked) {
    for (Eigen::Index j = 0; j < f.size(); ++j)
      out << fmt17(f[j]) << (j + 1 == f.size() ? "" : ",");
    out << "\n";
  }
  atomic_write(out_path, out.str());
}

std::vector<Vec> load_archive_objectives(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("archive " + path + ": empty file");
  std::vector<std::string> header = split_csv_line(line);
  std::vector<int> fcols;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i].rfind("f_", 0) == 0) fcols.push_back(static_cast<int>(i));
  if (fcols.empty()) throw ConfigError("archive " + path + ": no objective columns");
  std::vector<Vec> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    Vec f(static_cast<Eigen::Index>(fcols.size()));
    for (std::size_t j = 0; j < fcols.size(); ++j) {
      if (static_cast<std::size_t>(fcols[j]) >= cells.size())
        throw ConfigError("archive " + path + ": short row");
      f[static_cast<Eigen::Index>(j)] =
          std::strtod(cells[static_cast<std::size_t>(fcols[j])].c_str(), nullptr);
    }
    out.push_back(std::move(f));
  }
  return out;
}

ExperimentConfig config_from_json(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config " + path + ": expected an object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "problems") {
        cfg.problems = value.get<std::vector<std::string>>();
      } else if (key == "algorithms") {
        for (const auto& item : value) {
          AlgorithmConfig a;
          if (item.is_string()) {
            a.algorithm_id = item.get<std::string>();
          } else if (item.is_object()) {
            for (const auto& [akey, avalue] : item.items()) {
              if (akey == "algorithm_id")
                a.algorithm_id = avalue.get<std::string>();
              else if (akey == "mu")
                a.mu = avalue.get<int>();
              else if (akey == "neighborhood_size")
                a.neighborhood_size = avalue.get<int>();
              else if (akey == "theta")
                a.theta = avalue.get<double>();
              else if (akey == "kappa")
                a.kappa = avalue.get<double>();
              else
                throw ConfigError("config: unknown algorithm key " + akey);
            }
            if (a.algorithm_id.empty()) throw ConfigError("config: algorithm_id required");
          } else {
            throw ConfigError("config: algorithms entries must be names or objects");
          }
          cfg.algorithms.push_back(std::move(a));
        }
      } else if (key == "runs") {
        cfg.runs = value.get<int>();
      } else if (key == "budget") {
        cfg.budget = value.get<int>();
      } else if (key == "bounds_source") {
        if (value.is_string() && value.get<std::string>() == "calibrate")
          cfg.bounds_file.clear();
        else if (value.is_object() && value.contains("file"))
          cfg.bounds_file = value.at("file").get<std::string>();
        else
          throw ConfigError("config: bounds_source must be \"calibrate\" or {\"file\": path}");
      } else if (key == "calibrate_effort") {
        cfg.calibrate_effort = value.get<int>();
      } else if (key == "calibrate_runs") {
        cfg.calibrate_runs = value.get<int>();
      } else if (key == "output_dir") {
        cfg.output_dir = value.get<std::string>();
      } else if (key == "base_seed") {
        cfg.base_seed = value.get<std::uint64_t>();
      } else {
        throw ConfigError("config: unknown key " + key);
      }
    } catch (const json::exception& e) {
      throw ConfigError("config " + path + ", key " + key + ": " + e.what());
    }
  }
  return cfg;
}

}  // namespace rebench
