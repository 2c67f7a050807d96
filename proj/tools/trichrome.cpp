// trichrome: exact 3-coloring with verifiable certificates for both verdicts.
//
//   trichrome solve <graph.col> [--alpha K | --auto] [--mode ...] [--cert out]
//   trichrome verify <graph.col> <certificate>
//   trichrome generate --model er|pseudoplanar|planar4reg --n N ...
//   trichrome experiment <1|2|3|4> [--scale desk|full] [--out DIR]
//
// Exit codes for solve: 0 = 3-colorable, 1 = not 3-colorable, 2 = undetermined
// at the given budget. verify: 0 = certificate valid, 1 = invalid.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "trichrome/certificate_io.hpp"
#include "trichrome/dimacs.hpp"
#include "trichrome/experiment.hpp"
#include "trichrome/generator.hpp"
#include "trichrome/solver.hpp"

namespace fs = std::filesystem;
using namespace trichrome;

namespace {

constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TRICHROME_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring non-numeric TRICHROME_SEED\n";
    }
  }
  return 1;
}

SolveMode parse_mode(const std::string& name) {
  if (name == "general") return SolveMode::general;
  if (name == "planar") return SolveMode::planar;
  if (name == "improved") return SolveMode::improved;
  throw CLI::ValidationError("--mode must be general, planar or improved");
}

int cmd_solve(const std::string& file, int alpha, bool auto_alpha, int alpha_max,
              const std::string& mode_name, const std::string& cert_out,
              int shuffles, std::uint64_t seed) {
  Graph g;
  try {
    std::vector<std::string> warnings;
    g = parse_dimacs(read_file(file), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SolveConfig cfg;
  cfg.mode = parse_mode(mode_name);
  cfg.alpha_max = auto_alpha ? alpha_max : alpha;
  cfg.rng_seed = seed;
  SolveStats stats;

  SolverOutcome outcome;
  ObservedAlpha observed;
  if (auto_alpha) {
    auto [out, oa] = bfs_3col(g, cfg, &stats);
    outcome = std::move(out);
    observed = oa;
  } else {
    outcome = solve_with_mode(g, alpha, cfg.mode, &stats);
    observed = {alpha, false};
  }

  if (shuffles > 0) {
    const auto worst = observed_alpha_over_shuffles(g, cfg, shuffles);
    std::cout << "observed alpha over " << shuffles
              << " shuffles: " << worst.value << (worst.exceeded ? " (cap hit)" : "")
              << "\n";
  }

  switch (outcome.verdict) {
    case Verdict::yes:
      std::cout << "3-colorable (alpha = " << observed.value
                << ", calls = " << stats.decision_calls << ")\n";
      break;
    case Verdict::no:
      std::cout << "not 3-colorable (alpha = " << observed.value
                << ", certificate steps = "
                << certificate_size(outcome.uncolorability())
                << ", calls = " << stats.decision_calls << ")\n";
      break;
    default:
      std::cout << "undetermined for the current value of alpha\n";
  }

  if (!cert_out.empty() && outcome.determinate()) {
    std::ofstream out(cert_out);
    out << write_certificate(outcome);
    std::cout << "certificate written to " << cert_out << "\n";
  }
  return outcome.verdict == Verdict::yes ? 0
         : outcome.verdict == Verdict::no ? 1
                                          : 2;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file) {
  Graph g;
  ParsedCertificate cert;
  try {
    g = parse_dimacs(read_file(graph_file));
    cert = parse_certificate(read_file(cert_file));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  VerifyResult result;
  if (const auto* col = std::get_if<ColoringCertificate>(&cert)) {
    result = verify_coloring(g, *col);
    std::cout << "coloring certificate: " << result.describe() << "\n";
  } else {
    result = verify_uncolorability(g, std::get<UncolorabilityCertificate>(cert));
    std::cout << "uncolorability certificate: " << result.describe() << "\n";
  }
  return result.ok ? 0 : 1;
}

int cmd_generate(const std::string& model_name, int n, double d,
                 const std::string& probs_str, std::uint64_t seed, int count,
                 const std::string& out_dir) {
  GenSpec spec;
  if (model_name == "er") spec.model = GenModel::er_connected;
  else if (model_name == "pseudoplanar") spec.model = GenModel::pseudo_planar;
  else if (model_name == "planar4reg") spec.model = GenModel::planar_4regular;
  else {
    std::cerr << "error: unknown model " << model_name << "\n";
    return kExitUsage;
  }
  spec.n = n;
  spec.avg_degree = d;
  if (!probs_str.empty()) {
    std::istringstream ps(probs_str);
    char comma;
    if (!(ps >> spec.op_probs.a >> comma >> spec.op_probs.b >> comma >>
          spec.op_probs.c >> comma >> spec.op_probs.f)) {
      std::cerr << "error: --probs expects a,b,c,f\n";
      return kExitUsage;
    }
  }
  fs::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    Graph g;
    try {
      g = generate(spec);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    std::ostringstream meta;
    meta << "model=" << to_string(spec.model) << " n=" << n << " d=" << d
         << " seed=" << seed << " index=" << i << " instance_seed=" << spec.seed;
    const fs::path path = fs::path(out_dir) / (std::string(to_string(spec.model)) +
                                               "_" + std::to_string(n) + "_" +
                                               std::to_string(seed) + "_" +
                                               std::to_string(i) + ".col");
    std::ofstream out(path);
    out << write_dimacs(g, meta.str());
    std::cout << path.string() << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << "\n";
  }
  return 0;
}

int cmd_experiment(int which, bool full_scale, const std::string& out_dir,
                   int jobs, std::uint64_t seed, bool archive) {
  ExperimentOptions opt;
  opt.out_dir = out_dir.empty() ? "experiment" + std::to_string(which) : out_dir;
  opt.full_scale = full_scale;
  opt.jobs = jobs;
  opt.seed = seed;
  opt.archive = archive;
  fs::create_directories(opt.out_dir);
  const auto sum = run_experiment(which, opt);
  std::cout << sum.summary_text;
  std::cout << "records: " << (fs::path(opt.out_dir) / "records.csv").string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 3-coloring solver with verifiable certificates"};
  app.require_subcommand(1);

  // solve
  std::string solve_file, solve_mode = "improved", solve_cert;
  int solve_alpha = 0, solve_alpha_max = 6, solve_shuffles = 0;
  bool solve_auto = false;
  std::uint64_t seed = default_seed();
  auto* solve = app.add_subcommand("solve", "decide 3-colorability of a DIMACS graph");
  solve->add_option("file", solve_file, "input .col file")->required();
  auto* alpha_opt = solve->add_option("--alpha", solve_alpha, "recursion budget");
  solve->add_flag("--auto", solve_auto, "escalate alpha until determinate");
  solve->add_option("--alpha-max", solve_alpha_max, "cap for --auto")
      ->default_val(6);
  solve->add_option("--mode", solve_mode, "general|planar|improved")
      ->default_val("improved");
  solve->add_option("--cert", solve_cert, "write the certificate here");
  solve->add_option("--shuffles", solve_shuffles,
                    "report worst observed alpha over N random orderings");
  solve->add_option("--seed", seed, "rng seed (default: TRICHROME_SEED or 1)");

  // verify
  std::string verify_graph, verify_cert;
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("graph", verify_graph, "input .col file")->required();
  verify->add_option("certificate", verify_cert, "certificate file")->required();

  // generate
  std::string gen_model = "er", gen_probs, gen_out = ".";
  int gen_n = 100, gen_count = 1;
  double gen_d = 4.0;
  auto* gen = app.add_subcommand("generate", "write random instances as DIMACS");
  gen->add_option("--model", gen_model, "er|pseudoplanar|planar4reg")
      ->default_val("er");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "target average degree");
  gen->add_option("--probs", gen_probs, "planar4reg op probabilities a,b,c,f");
  gen->add_option("--seed", seed, "master seed");
  gen->add_option("--count", gen_count, "number of instances")->default_val(1);
  gen->add_option("--out", gen_out, "output directory")->default_val(".");

  // experiment
  int exp_which = 0, exp_jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::string exp_scale = "desk", exp_out;
  bool exp_no_archive = false;
  auto* exp = app.add_subcommand("experiment", "run one of the four studies");
  exp->add_option("number", exp_which, "1..4")->required();
  exp->add_option("--scale", exp_scale, "desk|full")->default_val("desk");
  exp->add_option("--out", exp_out, "output directory");
  exp->add_option("--jobs", exp_jobs, "worker threads");
  exp->add_option("--seed", seed, "master seed");
  exp->add_flag("--no-archive", exp_no_archive, "skip instance/cert files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(solve_file, solve_alpha, solve_auto || !*alpha_opt,
                       solve_alpha_max, solve_mode, solve_cert, solve_shuffles,
                       seed);
    if (verify->parsed()) return cmd_verify(verify_graph, verify_cert);
    if (gen->parsed())
      return cmd_generate(gen_model, gen_n, gen_d, gen_probs, seed, gen_count,
                          gen_out);
    if (exp->parsed()) {
      if (exp_which < 1 || exp_which > 4) {
        std::cerr << "error: experiment number must be 1..4\n";
        return kExitUsage;
      }
      return cmd_experiment(exp_which, exp_scale == "full", exp_out, exp_jobs,
                            seed, !exp_no_archive);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
