#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "trichrome/certificate_io.hpp"
#include "trichrome/dimacs.hpp"
#include "trichrome/generator.hpp"
#include "trichrome/oracle.hpp"
#include "trichrome/rng.hpp"
#include "trichrome/solver.hpp"

namespace trichrome {

struct ExperimentRecord {
  long long id = 0;
  std::string model;
  int n = 0;
  long long m = 0;
  double avg_degree = 0.0;  // 2m/n
  Verdict verdict = Verdict::undetermined;
  int alpha = 0;
  double time_s = 0.0;
  long long calls = 0;
  long long cert_size = 0;
};

inline constexpr const char* kCsvHeader =
    "id,model,n,m,avg_degree,verdict,alpha,time_s,calls,cert_size";

inline std::string to_csv(const ExperimentRecord& r) {
  std::ostringstream out;
  out << r.id << ',' << r.model << ',' << r.n << ',' << r.m << ','
      << std::setprecision(10) << r.avg_degree << ',' << to_string(r.verdict)
      << ',' << r.alpha << ',' << std::setprecision(6) << r.time_s << ','
      << r.calls << ',' << r.cert_size;
  return out.str();
}

// Run fn(0..count-1) on `jobs` threads; each index is independent work.
template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const long long i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct SolveRun {
  SolverOutcome outcome;
  ObservedAlpha alpha;
  SolveStats stats;
  double seconds = 0.0;
};

inline SolveRun timed_bfs(const Graph& g, const SolveConfig& cfg) {
  SolveRun run;
  const auto t0 = std::chrono::steady_clock::now();
  auto [outcome, oa] = bfs_3col(g, cfg, &run.stats);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  run.outcome = std::move(outcome);
  run.alpha = oa;
  return run;
}

inline ExperimentRecord make_record(long long id, GenModel model, const Graph& g,
                                    const SolveRun& run) {
  ExperimentRecord r;
  r.id = id;
  r.model = to_string(model);
  r.n = g.vertex_count();
  r.m = static_cast<long long>(g.edge_count());
  r.avg_degree = r.n > 0 ? 2.0 * static_cast<double>(r.m) / r.n : 0.0;
  r.verdict = run.outcome.verdict;
  r.alpha = run.alpha.value;
  r.time_s = run.seconds;
  r.calls = run.stats.decision_calls;
  r.cert_size = run.outcome.verdict == Verdict::no
                    ? static_cast<long long>(certificate_size(run.outcome.uncolorability()))
                    : 0;
  return r;
}

// ---------------------------------------------------------------------------
// Analysis helpers
// ---------------------------------------------------------------------------

/// Least-squares slope of log(y) on log(x); points with y <= 0 are skipped.
inline std::optional<double> loglog_slope(const std::vector<double>& xs,
                                          const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) continue;
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  if (k < 2) return std::nullopt;
  const double denom = k * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) return std::nullopt;
  return (k * sxy - sx * sy) / denom;
}

/// Yes-fraction per d-bin, then the interpolated d where it crosses 1/2.
struct PhaseTransition {
  std::vector<double> bin_mid;
  std::vector<double> yes_fraction;
  std::vector<long long> bin_count;
  std::optional<double> crossover;
};

inline PhaseTransition estimate_crossover(const std::vector<double>& degrees,
                                          const std::vector<Verdict>& verdicts,
                                          double lo, double hi, double width) {
  PhaseTransition pt;
  const int bins = std::max(1, static_cast<int>(std::round((hi - lo) / width)));
  std::vector<long long> yes(bins, 0), tot(bins, 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (verdicts[i] == Verdict::undetermined) continue;
    int b = static_cast<int>((degrees[i] - lo) / width);
    if (b < 0 || b >= bins) continue;
    ++tot[b];
    if (verdicts[i] == Verdict::yes) ++yes[b];
  }
  for (int b = 0; b < bins; ++b) {
    if (tot[b] == 0) continue;
    pt.bin_mid.push_back(lo + (b + 0.5) * width);
    pt.yes_fraction.push_back(static_cast<double>(yes[b]) / tot[b]);
    pt.bin_count.push_back(tot[b]);
  }
  for (std::size_t i = 0; i + 1 < pt.bin_mid.size(); ++i) {
    const double f0 = pt.yes_fraction[i], f1 = pt.yes_fraction[i + 1];
    if (f0 >= 0.5 && f1 < 0.5) {
      const double t = (f0 - 0.5) / (f0 - f1);
      pt.crossover = pt.bin_mid[i] + t * (pt.bin_mid[i + 1] - pt.bin_mid[i]);
      break;
    }
  }
  return pt;
}

/// Observed-alpha tallies against the 2^-(k+1) reference. An exceeded run
/// (alpha cap hit) counts as "> k" for every k up to the cap.
struct AlphaDistribution {
  int cap = 0;
  std::vector<long long> count;      // count[k] = runs with observed alpha == k
  long long exceeded = 0;            // capped-out runs
  long long total = 0;

  double fraction_above(int k) const {
    long long above = exceeded;
    for (int j = k + 1; j <= cap && j < static_cast<int>(count.size()); ++j)
      above += count[j];
    return total > 0 ? static_cast<double>(above) / total : 0.0;
  }
  bool monotone_nonincreasing() const {
    for (std::size_t k = 1; k < count.size(); ++k)
      if (count[k] > count[k - 1]) return false;
    return true;
  }
  int max_observed() const {
    for (int k = static_cast<int>(count.size()) - 1; k >= 0; --k)
      if (count[k] > 0) return k;
    return -1;
  }
};

inline AlphaDistribution tally_alpha(const std::vector<ExperimentRecord>& records,
                                     int cap) {
  AlphaDistribution dist;
  dist.cap = cap;
  dist.count.assign(cap + 1, 0);
  for (const auto& r : records) {
    ++dist.total;
    if (r.verdict == Verdict::undetermined || r.alpha > cap)
      ++dist.exceeded;
    else
      ++dist.count[r.alpha];
  }
  return dist;
}

/// Binomial-slack audit of P(alpha > k) <= 2^-(k+1): a k is only judged when
/// the expected tail holds >= 30 samples; violations are findings, not
/// crashes.
struct AlphaBoundCheck {
  int k;
  double fraction;
  double bound;  // 2^-(k+1) + 3 sigma
  bool ok;
};

inline std::vector<AlphaBoundCheck> audit_alpha_bound(const AlphaDistribution& d) {
  std::vector<AlphaBoundCheck> out;
  for (int k = 0; k <= d.cap; ++k) {
    const double p = std::pow(2.0, -(k + 1));
    if (static_cast<double>(d.total) * p < 30.0) break;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(d.total));
    const double frac = d.fraction_above(k);
    const double bound = p + 3 * sigma;
    out.push_back({k, frac, bound, frac <= bound});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Experiment drivers. Each writes records.csv (fixed header), instances/*.col
// for every attempted graph, certs/<id>.cert for every No verdict, and
// summary.txt; it also re-verifies every written No certificate against the
// written instance as a pipeline audit.
// ---------------------------------------------------------------------------

struct ExperimentOptions {
  std::string out_dir = "experiment";
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  bool full_scale = false;
  bool archive = true;
  int alpha_cap = 6;
};

struct InstanceResult {
  ExperimentRecord record;
  std::string dimacs;
  std::string cert_text;       // empty unless determinate
  long long backtrack_nodes = -1;
  double backtrack_time = 0.0;
  Verdict backtrack_verdict = Verdict::undetermined;
  bool backtrack_capped = false;
};

namespace detail {

struct AuditOutcome {
  long long checked = 0;
  long long failures = 0;
};

// Write archive files and replay every certificate from disk.
inline AuditOutcome write_and_audit(const std::string& out_dir,
                                    std::vector<InstanceResult>& results,
                                    bool archive) {
  namespace fs = std::filesystem;
  AuditOutcome audit;
  std::sort(results.begin(), results.end(),
            [](const InstanceResult& a, const InstanceResult& b) {
              return a.record.id < b.record.id;
            });
  if (archive) {
    fs::create_directories(fs::path(out_dir) / "instances");
    fs::create_directories(fs::path(out_dir) / "certs");
  }
  for (const auto& r : results) {
    if (archive) {
      std::ofstream col(fs::path(out_dir) / "instances" /
                        (std::to_string(r.record.id) + ".col"));
      col << r.dimacs;
      if (!r.cert_text.empty()) {
        std::ofstream cf(fs::path(out_dir) / "certs" /
                         (std::to_string(r.record.id) + ".cert"));
        cf << r.cert_text;
      }
    }
    if (r.record.verdict == Verdict::no) {
      ++audit.checked;
      // replay through the text round-trip, like cmd_verify would
      const Graph g = parse_dimacs(r.dimacs);
      const auto parsed = parse_certificate(r.cert_text);
      const auto* cert = std::get_if<UncolorabilityCertificate>(&parsed);
      if (!cert || !verify_uncolorability(g, *cert)) ++audit.failures;
    }
  }
  return audit;
}

inline void write_records_csv(const std::string& out_dir,
                              const std::vector<InstanceResult>& results) {
  std::ofstream csv(std::filesystem::path(out_dir) / "records.csv");
  csv << kCsvHeader << "\n";
  for (const auto& r : results) csv << to_csv(r.record) << "\n";
}

struct GroupStat {
  long long yes = 0, no = 0, undet = 0;
  double solver_mean = 0, solver_max = 0;
  double bt_mean = 0, bt_max = 0;
  double bt_nodes_max = 0;
};

}  // namespace detail

struct ExperimentSummary {
  std::vector<InstanceResult> results;        // sorted by id
  std::string summary_text;
  detail::AuditOutcome audit;
  AlphaDistribution alpha_dist;
  std::vector<AlphaBoundCheck> alpha_bound;
  PhaseTransition transition;
  std::optional<double> solver_tail_slope;    // experiment 1
  std::optional<int> crossover_n;             // experiment 1
  long long verdict_disagreements = 0;        // experiment 1 solver vs backtracking
  long long envelope_violations = 0;
  long long round_violations = 0;
  long long planarity_violations = 0;
  long long odd_bailouts = 0;
};

namespace detail {

inline void accumulate_stats(ExperimentSummary& sum, const SolveStats& st) {
  sum.envelope_violations += st.envelope_violations;
  sum.round_violations += st.round_violations;
  sum.planarity_violations += st.planarity_violations;
  sum.odd_bailouts += st.odd_triangulation_bailouts;
}

}  // namespace detail

/// Experiment 1: random planar instances n = 10..100, solved by the planar
/// parametric driver and by exact backtracking; compares scaling.
inline ExperimentSummary run_experiment1(const ExperimentOptions& opt,
                                         int per_n = 100, int n_lo = 10,
                                         int n_hi = 100,
                                         long long bt_node_cap = 200'000'000) {
  ExperimentSummary sum;
  std::vector<int> sizes;
  for (int n = n_lo; n <= n_hi; ++n) sizes.push_back(n);
  const long long count = static_cast<long long>(sizes.size()) * per_n;
  std::vector<InstanceResult> results(count);
  std::mutex stats_mu;

  parallel_for(count, opt.jobs, [&](long long i) {
    const int n = sizes[static_cast<std::size_t>(i / per_n)];
    const std::uint64_t seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    const double d_hi = std::min(5.0, 6.0 - 12.0 / n);
    std::mt19937_64 rng(seed);
    const double d = rng_range(rng, 2.0, d_hi);
    const Graph g = gen_pseudo_planar(n, d, rng());

    SolveConfig cfg;
    cfg.mode = SolveMode::planar;
    cfg.alpha_max = opt.alpha_cap;
    const SolveRun run = timed_bfs(g, cfg);

    InstanceResult res;
    res.record = make_record(i, GenModel::pseudo_planar, g, run);
    res.dimacs = write_dimacs(g);
    if (run.outcome.determinate()) res.cert_text = write_certificate(run.outcome);

    const auto t0 = std::chrono::steady_clock::now();
    const auto bt = backtrack_3col(g, bt_node_cap);
    res.backtrack_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.backtrack_nodes = bt.nodes;
    res.backtrack_capped = bt.capped;
    if (!bt.capped)
      res.backtrack_verdict = bt.coloring ? Verdict::yes : Verdict::no;

    {
      std::scoped_lock lock(stats_mu);
      detail::accumulate_stats(sum, run.stats);
      if (!bt.capped && run.outcome.determinate() &&
          res.backtrack_verdict != run.outcome.verdict)
        ++sum.verdict_disagreements;
    }
    results[i] = std::move(res);
  });

  sum.results = std::move(results);
  std::sort(sum.results.begin(), sum.results.end(),
            [](const InstanceResult& a, const InstanceResult& b) {
              return a.record.id < b.record.id;
            });

  // per-n curves
  std::map<int, detail::GroupStat> by_n;
  for (const auto& r : sum.results) {
    auto& gst = by_n[r.record.n];
    if (r.record.verdict == Verdict::yes) ++gst.yes;
    else if (r.record.verdict == Verdict::no) ++gst.no;
    else ++gst.undet;
    gst.solver_mean += r.record.time_s;
    gst.solver_max = std::max(gst.solver_max, r.record.time_s);
    gst.bt_mean += r.backtrack_time;
    gst.bt_max = std::max(gst.bt_max, r.backtrack_time);
    gst.bt_nodes_max =
        std::max(gst.bt_nodes_max, static_cast<double>(r.backtrack_nodes));
  }
  std::vector<double> ns, solver_max, bt_max;
  for (auto& [n, gst] : by_n) {
    const long long group = gst.yes + gst.no + gst.undet;
    gst.solver_mean /= std::max(1LL, group);
    gst.bt_mean /= std::max(1LL, group);
    ns.push_back(n);
    solver_max.push_back(gst.solver_max);
    bt_max.push_back(gst.bt_max);
  }
  // fitted tail slope of the solver max-time curve (n >= 50)
  {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < ns.size(); ++i)
      if (ns[i] >= 50 && solver_max[i] > 0) {
        xs.push_back(ns[i]);
        ys.push_back(solver_max[i]);
      }
    sum.solver_tail_slope = loglog_slope(xs, ys);
  }
  // crossover: first n from which backtracking max time stays above solver's
  for (std::size_t i = 0; i < ns.size(); ++i) {
    bool stays = true;
    for (std::size_t j = i; j < ns.size(); ++j)
      if (bt_max[j] <= solver_max[j]) {
        stays = false;
        break;
      }
    if (stays && bt_max[i] > solver_max[i]) {
      sum.crossover_n = static_cast<int>(ns[i]);
      break;
    }
  }

  sum.audit = detail::write_and_audit(opt.out_dir, sum.results, opt.archive);
  detail::write_records_csv(opt.out_dir, sum.results);

  std::ofstream bcsv(std::filesystem::path(opt.out_dir) / "backtracking.csv");
  bcsv << "id,n,m,avg_degree,verdict,time_s,nodes,capped\n";
  for (const auto& r : sum.results)
    bcsv << r.record.id << ',' << r.record.n << ',' << r.record.m << ','
         << std::setprecision(10) << r.record.avg_degree << ','
         << to_string(r.backtrack_verdict) << ',' << std::setprecision(6)
         << r.backtrack_time << ',' << r.backtrack_nodes << ','
         << (r.backtrack_capped ? 1 : 0) << "\n";

  std::ostringstream s;
  s << "experiment 1: planar scaling, parametric solver vs backtracking\n";
  s << "instances: " << sum.results.size() << "\n";
  s << "n,yes,no,undetermined,solver_mean_s,solver_max_s,bt_mean_s,bt_max_s,bt_nodes_max\n";
  for (const auto& [n, gst] : by_n)
    s << n << ',' << gst.yes << ',' << gst.no << ',' << gst.undet << ','
      << std::setprecision(6) << gst.solver_mean << ',' << gst.solver_max << ','
      << gst.bt_mean << ',' << gst.bt_max << ',' << gst.bt_nodes_max << "\n";
  s << "solver max-time log-log tail slope (n>=50): "
    << (sum.solver_tail_slope ? std::to_string(*sum.solver_tail_slope) : "n/a")
    << "\n";
  s << "backtracking-over-solver crossover n: "
    << (sum.crossover_n ? std::to_string(*sum.crossover_n) : "none") << "\n";
  s << "solver/backtracking verdict disagreements: " << sum.verdict_disagreements
    << "\n";
  s << "certificate audit: " << sum.audit.checked - sum.audit.failures << "/"
    << sum.audit.checked << " verified\n";
  s << "envelope violations: " << sum.envelope_violations
    << ", round violations: " << sum.round_violations
    << ", planarity violations: " << sum.planarity_violations
    << ", odd-triangulation bailouts: " << sum.odd_bailouts << "\n";
  sum.summary_text = s.str();
  std::ofstream(std::filesystem::path(opt.out_dir) / "summary.txt")
      << sum.summary_text;
  return sum;
}

/// Experiments 2 and 3: sweep n for one planar model, planar driver.
inline ExperimentSummary run_experiment_planar_sweep(const ExperimentOptions& opt,
                                                     GenModel model) {
  const int per_n = opt.full_scale ? 1000 : 50;
  const int n_hi = opt.full_scale ? 1000 : 400;
  ExperimentSummary sum;
  std::vector<int> sizes;
  for (int n = 100; n <= n_hi; n += 100) sizes.push_back(n);
  const long long count = static_cast<long long>(sizes.size()) * per_n;
  std::vector<InstanceResult> results(count);
  std::mutex stats_mu;

  parallel_for(count, opt.jobs, [&](long long i) {
    const int n = sizes[static_cast<std::size_t>(i / per_n)];
    const std::uint64_t seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(seed);
    Graph g;
    if (model == GenModel::pseudo_planar) {
      const double d = rng_range(rng, 2.0, std::min(5.0, 6.0 - 12.0 / n));
      g = gen_pseudo_planar(n, d, rng());
    } else {
      g = gen_4regular_planar(n, FourRegularProbs{}, rng());
    }
    SolveConfig cfg;
    cfg.mode = SolveMode::planar;
    cfg.alpha_max = opt.alpha_cap;
    const SolveRun run = timed_bfs(g, cfg);
    InstanceResult res;
    res.record = make_record(i, model, g, run);
    res.dimacs = write_dimacs(g);
    if (run.outcome.determinate()) res.cert_text = write_certificate(run.outcome);
    {
      std::scoped_lock lock(stats_mu);
      detail::accumulate_stats(sum, run.stats);
    }
    results[i] = std::move(res);
  });

  sum.results = std::move(results);
  sum.audit = detail::write_and_audit(opt.out_dir, sum.results, opt.archive);
  detail::write_records_csv(opt.out_dir, sum.results);
  sum.alpha_dist = tally_alpha([&] {
    std::vector<ExperimentRecord> rs;
    for (const auto& r : sum.results) rs.push_back(r.record);
    return rs;
  }(), opt.alpha_cap);

  std::map<int, detail::GroupStat> by_n;
  std::map<int, std::pair<double, double>> time_by_verdict_max;  // n -> (yes,no)
  for (const auto& r : sum.results) {
    auto& gst = by_n[r.record.n];
    if (r.record.verdict == Verdict::yes) ++gst.yes;
    else if (r.record.verdict == Verdict::no) ++gst.no;
    else ++gst.undet;
    gst.solver_mean += r.record.time_s;
    gst.solver_max = std::max(gst.solver_max, r.record.time_s);
    auto& tv = time_by_verdict_max[r.record.n];
    if (r.record.verdict == Verdict::yes) tv.first = std::max(tv.first, r.record.time_s);
    if (r.record.verdict == Verdict::no) tv.second = std::max(tv.second, r.record.time_s);
  }
  std::ostringstream s;
  s << "experiment " << (model == GenModel::pseudo_planar ? 2 : 3) << ": "
    << to_string(model) << " sweep, planar driver\n";
  s << "instances: " << sum.results.size() << "\n";
  s << "n,yes,no,undetermined,mean_s,max_s,max_yes_s,max_no_s\n";
  for (auto& [n, gst] : by_n) {
    const long long group = gst.yes + gst.no + gst.undet;
    s << n << ',' << gst.yes << ',' << gst.no << ',' << gst.undet << ','
      << std::setprecision(6) << gst.solver_mean / std::max(1LL, group) << ','
      << gst.solver_max << ',' << time_by_verdict_max[n].first << ','
      << time_by_verdict_max[n].second << "\n";
  }
  s << "alpha histogram (0.." << opt.alpha_cap << "):";
  for (long long c : sum.alpha_dist.count) s << ' ' << c;
  s << " exceeded " << sum.alpha_dist.exceeded << "\n";
  s << "certificate audit: " << sum.audit.checked - sum.audit.failures << "/"
    << sum.audit.checked << " verified\n";
  s << "envelope violations: " << sum.envelope_violations
    << ", round violations: " << sum.round_violations
    << ", planarity violations: " << sum.planarity_violations
    << ", odd-triangulation bailouts: " << sum.odd_bailouts << "\n";
  sum.summary_text = s.str();
  std::ofstream(std::filesystem::path(opt.out_dir) / "summary.txt")
      << sum.summary_text;
  return sum;
}

/// Experiment 4: connected ER graphs at n = 100, d uniform in [3, 6];
/// improved driver; phase transition and alpha distribution.
inline ExperimentSummary run_experiment4(const ExperimentOptions& opt,
                                         int n = 100, double d_lo = 3.0,
                                         double d_hi = 6.0, long long count0 = -1) {
  const long long count = count0 > 0 ? count0 : (opt.full_scale ? 10000 : 2000);
  ExperimentSummary sum;
  std::vector<InstanceResult> results(count);
  std::mutex stats_mu;

  parallel_for(count, opt.jobs, [&](long long i) {
    const std::uint64_t seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(seed);
    const double d = rng_range(rng, d_lo, d_hi);
    const Graph g = gen_er_connected(n, d, rng());
    SolveConfig cfg;
    cfg.mode = SolveMode::improved;
    cfg.alpha_max = opt.alpha_cap;
    const SolveRun run = timed_bfs(g, cfg);
    InstanceResult res;
    res.record = make_record(i, GenModel::er_connected, g, run);
    res.dimacs = write_dimacs(g);
    if (run.outcome.determinate()) res.cert_text = write_certificate(run.outcome);
    {
      std::scoped_lock lock(stats_mu);
      detail::accumulate_stats(sum, run.stats);
    }
    results[i] = std::move(res);
  });

  sum.results = std::move(results);
  sum.audit = detail::write_and_audit(opt.out_dir, sum.results, opt.archive);
  detail::write_records_csv(opt.out_dir, sum.results);

  std::vector<ExperimentRecord> rs;
  std::vector<double> degrees;
  std::vector<Verdict> verdicts;
  for (const auto& r : sum.results) {
    rs.push_back(r.record);
    degrees.push_back(r.record.avg_degree);
    verdicts.push_back(r.record.verdict);
  }
  sum.alpha_dist = tally_alpha(rs, opt.alpha_cap);
  sum.alpha_bound = audit_alpha_bound(sum.alpha_dist);
  sum.transition = estimate_crossover(degrees, verdicts, d_lo, d_hi, 0.25);

  std::ofstream hist(std::filesystem::path(opt.out_dir) / "alpha_histogram.csv");
  hist << "alpha,count,fraction,reference_2^-(k+1)\n";
  for (int k = 0; k <= opt.alpha_cap; ++k)
    hist << k << ',' << sum.alpha_dist.count[k] << ','
         << std::setprecision(6)
         << static_cast<double>(sum.alpha_dist.count[k]) /
                std::max(1LL, sum.alpha_dist.total)
         << ',' << std::pow(2.0, -(k + 1)) << "\n";
  hist << "exceeded," << sum.alpha_dist.exceeded << ",,\n";

  std::ostringstream s;
  s << "experiment 4: connected ER graphs, n = " << n << ", d in [" << d_lo
    << ", " << d_hi << "]\n";
  s << "instances: " << sum.results.size() << "\n";
  s << "d_bin_mid,yes_fraction,count\n";
  for (std::size_t i = 0; i < sum.transition.bin_mid.size(); ++i)
    s << std::setprecision(4) << sum.transition.bin_mid[i] << ','
      << sum.transition.yes_fraction[i] << ',' << sum.transition.bin_count[i]
      << "\n";
  s << "yes/no crossover d*: "
    << (sum.transition.crossover ? std::to_string(*sum.transition.crossover)
                                 : "none")
    << "\n";
  s << "alpha histogram (0.." << opt.alpha_cap << "):";
  for (long long c : sum.alpha_dist.count) s << ' ' << c;
  s << " exceeded " << sum.alpha_dist.exceeded << "\n";
  s << "alpha histogram monotone non-increasing: "
    << (sum.alpha_dist.monotone_nonincreasing() ? "yes" : "no") << "\n";
  s << "max observed alpha: " << sum.alpha_dist.max_observed() << "\n";
  s << "tail bound audit (fraction(alpha>k) vs 2^-(k+1)+3s):\n";
  for (const auto& c : sum.alpha_bound)
    s << "  k=" << c.k << " fraction=" << std::setprecision(5) << c.fraction
      << " bound=" << c.bound << (c.ok ? " ok" : " VIOLATION") << "\n";
  s << "certificate audit: " << sum.audit.checked - sum.audit.failures << "/"
    << sum.audit.checked << " verified\n";
  s << "envelope violations: " << sum.envelope_violations
    << ", round violations: " << sum.round_violations << "\n";
  sum.summary_text = s.str();
  std::ofstream(std::filesystem::path(opt.out_dir) / "summary.txt")
      << sum.summary_text;
  return sum;
}

inline ExperimentSummary run_experiment(int which, const ExperimentOptions& opt) {
  switch (which) {
    case 1: return run_experiment1(opt);
    case 2: return run_experiment_planar_sweep(opt, GenModel::pseudo_planar);
    case 3: return run_experiment_planar_sweep(opt, GenModel::planar_4regular);
    case 4: return run_experiment4(opt);
    default: throw std::invalid_argument("experiment number must be 1..4");
  }
}

}  // namespace trichrome
