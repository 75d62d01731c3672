// Command-line front end: hull reports, growth tables, measure-convergence
// tables, averages, sprawl, spelling densities, and the coprimality demo.
// Identical configuration and seed produce byte-identical outputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zdgeo/averages.hpp"
#include "zdgeo/cache.hpp"
#include "zdgeo/counting.hpp"
#include "zdgeo/growth.hpp"
#include "zdgeo/io.hpp"
#include "zdgeo/metric.hpp"
#include "zdgeo/presets.hpp"
#include "zdgeo/sprawl.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace zdgeo;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct GlobalOptions {
  std::string gens_file;
  std::string preset;
  int radius = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir;
  std::string cache_dir;
  int threads = 1;
  std::int64_t max_points = 200'000'000;
};

GeneratorSet resolve_generators(const GlobalOptions& g) {
  if (!g.gens_file.empty() && !g.preset.empty()) {
    throw ConfigError("--gens and --preset are mutually exclusive");
  }
  if (!g.gens_file.empty()) return load_generators_file(g.gens_file);
  if (!g.preset.empty()) return preset_generators(g.preset);
  throw ConfigError("one of --gens FILE or --preset NAME is required");
}

std::string source_name(const GlobalOptions& g) {
  if (!g.preset.empty()) return g.preset;
  return fs::path(g.gens_file).stem().string();
}

// Writes to <out>/<name> when --out is set, otherwise to stdout.
void emit(const GlobalOptions& g, const std::string& name,
          const std::string& content) {
  if (g.out_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(g.out_dir);
  const fs::path path = fs::path(g.out_dir) / name;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write output file: " + path.string());
  out << content;
  std::cout << path.string() << "\n";
}

int radius_or(const GlobalOptions& g, int fallback) {
  return g.radius >= 0 ? g.radius : fallback;
}

MetricTable build_table(const GlobalOptions& g, const GeneratorSet& gens,
                        int radius) {
  BfsOptions opts;
  opts.max_points = g.max_points;
  return cached_bfs_ball(gens, radius, g.cache_dir, opts);
}

int cmd_hull(const GlobalOptions& g) {
  const GeneratorSet gens = resolve_generators(g);
  const LimitShape shape = build_hull(gens);
  const ConeMeasure measure = cone_measure(shape);
  emit(g, "hull-" + source_name(g) + ".json",
       hull_report_json(gens, shape, measure, true));
  return 0;
}

int cmd_growth(const GlobalOptions& g, int window_lo, int window_hi,
               int dump_sphere) {
  const GeneratorSet gens = resolve_generators(g);
  const int N = radius_or(g, 120);
  const MetricTable table = build_table(g, gens, N);
  const GrowthSeries series = growth_series(table);

  std::ostringstream csv;
  csv << "n,beta,sigma\n";
  for (int n = 0; n <= N; ++n) {
    csv << n << "," << series.ball[n] << "," << series.sphere[n] << "\n";
  }
  emit(g, "growth-" + source_name(g) + ".csv", csv.str());

  if (dump_sphere > 0) {
    // plot-ready pair: raw sphere points here, shape polygon via `hull`
    if (dump_sphere > N) throw ConfigError("--dump-sphere exceeds the radius");
    std::ostringstream pts;
    for (int j = 0; j < table.dim(); ++j) pts << (j ? "," : "") << "x" << j;
    pts << "\n";
    table.for_each_sphere_point(dump_sphere, [&](const Vec& x) {
      for (int j = 0; j < table.dim(); ++j) pts << (j ? "," : "") << x[j];
      pts << "\n";
    });
    emit(g,
         "sphere-" + source_name(g) + "-" + std::to_string(dump_sphere) + ".csv",
         pts.str());
  }

  const LimitShape shape = build_hull(gens);
  const int d = shape.dim;
  const int hi = window_hi > 0 ? window_hi : N;
  const int lo = window_lo > 0 ? window_lo : std::max(1, std::min(N / 2, hi - 7));
  ordered_json doc;
  doc["source"] = source_name(g);
  doc["radius"] = N;
  doc["volume"] = rational_to_string(shape.volume);
  if (hi - lo + 1 >= 8 && lo >= 1) {
    doc["window"] = {lo, hi};
    const LeadingCoefficient vb = leading_coefficient(series.ball, d, lo, hi);
    const LeadingCoefficient vs =
        leading_coefficient(series.sphere, d - 1, lo, hi);
    doc["ball_fit"] = {{"degree", d},
                       {"estimate", vb.estimate},
                       {"max_residual", vb.max_residual},
                       {"target", to_double(shape.volume)}};
    doc["sphere_fit"] = {{"degree", d - 1},
                         {"estimate", vs.estimate},
                         {"max_residual", vs.max_residual},
                         {"target", d * to_double(shape.volume)}};
  } else {
    doc["ball_fit"] = nullptr;  // needs at least 8 radii
    doc["sphere_fit"] = nullptr;
  }
  emit(g, "growth-fit-" + source_name(g) + ".json", doc.dump(2) + "\n");
  return 0;
}

int cmd_measure(const GlobalOptions& g, int step) {
  const GeneratorSet gens = resolve_generators(g);
  const int N = radius_or(g, 120);
  const MetricTable table = build_table(g, gens, N);
  const LimitShape shape = build_hull(gens);
  const ConeMeasure measure = cone_measure(shape);

  std::vector<int> radii;
  for (int n = step; n <= N; n += step) radii.push_back(n);
  const ConvergenceReport report =
      measure_convergence_report(table, shape, measure, radii);

  std::ostringstream csv;
  csv << "n,beta,sigma";
  for (int s = 0; s < shape.simplex_count(); ++s) csv << ",sector" << s;
  csv << ",D_simplex,D_facet\n";
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const int n = radii[i];
    const SectorHistogram h = sector_histogram(table, shape, n);
    csv << n << "," << table.ball_size(n) << "," << table.sphere_size(n);
    for (std::int64_t c : h.counts) csv << "," << c;
    csv << "," << report.simplex_deviation[i] << ","
        << report.facet_deviation[i] << "\n";
  }
  emit(g, "measure-" + source_name(g) + ".csv", csv.str());

  ordered_json doc;
  doc["source"] = source_name(g);
  doc["first_quartile_median"] = report.first_quartile_median;
  doc["last_quartile_median"] = report.last_quartile_median;
  doc["trend_ok"] = report.trend_ok;
  emit(g, "measure-summary-" + source_name(g) + ".json", doc.dump(2) + "\n");
  return 0;
}

int cmd_average(const GlobalOptions& g, const std::string& functional_name,
                int power, int step, std::int64_t samples) {
  const GeneratorSet gens = resolve_generators(g);
  const Functional f = Functional::parse(functional_name, power);
  const int N = radius_or(g, 120);
  const MetricTable table = build_table(g, gens, N);
  const LimitShape shape = build_hull(gens);

  std::ostringstream csv;
  csv << "n,sphere_avg,ball_avg,sphere_avg_exact,ball_avg_exact,ratio,target\n";
  for (int n = step; n <= N; n += step) {
    const AverageValue sa = sphere_average(table, f, n);
    const AverageValue ba = ball_average(table, f, n);
    const double ratio = ba.value / sa.value;
    const double target =
        static_cast<double>(shape.dim) / (shape.dim + f.order());
    csv << n << "," << sa.value << "," << ba.value << ","
        << (sa.exact ? rational_to_string(sa.exact_value) : std::string("-"))
        << ","
        << (ba.exact ? rational_to_string(ba.exact_value) : std::string("-"))
        << "," << ratio << "," << target << "\n";
  }
  emit(g, "average-" + source_name(g) + "-" + f.name() + ".csv", csv.str());

  if (f.kind != FunctionalKind::CoprimeIndicator) {
    const ConeMeasure measure = cone_measure(shape);
    Rng rng(g.seed);
    const LimitIntegral v = limit_integral(f, shape, measure, rng, samples);
    ordered_json doc;
    doc["source"] = source_name(g);
    doc["functional"] = f.name();
    doc["order"] = f.order();
    doc["limit_integral"] = v.value;
    doc["exact"] = v.exact;
    doc["stderr"] = v.standard_error;
    doc["sphere_ball_factor"] =
        static_cast<double>(shape.dim) / (shape.dim + f.order());
    emit(g, "limit-" + source_name(g) + "-" + f.name() + ".json",
         doc.dump(2) + "\n");
  }
  return 0;
}

int cmd_sprawl(const GlobalOptions& g, const std::string& method,
               std::int64_t samples, std::int64_t pair_budget) {
  const GeneratorSet gens = resolve_generators(g);
  const LimitShape shape = build_hull(gens);
  const ConeMeasure measure = cone_measure(shape);
  SprawlConfig config;
  config.radius = radius_or(g, 60);
  config.samples = samples;
  config.pair_budget = pair_budget;
  config.seed = g.seed;
  config.threads = g.threads;

  if (method == "both") {
    const MetricTable table = build_table(g, gens, config.radius);
    const SprawlComparison cmp = sprawl_report(shape, measure, table, config);
    emit(g, "sprawl-" + source_name(g) + ".json",
         sprawl_report_json(cmp, config, source_name(g)));
    return 0;
  }

  SprawlEstimate est;
  if (method == "mc") {
    Rng rng(Rng::derive_seed(config.seed, 1));
    est = sprawl_mc(shape, measure, config.samples, rng, config.threads,
                    config.batch_size);
  } else if (method == "empirical") {
    const MetricTable table = build_table(g, gens, config.radius);
    Rng rng(Rng::derive_seed(config.seed, 0));
    est = sprawl_empirical(table, config.radius, config.pair_budget, rng);
  } else {
    throw ConfigError("unknown sprawl method: " + method);
  }
  ordered_json doc;
  doc["source"] = source_name(g);
  doc["value"] = est.value;
  doc["stderr"] = est.standard_error;
  doc["method"] = est.method_name();
  doc["count"] = est.count;
  doc["norm_fallback"] = est.used_norm_fallback;
  doc["config"] = {{"radius", config.radius},
                   {"samples", config.samples},
                   {"pair_budget", config.pair_budget},
                   {"seed", config.seed},
                   {"threads", config.threads}};
  emit(g, "sprawl-" + source_name(g) + ".json", doc.dump(2) + "\n");
  return 0;
}

int cmd_density(const GlobalOptions& g) {
  const GeneratorSet gens = resolve_generators(g);
  const int N = radius_or(g, 120);
  const MetricTable table = build_table(g, gens, N);
  const LimitShape shape = build_hull(gens);
  const SpellingDensity density = simple_spelling_density(table, shape, N);

  ordered_json doc;
  doc["source"] = source_name(g);
  doc["radius"] = N;
  doc["sphere_density"] = density.sphere_density;
  doc["ball_density"] = density.ball_density;
  doc["sphere_hits"] = density.sphere_hits;
  doc["ball_hits"] = density.ball_hits;
  if (density.has_target) {
    doc["target"] = rational_to_string(density.target);
    doc["target_value"] = to_double(density.target);
  }
  emit(g, "density-" + source_name(g) + ".json", doc.dump(2) + "\n");
  return 0;
}

int cmd_demo_coprime(const GlobalOptions& g, int window_lo, int window_hi) {
  const GeneratorSet gens = resolve_generators(g);
  const int N = radius_or(g, 200);
  const MetricTable table = build_table(g, gens, N);
  const int lo = window_lo > 0 ? window_lo : std::max(1, N / 2);
  const int hi = window_hi > 0 ? window_hi : N;
  std::vector<int> radii;
  for (int n = lo; n <= hi; ++n) radii.push_back(n);
  const CoprimeDemo demo = coprimality_demo(table, radii);

  std::ostringstream csv;
  csv << "n,sphere_avg,ball_avg\n";
  for (std::size_t i = 0; i < demo.radii.size(); ++i) {
    csv << demo.radii[i] << "," << demo.sphere_avg[i] << "," << demo.ball_avg[i]
        << "\n";
  }
  emit(g, "coprime-" + source_name(g) + ".csv", csv.str());

  ordered_json doc;
  doc["source"] = source_name(g);
  doc["window"] = {lo, hi};
  doc["ball_avg_at_radius"] = demo.ball_avg.back();
  doc["even_sphere_mean"] = demo.even_mean;
  doc["odd_sphere_mean"] = demo.odd_mean;
  doc["parity_gap"] = demo.parity_gap;
  emit(g, "coprime-summary-" + source_name(g) + ".json", doc.dump(2) + "\n");
  return 0;
}

int cmd_cache(const GlobalOptions& g, bool purge) {
  if (g.cache_dir.empty()) throw ConfigError("cache command needs --cache-dir");
  if (purge) {
    std::cout << "purged " << purge_cache(g.cache_dir) << " cached tables\n";
    return 0;
  }
  for (const CacheEntry& e : list_cache(g.cache_dir)) {
    std::cout << e.path << " dim=" << e.dim << " radius=" << e.radius
              << " bytes=" << e.bytes << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-metric geometry on Z^d: limit shapes, cone measure, "
               "growth, averages, and sprawl"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions g;
  app.add_option("--gens", g.gens_file, "generating set JSON file");
  app.add_option("--preset", g.preset,
                 "preset name (std-d2, std-d3, chess-knight, cube-d3, "
                 "six-one-d2)");
  app.add_option("--radius", g.radius, "table radius N");
  app.add_option("--seed", g.seed, "RNG seed (default 1729)");
  app.add_option("--out", g.out_dir, "output directory (default: stdout)");
  app.add_option("--cache-dir", g.cache_dir, "metric table cache directory");
  app.add_option("--threads", g.threads, "worker threads for sampling");
  app.add_option("--max-points", g.max_points,
                 "stored-point budget for metric tables");

  auto* hull = app.add_subcommand("hull", "hull, cone measure, Pick report");

  int window_lo = 0, window_hi = 0, dump_sphere = 0;
  auto* growth = app.add_subcommand("growth", "growth functions and fits");
  growth->add_option("--window-lo", window_lo, "fit window start");
  growth->add_option("--window-hi", window_hi, "fit window end");
  growth->add_option("--dump-sphere", dump_sphere,
                     "also write the raw points of this sphere");

  int step = 8;
  auto* measure =
      app.add_subcommand("measure", "sector histograms and convergence");
  measure->add_option("--step", step, "radius step between rows");

  std::string functional_name = "word-length";
  int power = 1;
  int avg_step = 8;
  std::int64_t samples = 200000;
  auto* average = app.add_subcommand("average", "sphere and ball averages");
  average->add_option("--functional", functional_name,
                      "word-length, l-norm, euclidean, coprime, one");
  average->add_option("--power", power, "power p for the functional");
  average->add_option("--step", avg_step, "radius step between rows");
  average->add_option("--samples", samples, "Monte Carlo samples");

  std::string method = "both";
  std::int64_t mc_samples = 1000000;
  std::int64_t pair_budget = 1000000;
  auto* sprawl = app.add_subcommand("sprawl", "sprawl statistic E(Z^d, S)");
  sprawl->add_option("--method", method, "empirical, mc, or both");
  sprawl->add_option("--samples", mc_samples, "Monte Carlo sample pairs");
  sprawl->add_option("--pair-budget", pair_budget, "empirical pair budget");

  auto* density = app.add_subcommand("density", "simple-spelling density");

  int cp_lo = 0, cp_hi = 0;
  auto* demo =
      app.add_subcommand("demo-coprime", "coprimality averages and parity gap");
  demo->add_option("--window-lo", cp_lo, "sphere window start");
  demo->add_option("--window-hi", cp_hi, "sphere window end");

  bool purge = false;
  auto* cache = app.add_subcommand("cache", "list or purge cached tables");
  cache->add_flag("--purge", purge, "remove all cached tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hull->parsed()) return cmd_hull(g);
    if (growth->parsed()) return cmd_growth(g, window_lo, window_hi, dump_sphere);
    if (measure->parsed()) return cmd_measure(g, step);
    if (average->parsed()) {
      return cmd_average(g, functional_name, power, avg_step, samples);
    }
    if (sprawl->parsed()) return cmd_sprawl(g, method, mc_samples, pair_budget);
    if (density->parsed()) return cmd_density(g);
    if (demo->parsed()) return cmd_demo_coprime(g, cp_lo, cp_hi);
    if (cache->parsed()) return cmd_cache(g, purge);
  } catch (const CapacityExceededError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ZeroGeneratorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotFullRankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotFullLatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionUnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotHomogeneousError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateWindowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
