// chainhull command line tool: compute hulls, generate datasets, verify
// against the reference hull, and benchmark pipeline stages.
//
// Exit codes: 0 success, 1 internal/runtime error, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainhull/chainhull.hpp"

namespace {

using chainhull::Point2;

struct HullOptions {
  std::string input;
  std::string format = "xy_text";
  std::size_t chunk_count = 1024;
  std::size_t threads = 0;  // 0 = auto
  std::string output;
  std::string stats_output;
  std::string stats_format = "csv";
};

struct GenOptions {
  std::string distribution = "uniform_square";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "xy_text";
};

struct VerifyOptions {
  std::string input;
  std::string format = "xy_text";
  std::string distribution = "uniform_square";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::vector<std::size_t> chunk_counts = {1024};
  std::size_t threads = 0;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::string distribution = "uniform_square";
  std::vector<std::uint64_t> seeds = {0};
  std::size_t repeats = 1;
  std::string csv_output;
  std::size_t chunk_count = 1024;
  std::size_t threads = 0;
  bool with_oracle = false;
};

std::string fmt_ms(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

int run_hull(const HullOptions& opt) {
  const auto points =
      chainhull::read_points(opt.input, chainhull::parse_point_format(opt.format));
  chainhull::PipelineConfig config;
  config.chunk_count = opt.chunk_count;
  config.parallelism = opt.threads;
  const auto result = chainhull::convex_hull(points, config);
  chainhull::write_hull(result.hull, opt.output);
  if (!opt.stats_output.empty())
    chainhull::write_stats(result.stats, opt.stats_output,
                           chainhull::parse_stats_format(opt.stats_format));
  std::cout << "hull: " << result.stats.n_hull << " vertices from "
            << result.stats.n_input << " points -> " << opt.output << '\n';
  return 0;
}

int run_gen(const GenOptions& opt) {
  chainhull::DatasetSpec spec;
  spec.distribution = chainhull::parse_distribution(opt.distribution);
  spec.n = opt.n;
  spec.seed = opt.seed;
  const auto points = chainhull::generate(spec);
  chainhull::write_points(points, opt.output,
                          chainhull::parse_point_format(opt.format));
  std::cout << "gen: " << points.size() << ' ' << opt.distribution << " points -> "
            << opt.output << '\n';
  return 0;
}

int run_verify(const VerifyOptions& opt) {
  std::vector<Point2> file_points;
  if (!opt.input.empty())
    file_points =
        chainhull::read_points(opt.input, chainhull::parse_point_format(opt.format));

  std::size_t failures = 0;
  std::optional<std::uint64_t> first_failing_seed;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const std::uint64_t seed = opt.seed + trial;
    std::vector<Point2> generated;
    if (opt.input.empty()) {
      chainhull::DatasetSpec spec;
      spec.distribution = chainhull::parse_distribution(opt.distribution);
      spec.n = opt.n;
      spec.seed = seed;
      generated = chainhull::generate(spec);
    }
    const auto& points = opt.input.empty() ? generated : file_points;

    const auto expected = chainhull::hull_oracle(points);
    bool ok = true;
    for (const std::size_t chunk_count : opt.chunk_counts) {
      chainhull::PipelineConfig config;
      config.chunk_count = chunk_count;
      config.parallelism = opt.threads;
      const auto result = chainhull::convex_hull(points, config);
      if (result.hull.vertices != expected.vertices) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++failures;
      if (!first_failing_seed) first_failing_seed = seed;
    }
    std::cout << "trial " << trial << " seed=" << seed << " n=" << points.size()
              << " n_hull=" << expected.vertices.size() << (ok ? " PASS" : " FAIL")
              << '\n';
  }

  if (failures > 0) {
    std::cout << "FAILED " << failures << '/' << opt.trials
              << " trials; first failing seed " << *first_failing_seed << '\n';
    return 1;
  }
  std::cout << "verified " << opt.trials << '/' << opt.trials << " trials\n";
  return 0;
}

int run_bench(const BenchOptions& opt) {
  std::ofstream file;
  if (!opt.csv_output.empty()) {
    file.open(opt.csv_output);
    if (!file)
      throw chainhull::IoError("cannot open '" + opt.csv_output + "' for writing");
  }
  std::ostream& out = opt.csv_output.empty() ? std::cout : file;

  out << "size,seed,repeat,n_input,n_after_round1,n_after_spa,n_hull,t_extremes_ms,"
         "t_classify_ms,t_partition_ms,t_sort_ms,t_spa_ms,t_melkman_ms,t_total_ms,"
         "frac_after_round1,frac_after_spa";
  if (opt.with_oracle) out << ",t_oracle_ms";
  out << '\n';

  for (const std::size_t size : opt.sizes) {
    for (const std::uint64_t seed : opt.seeds) {
      chainhull::DatasetSpec spec;
      spec.distribution = chainhull::parse_distribution(opt.distribution);
      spec.n = size;
      spec.seed = seed;
      const auto points = chainhull::generate(spec);
      for (std::size_t repeat = 0; repeat < opt.repeats; ++repeat) {
        chainhull::PipelineConfig config;
        config.chunk_count = opt.chunk_count;
        config.parallelism = opt.threads;
        const auto result = chainhull::convex_hull(points, config);
        const auto& s = result.stats;
        const double n = static_cast<double>(s.n_input);
        out << size << ',' << seed << ',' << repeat << ',' << s.n_input << ','
            << s.n_after_round1 << ',' << s.n_after_spa << ',' << s.n_hull << ','
            << fmt_ms(s.t_extremes_ms) << ',' << fmt_ms(s.t_classify_ms) << ','
            << fmt_ms(s.t_partition_ms) << ',' << fmt_ms(s.t_sort_ms) << ','
            << fmt_ms(s.t_spa_ms) << ',' << fmt_ms(s.t_melkman_ms) << ','
            << fmt_ms(s.t_total_ms) << ','
            << fmt_ms(static_cast<double>(s.n_after_round1) / n) << ','
            << fmt_ms(static_cast<double>(s.n_after_spa) / n);
        if (opt.with_oracle) {
          const auto t0 = std::chrono::steady_clock::now();
          const auto oracle = chainhull::hull_oracle(points);
          const double oracle_ms =
              std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
          if (oracle.vertices.size() != s.n_hull)
            throw chainhull::Error("bench: pipeline and reference hull disagree");
          out << ',' << fmt_ms(oracle_ms);
        }
        out << '\n';
      }
    }
  }
  out.flush();
  if (!out) throw chainhull::IoError("failed writing benchmark rows");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data-parallel 2D convex hull pipeline"};
  app.require_subcommand(1);

  HullOptions hull_opt;
  auto* hull = app.add_subcommand("hull", "Compute the convex hull of a point file");
  hull->add_option("--input", hull_opt.input, "Input point file")
      ->required()
      ->check(CLI::ExistingFile);
  hull->add_option("--format", hull_opt.format, "Input format")
      ->check(CLI::IsMember({"xy_text", "xy_binary", "obj_vertices"}))
      ->capture_default_str();
  hull->add_option("--chunk-count", hull_opt.chunk_count,
                   "Chunks per region in the second filtering round")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hull->add_option("--threads", hull_opt.threads, "Worker threads (0 = auto)")
      ->envname("CHAINHULL_THREADS");
  hull->add_option("--output", hull_opt.output, "Hull output file (xy_text)")
      ->required();
  hull->add_option("--stats-output", hull_opt.stats_output,
                   "Optional per-stage stats file");
  hull->add_option("--stats-format", hull_opt.stats_format, "Stats file format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a dataset");
  gen->add_option("--distribution", gen_opt.distribution, "Point distribution")
      ->check(CLI::IsMember({"uniform_square", "uniform_disk", "circle", "gaussian",
                             "collinear", "duplicates_heavy"}))
      ->capture_default_str();
  gen->add_option("--n", gen_opt.n, "Point count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opt.seed, "Random seed")->capture_default_str();
  gen->add_option("--output", gen_opt.output, "Output point file")->required();
  gen->add_option("--format", gen_opt.format, "Output format")
      ->check(CLI::IsMember({"xy_text", "xy_binary"}))
      ->capture_default_str();

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "Compare the pipeline against the reference hull");
  auto* verify_input =
      verify->add_option("--input", verify_opt.input, "Verify this point file")
          ->check(CLI::ExistingFile);
  verify->add_option("--format", verify_opt.format, "Input format")
      ->check(CLI::IsMember({"xy_text", "xy_binary", "obj_vertices"}))
      ->needs(verify_input);
  auto* verify_dist =
      verify
          ->add_option("--distribution", verify_opt.distribution,
                       "Generate trials from this distribution")
          ->check(CLI::IsMember({"uniform_square", "uniform_disk", "circle",
                                 "gaussian", "collinear", "duplicates_heavy"}))
          ->capture_default_str()
          ->excludes(verify_input);
  auto* verify_n = verify->add_option("--n", verify_opt.n, "Points per trial")
                       ->check(CLI::PositiveNumber)
                       ->excludes(verify_input);
  verify->add_option("--seed", verify_opt.seed, "Base seed; trial t uses seed+t")
      ->excludes(verify_input);
  verify->add_option("--trials", verify_opt.trials, "Trial count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify
      ->add_option("--chunk-counts", verify_opt.chunk_counts,
                   "Chunk counts each trial must agree across")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--threads", verify_opt.threads, "Worker threads (0 = auto)")
      ->envname("CHAINHULL_THREADS");
  (void)verify_dist;

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Benchmark pipeline stages to CSV");
  bench->add_option("--sizes", bench_opt.sizes, "Point counts to benchmark")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--distribution", bench_opt.distribution, "Point distribution")
      ->check(CLI::IsMember({"uniform_square", "uniform_disk", "circle", "gaussian",
                             "collinear", "duplicates_heavy"}))
      ->capture_default_str();
  bench->add_option("--seeds", bench_opt.seeds, "Seeds per size")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--repeats", bench_opt.repeats, "Repeats per (size, seed)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--csv-output", bench_opt.csv_output,
                    "CSV destination (default: stdout)");
  bench->add_option("--chunk-count", bench_opt.chunk_count,
                    "Chunks per region in the second filtering round")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--threads", bench_opt.threads, "Worker threads (0 = auto)")
      ->envname("CHAINHULL_THREADS");
  bench->add_flag("--with-oracle", bench_opt.with_oracle,
                  "Also time the reference hull per row (t_oracle_ms column)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends: exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify) && verify_opt.input.empty() &&
        verify_n->count() == 0) {
      std::cerr << "verify: needs either --input or --n\n";
      return 2;
    }
    if (app.got_subcommand(hull)) return run_hull(hull_opt);
    if (app.got_subcommand(gen)) return run_gen(gen_opt);
    if (app.got_subcommand(verify)) return run_verify(verify_opt);
    if (app.got_subcommand(bench)) return run_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
