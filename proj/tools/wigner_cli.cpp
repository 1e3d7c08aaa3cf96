// wigner: tables, identity checks, walk enumeration and Monte Carlo runs for
// the 1/n expansion of Wigner matrix moments.

#include "wigner/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace wigner;
using namespace wigner::cli;

struct Flags {
  std::string ensemble = "goe";
  std::optional<int> r;
  std::optional<std::string> sigma2, s2, alpha;
  unsigned kmax = 8;
  std::vector<unsigned long> ns;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  unsigned order = 40;
  unsigned threads = 0;
};

RunConfig build_config(const Flags& f) {
  RunConfig c;
  const auto preset = parse_preset(f.ensemble);
  if (!preset) throw std::invalid_argument("unknown ensemble '" + f.ensemble + "'");
  c.ensemble = *preset;
  c.params = resolve_params(*preset, {f.r, f.sigma2, f.s2, f.alpha});
  c.kmax = f.kmax;
  c.ns = f.ns;
  c.samples = f.samples;
  c.seed = f.seed;
  c.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
  c.out = f.out;
  c.order = f.order;
  c.threads = f.threads;
  c.validate();
  return c;
}

void emit(const Table& table, const RunConfig& config) {
  if (config.out.empty()) {
    write_table(std::cout, table, config);
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + config.out + "'");
  write_table(file, table, config);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semicircle law plus 1/n correction for expected moments of Wigner matrices"};
  app.set_config("--config", "", "TOML/INI file with flag defaults; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--ensemble", f.ensemble, "goe | gue | rademacher | custom")
      ->check(CLI::IsMember({"goe", "gue", "rademacher", "custom"}));
  app.add_option("--r", f.r, "1 real, 0 complex (custom only)")->check(CLI::Range(0, 1));
  app.add_option("--sigma2", f.sigma2, "off-diagonal variance, exact rational e.g. 3/2");
  app.add_option("--s2", f.s2, "diagonal variance, exact rational");
  app.add_option("--alpha", f.alpha, "off-diagonal fourth moment, exact rational");
  app.add_option("--kmax", f.kmax, "largest moment order");
  app.add_option("--n", f.ns, "matrix size (repeatable)");
  app.add_option("--samples", f.samples, "Monte Carlo samples per matrix size");
  app.add_option("--seed", f.seed, "random seed");
  app.add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", f.out, "output path (default stdout)");
  app.add_option("--order", f.order, "series truncation order");
  app.add_option("--threads", f.threads, "worker threads for Monte Carlo (0 = all cores)");

  auto* moments = app.add_subcommand("moments", "semicircle and correction moments, two-term expansion");
  auto* check = app.add_subcommand("check", "exact identity suite; exit code 1 on any failure");
  unsigned check_walk_length = 10;
  std::optional<unsigned> inject_fault;
  check->add_option("--max-walk-length", check_walk_length, "largest even word length for class counts")
      ->check(CLI::Range(2u, kMaxWalkLength));
  check->add_option("--inject-fault", inject_fault, "add one to Cat(i) in the checked series")->group("");

  auto* enumerate = app.add_subcommand("enumerate", "dump classified canonical closed words");
  unsigned enum_k = 4;
  EnumerateFilter filter;
  std::string cycle_filter;
  enumerate->add_option("-k,--k", enum_k, "word length (1.." + std::to_string(kMaxWalkLength) + ")")->required();
  enumerate->add_option("--v", filter.v, "keep classes with this many vertices");
  enumerate->add_option("--e", filter.e, "keep classes with this many edges");
  enumerate->add_option("--cycle-type", cycle_filter, "tree | self-loop | cycle-one-way | cycle-both-ways | other");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates of n (m_k(n) - sc_k) with Richardson extrapolation");

  auto* density = app.add_subcommand("density", "semicircle and correction densities on (-2, 2)");
  unsigned density_points = 200;
  density->add_option("--points", density_points, "grid points");

  auto* stieltjes = app.add_subcommand("stieltjes", "Stieltjes transforms on a circle |z| = radius");
  unsigned stieltjes_points = 64;
  double radius = 3.0;
  stieltjes->add_option("--points", stieltjes_points, "points on the circle");
  stieltjes->add_option("--radius", radius, "circle radius (> 2)");

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig config = build_config(f);
    if (*moments) {
      emit(moments_table(config), config);
    } else if (*check) {
      CheckOptions opts;
      opts.order = config.order;
      opts.max_walk_length = check_walk_length;
      opts.perturb_catalan = inject_fault;
      if (config.ensemble == Preset::custom || config.ensemble == Preset::rademacher) opts.params.push_back(config.params);
      const auto results = run_identity_suite(opts);
      emit(check_table(results), config);
      for (const auto& r : results) {
        if (!r.passed) {
          std::cerr << "FAIL: " << r.name << ": " << r.detail << '\n';
          return 1;
        }
      }
    } else if (*enumerate) {
      if (!cycle_filter.empty()) {
        filter.cycle_type = parse_cycle_type(cycle_filter);
        if (!filter.cycle_type) throw std::invalid_argument("unknown cycle type '" + cycle_filter + "'");
      }
      const auto model = MomentModel::for_preset(config.ensemble, config.params, std::max(enum_k, 4u));
      emit(enumerate_table(enum_k, filter, model), config);
    } else if (*mc) {
      emit(mc_table(config), config);
    } else if (*density) {
      emit(density_table(config, density_points), config);
    } else if (*stieltjes) {
      emit(stieltjes_table(config, radius, stieltjes_points), config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
