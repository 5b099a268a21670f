// Command-line front end: isolate real roots of integer polynomials with
// exact rational output, certify runs against the Sturm oracle, and run the
// benchmark families.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfroots/families.hpp"
#include "cfroots/solver.hpp"
#include "cfroots/sturm.hpp"
#include "cfroots/text.hpp"

namespace {

using json = nlohmann::json;
using namespace cfroots;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;   // parse or validation failure
constexpr int kExitVerify = 3;  // oracle rejected the run
constexpr int kExitCeiling = 4; // node-count guard fired

struct CommonOptions {
  std::string poly_text;
  std::string file;
  std::string family;
  int degree = 0;
  std::uint64_t seed = 0;
  long coeff_bound = 1000;
  bool no_budan = false;
  unsigned homothety_threshold = 16;
  bool show_stats = false;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_input) {
  if (with_input) {
    cmd->add_option("--poly", opt.poly_text,
                    "polynomial text: dense 'a0 a1 ... ad' or sparse 'e:c' terms");
    cmd->add_option("--file", opt.file, "read the polynomial from a file");
    cmd->add_option("--family", opt.family, "generate a benchmark family member");
    cmd->add_option("--degree", opt.degree, "degree for --family");
    cmd->add_option("--seed", opt.seed, "seed for the random families");
    cmd->add_option("--coeff-bound", opt.coeff_bound,
                    "coefficient bound for the random families");
  }
  cmd->add_flag("--no-budan", opt.no_budan, "disable Budan branch pruning");
  cmd->add_option("--homothety-threshold", opt.homothety_threshold,
                  "scaling trigger, power of two (default 16)");
  cmd->add_flag("--stats", opt.show_stats, "print solver statistics");
  cmd->add_option("--format", opt.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

SolverConfig config_from(const CommonOptions& opt) {
  SolverConfig cfg;
  cfg.budan_pruning = !opt.no_budan;
  cfg.homothety_threshold = opt.homothety_threshold;
  if (const char* ceiling = std::getenv("CF_NODE_CEILING")) {
    cfg.node_ceiling = std::strtoull(ceiling, nullptr, 10);
  }
  return cfg;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// (polynomial, human-readable input descriptor)
std::pair<IntPoly, std::string> load_input(const CommonOptions& opt) {
  if (!opt.family.empty()) {
    const std::optional<Family> family = family_from_name(opt.family);
    if (!family) throw ParseError("unknown family '" + opt.family + "'");
    FamilySpec spec;
    spec.family = *family;
    spec.degree = opt.degree;
    spec.seed = opt.seed;
    spec.coeff_bound = opt.coeff_bound;
    return {make_family(spec), opt.family + "(" + std::to_string(opt.degree) + ")"};
  }
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw ParseError("cannot open '" + opt.file + "'");
    return {parse_polynomial(read_stream(in)), "file:" + opt.file};
  }
  if (!opt.poly_text.empty()) return {parse_polynomial(opt.poly_text), "poly"};
  return {parse_polynomial(read_stream(std::cin)), "stdin"};
}

std::string interval_text(const IsolatingInterval& iv) {
  if (iv.is_point())
    return "[" + format_rational(iv.lo) + ", " + format_rational(iv.lo) + "] mult " +
           std::to_string(iv.multiplicity);
  return "(" + format_rational(iv.lo) + ", " + format_rational(iv.hi) + ") mult " +
         std::to_string(iv.multiplicity);
}

json stats_json(const SolverStats& stats) {
  return json{{"node_count", stats.node_count},
              {"shift_count", stats.shift_count},
              {"homothety_count", stats.homothety_count},
              {"max_coeff_bits", stats.max_coeff_bits},
              {"mean_partial_quotient_bits", stats.mean_partial_quotient_bits()}};
}

json record_json(const std::string& input, const IntPoly& a,
                 const IsolationReport& report, double wall_seconds) {
  json intervals = json::array();
  for (const IsolatingInterval& iv : report.intervals) {
    intervals.push_back(json{{"kind", iv.is_point() ? "point" : "open"},
                             {"lo", format_rational(iv.lo)},
                             {"hi", format_rational(iv.hi)},
                             {"multiplicity", iv.multiplicity}});
  }
  return json{{"input", input},
              {"degree", a.degree()},
              {"intervals", std::move(intervals)},
              {"stats", stats_json(report.stats)},
              {"wall_seconds", wall_seconds}};
}

void print_stats_text(const SolverStats& stats, double wall_seconds) {
  std::cout << "nodes " << stats.node_count << "  shifts " << stats.shift_count
            << "  homotheties " << stats.homothety_count << "  max-coeff-bits "
            << stats.max_coeff_bits << "  mean-quotient-bits "
            << stats.mean_partial_quotient_bits() << "  wall "
            << wall_seconds << " s\n";
}

struct TimedRun {
  IsolationReport report;
  double wall_seconds;
};

TimedRun timed_isolate(const IntPoly& a, const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  IsolationReport report = isolate_all(a, cfg);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return {std::move(report), elapsed.count()};
}

int cmd_isolate(const CommonOptions& opt) {
  const auto [a, descriptor] = load_input(opt);
  const TimedRun run = timed_isolate(a, config_from(opt));
  if (opt.format == "structured") {
    std::cout << record_json(descriptor, a, run.report, run.wall_seconds) << "\n";
    return kExitOk;
  }
  for (const IsolatingInterval& iv : run.report.intervals)
    std::cout << interval_text(iv) << "\n";
  if (opt.show_stats) print_stats_text(run.report.stats, run.wall_seconds);
  return kExitOk;
}

int cmd_verify(const CommonOptions& opt) {
  const auto [a, descriptor] = load_input(opt);
  const TimedRun run = timed_isolate(a, config_from(opt));
  const VerifyResult verdict = verify_isolation(a, run.report);
  if (opt.format == "structured") {
    json record = record_json(descriptor, a, run.report, run.wall_seconds);
    record["pass"] = verdict.pass;
    record["failures"] = verdict.failures;
    std::cout << record << "\n";
  } else {
    for (const IsolatingInterval& iv : run.report.intervals)
      std::cout << interval_text(iv) << "\n";
    if (opt.show_stats) print_stats_text(run.report.stats, run.wall_seconds);
    std::cout << (verdict.pass ? "PASS" : "FAIL") << ": " << descriptor << ", "
              << run.report.intervals.size() << " intervals\n";
    for (const std::string& f : verdict.failures) std::cout << "  " << f << "\n";
  }
  return verdict.pass ? kExitOk : kExitVerify;
}

int cmd_bench(const CommonOptions& opt, std::vector<std::string> families,
              const std::string& degrees_text) {
  std::vector<int> degrees;
  {
    std::stringstream ss(degrees_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      degrees.push_back(std::stoi(item));
    }
  }
  if (families.empty() || degrees.empty())
    throw ParseError("bench needs --family and --degrees");

  std::sort(families.begin(), families.end());
  std::sort(degrees.begin(), degrees.end());

  const SolverConfig cfg = config_from(opt);
  if (opt.format == "text")
    std::cout << "family degree roots nodes wall_seconds\n";
  for (const std::string& name : families) {
    const std::optional<Family> family = family_from_name(name);
    if (!family) throw ParseError("unknown family '" + name + "'");
    for (int d : degrees) {
      FamilySpec spec;
      spec.family = *family;
      spec.degree = d;
      spec.seed = opt.seed;
      spec.coeff_bound = opt.coeff_bound;
      const IntPoly a = make_family(spec);
      const TimedRun run = timed_isolate(a, cfg);
      if (opt.format == "structured") {
        json record = record_json(name + "(" + std::to_string(d) + ")", a,
                                  run.report, run.wall_seconds);
        record["family"] = name;
        record["family_degree"] = d;
        record["roots"] = run.report.intervals.size();
        std::cout << record << "\n";
      } else {
        std::cout << name << " " << d << " " << run.report.intervals.size() << " "
                  << run.report.stats.node_count << " " << run.wall_seconds << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real-root isolation for integer polynomials via continued fractions"};
  app.require_subcommand(1);

  CommonOptions isolate_opt;
  CLI::App* isolate = app.add_subcommand("isolate", "isolate all real roots");
  add_common(isolate, isolate_opt, true);

  CommonOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "isolate and certify with the Sturm oracle");
  add_common(verify, verify_opt, true);

  CommonOptions bench_opt;
  std::vector<std::string> bench_families;
  std::string bench_degrees;
  CLI::App* bench = app.add_subcommand("bench", "run benchmark families");
  bench->add_option("--family", bench_families, "family name (repeatable)")->required();
  bench->add_option("--degrees", bench_degrees, "comma-separated degrees")->required();
  bench->add_option("--seed", bench_opt.seed, "seed for the random families");
  bench->add_option("--coeff-bound", bench_opt.coeff_bound,
                    "coefficient bound for the random families");
  add_common(bench, bench_opt, false);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(isolate)) return cmd_isolate(isolate_opt);
    if (app.got_subcommand(verify)) return cmd_verify(verify_opt);
    return cmd_bench(bench_opt, bench_families, bench_degrees);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NodeCeilingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCeiling;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
