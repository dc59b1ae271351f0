// lir: analytics tables, encoding plans, simulations and the acceptance suite.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lir/analytics.hpp"
#include "lir/bloom_filter.hpp"
#include "lir/encoding.hpp"
#include "lir/experiments.hpp"
#include "lir/scenario.hpp"
#include "lir/sim.hpp"

#ifdef LIR_HAVE_ACCEPTANCE
#include "acceptance.hpp"
#endif

namespace {

using namespace lir;
namespace ex = lir::experiments;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "1..12", "4,8,12" or a mix such as "1..3,7".
std::vector<std::uint64_t> parse_range(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(std::string("bad ") + what + " '" + text + "'");
    return static_cast<std::uint64_t>(v);
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    const auto lo = num(part.substr(0, dots)), hi = num(part.substr(dots + 2));
    if (lo > hi) throw UsageError(std::string("empty ") + what + " range '" + part + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

std::string num(double v) { return format_double(v); }

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string table;
  std::string n = "1..12";
  std::string m = "20..50";
  unsigned k = 5;
  std::uint64_t l = 264;
  double payload_bits = 8192.0;
};

int analyze(const AnalyzeArgs& a) {
  OverheadParams params;
  params.hashes = a.k;
  params.payload_bits = a.payload_bits;
  params.validate();
  const auto ns = parse_range(a.n, "--n");
  if (a.table == "fn") {
    std::cout << "n,m_star,f_bits\n";
    for (auto n : ns) {
      const auto best = optimal_bf(n, a.k, params);
      std::cout << n << "," << best.bits << "," << num(best.overhead) << "\n";
    }
  } else if (a.table == "fpr") {
    std::cout << "n,m,k,fpr,wrong_hops_per_direction\n";
    for (auto n : ns) {
      for (auto m : parse_range(a.m, "--m")) {
        const double p = fpr(m, n, a.k);
        std::cout << n << "," << m << "," << a.k << "," << num(p) << ","
                  << (3 * p < 1 ? num(expected_wrong_hops(p)) : std::string("inf")) << "\n";
      }
    }
  } else if (a.table == "elr") {
    std::cout << "n,l,id_bits,header_bits,total_bits\n";
    for (auto n : ns) {
      const auto e = elr_overhead(n, a.l);
      std::cout << n << "," << a.l << "," << ceil_log2(a.l) << "," << e.header_bits << "," << e.total_bits << "\n";
    }
  } else if (a.table == "fo") {
    std::cout << "n,m,f_ifo,f_cfo,f_fo\n";
    for (auto n : ns) {
      for (auto m : parse_range(a.m, "--m")) {
        const bool finite = overhead_finite(n, m, a.k);
        const std::string ifo = finite ? num(f_ifo(n, m, a.k, params)) : "inf";
        const std::string fo = finite ? num(f_fo(n, m, a.k, params)) : "inf";
        std::cout << n << "," << m << "," << ifo << "," << num(f_cfo(n, m)) << "," << fo << "\n";
      }
    }
  } else {
    throw UsageError("unknown table '" + a.table + "' (fn, fpr, elr, fo)");
  }
  return 0;
}

// ---- plan ------------------------------------------------------------------

struct PlanArgs {
  std::size_t n = 0;
  unsigned k = 5;
  double payload_bits = 8192.0;
  double bandwidth_bps = 10e6;
  double tau_s = 10e-6;
  bool brute = false;
};

std::string policy_text(const EncodingPolicy& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.bits().size(); ++i) s += (i ? "," : "") + std::to_string(p.bits()[i]);
  return s + ")";
}

int plan(const PlanArgs& a) {
  OverheadParams params;
  params.hashes = a.k;
  params.payload_bits = a.payload_bits;
  params.bandwidth_bps = a.bandwidth_bps;
  params.tau_s = a.tau_s;
  params.validate();
  if (a.n == 0) throw UsageError("--n must be >= 1");
  const auto curve = OverheadCurve::optimal(a.n, params);
  const auto f = overhead_of(curve);
  const auto dp = solve_dp(a.n, params, f);
  const auto src = EncodingPolicy::source(a.n);
  std::cout << "policy " << policy_text(dp.policy) << "\n";
  std::cout << "optimal_s " << num(evaluate(dp.policy, params, f)) << "\n";
  std::cout << "source_s " << num(evaluate(src, params, f)) << "\n";
  if (a.brute) {
    const auto bf = brute_force(a.n, params, f);
    std::cout << "brute_force " << policy_text(bf.policy) << " " << num(bf.cost) << "\n";
  }
  std::cout << "\ni,H_s,P,f_bits,m_bits\n";
  for (std::size_t i = 0; i <= a.n; ++i) {
    std::cout << i << "," << num(dp.H[i]) << "," << dp.P[i] << "," << num(curve.overhead(i)) << ","
              << (i ? curve.bits(i) : 0) << "\n";
  }
  std::cout << "\nencoder,segment_length,m_bits\n";
  for (const auto& s : segment_plan(dp.policy)) {
    std::cout << s.encoder << "," << s.length << "," << curve.bits(s.length) << "\n";
  }
  return 0;
}

// ---- sim -------------------------------------------------------------------

struct SimArgs {
  std::string positional;
  std::string config;
  std::string preset;
  std::string seeds;
  std::string out;
  std::string bits = "14..50";
  bool trace = false;
  bool quiet = false;
  bool print_config = false;
  unsigned jobs = 1;
};

int verify_theorem1(const SimArgs& a) {
  const auto seeds = parse_range(a.seeds.empty() ? "1..500" : a.seeds, "--seeds");
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    if (seeds[i] != seeds[0] + i) throw UsageError("verify-theorem1 needs a contiguous seed range");
  }
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    file.open(std::filesystem::path(a.out) / "theorem1.csv");
    if (!file) throw std::runtime_error("cannot write to " + a.out);
    os = &file;
  }
  *os << "scenario_hash,first_seed,runs,bits,p,theory,simulated,std_error,measured_p,measured_theory,"
         "conditional_theory\n";
  for (auto bits : parse_range(a.bits, "--bits")) {
    const auto pt = ex::wrong_hop_point(bits, seeds.size(), seeds.front());
    *os << scenario_hash_hex(ex::probe_scenario(bits)) << "," << seeds.front() << "," << pt.runs << "," << bits
        << "," << num(pt.p) << "," << num(pt.theory) << "," << num(pt.simulated) << "," << num(pt.std_error) << ","
        << num(pt.measured_p) << "," << num(pt.measured_theory) << "," << num(pt.conditional_theory) << "\n";
    if (!a.quiet) std::cerr << "bits " << bits << " done\n";
  }
  return 0;
}

int sim(SimArgs a) {
  if (!a.positional.empty()) {
    if (!a.preset.empty() || !a.config.empty()) throw UsageError("give one of PRESET, --preset or --config");
    a.preset = a.positional;
  }
  if (a.preset == "verify-theorem1") return verify_theorem1(a);
  if (a.preset.empty() == a.config.empty()) throw UsageError("give exactly one of --config or --preset");
  Scenario base;
  if (!a.config.empty()) {
    base = load_scenario(a.config);
  } else {
    try {
      base = ex::preset(a.preset);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  validate(base);
  if (a.print_config) {
    std::cout << serialize_scenario(base);
    return 0;
  }
  const auto seeds = a.seeds.empty() ? std::vector<std::uint64_t>{base.seed} : parse_range(a.seeds, "--seeds");
  if (a.jobs == 0) throw UsageError("--jobs must be >= 1");

  std::vector<Metrics> results(seeds.size());
  std::vector<std::string> traces(a.trace ? seeds.size() : 0);
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < seeds.size(); i += a.jobs) {
      Scenario s = base;
      s.seed = seeds[i];
      RunOptions opts;
      std::ostringstream trace;
      if (a.trace) opts.trace = &trace;
      results[i] = run(s, opts);
      if (a.trace) traces[i] = trace.str();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::min<std::size_t>(a.jobs, seeds.size()); ++j) pool.emplace_back(work, j);
  work(0);
  for (auto& t : pool) t.join();

  std::ofstream flows, links, summary, trace;
  std::ostream* summary_os = &std::cout;
  if (!a.out.empty()) {
    const std::filesystem::path dir(a.out);
    std::filesystem::create_directories(dir);
    flows.open(dir / "flows.csv");
    links.open(dir / "links.csv");
    summary.open(dir / "summary.csv");
    if (!flows || !links || !summary) throw std::runtime_error("cannot write to " + a.out);
    write_flow_csv_header(flows);
    write_link_csv_header(links);
    summary_os = &summary;
    if (a.trace) trace.open(dir / "trace.jsonl");
  }
  write_summary_csv_header(*summary_os);
  FlowMetrics total;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Scenario s = base;
    s.seed = seeds[i];
    write_summary_csv(*summary_os, s, results[i]);
    if (!a.out.empty()) {
      write_flow_csv(flows, s, results[i]);
      write_link_csv(links, s, results[i]);
    }
    if (a.trace) (a.out.empty() ? std::cerr : trace) << traces[i];
    total.merge(results[i].total());
  }
  if (!a.quiet) {
    std::cerr << seeds.size() << " run(s), scenario " << scenario_hash_hex(base) << ": delivered " << total.delivered
              << "/" << total.sent << " (" << num(total.delivery_ratio()) << "), mean delay "
              << num(total.mean_delay_s()) << " s\n";
  }
  return 0;
}

// ---- validate --------------------------------------------------------------

struct ValidateArgs {
  std::vector<std::string> criteria;
  double tolerance_scale = 1.0;
  bool verbose = false;
};

int validate_cmd(const ValidateArgs& a) {
#ifdef LIR_HAVE_ACCEPTANCE
  if (!(a.tolerance_scale > 0)) throw UsageError("--tolerance-scale must be > 0");
  std::vector<int> ids;
  for (const auto& c : a.criteria) {
    const auto id = acceptance::parse_criterion(c);
    if (!id) throw UsageError("unknown criterion '" + c + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) {
    for (int i = 1; i <= acceptance::kCriterionCount; ++i) ids.push_back(i);
  }
  acceptance::Options opts;
  opts.tolerance_scale = a.tolerance_scale;
  int failed = 0;
  for (int id : ids) {
    const auto r = acceptance::run_criterion(id, opts);
    std::cout << acceptance::format_line(r) << "\n";
    if (a.verbose || !r.passed) {
      for (const auto& d : r.detail) std::cout << "      " << d << "\n";
    }
    std::cout.flush();
    failed += !r.passed;
  }
  std::cout << ids.size() << " criteria, " << failed << " failed\n";
  return failed ? 1 : 0;
#else
  (void)a;
  throw UsageError("validate is unavailable: built with LIR_BUILD_TESTS=OFF");
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-identified routing for polar LEO constellations"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "Closed-form tables as CSV");
  an->add_option("table", aa.table, "fn | fpr | elr | fo")->required();
  an->add_option("--n", aa.n, "Path hops, e.g. 1..12 or 4,8,12")->capture_default_str();
  an->add_option("--m", aa.m, "Filter lengths in bits (fpr, fo)")->capture_default_str();
  an->add_option("--k", aa.k, "Hash functions")->capture_default_str();
  an->add_option("--l", aa.l, "Total ISL count (elr)")->capture_default_str();
  an->add_option("--payload-bits", aa.payload_bits, "Effective data per packet")->capture_default_str();

  PlanArgs pa;
  auto* pl = app.add_subcommand("plan", "Optimal encoding policy and its H table");
  pl->add_option("--n", pa.n, "Route hops")->required();
  pl->add_option("--k", pa.k, "Hash functions")->capture_default_str();
  pl->add_option("--payload-bits", pa.payload_bits)->capture_default_str();
  pl->add_option("--bandwidth", pa.bandwidth_bps, "ISL bandwidth, bit/s")->capture_default_str();
  pl->add_option("--tau", pa.tau_s, "Re-encoding delay, s")->capture_default_str();
  pl->add_flag("--brute-force", pa.brute, "Cross-check by enumeration (N <= 20)");

  SimArgs sa;
  auto* sm = app.add_subcommand("sim", "Run a scenario over a seed list");
  sm->add_option("name", sa.positional, "Preset name, or verify-theorem1");
  sm->add_option("--config", sa.config, "Scenario file");
  sm->add_option("--preset", sa.preset, "fig4 fig8 fig9 fig10 fig11 fig12 fig13 appendix verify-theorem1");
  sm->add_option("--seeds", sa.seeds, "Seeds, e.g. 1..500 (default: the scenario's seed)");
  sm->add_option("--out", sa.out, "Directory for flows.csv, links.csv, summary.csv");
  sm->add_option("--bits", sa.bits, "Filter lengths for verify-theorem1")->capture_default_str();
  sm->add_option("--jobs", sa.jobs, "Worker threads")->capture_default_str();
  sm->add_flag("--trace", sa.trace, "Per-event JSON lines (trace.jsonl, or stderr without --out)");
  sm->add_flag("--quiet", sa.quiet, "No progress on stderr");
  sm->add_flag("--print-config", sa.print_config, "Print the canonical scenario text and exit");

  ValidateArgs va;
  auto* vl = app.add_subcommand("validate", "Acceptance criteria, one line each");
  vl->add_option("--criterion", va.criteria, "Number or name; repeatable (default: all)");
  vl->add_option("--tolerance-scale", va.tolerance_scale, "Multiplies every tolerance")->capture_default_str();
  vl->add_flag("--verbose", va.verbose, "Print supporting numbers for passing criteria too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*an) return analyze(aa);
    if (*pl) return plan(pa);
    if (*sm) return sim(sa);
    if (*vl) return validate_cmd(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
