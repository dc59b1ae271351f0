#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "lir/analytics.hpp"
#include "lir/bloom_filter.hpp"
#include "lir/constellation.hpp"
#include "lir/encoding.hpp"
#include "lir/experiments.hpp"
#include "lir/multicast.hpp"
#include "lir/routing.hpp"
#include "lir/sim.hpp"
#include "oracles.hpp"

namespace acceptance {

namespace {

using namespace lir;
namespace ex = lir::experiments;

const char* const kNames[kCriterionCount] = {
    "fpr-fidelity",      "branching-oracle", "wrong-hops-topology", "fn-shape",
    "dp-optimality",     "single-flow",      "multiflow-queuing", "failure-ordering",
    "elr-comparison",    "multicast",        "appendix-loop",     "determinism",
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// 1. Empirical false-positive rate against the closed-form estimate.
void fpr_fidelity(Result& r, const Options& o) {
  constexpr unsigned k = 5;
  constexpr std::size_t filters = 1000, per_filter = 100;
  constexpr double queries = filters * per_filter;
  std::size_t cells = 0, within = 0, within_exact = 0;
  double worst_z = 0.0;
  std::string worst;
  for (std::size_t n : {4, 8, 12}) {
    std::size_t row_fail = 0;
    for (std::size_t m = 20; m <= 50; ++m) {
      std::mt19937_64 gen(m * 1000 + n);
      std::uniform_int_distribution<std::uint32_t> id(1, 0x7FFFFFFF);
      std::uint64_t positives = 0;
      for (std::size_t f = 0; f < filters; ++f) {
        BloomFilter bf(m, k, gen());
        std::unordered_set<std::uint32_t> members;
        while (members.size() < n) members.insert(id(gen));
        for (auto v : members) bf.insert(LinkId{v});
        for (std::size_t q = 0; q < per_filter; ++q) {
          std::uint32_t v;
          do v = id(gen); while (members.count(v));
          positives += bf.query(LinkId{v});
        }
      }
      const double emp = static_cast<double>(positives) / queries;
      const double p = fpr(m, n, k);
      const double sigma = std::sqrt(p * (1 - p) / queries);
      const double z = (emp - p) / sigma;
      const double exact = oracle::exact_fpr(m, n, k);
      const double z_exact = (emp - exact) / std::sqrt(exact * (1 - exact) / queries);
      ++cells;
      if (std::abs(z) <= 3.0 * o.tolerance_scale) {
        ++within;
      } else {
        ++row_fail;
      }
      if (std::abs(z_exact) <= 3.0 * o.tolerance_scale) ++within_exact;
      if (std::abs(z) > std::abs(worst_z)) {
        worst_z = z;
        worst = fmt("M=%zu N=%zu: empirical %.5f, estimate %.5f, exact %.5f", m, n, emp, p, exact);
      }
    }
    r.detail.push_back(fmt("N=%zu: %zu of 31 lengths outside 3 sigma of the estimate", n, row_fail));
  }
  r.detail.push_back("worst cell " + worst + fmt(" (z=%.1f)", worst_z));
  r.detail.push_back(fmt("against the exact occupancy probability: %zu/%zu cells within 3 sigma", within_exact, cells));
  r.passed = within == cells;
  r.summary = fmt("%zu/%zu cells within 3 sigma of fpr(M,N,K); worst z=%.1f", within, cells, worst_z);
}

// 2. Branching-process Monte Carlo against p/(1-3p).
void branching_oracle(Result& r, const Options& o) {
  constexpr unsigned directions = 9;  // 2N+1 with N = 4
  bool ok = true;
  double worst = 0.0;
  for (double p : {0.05, 0.1, 0.2}) {
    const auto b = oracle::branching_mc(p, directions, 1'000'000, 42);
    const double per_dir = b.mean / directions;
    const double expect = expected_wrong_hops(p);
    const double rel = (per_dir - expect) / expect;
    worst = std::max(worst, std::abs(rel));
    ok = ok && std::abs(rel) <= 0.01 * o.tolerance_scale;
    r.detail.push_back(
        fmt("p=%.2f: %.5f per direction vs %.5f (rel %+.4f, se %.5f)", p, per_dir, expect, rel, b.std_error / directions));
  }
  r.passed = ok;
  r.summary = fmt("worst relative error %.4f (tolerance %.4f)", worst, 0.01 * o.tolerance_scale);
}

// 3. Wrong hops of one packet on the torus against (2N+1) p/(1-3p).
void wrong_hops_topology(Result& r, const Options& o) {
  constexpr std::size_t seeds = 2000;
  bool ok = true;
  std::size_t checked = 0, failed = 0;
  for (std::size_t m : {14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 25, 27, 30, 35, 40, 45, 50}) {
    const auto pt = ex::wrong_hop_point(m, seeds, 1);
    const double rel = std::isnan(pt.theory) ? NAN : (pt.simulated - pt.theory) / pt.theory;
    std::string verdict;
    if (pt.p <= 0.27) {
      const double tol = (pt.p <= 0.1 ? 0.05 : 0.15) * o.tolerance_scale;
      const bool in = std::abs(rel) <= tol;
      ++checked;
      failed += !in;
      ok = ok && in;
      verdict = fmt("%s tol %.2f", in ? "ok" : "OUT", tol);
    } else {
      verdict = "above 0.27, reported only";
    }
    r.detail.push_back(fmt("M=%zu p=%.4f theory=%.4f sim=%.4f+-%.4f rel=%+.3f [%s]; measured p=%.4f -> %.4f, "
                           "per-filter mean %.4f",
                           m, pt.p, pt.theory, pt.simulated, pt.std_error, rel, verdict.c_str(), pt.measured_p,
                           pt.measured_theory, pt.conditional_theory));
  }
  r.passed = ok;
  r.summary = fmt("%zu of %zu points with p <= 0.27 outside tolerance (%zu seeds each)", failed, checked, seeds);
}

// 4. f(N) nondecreasing and convex.
void fn_shape(Result& r, const Options&) {
  const OverheadParams params;
  std::vector<double> f(13, 0.0);
  for (std::size_t n = 1; n <= 12; ++n) f[n] = optimal_bf(n, 5, params).overhead;
  bool mono = true, convex = true;
  std::string row = "f(N):";
  for (std::size_t n = 1; n <= 12; ++n) {
    row += fmt(" %.1f", f[n]);
    if (n >= 2 && f[n] < f[n - 1]) mono = false;
    if (n >= 3 && (f[n] - f[n - 1]) < (f[n - 1] - f[n - 2])) convex = false;
  }
  r.detail.push_back(row);
  r.passed = mono && convex;
  r.summary = fmt("nondecreasing: %s, nondecreasing differences: %s", mono ? "yes" : "no", convex ? "yes" : "no");
}

// 5. DP against exhaustive enumeration.
void dp_optimality(Result& r, const Options&) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t cases = 0, cost_match = 0, policy_match = 0, ties = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int draw = 0; draw < 20; ++draw) {
      OverheadParams params;
      params.payload_bits = 512.0 + u(gen) * 16000.0;
      params.hashes = 3 + static_cast<unsigned>(u(gen) * 6);
      params.bandwidth_bps = std::pow(10.0, 6.0 + 2.0 * u(gen));
      params.tau_s = std::pow(10.0, -7.0 + 4.0 * u(gen));
      const auto curve = OverheadCurve::optimal(n, params);
      std::vector<double> f(n + 1, 0.0);
      for (std::size_t i = 1; i <= n; ++i) f[i] = curve.overhead(i);
      const auto dp = solve_dp(n, params, overhead_of(curve));

      double best = INFINITY;
      std::vector<std::vector<std::uint8_t>> argmin;
      for (const auto& x : oracle::enumerate_policies(n)) {
        const double c = oracle::policy_cost(x, f, params.bandwidth_bps, params.tau_s);
        if (c < best) {
          best = c;
          argmin = {x};
        } else if (c == best) {
          argmin.push_back(x);
        }
      }
      ++cases;
      cost_match += dp.H[n] == best;
      policy_match += std::find(argmin.begin(), argmin.end(), dp.policy.bits()) != argmin.end();
      ties += argmin.size() > 1;
    }
  }
  r.passed = cost_match == cases && policy_match == cases;
  r.summary = fmt("%zu/%zu costs identical, %zu/%zu policies among the minimizers", cost_match, cases, policy_match,
                  cases);
  r.detail.push_back(fmt("%zu cases had more than one optimal policy", ties));
}

// 6. Temporal overhead of the optimal versus the source policy.
void single_flow(Result& r, const Options&) {
  const OverheadParams params;
  const auto curve = OverheadCurve::optimal(12, params);
  const auto f = overhead_of(curve);
  bool ok = true;
  double prev_gap = -INFINITY;
  std::string row = "gap (us):";
  for (std::size_t n = 3; n <= 12; ++n) {
    const double opt = evaluate(solve_dp(n, params, f).policy, params, f);
    const double src = evaluate(EncodingPolicy::source(n), params, f);
    const double gap = src - opt;
    row += fmt(" %.3f", gap * 1e6);
    if (opt > src || gap < prev_gap) ok = false;
    prev_gap = gap;
  }
  r.detail.push_back(row);
  r.passed = ok;
  r.summary = ok ? "optimal <= source for N in [3,12], gap nondecreasing" : "ordering or gap monotonicity violated";
}

// 7. Queuing delay of optimal versus source encoding under shared load.
void multiflow_queuing(Result& r, const Options& o) {
  constexpr std::size_t seeds = 20;
  bool ordered = true;
  double gap30 = 0.0, gap70 = 0.0;
  for (std::size_t m : {30, 40, 50, 60, 70}) {
    const auto src = ex::sweep(ex::multiflow_scenario(m, RoutingMode::Source), 1, seeds);
    const auto opt = ex::sweep(ex::multiflow_scenario(m, RoutingMode::Optimal), 1, seeds);
    const double qs = src.total.mean_component_s(&DelayBreakdown::queuing);
    const double qo = opt.total.mean_component_s(&DelayBreakdown::queuing);
    const double gap = (qs - qo) / qs;
    if (qo > qs) ordered = false;
    if (m == 30) gap30 = gap;
    if (m == 70) gap70 = gap;
    r.detail.push_back(fmt("M=%zu queuing source=%.3f ms optimal=%.3f ms gap=%.3f; wrong hops/pkt %.3f vs %.3f", m,
                           qs * 1e3, qo * 1e3, gap, static_cast<double>(src.wrong_hops) / src.packets,
                           static_cast<double>(opt.wrong_hops) / opt.packets));
  }
  const double tol = 0.05 * o.tolerance_scale;
  r.passed = ordered && gap30 >= 0.20 && gap70 <= tol;
  r.summary = fmt("optimal<=source at every M: %s; gap(30)=%.3f (>=0.20), gap(70)=%.3f (<=%.3f)",
                  ordered ? "yes" : "no", gap30, gap70, tol);
}

// 8. Delivery ratio and delay under random ISL failures.
void failure_ordering(Result& r, const Options& o) {
  constexpr std::size_t seeds = 50;
  const double tol = 0.02 * o.tolerance_scale;
  bool a = true, b = true, c = true, d = true;
  for (double rate : {0.05, 0.10, 0.15, 0.20}) {
    auto run_scheme = [&](FailureManagement m) { return ex::sweep(ex::failure_scenario(m, rate), 1, seeds).total; };
    const auto odr = run_scheme(FailureManagement::Odr);
    const auto odd = run_scheme(FailureManagement::Odd);
    const auto lsa = run_scheme(FailureManagement::Lsa);
    const auto ospf = run_scheme(FailureManagement::OspfLsa);
    auto odd_fb_s = ex::failure_scenario(FailureManagement::Odd, rate);
    odd_fb_s.odd_fallback = true;
    odd_fb_s.odd_max_nesting = 1;
    const auto odd_fb = ex::sweep(odd_fb_s, 1, seeds).total;
    const bool ai = std::abs(odr.delivery_ratio() - odd.delivery_ratio()) <= tol;
    const bool bi = odr.delivery_ratio() > lsa.delivery_ratio() && odd.delivery_ratio() > lsa.delivery_ratio();
    const bool ci = ospf.delivery_ratio() >= lsa.delivery_ratio() && ospf.mean_delay_s() >= lsa.mean_delay_s();
    const bool di = odr.mean_delay_s() <= odd.mean_delay_s();
    a = a && ai;
    b = b && bi;
    c = c && ci;
    d = d && di;
    r.detail.push_back(fmt("rate %.2f delivery odr=%.4f odd=%.4f lsa=%.4f ospf=%.4f (odd+fallback %.4f); "
                           "delay ms odr=%.2f odd=%.2f lsa=%.2f ospf=%.2f; clauses %c%c%c%c",
                           rate, odr.delivery_ratio(), odd.delivery_ratio(), lsa.delivery_ratio(),
                           ospf.delivery_ratio(), odd_fb.delivery_ratio(), odr.mean_delay_s() * 1e3,
                           odd.mean_delay_s() * 1e3, lsa.mean_delay_s() * 1e3, ospf.mean_delay_s() * 1e3,
                           ai ? 'a' : '-', bi ? 'b' : '-', ci ? 'c' : '-', di ? 'd' : '-'));
  }
  r.passed = a && b && c && d;
  r.summary = fmt("a) |odr-odd|<=%.3f: %s  b) both > lsa: %s  c) ospf >= lsa on delivery and delay: %s  "
                  "d) delay odr<=odd: %s",
                  tol, a ? "yes" : "no", b ? "yes" : "no", c ? "yes" : "no", d ? "yes" : "no");
}

// 9. LiR against the explicit-link lower bound.
void elr_comparison(Result& r, const Options&) {
  const auto c = Constellation::build(6, 11, 780.0, false);
  const std::uint64_t l = c.link_count();
  const OverheadParams params;
  std::size_t cases = 0, ratio_ok = 0, overhead_ok = 0;
  for (double target : {0.001, 0.01, 0.05}) {
    std::string row = fmt("target %.3f: N:m/LiR overhead/ELR bound", target);
    for (std::size_t n = 2; n <= 12; ++n) {
      const std::size_t m = min_bits_for_fpr(n, params.hashes, target);
      const auto elr = elr_overhead(n, l);
      const double lir_ratio = payload_ratio(params.payload_bits, static_cast<double>(m));
      const double elr_ratio = payload_ratio(params.payload_bits, static_cast<double>(elr.header_bits));
      const double fo = f_fo(n, m, params.hashes, params);
      ++cases;
      ratio_ok += lir_ratio > elr_ratio;
      overhead_ok += fo < static_cast<double>(elr.total_bits);
      if (n == 2 || n == 6 || n == 12) row += fmt("  %zu:%zu/%.0f/%llu", n, m, fo, (unsigned long long)elr.total_bits);
    }
    r.detail.push_back(row);
  }
  std::string opt_row = "at optimal m, N:f(N)/ELR bound:";
  std::size_t opt_ok = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto best = optimal_bf(n, params.hashes, params);
    const auto elr = elr_overhead(n, l);
    opt_ok += best.overhead < static_cast<double>(elr.total_bits);
    opt_row += fmt(" %zu:%.0f/%llu", n, best.overhead, (unsigned long long)elr.total_bits);
  }
  r.detail.push_back(opt_row + fmt(" (%zu/11 below)", opt_ok));
  r.passed = ratio_ok == cases && overhead_ok == cases;
  r.summary = fmt("L=%llu (%u bits/id): payload ratio LiR > ELR in %zu/%zu, overhead LiR < N^2*ceil(log2 L) in %zu/%zu",
                  (unsigned long long)l, ceil_log2(l), ratio_ok, cases, overhead_ok, cases);
}

// 10. Multicast identifier sets and delivery-mode ordering.
void multicast(Result& r, const Options& o) {
  const auto c = Constellation::build(6, 11, 780.0, false);
  auto link = [&](unsigned ao, unsigned as, unsigned bo, unsigned bs) {
    return *c.find_link(c.sat(ao, as), c.sat(bo, bs));
  };
  // Labels 0x01..0x06 of the two-destination example.
  const LinkId l1 = link(0, 0, 0, 1), l2 = link(0, 1, 0, 2), l3 = link(0, 2, 0, 3), l4 = link(0, 3, 1, 3),
               l5 = link(0, 2, 1, 2), l6 = link(1, 2, 1, 3);
  std::vector<LinkId> want_spf = {l1, l2, l3, l4, l5}, want_pnb = {l1, l2, l5, l6};
  std::sort(want_spf.begin(), want_spf.end());
  std::sort(want_pnb.begin(), want_pnb.end());
  const SatId src = c.sat(0, 0);
  const std::vector<SatId> dests = {c.sat(1, 2), c.sat(1, 3)};
  const auto spf = spf_tree(c, src, dests);
  const SatId primary = choose_primary(c, src, dests);
  const auto pnb = pnb_tree(c, src, dests, primary);
  const bool sets_ok = spf && pnb && *spf == want_spf && *pnb == want_pnb && primary == c.sat(1, 2);
  r.detail.push_back(fmt("two-destination example: SPF %zu ids, PNB %zu ids, primary (%u,%u), exact sets %s",
                         spf ? spf->size() : 0, pnb ? pnb->size() : 0, c.orbit_of(primary), c.slot_of(primary),
                         sets_ok ? "match" : "differ"));

  constexpr std::size_t seeds = 20;
  const ex::DeliveryMode modes[] = {ex::DeliveryMode::MulticastPnb, ex::DeliveryMode::MulticastSpf,
                                    ex::DeliveryMode::UnicastOptimal, ex::DeliveryMode::UnicastSource};
  FlowMetrics pooled[4];
  std::vector<double> diff_delay, diff_ratio;  // PNB - SPF per (N, seed)
  for (std::size_t n = 2; n <= 6; ++n) {
    std::string row = fmt("N=%zu", n);
    FlowMetrics per_n[4];
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
      FlowMetrics run_m[4];
      for (int i = 0; i < 4; ++i) {
        run_m[i] = run(ex::multicast_scenario(modes[i], n, seed)).total();
        per_n[i].merge(run_m[i]);
        pooled[i].merge(run_m[i]);
      }
      diff_delay.push_back(run_m[0].mean_delay_s() - run_m[1].mean_delay_s());
      diff_ratio.push_back(run_m[0].delivery_ratio() - run_m[1].delivery_ratio());
    }
    for (int i = 0; i < 4; ++i) {
      row += fmt("  %s %.2f ms/%.4f", ex::to_string(modes[i]), per_n[i].mean_delay_s() * 1e3,
                 per_n[i].delivery_ratio());
    }
    r.detail.push_back(row);
  }
  auto mean_se = [](const std::vector<double>& v) {
    double s = 0, q = 0;
    for (double x : v) {
      s += x;
      q += x * x;
    }
    const double n = static_cast<double>(v.size());
    const double var = n > 1 ? std::max(0.0, (q - s * s / n) / (n - 1)) : 0.0;
    return std::pair{s / n, std::sqrt(var / n)};
  };
  const auto [dd, dd_se] = mean_se(diff_delay);
  const auto [dr, dr_se] = mean_se(diff_ratio);
  const double noise = 2.0 * o.tolerance_scale;
  const bool pnb_vs_spf = dd <= noise * dd_se && dr >= -noise * dr_se;
  double d[4], q[4];
  for (int i = 0; i < 4; ++i) {
    d[i] = pooled[i].mean_delay_s();
    q[i] = pooled[i].delivery_ratio();
  }
  const bool multicast_better = std::max(d[0], d[1]) < std::min(d[2], d[3]) && std::min(q[0], q[1]) > std::max(q[2], q[3]);
  const bool unicast_order = d[2] < d[3] && q[2] > q[3];
  r.detail.push_back(fmt("pooled delay ms %.3f / %.3f / %.3f / %.3f, delivery %.4f / %.4f / %.4f / %.4f", d[0] * 1e3,
                         d[1] * 1e3, d[2] * 1e3, d[3] * 1e3, q[0], q[1], q[2], q[3]));
  r.detail.push_back(fmt("PNB - SPF: delay %.3f ms (se %.3f), delivery %+.5f (se %.5f)", dd * 1e3, dd_se * 1e3, dr, dr_se));
  r.passed = sets_ok && pnb_vs_spf && multicast_better && unicast_order;
  r.summary = fmt("sets %s; PNB >= SPF within noise: %s; multicast > unicast: %s; optimal > source: %s",
                  sets_ok ? "exact" : "differ", pnb_vs_spf ? "yes" : "no", multicast_better ? "yes" : "no",
                  unicast_order ? "yes" : "no");
}

// 11. Node-identified duplicates and loops versus link identification.
void appendix_loop(Result& r, const Options&) {
  const auto c = Constellation::build(6, 11, 780.0, false);
  const auto sc = appendix_scenario(c);
  const auto demo = node_identified_demo(c, sc.src, sc.dests, sc.tree);
  const auto& ni = demo.node_identified;
  const auto& li = demo.link_identified;
  bool one_each = true;
  for (SatId d : sc.dests) {
    const auto it = li.deliveries.find(d);
    if (it == li.deliveries.end() || it->second != 1) one_each = false;
  }
  const bool node_bad = ni.duplicates() >= 1 && ni.looped();
  const bool link_good = one_each && li.duplicates() == 0 && !li.looped() && li.misrouted_transmissions == 0;
  r.detail.push_back(fmt("node-identified: %u duplicates, %u TTL drops, %u transmissions", ni.duplicates(),
                         ni.ttl_drops, ni.transmissions));
  r.detail.push_back(fmt("link-identified: %u duplicates, %u TTL drops, %u transmissions, %u off-tree", li.duplicates(),
                         li.ttl_drops, li.transmissions, li.misrouted_transmissions));
  r.passed = node_bad && link_good;
  r.summary = fmt("node-identified duplicates+loop: %s; link-identified one copy per destination: %s",
                  node_bad ? "yes" : "no", link_good ? "yes" : "no");
}

// 12. Identical CSV bytes from repeated runs.
void determinism(Result& r, const Options&) {
  auto csv = [](const Scenario& s) {
    std::ostringstream os, trace;
    RunOptions opts;
    opts.trace = &trace;
    const Metrics m = run(s, opts);
    write_flow_csv(os, s, m);
    write_link_csv(os, s, m);
    write_summary_csv(os, s, m);
    return os.str() + trace.str();
  };
  std::size_t same = 0, total = 0;
  for (const std::string& name : ex::preset_names()) {
    Scenario s = ex::preset(name);
    s.seed = 17;
    const std::string a = csv(s), b = csv(s);
    ++total;
    same += a == b;
    r.detail.push_back(fmt("%s: %zu bytes, %s", name.c_str(), a.size(), a == b ? "identical" : "DIFFERENT"));
  }
  r.passed = same == total;
  r.summary = fmt("%zu/%zu presets byte-identical across two runs (CSV and trace)", same, total);
}

using Fn = void (*)(Result&, const Options&);
const Fn kFns[kCriterionCount] = {fpr_fidelity,     branching_oracle,  wrong_hops_topology, fn_shape,
                                  dp_optimality,    single_flow,       multiflow_queuing, failure_ordering,
                                  elr_comparison,   multicast,         appendix_loop,     determinism};

}  // namespace

const char* criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id");
  return kNames[id - 1];
}

std::optional<int> parse_criterion(const std::string& s) {
  for (int i = 1; i <= kCriterionCount; ++i) {
    if (s == std::to_string(i) || s == kNames[i - 1]) return i;
  }
  return std::nullopt;
}

Result run_criterion(int id, const Options& opts) {
  Result r;
  r.id = id;
  r.name = criterion_name(id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kFns[id - 1](r, opts);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_line(const Result& r) {
  return fmt("%s %2d %-18s %s (%.1f s)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.summary.c_str(),
             r.seconds);
}

}  // namespace acceptance
