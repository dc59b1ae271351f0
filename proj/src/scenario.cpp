#include "lir/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "lir/multicast.hpp"

namespace lir {

const char* to_string(RoutingMode m) {
  switch (m) {
    case RoutingMode::Source: return "source";
    case RoutingMode::Optimal: return "optimal";
    case RoutingMode::Elr: return "elr";
    case RoutingMode::OspfLsa: return "ospf-lsa";
  }
  return "?";
}

const char* to_string(DeadEndPolicy p) { return p == DeadEndPolicy::Drop ? "drop" : "bounce"; }

const char* to_string(FlowKind k) {
  switch (k) {
    case FlowKind::Unicast: return "unicast";
    case FlowKind::MulticastSpf: return "multicast-spf";
    case FlowKind::MulticastPnb: return "multicast-pnb";
  }
  return "?";
}

const char* to_string(TrafficPattern p) { return p == TrafficPattern::Cbr ? "cbr" : "poisson"; }

ConfigError::ConfigError(std::size_t line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string fmt(const GridPos& p) { return std::to_string(p.orbit) + ":" + std::to_string(p.slot); }

struct Reader {
  std::size_t line;
  std::string key;

  [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(line, key + ": " + msg); }

  double real(const std::string& v) const {
    double x = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) fail("expected a number, got '" + v + "'");
    return x;
  }

  std::uint64_t uint(const std::string& v) const {
    std::uint64_t x = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) {
      fail("expected a non-negative integer, got '" + v + "'");
    }
    return x;
  }

  unsigned u32(const std::string& v) const {
    const auto x = uint(v);
    if (x > 0xFFFFFFFFULL) fail("value too large");
    return static_cast<unsigned>(x);
  }

  bool boolean(const std::string& v) const {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail("expected true or false, got '" + v + "'");
  }

  GridPos pos(const std::string& v) const {
    const auto colon = v.find(':');
    if (colon == std::string::npos) fail("expected orbit:slot, got '" + v + "'");
    return GridPos{u32(trim(v.substr(0, colon))), u32(trim(v.substr(colon + 1)))};
  }

  template <typename E, std::size_t N>
  E choice(const std::string& v, const E (&options)[N]) const {
    std::string allowed;
    for (E o : options) {
      if (v == to_string(o)) return o;
      allowed += std::string(allowed.empty() ? "" : "|") + to_string(o);
    }
    fail("expected one of " + allowed + ", got '" + v + "'");
  }
};

using LineMap = std::map<std::string, std::size_t>;

std::size_t line_of(const LineMap* lines, const std::string& key) {
  if (lines == nullptr) return 0;
  const auto it = lines->find(key);
  return it == lines->end() ? 0 : it->second;
}

void check_pos(const Scenario& s, const GridPos& p, std::size_t line, const std::string& what) {
  if (p.orbit >= s.orbits || p.slot >= s.sats_per_orbit) {
    throw ConfigError(line, what + ": " + fmt(p) + " outside the " + std::to_string(s.orbits) + "x" +
                                std::to_string(s.sats_per_orbit) + " grid");
  }
}

void validate_impl(const Scenario& s, const LineMap* lines) {
  auto err = [&](const std::string& key, const std::string& msg) { throw ConfigError(line_of(lines, key), msg); };
  if (s.orbits < 2) err("constellation.orbits", "orbits must be >= 2");
  if (s.sats_per_orbit < 3) err("constellation.sats_per_orbit", "sats_per_orbit must be >= 3");
  if (!(s.altitude_km > 0)) err("constellation.altitude_km", "altitude_km must be > 0");
  if (s.hashes == 0) err("routing.hash_count", "hash_count must be >= 1");
  if (s.ttl == 0 || s.ttl > 255) err("routing.ttl", "ttl must be in 1..255");
  if (!(s.failure_rate >= 0 && s.failure_rate < 1)) err("failures.rate", "rate must be in [0, 1)");
  if (!(s.mttr_s > 0)) err("failures.mttr_s", "mttr_s must be > 0");
  if (!(s.hello_interval_s > 0)) err("failures.hello_interval_s", "hello_interval_s must be > 0");
  if ((s.odd_fallback || s.odd_max_nesting > 0) && s.management != FailureManagement::Odd) {
    err(s.odd_fallback ? "failures.odd_fallback" : "failures.odd_max_nesting",
        "equivalent-path options need management = odd");
  }
  if (s.odd_max_nesting > 1) err("failures.odd_max_nesting", "odd_max_nesting must be 0 or 1");
  if (s.odd_max_nesting > 0 && !s.odd_fallback) {
    err("failures.odd_max_nesting", "nested detours need odd_fallback = true");
  }
  if (s.odr_segmented && s.management != FailureManagement::Odr) {
    err("failures.odr_segmented", "odr_segmented needs management = odr");
  }
  if ((s.routing == RoutingMode::OspfLsa) != (s.management == FailureManagement::OspfLsa)) {
    err("failures.management", "routing mode ospf-lsa and management ospf-lsa go together");
  }
  if ((s.routing == RoutingMode::Elr) && s.management != FailureManagement::None &&
      s.management != FailureManagement::Lsa) {
    err("failures.management", "elr routing supports management none or lsa");
  }
  if (!(s.bandwidth_bps > 0)) err("link.bandwidth_bps", "bandwidth_bps must be > 0");
  if (s.queue_capacity == 0) err("link.queue_capacity", "queue_capacity must be >= 1");
  if (!(s.tau_s > 0)) err("link.tau_s", "tau_s must be > 0");
  if (!(s.payload_bits > 0)) err("link.payload_bits", "payload_bits must be > 0");
  if (!(s.horizon_s > 0)) err("sim.horizon_s", "horizon_s must be > 0");
  for (const auto& f : s.link_down) {
    const std::size_t line = line_of(lines, "failures.link_down");
    check_pos(s, f.a, line, "link_down");
    check_pos(s, f.b, line, "link_down");
    if (!(f.at_s >= 0)) throw ConfigError(line, "link_down: time must be >= 0");
  }
  for (const auto& f : s.flows) {
    const std::string sec = "flow." + f.name;
    auto ferr = [&](const std::string& key, const std::string& msg) {
      const std::size_t l = line_of(lines, sec + "." + key);
      throw ConfigError(l ? l : line_of(lines, sec), sec + ": " + msg);
    };
    check_pos(s, f.src, line_of(lines, sec + ".src"), sec + ".src");
    if (f.dsts.empty()) ferr("dst", "needs at least one dst");
    for (const auto& d : f.dsts) {
      check_pos(s, d, line_of(lines, sec + ".dst"), sec + ".dst");
      if (d == f.src) ferr("dst", "dst equals src");
    }
    if (f.kind == FlowKind::Unicast && f.dsts.size() != 1) ferr("dst", "unicast flows have exactly one dst");
    if (f.kind != FlowKind::Unicast) {
      if (f.dsts.size() > kMaxMulticastDests) ferr("dst", "at most 8 multicast destinations");
      if (s.routing == RoutingMode::Elr || s.routing == RoutingMode::OspfLsa) {
        ferr("kind", "multicast flows need LiR routing (source or optimal)");
      }
      for (std::size_t i = 0; i < f.dsts.size(); ++i) {
        for (std::size_t j = i + 1; j < f.dsts.size(); ++j) {
          if (f.dsts[i] == f.dsts[j]) ferr("dst", "duplicate destination");
        }
      }
    }
    if (!(f.rate_pps >= 0)) ferr("rate_pps", "rate must be >= 0");
    if (!(f.start_s >= 0) || !(f.duration_s >= 0)) ferr("start_s", "start_s and duration_s must be >= 0");
  }
}

}  // namespace

void validate(const Scenario& s) { validate_impl(s, nullptr); }

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  LineMap lines;
  std::string section;
  std::string raw;
  std::size_t lineno = 0;
  std::map<std::string, std::string> pending_rate_bps;  // flow -> value, resolved after payload is known
  std::map<std::string, std::size_t> rate_bps_line;

  auto flow_named = [&s](const std::string& name) -> FlowSpec& {
    for (auto& f : s.flows) {
      if (f.name == name) return f;
    }
    s.flows.push_back(FlowSpec{});
    s.flows.back().name = name;
    return s.flows.back();
  };

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      static const char* known[] = {"constellation", "routing", "failures", "link", "sim"};
      const bool is_flow = section.rfind("flow.", 0) == 0 && section.size() > 5;
      if (!is_flow && std::find(std::begin(known), std::end(known), section) == std::end(known)) {
        throw ConfigError(lineno, "unknown section [" + section + "]");
      }
      if (is_flow) {
        const std::string name = section.substr(5);
        for (const auto& f : s.flows) {
          if (f.name == name) throw ConfigError(lineno, "duplicate section [" + section + "]");
        }
        flow_named(name);
        lines[section] = lineno;
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineno, "expected key = value");
    if (section.empty()) throw ConfigError(lineno, "key outside of any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const std::string full = section + "." + key;
    if (lines.count(full)) throw ConfigError(lineno, "duplicate key " + key);
    lines[full] = lineno;
    const Reader r{lineno, key};

    if (section == "constellation") {
      if (key == "orbits") s.orbits = r.u32(val);
      else if (key == "sats_per_orbit") s.sats_per_orbit = r.u32(val);
      else if (key == "altitude_km") s.altitude_km = r.real(val);
      else if (key == "inclination_deg") s.inclination_deg = r.real(val);
      else if (key == "seam") s.seam = r.boolean(val);
      else r.fail("unknown key in [constellation]");
    } else if (section == "routing") {
      if (key == "mode") {
        static const RoutingMode opts[] = {RoutingMode::Source, RoutingMode::Optimal, RoutingMode::Elr,
                                           RoutingMode::OspfLsa};
        s.routing = r.choice(val, opts);
      } else if (key == "bf_bits") {
        s.bf_bits = val == "optimal" ? 0 : r.uint(val);
        if (val != "optimal" && s.bf_bits == 0) r.fail("bf_bits must be >= 1 or 'optimal'");
      } else if (key == "hash_count") {
        s.hashes = r.u32(val);
      } else if (key == "ttl") {
        s.ttl = r.u32(val);
      } else if (key == "dead_end") {
        static const DeadEndPolicy opts[] = {DeadEndPolicy::Drop, DeadEndPolicy::Bounce};
        s.dead_end = r.choice(val, opts);
      } else if (key == "loop_guard") {
        s.loop_guard = r.boolean(val);
      } else {
        r.fail("unknown key in [routing]");
      }
    } else if (section == "failures") {
      if (key == "management") {
        static const FailureManagement opts[] = {FailureManagement::None, FailureManagement::Lsa,
                                                 FailureManagement::Odr, FailureManagement::Odd,
                                                 FailureManagement::OspfLsa};
        s.management = r.choice(val, opts);
      } else if (key == "rate") {
        s.failure_rate = r.real(val);
      } else if (key == "mttr_s") {
        s.mttr_s = r.real(val);
      } else if (key == "hello_interval_s") {
        s.hello_interval_s = r.real(val);
      } else if (key == "odd_fallback") {
        s.odd_fallback = r.boolean(val);
      } else if (key == "odd_max_nesting") {
        s.odd_max_nesting = r.u32(val);
      } else if (key == "odr_segmented") {
        s.odr_segmented = r.boolean(val);
      } else if (key == "link_down") {
        for (const auto& item : split(val, ',')) {
          const auto gt = item.find('>');
          const auto at = item.find('@');
          if (gt == std::string::npos || at == std::string::npos || at < gt) {
            r.fail("expected o:s>o:s@seconds, got '" + item + "'");
          }
          s.link_down.push_back({r.pos(trim(item.substr(0, gt))), r.pos(trim(item.substr(gt + 1, at - gt - 1))),
                                 r.real(trim(item.substr(at + 1)))});
        }
      } else {
        r.fail("unknown key in [failures]");
      }
    } else if (section == "link") {
      if (key == "bandwidth_bps") s.bandwidth_bps = r.real(val);
      else if (key == "queue_capacity") s.queue_capacity = r.uint(val);
      else if (key == "tau_s") s.tau_s = r.real(val);
      else if (key == "payload_bits") s.payload_bits = r.real(val);
      else if (key == "orbital_motion") s.orbital_motion = r.boolean(val);
      else r.fail("unknown key in [link]");
    } else if (section == "sim") {
      if (key == "horizon_s") s.horizon_s = r.real(val);
      else if (key == "seed") s.seed = r.uint(val);
      else r.fail("unknown key in [sim]");
    } else {
      const std::string name = section.substr(5);
      FlowSpec& f = flow_named(name);
      if (key == "kind") {
        static const FlowKind opts[] = {FlowKind::Unicast, FlowKind::MulticastSpf, FlowKind::MulticastPnb};
        f.kind = r.choice(val, opts);
      } else if (key == "src") {
        f.src = r.pos(val);
      } else if (key == "dst") {
        for (const auto& item : split(val, ',')) f.dsts.push_back(r.pos(item));
      } else if (key == "rate_pps") {
        if (lines.count(section + ".rate_bps")) r.fail("give rate_pps or rate_bps, not both");
        f.rate_pps = r.real(val);
      } else if (key == "rate_bps") {
        if (lines.count(section + ".rate_pps")) r.fail("give rate_pps or rate_bps, not both");
        r.real(val);
        pending_rate_bps[name] = val;
        rate_bps_line[name] = lineno;
      } else if (key == "pattern") {
        static const TrafficPattern opts[] = {TrafficPattern::Cbr, TrafficPattern::Poisson};
        f.pattern = r.choice(val, opts);
      } else if (key == "start_s") {
        f.start_s = r.real(val);
      } else if (key == "duration_s") {
        f.duration_s = r.real(val);
      } else {
        r.fail("unknown key in [" + section + "]");
      }
    }
  }
  for (const auto& [name, val] : pending_rate_bps) {
    const Reader r{rate_bps_line[name], "rate_bps"};
    flow_named(name).rate_pps = r.real(val) / s.payload_bits;
  }
  validate_impl(s, &lines);
  return s;
}

Scenario parse_scenario_string(const std::string& text) {
  std::istringstream is(text);
  return parse_scenario(is);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  return parse_scenario(in);
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "[constellation]\n"
     << "orbits = " << s.orbits << "\n"
     << "sats_per_orbit = " << s.sats_per_orbit << "\n"
     << "altitude_km = " << fmt(s.altitude_km) << "\n"
     << "inclination_deg = " << fmt(s.inclination_deg) << "\n"
     << "seam = " << b(s.seam) << "\n\n";
  os << "[routing]\n"
     << "mode = " << to_string(s.routing) << "\n"
     << "bf_bits = " << (s.bf_bits == 0 ? std::string("optimal") : std::to_string(s.bf_bits)) << "\n"
     << "hash_count = " << s.hashes << "\n"
     << "ttl = " << s.ttl << "\n"
     << "dead_end = " << to_string(s.dead_end) << "\n"
     << "loop_guard = " << b(s.loop_guard) << "\n\n";
  os << "[failures]\n"
     << "management = " << to_string(s.management) << "\n"
     << "rate = " << fmt(s.failure_rate) << "\n"
     << "mttr_s = " << fmt(s.mttr_s) << "\n"
     << "hello_interval_s = " << fmt(s.hello_interval_s) << "\n"
     << "odd_fallback = " << b(s.odd_fallback) << "\n"
     << "odd_max_nesting = " << s.odd_max_nesting << "\n"
     << "odr_segmented = " << b(s.odr_segmented) << "\n";
  if (!s.link_down.empty()) {
    os << "link_down = ";
    for (std::size_t i = 0; i < s.link_down.size(); ++i) {
      const auto& f = s.link_down[i];
      os << (i ? ", " : "") << fmt(f.a) << ">" << fmt(f.b) << "@" << fmt(f.at_s);
    }
    os << "\n";
  }
  os << "\n[link]\n"
     << "bandwidth_bps = " << fmt(s.bandwidth_bps) << "\n"
     << "queue_capacity = " << s.queue_capacity << "\n"
     << "tau_s = " << fmt(s.tau_s) << "\n"
     << "payload_bits = " << fmt(s.payload_bits) << "\n"
     << "orbital_motion = " << b(s.orbital_motion) << "\n\n";
  os << "[sim]\n"
     << "horizon_s = " << fmt(s.horizon_s) << "\n"
     << "seed = " << s.seed << "\n";
  for (const auto& f : s.flows) {
    os << "\n[flow." << f.name << "]\n"
       << "kind = " << to_string(f.kind) << "\n"
       << "src = " << fmt(f.src) << "\n"
       << "dst = ";
    for (std::size_t i = 0; i < f.dsts.size(); ++i) os << (i ? ", " : "") << fmt(f.dsts[i]);
    os << "\n"
       << "rate_pps = " << fmt(f.rate_pps) << "\n"
       << "pattern = " << to_string(f.pattern) << "\n"
       << "start_s = " << fmt(f.start_s) << "\n"
       << "duration_s = " << fmt(f.duration_s) << "\n";
  }
  return os.str();
}

std::uint64_t scenario_hash(const Scenario& s) {
  Scenario copy = s;
  copy.seed = 0;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_scenario(copy)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string scenario_hash_hex(const Scenario& s) {
  char buf[17];
  const auto r = std::to_chars(buf, buf + 16, scenario_hash(s), 16);
  std::string hex(buf, r.ptr);
  return std::string(16 - hex.size(), '0') + hex;
}

}  // namespace lir
