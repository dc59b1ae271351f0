#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "acceptance.hpp"

// acceptance [--verbose] [--tolerance-scale X] [criterion...]
int main(int argc, char** argv) {
  acceptance::Options opts;
  bool verbose = false;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--verbose" || a == "-v") {
      verbose = true;
    } else if (a == "--tolerance-scale" && i + 1 < argc) {
      char* end = nullptr;
      opts.tolerance_scale = std::strtod(argv[++i], &end);
      if (*end != '\0' || !(opts.tolerance_scale > 0)) {
        std::fprintf(stderr, "bad tolerance scale '%s'\n", argv[i]);
        return 2;
      }
    } else if (auto id = acceptance::parse_criterion(a)) {
      ids.push_back(*id);
    } else {
      std::fprintf(stderr, "unknown argument '%s'\n", a.c_str());
      return 2;
    }
  }
  if (ids.empty()) {
    for (int i = 1; i <= acceptance::kCriterionCount; ++i) ids.push_back(i);
  }
  int failed = 0;
  for (int id : ids) {
    const auto r = acceptance::run_criterion(id, opts);
    std::printf("%s\n", acceptance::format_line(r).c_str());
    if (verbose || !r.passed) {
      for (const auto& d : r.detail) std::printf("      %s\n", d.c_str());
    }
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%zu criteria, %d failed\n", ids.size(), failed);
  return failed ? 1 : 0;
}
