#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace witt {

// Configuration for the batch property-suite run.  Every randomized draw
// derives from `seed`, so a failing run is replayable from its report.
struct CheckOptions {
  std::uint64_t seed = 0x5eed'c0de;
  long samples = -1;           // -1: per-property default counts
  std::string mutation;        // "" or a built-in mutation name, e.g. "sign-flip-alpha3"
  std::string cache_dir;       // witt-polynomial cache ("" disables)
  unsigned workers = 0;        // 0: hardware concurrency
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  long samples = 0;
  double millis = 0.0;
  std::string counterexample;  // empty when passed
};

struct CheckReport {
  CheckOptions options;
  std::vector<PropertyResult> results;  // sorted by property name

  bool all_passed() const {
    for (const PropertyResult& r : results)
      if (!r.passed) return false;
    return true;
  }
};

// Known mutation names (negative controls for the test-of-tests path).
bool is_known_mutation(const std::string& name);

CheckReport run_check_suite(const CheckOptions& options);

std::string report_to_text(const CheckReport& report);
std::string report_to_json(const CheckReport& report);

}  // namespace witt
