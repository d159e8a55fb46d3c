#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symspace/json_io.hpp"

namespace symspace {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int requested = 0;
  int checks = 0;
  int passes = 0;
  std::vector<Json> counterexamples;  // capped; serialized failing instances

  bool ok() const { return checks == passes; }
};

// Seeded property suites over random instances. Names:
//   rearrangement, norm-transfer, symmetry, embedding, subadditivity,
//   duality, triple-dual, transport, stone, metric,
//   conditional-expectation, cutoff, hl-dominance, all
SuiteReport run_suite(const std::string& name, int instances, std::uint64_t seed);
std::vector<std::string> suite_names();

// Deterministic manifest for a verify run: identical inputs and seed yield
// byte-identical output.
Json run_manifest(const std::string& command, const std::string& input_payload,
                  const SuiteReport& report);

}  // namespace symspace
