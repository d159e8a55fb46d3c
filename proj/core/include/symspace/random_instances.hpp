#pragma once

#include <cstdint>

#include "symspace/norms.hpp"
#include "symspace/stone.hpp"

namespace symspace {

// Deterministic 64-bit generator (splitmix64). Identical seeds give identical
// streams on every platform, which the run manifests rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); modulo bias is irrelevant at these ranges.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool one_in(int n) { return below(static_cast<std::uint64_t>(n)) == 0; }

 private:
  std::uint64_t state_;
};

struct StepFunctionOptions {
  int max_pieces = 12;
  int max_numerator = 100;
  int max_denominator = 100;
  bool allow_negative = true;
  bool allow_zero_values = true;
  bool allow_infinite_space = true;
  bool allow_tail = true;
};

Rat random_rational(SplitMix64& rng, int max_numerator, int max_denominator, bool allow_negative,
                    bool allow_zero);
Rat random_positive_rational(SplitMix64& rng, int max_numerator, int max_denominator);

StepFunction random_step_function(SplitMix64& rng, const StepFunctionOptions& options = {});

// Random step function on a prescribed space (piece masses are scaled to the
// total mass when it is finite).
StepFunction resample_on_space(SplitMix64& rng, const MeasureSpace& space,
                               const StepFunctionOptions& options = {});

NormSpec random_banach_spec(SplitMix64& rng);

struct AlgebraInput {
  int ground_size = 0;
  std::vector<Mask> generators;
};
AlgebraInput random_algebra_input(SplitMix64& rng, int max_ground);

}  // namespace symspace
