#pragma once

#include <vector>

#include "symspace/measure.hpp"

namespace symspace {

struct ProfileSegment {
  ExtRat length;  // > 0; infinite only on the final segment
  Rat value;      // >= 0

  friend bool operator==(const ProfileSegment&, const ProfileSegment&) = default;
};

// Decreasing right-continuous step function on [0, a) or [0, inf).
// Canonical form: values strictly decreasing, zero-value segments dropped
// (the profile is implicitly 0 past its support), at most the final segment
// has infinite length. The empty profile is the zero function.
class DecreasingProfile {
 public:
  DecreasingProfile() = default;
  static DecreasingProfile from_segments(std::vector<ProfileSegment> raw);

  const std::vector<ProfileSegment>& segments() const { return segments_; }
  bool is_zero() const { return segments_.empty(); }

  // Value of the infinite final segment; 0 when there is none.
  Rat infinity_value() const;
  ExtRat support_length() const;
  Rat top_value() const;  // value at 0
  Rat value_at(const Rat& x) const;

  // The profile viewed as a step function on its own standard space.
  StepFunction as_step_function() const;

  friend bool operator==(const DecreasingProfile&, const DecreasingProfile&) = default;

 private:
  std::vector<ProfileSegment> segments_;
};

struct ThresholdBreak {
  Rat threshold;
  ExtRat value;

  friend bool operator==(const ThresholdBreak&, const ThresholdBreak&) = default;
};

// Distribution function y -> mu(|f| > y) as a step function of the level.
// Breakpoints start at threshold 0, thresholds strictly increase, values
// strictly decrease, the final value is 0 and +inf may appear only first.
class ThresholdProfile {
 public:
  ThresholdProfile() = default;
  static ThresholdProfile from_breaks(std::vector<ThresholdBreak> raw);

  const std::vector<ThresholdBreak>& breaks() const { return breaks_; }
  ExtRat value_at(const Rat& y) const;
  bool is_zero() const;

  friend bool operator==(const ThresholdProfile&, const ThresholdProfile&) = default;

 private:
  std::vector<ThresholdBreak> breaks_;
};

ThresholdProfile distribution(const StepFunction& f);

DecreasingProfile rearrangement(const StepFunction& f);

// Right-continuous generalized inverse of a distribution function.
DecreasingProfile rearrangement_from_distribution(const ThresholdProfile& eta);

ThresholdProfile distribution_of_profile(const DecreasingProfile& xi);

// True iff the rearrangements coincide; the inputs may live on different
// measure spaces.
bool equimeasurable(const StepFunction& f, const StepFunction& g);

Rat xi_infinity(const DecreasingProfile& xi);

struct TransportMove {
  Rat source_start;
  Rat length;
  Rat destination_start;

  friend bool operator==(const TransportMove&, const TransportMove&) = default;
};

// Piecewise interval map phi with f = xi_f o phi on the piece region.
struct TransportMap {
  std::vector<TransportMove> moves;
};

// Requires f >= 0 with tail_value = 0. Stable sort by value makes the result
// deterministic under value ties.
TransportMap transport_map(const StepFunction& f);

struct TransportCheck {
  bool mass_preserving = false;
  bool composition_exact = false;
  bool ok() const { return mass_preserving && composition_exact; }
};

// Exact verification: sources tile the piece region, destinations are
// disjoint and mass preserving, and f equals xi o phi on every refined
// sub-interval.
TransportCheck verify_transport(const StepFunction& f, const TransportMap& map,
                                const DecreasingProfile& xi);

}  // namespace symspace
