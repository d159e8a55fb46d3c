#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symspace/rearrange.hpp"

namespace symspace {

// Closed enumeration of the built-in symmetric norm and quasi-norm families.
struct NormSpec {
  enum class Kind { Lp, LInf, L1CapLInf, L1PlusLInf, LInfPlusTail };

  Kind kind = Kind::Lp;
  Rat p = Rat(1);  // only meaningful for Lp, p > 0

  static NormSpec lp(Rat p);
  static NormSpec l1() { return lp(Rat(1)); }
  static NormSpec linf() { return NormSpec{Kind::LInf, Rat(1)}; }
  static NormSpec l1_cap_linf() { return NormSpec{Kind::L1CapLInf, Rat(1)}; }
  static NormSpec l1_plus_linf() { return NormSpec{Kind::L1PlusLInf, Rat(1)}; }
  static NormSpec linf_plus_tail() { return NormSpec{Kind::LInfPlusTail, Rat(1)}; }

  // Lp with p < 1 is only a quasi-norm; everything else is a Banach norm.
  bool is_banach() const { return kind != Kind::Lp || p >= 1; }

  std::string name() const;

  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

// Norm value carried exactly whenever the arithmetic permits. When the value
// itself is irrational but its p-th power is rational (integer-p Lp norms),
// the power is kept and comparisons are performed on powers.
struct NormValue {
  bool infinite = false;
  std::optional<Rat> exact;        // the value, when rational
  std::optional<Rat> power_value;  // value^power, when `exact` is absent
  Rat power = Rat(1);              // exponent attached to power_value
  double approx = 0.0;             // always meaningful (inf when infinite)

  static NormValue zero();
  static NormValue from_exact(Rat value);
  // value = power_value^(1/power); collapses to `exact` for perfect powers.
  static NormValue from_power(Rat power_value, Rat power);
  static NormValue from_approx(double value);
  static NormValue infinity();

  bool is_exactly(const Rat& v) const { return !infinite && exact && *exact == v; }
};

// Three-way comparison. `exact` reports whether the order was decided in
// rational arithmetic; otherwise the floating values were compared with the
// 2^-precision_bits() relative tolerance (ties count as Equal).
struct NormOrder {
  int sign = 0;  // -1, 0, +1 for a<b, a~b, a>b
  bool exact = false;
};
NormOrder norm_compare(const NormValue& a, const NormValue& b);
bool norm_leq(const NormValue& a, const NormValue& b);
bool norm_close(const NormValue& a, const NormValue& b, double rel_tol);

NormValue norm_scale(const NormValue& v, const Rat& c);  // c >= 0
NormValue norm_add(const NormValue& a, const NormValue& b);
NormValue norm_sub(const NormValue& a, const NormValue& b);
NormValue norm_max(const NormValue& a, const NormValue& b);

NormValue norm(const StepFunction& f, const NormSpec& spec);
NormValue norm_of_profile(const DecreasingProfile& xi, const NormSpec& spec);

struct L1LInfDecomposition {
  StepFunction peak;  // the L1 summand: f clamped away from [-cut, cut]
  StepFunction bulk;  // the LInf summand: f clamped into [-cut, cut]
  NormValue value;    // ||peak||_1 + ||bulk||_inf, minimal over cut levels
  Rat cut_level;
};

// Optimal decomposition f = peak + bulk for the L1 + LInf sum norm, found by
// scanning the cut level over the value breakpoints of |f|.
L1LInfDecomposition decompose_l1_linf(const StepFunction& f);

NormValue fundamental_function(const NormSpec& spec, const Rat& t);

struct EmbeddingCheck {
  NormValue lhs;  // phi(1) * ||f|| in the intersection norm
  NormValue mid;  // ||f|| in the requested norm
  NormValue rhs;  // phi(1) * ||f|| in the sum norm
  bool holds = false;
};

// Verifies phi(1)*||f||_cap >= ||f||_E >= phi(1)*||f||_sum for Banach specs.
EmbeddingCheck embedding_check(const StepFunction& f, const NormSpec& spec);

// p = ln 2 / (ln 2 + ln C); exact rational whenever C is a power of two.
NormValue aoki_rolewicz_exponent(const Rat& concavity_modulus);

struct PSubadditivityCheck {
  NormValue lhs;  // ||f+g||_p^p
  NormValue rhs;  // ||f||_p^p + ||g||_p^p
  bool holds = false;
  bool exact = false;     // decided in exact arithmetic
  bool equality = false;  // exact path proved lhs == rhs
};

// Checks ||f+g||_p^p <= ||f||_p^p + ||g||_p^p for 0 < p <= 1. For p with
// denominator in {1, 2, 3} the comparison is exact via per-piece radical
// comparisons; otherwise it falls back to floating point.
PSubadditivityCheck p_subadditivity_check(const StepFunction& f, const StepFunction& g,
                                          const Rat& p);

struct CutoffEntry {
  int n = 0;
  NormValue top_residual;      // ||xi - min(xi, n)||
  NormValue support_residual;  // ||xi - xi*1_[0,n]||
};

// Minimality diagnostics via upper and right n-cutoffs of the rearrangement.
std::vector<CutoffEntry> cutoff_sequences(const StepFunction& f, const NormSpec& spec, int n_max);

}  // namespace symspace
