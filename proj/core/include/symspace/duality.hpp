#pragma once

#include "symspace/norms.hpp"

namespace symspace {

// Result of an associate-norm computation. The witness is a decreasing
// profile with norm at most 1 + 2^-30 whose pairing against the target
// reproduces `value` up to snapping error; for infinite values the witness is
// empty and stands for a diverging indicator family.
struct DualNormResult {
  enum class Method { Analytic, Oracle };

  NormValue value;
  DecreasingProfile witness;
  Method method = Method::Oracle;
};

// Integral of the product of two decreasing profiles over their common
// domain; +inf iff both end in infinite segments (of positive value).
ExtRat hl_pairing(const DecreasingProfile& a, const DecreasingProfile& b);

// Associate (Koethe dual) norm sup{ integral(f*g) : ||f|| <= 1 }. Analytic
// route for the Lp family (conjugate exponents); everything else goes
// through the maximization oracle. Raises QuasiNormSpec for Lp with p < 1.
DualNormResult associate_norm(const StepFunction& g, const NormSpec& spec);
DualNormResult associate_norm_of_profile(const DecreasingProfile& xi_g, const NormSpec& spec);

// Direct finite-dimensional maximization over decreasing witnesses constant
// on the breakpoint partition of the target; `refinement` subdivides every
// segment to probe finer grids.
DualNormResult dual_norm_oracle(const StepFunction& g, const NormSpec& spec, int refinement = 1);
DualNormResult dual_norm_oracle_of_profile(const DecreasingProfile& xi_g, const NormSpec& spec,
                                           int refinement = 1);

// Norm in the second associate space, computed by maximizing the pairing
// over the unit ball of the associate norm. Always at most norm(f, spec).
NormValue second_associate_norm(const StepFunction& f, const NormSpec& spec);
NormValue second_associate_of_profile(const DecreasingProfile& xi_f, const NormSpec& spec);

// Norm in the third associate space; coincides with the associate norm.
NormValue third_associate_norm(const StepFunction& g, const NormSpec& spec);

struct PropertyCGap {
  NormValue sup_chain_norm;
  NormValue limit_norm;
  NormValue gap;  // limit_norm - sup_chain_norm, nonnegative
};

// Certificate for order semi-continuity on one monotone instance: gap = 0
// confirms it, gap > 0 exhibits a counterexample.
PropertyCGap property_C_gap(const std::vector<StepFunction>& chain, const StepFunction& limit,
                            const NormSpec& spec);

enum class FatouStatus { Holds, Fails, NotApplicable };

struct FatouCheck {
  std::vector<NormValue> norms;
  NormValue liminf_norm;  // min over the trailing half of the sequence
  NormValue limit_norm;
  FatouStatus status = FatouStatus::NotApplicable;
};

// Finite surrogate of the Fatou property: requires pointwise distances to
// the limit to be non-increasing on every refined piece (NoConvergence
// otherwise) and reports NotApplicable when the norms are unbounded.
FatouCheck fatou_check(const std::vector<StepFunction>& sequence, const StepFunction& limit,
                       const NormSpec& spec);

}  // namespace symspace
