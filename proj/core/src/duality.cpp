#include "symspace/duality.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace symspace {

ExtRat hl_pairing(const DecreasingProfile& a, const DecreasingProfile& b) {
  // Canonical profiles carry only positive values, so two infinite final
  // segments overlap in a set where the product stays bounded away from 0.
  if (!a.segments().empty() && !b.segments().empty() && a.segments().back().length.is_infinite() &&
      b.segments().back().length.is_infinite())
    return ExtRat::infinity();

  Rat total(0);
  size_t ia = 0, ib = 0;
  ExtRat rem_a = ia < a.segments().size() ? a.segments()[ia].length : ExtRat(Rat(0));
  ExtRat rem_b = ib < b.segments().size() ? b.segments()[ib].length : ExtRat(Rat(0));
  while (ia < a.segments().size() && ib < b.segments().size()) {
    Rat step;  // at most one side is infinite here
    if (rem_a.is_infinite())
      step = rem_b.finite();
    else if (rem_b.is_infinite())
      step = rem_a.finite();
    else
      step = std::min(rem_a.finite(), rem_b.finite());
    total += a.segments()[ia].value * b.segments()[ib].value * step;
    auto advance = [&step](ExtRat& rem, size_t& idx, const DecreasingProfile& p) {
      if (rem.is_infinite()) return;
      Rat left = rem.finite() - step;
      if (left == 0) {
        ++idx;
        rem = idx < p.segments().size() ? p.segments()[idx].length : ExtRat(Rat(0));
      } else {
        rem = ExtRat(left);
      }
    };
    advance(rem_a, ia, a);
    advance(rem_b, ib, b);
  }
  return ExtRat(total);
}

namespace {

// ---------------------------------------------------------------------------
// Pairing maximization over decreasing witnesses constant on the breakpoint
// partition of the target. The floating search drives coordinate ascent on
// the scale-free ratio objective / norm; the final witness is snapped to
// rationals, its feasibility is re-checked with the exact norm evaluator and
// the reported value is the exact pairing of that witness, hence always a
// lower bound of the supremum.
// ---------------------------------------------------------------------------

struct PartD {
  std::vector<double> len;
  std::vector<double> val;
};

struct Partition {
  std::vector<Rat> len;
  std::vector<Rat> val;
  PartD d;

  size_t size() const { return len.size(); }
  void push(const Rat& l, const Rat& v) {
    len.push_back(l);
    val.push_back(v);
    d.len.push_back(to_double(l));
    d.val.push_back(to_double(v));
  }
};

Partition build_partition(const DecreasingProfile& target, int refinement) {
  Partition part;
  Rat finite_extent(0);
  Rat tail_value = target.infinity_value();
  const int r = std::max(1, refinement);
  auto push_split = [&part, r](const Rat& total_len, const Rat& value) {
    Rat piece = total_len / r;
    for (int i = 0; i < r; ++i) part.push(piece, value);
  };
  for (const auto& seg : target.segments()) {
    if (seg.length.is_infinite()) break;
    finite_extent += seg.length.finite();
    push_split(seg.length.finite(), seg.value);
  }
  if (tail_value > 0) {
    // Synthetic finite coverage of the infinite tail, wide enough to contain
    // the optimal witness support for the built-in families: it keeps a cut
    // at the unit L1 budget plus two units of slack.
    std::vector<Rat> cuts{finite_extent, std::max(finite_extent, Rat(1)), finite_extent + 1,
                          finite_extent + 2};
    std::sort(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      if (cuts[i] < cuts[i + 1]) push_split(cuts[i + 1] - cuts[i], tail_value);
  }
  return part;
}

using NormD = std::function<double(const std::vector<double>& v, const std::vector<double>& len)>;

double objective_d(const std::vector<double>& v, const PartD& part) {
  double s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * part.val[i] * part.len[i];
  return s;
}

double ratio_d(const std::vector<double>& v, const PartD& part, const NormD& F) {
  double n = F(v, part.len);
  if (!(n > 0) || !std::isfinite(n)) return -1;
  return objective_d(v, part) / n;
}

std::vector<std::vector<double>> standard_candidates(const PartD& part) {
  const size_t k = part.len.size();
  std::vector<std::vector<double>> out;
  out.emplace_back(k, 1.0);
  for (size_t j = 0; j < k; ++j) {  // prefix indicators; j = 0 is the spike
    std::vector<double> v(k, 0.0);
    for (size_t i = 0; i <= j; ++i) v[i] = 1.0;
    out.push_back(std::move(v));
  }
  {  // average of the unit-length indicator over the partition
    std::vector<double> v(k, 0.0);
    double cum = 0;
    for (size_t i = 0; i < k; ++i) {
      double overlap = std::min(part.len[i], std::max(0.0, 1.0 - cum));
      v[i] = part.len[i] > 0 ? overlap / part.len[i] : 0.0;
      cum += part.len[i];
    }
    out.push_back(std::move(v));
  }
  for (double theta : {0.5, 1.0, 2.0}) {  // power shapes of the target
    std::vector<double> v(k, 0.0);
    for (size_t i = 0; i < k; ++i) v[i] = std::pow(part.val[i], theta);
    out.push_back(std::move(v));
  }
  return out;
}

// The 1-d slices of the ratio are quasi-concave: superlevel sets of
// (affine)/(convex) are intervals. Golden-section search is safe on them.
double line_search(std::vector<double>& v, size_t i, double lo, double hi, const PartD& part,
                   const NormD& F) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  auto eval = [&](double t) {
    v[i] = t;
    return ratio_d(v, part, F);
  };
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  for (int iter = 0; iter < 36; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = eval(x1);
    }
  }
  return eval(f1 >= f2 ? x1 : x2);
}

std::vector<double> ascend(std::vector<double> v, const PartD& part, const NormD& F, int sweeps) {
  const size_t k = v.size();
  double current = ratio_d(v, part, F);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double before = current;
    for (size_t i = 0; i < k; ++i) {
      double lo = (i + 1 < k) ? v[i + 1] : 0.0;
      double hi = (i > 0) ? v[i - 1] : std::max({2.0 * v[0], lo + 1.0, 1.0});
      if (!(hi > lo)) continue;
      double saved = v[i];
      double got = line_search(v, i, lo, hi, part, F);
      if (got < current)
        v[i] = saved;
      else
        current = got;
    }
    if (!(current > before * (1 + 1e-13))) break;
  }
  return v;
}

// Conjugate of a built-in spec in the closed family: Lp <-> Lq, the
// intersection and sum norms swap, and the tail-augmented sup norm acts as L1
// on the finite-support witnesses the oracle produces.
NormSpec conjugate_spec(const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::Lp:
      if (spec.p == 1) return NormSpec::linf();
      return NormSpec::lp(spec.p / (spec.p - 1));
    case NormSpec::Kind::LInf:
      return NormSpec::l1();
    case NormSpec::Kind::L1CapLInf:
      return NormSpec::l1_plus_linf();
    case NormSpec::Kind::L1PlusLInf:
      return NormSpec::l1_cap_linf();
    case NormSpec::Kind::LInfPlusTail:
      return NormSpec::l1();
  }
  raise(Errc::InvalidInput, "unknown norm spec");
}

// `depth` counts how many associate passes surround the ball the witness
// must lie in: 0 for the norm itself, 1 for the associate norm and so on.
NormSpec ball_spec_at_depth(NormSpec spec, int depth) {
  for (int i = 0; i < depth; ++i) spec = conjugate_spec(spec);
  return spec;
}

// Certified check of ||w|| <= 1 for finite-support witnesses. Rational cases
// compare exactly; fractional Lp exponents are certified by a 50-digit
// power-sum evaluation with an explicit slack factor.
bool certified_in_unit_ball(const DecreasingProfile& w, const NormSpec& ball) {
  NormValue nv = norm_of_profile(w, ball);
  if (nv.infinite) return false;
  if (nv.exact) return *nv.exact <= 1;
  if (nv.power_value) return *nv.power_value <= 1;
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  if (ball.kind != NormSpec::Kind::Lp) return nv.approx <= 1.0;  // unreachable for built-ins
  BigFloat p = BigFloat(to_double(ball.p));
  {
    // exact exponent: p as a ratio of its integer parts
    BigFloat num(numerator(ball.p).str());
    BigFloat den(denominator(ball.p).str());
    p = num / den;
  }
  BigFloat sum = 0;
  size_t terms = 0;
  for (const auto& seg : w.segments()) {
    if (seg.length.is_infinite()) return false;
    BigFloat value(numerator(seg.value).str());
    value /= BigFloat(denominator(seg.value).str());
    BigFloat len(numerator(seg.length.finite()).str());
    len /= BigFloat(denominator(seg.length.finite()).str());
    sum += pow(value, p) * len;
    ++terms;
  }
  // ~1e-45 relative error per operation at 50 digits; budget generously.
  BigFloat slack = 1 + BigFloat(static_cast<unsigned>(16 * (terms + 2))) * pow(BigFloat(10), -44);
  return sum * slack <= 1;
}

struct FinalizedWitness {
  DecreasingProfile profile;
  Rat pairing;
};

FinalizedWitness finalize_witness(const Partition& part, std::vector<double> v, const NormD& Fd,
                                  const NormSpec& ball) {
  double nd = Fd(v, part.d.len);
  if (nd > 0 && std::isfinite(nd))
    for (auto& x : v) x /= nd;

  std::vector<Rat> vr(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    vr[i] = (v[i] > 0 && std::isfinite(v[i])) ? rat_from_double(v[i]) : Rat(0);
  for (size_t i = 0; i + 1 < vr.size(); ++i)
    if (vr[i + 1] > vr[i]) vr[i + 1] = vr[i];

  auto build = [&part](const std::vector<Rat>& values) {
    std::vector<ProfileSegment> segs;
    segs.reserve(values.size());
    for (size_t i = 0; i < values.size(); ++i) segs.push_back({ExtRat(part.len[i]), values[i]});
    return DecreasingProfile::from_segments(std::move(segs));
  };

  DecreasingProfile profile = build(vr);
  const Rat gentle = Rat(1) - Rat(Int(1), Int(1) << 34);
  for (int round = 0; round < 64 && !profile.is_zero(); ++round) {
    if (certified_in_unit_ball(profile, ball)) break;
    NormValue nv = norm_of_profile(profile, ball);
    double s = nv.infinite ? 2.0 : std::max(nv.approx, 1.0);
    Rat shrink = rat_from_double(std::nextafter(1.0 / s, 0.0)) * gentle;
    for (auto& x : vr) x *= shrink;
    profile = build(vr);
  }
  if (!profile.is_zero() && !certified_in_unit_ball(profile, ball))
    return {DecreasingProfile(), Rat(0)};  // certification failed; report nothing

  Rat pairing(0);
  for (size_t i = 0; i < vr.size(); ++i) pairing += vr[i] * part.val[i] * part.len[i];
  return {std::move(profile), std::move(pairing)};
}

struct OracleConfig {
  int refinement = 1;
  int sweeps = 24;
  bool tail_diverges = false;
  std::vector<std::vector<double>> extra_candidates;
};

DualNormResult run_oracle(const DecreasingProfile& target, const NormD& Fd,
                          const NormSpec& ball, const OracleConfig& cfg) {
  DualNormResult out;
  out.method = DualNormResult::Method::Oracle;
  if (target.is_zero()) {
    out.value = NormValue::zero();
    return out;
  }
  if (target.infinity_value() > 0 && cfg.tail_diverges) {
    out.value = NormValue::infinity();
    return out;
  }
  Partition part = build_partition(target, cfg.refinement);
  if (part.size() == 0) {
    out.value = NormValue::zero();
    return out;
  }

  auto candidates = standard_candidates(part.d);
  for (const auto& extra : cfg.extra_candidates)
    if (extra.size() == part.size()) candidates.push_back(extra);

  double best_ratio = -1;
  std::vector<double> best;
  for (auto& cand : candidates) {
    double r = ratio_d(cand, part.d, Fd);
    if (r > best_ratio) {
      best_ratio = r;
      best = std::move(cand);
    }
  }
  if (best.empty() || best_ratio <= 0) {
    out.value = NormValue::zero();
    return out;
  }
  best = ascend(std::move(best), part.d, Fd, cfg.sweeps);

  FinalizedWitness fin = finalize_witness(part, std::move(best), Fd, ball);
  out.value = NormValue::from_exact(fin.pairing);
  out.witness = std::move(fin.profile);
  return out;
}

// --- floating norm evaluators on a fixed partition --------------------------

double lp_norm_d(const std::vector<double>& v, const std::vector<double>& len, double p) {
  double s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += std::pow(v[i], p) * len[i];
  return std::pow(s, 1.0 / p);
}

double l1_norm_d(const std::vector<double>& v, const std::vector<double>& len) {
  double s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * len[i];
  return s;
}

// L1+LInf norm of a decreasing vector by scanning the clamp levels.
double sum_norm_d(const std::vector<double>& v, const std::vector<double>& len) {
  if (v.empty()) return 0;
  double best = l1_norm_d(v, len);  // clamp level 0
  double prefix_len = 0, prefix_sum = 0;
  for (size_t j = 0; j < v.size(); ++j) {
    double c = v[j];
    best = std::min(best, prefix_sum - c * prefix_len + c);
    prefix_sum += v[j] * len[j];
    prefix_len += len[j];
  }
  return best;
}

double cap_norm_d(const std::vector<double>& v, const std::vector<double>& len) {
  return v.empty() ? 0 : std::max(l1_norm_d(v, len), v[0]);
}

double spec_norm_d(const NormSpec& spec, const std::vector<double>& v,
                   const std::vector<double>& len) {
  switch (spec.kind) {
    case NormSpec::Kind::Lp: {
      double p = to_double(spec.p);
      return p == 1.0 ? l1_norm_d(v, len) : lp_norm_d(v, len, p);
    }
    case NormSpec::Kind::LInf:
    case NormSpec::Kind::LInfPlusTail:
      return v.empty() ? 0.0 : v[0];  // witnesses here have finite support
    case NormSpec::Kind::L1CapLInf:
      return cap_norm_d(v, len);
    case NormSpec::Kind::L1PlusLInf:
      return sum_norm_d(v, len);
  }
  return 0;
}

// Search-phase approximation of the associate norm of a decreasing vector;
// exact feasibility always goes back through the real oracle.
double assoc_norm_d(const NormSpec& spec, const std::vector<double>& v,
                    const std::vector<double>& len) {
  switch (spec.kind) {
    case NormSpec::Kind::Lp: {
      double p = to_double(spec.p);
      if (p == 1.0) return v.empty() ? 0.0 : v[0];
      return lp_norm_d(v, len, p / (p - 1.0));
    }
    case NormSpec::Kind::LInf:
    case NormSpec::Kind::LInfPlusTail:
      return l1_norm_d(v, len);
    case NormSpec::Kind::L1CapLInf:
      return sum_norm_d(v, len);
    case NormSpec::Kind::L1PlusLInf:
      return cap_norm_d(v, len);
  }
  return 0;
}

// Whether sup{ integral(v * target) } over the relevant unit ball diverges
// for targets with a positive value on infinite mass. Decided per family
// from the growth of the fundamental function of the ball's norm.
bool tail_pairing_diverges(const NormSpec& spec, bool associate_ball) {
  switch (spec.kind) {
    case NormSpec::Kind::Lp:
      if (spec.p == 1) return associate_ball;  // the LInf ball spreads, the L1 ball cannot
      return true;
    case NormSpec::Kind::LInf:
      return !associate_ball;  // associate ball is the L1 ball
    case NormSpec::Kind::L1CapLInf:
      return associate_ball;  // its own ball has unit L1 budget
    case NormSpec::Kind::L1PlusLInf:
      return !associate_ball;
    case NormSpec::Kind::LInfPlusTail:
      return !associate_ball;
  }
  return true;
}

void require_dualizable(const NormSpec& spec) {
  if (spec.kind == NormSpec::Kind::Lp && spec.p < 1)
    raise(Errc::QuasiNormSpec,
          "associate norm refused for a non-normable quasi-norm space; it may be trivial");
}

NormD norm_d_for_spec(const NormSpec& spec) {
  return [spec](const std::vector<double>& v, const std::vector<double>& len) {
    return spec_norm_d(spec, v, len);
  };
}

// Hoelder-optimal witness for the Lp ball: proportional to target^(q-1).
std::vector<double> lagrange_candidate(const PartD& part, double p) {
  std::vector<double> v(part.val.size(), 0.0);
  if (p <= 1.0) return v;
  double qm1 = 1.0 / (p - 1.0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::pow(part.val[i], qm1);
  return v;
}

}  // namespace

DualNormResult dual_norm_oracle_of_profile(const DecreasingProfile& xi_g, const NormSpec& spec,
                                           int refinement) {
  require_dualizable(spec);
  OracleConfig cfg;
  cfg.refinement = refinement;
  cfg.tail_diverges = tail_pairing_diverges(spec, /*associate_ball=*/false);
  if (spec.kind == NormSpec::Kind::Lp && spec.p > 1) {
    Partition part = build_partition(xi_g, refinement);
    cfg.extra_candidates.push_back(lagrange_candidate(part.d, to_double(spec.p)));
  }
  return run_oracle(xi_g, norm_d_for_spec(spec), ball_spec_at_depth(spec, 0), cfg);
}

DualNormResult dual_norm_oracle(const StepFunction& g, const NormSpec& spec, int refinement) {
  return dual_norm_oracle_of_profile(rearrangement(g), spec, refinement);
}

DualNormResult associate_norm_of_profile(const DecreasingProfile& xi_g, const NormSpec& spec) {
  require_dualizable(spec);
  const bool lp_family = spec.kind == NormSpec::Kind::Lp || spec.kind == NormSpec::Kind::LInf;
  if (!lp_family) return dual_norm_oracle_of_profile(xi_g, spec, 1);

  DualNormResult out;
  out.method = DualNormResult::Method::Analytic;

  NormSpec conjugate;
  if (spec.kind == NormSpec::Kind::LInf)
    conjugate = NormSpec::l1();
  else if (spec.p == 1)
    conjugate = NormSpec::linf();
  else
    conjugate = NormSpec::lp(spec.p / (spec.p - 1));
  out.value = norm_of_profile(xi_g, conjugate);
  if (out.value.infinite || xi_g.is_zero()) return out;  // empty witness: diverging family

  Partition part = build_partition(xi_g, 1);
  std::vector<double> shape;
  if (spec.kind == NormSpec::Kind::LInf)
    shape.assign(part.size(), 1.0);
  else if (spec.p == 1) {
    shape.assign(part.size(), 0.0);
    if (!shape.empty()) shape[0] = 1.0;
  } else {
    shape = lagrange_candidate(part.d, to_double(spec.p));
  }
  out.witness =
      finalize_witness(part, std::move(shape), norm_d_for_spec(spec), ball_spec_at_depth(spec, 0))
          .profile;
  return out;
}

DualNormResult associate_norm(const StepFunction& g, const NormSpec& spec) {
  return associate_norm_of_profile(rearrangement(g), spec);
}

NormValue second_associate_of_profile(const DecreasingProfile& xi_f, const NormSpec& spec) {
  require_dualizable(spec);
  OracleConfig cfg;
  cfg.tail_diverges = tail_pairing_diverges(spec, /*associate_ball=*/true);
  if (spec.kind == NormSpec::Kind::Lp && spec.p > 1) {
    Partition part = build_partition(xi_f, 1);
    double q = to_double(spec.p) / (to_double(spec.p) - 1.0);
    cfg.extra_candidates.push_back(lagrange_candidate(part.d, q));
  }
  NormD Fd = [spec](const std::vector<double>& v, const std::vector<double>& len) {
    return assoc_norm_d(spec, v, len);
  };
  return run_oracle(xi_f, Fd, ball_spec_at_depth(spec, 1), cfg).value;
}

NormValue second_associate_norm(const StepFunction& f, const NormSpec& spec) {
  return second_associate_of_profile(rearrangement(f), spec);
}

NormValue third_associate_norm(const StepFunction& g, const NormSpec& spec) {
  require_dualizable(spec);
  // Unit ball of the second associate: every floating evaluation runs a
  // nested search against the floating associate norm.
  NormD assoc_d = [spec](const std::vector<double>& v, const std::vector<double>& len) {
    return assoc_norm_d(spec, v, len);
  };
  NormD second_d = [spec, assoc_d](const std::vector<double>& v, const std::vector<double>& len) {
    PartD part{len, v};
    auto candidates = standard_candidates(part);
    if (spec.kind == NormSpec::Kind::Lp && spec.p > 1)
      candidates.push_back(lagrange_candidate(part, to_double(spec.p) / (to_double(spec.p) - 1.0)));
    double best = -1;
    std::vector<double> best_v;
    for (auto& cand : candidates) {
      double r = ratio_d(cand, part, assoc_d);
      if (r > best) {
        best = r;
        best_v = std::move(cand);
      }
    }
    if (best_v.empty()) return 0.0;
    best_v = ascend(std::move(best_v), part, assoc_d, 8);
    return ratio_d(best_v, part, assoc_d);
  };
  OracleConfig cfg;
  cfg.sweeps = 12;
  cfg.tail_diverges = tail_pairing_diverges(spec, /*associate_ball=*/false);
  DecreasingProfile xi_g = rearrangement(g);
  if (spec.kind == NormSpec::Kind::Lp && spec.p > 1) {
    Partition part = build_partition(xi_g, 1);
    cfg.extra_candidates.push_back(lagrange_candidate(part.d, to_double(spec.p)));
  }
  return run_oracle(xi_g, second_d, ball_spec_at_depth(spec, 2), cfg).value;
}

namespace {

std::vector<const StepFunction*> pointer_view(const std::vector<StepFunction>& fs,
                                              const StepFunction& last) {
  std::vector<const StepFunction*> ptrs;
  ptrs.reserve(fs.size() + 1);
  for (const auto& f : fs) ptrs.push_back(&f);
  ptrs.push_back(&last);
  return ptrs;
}

}  // namespace

PropertyCGap property_C_gap(const std::vector<StepFunction>& chain, const StepFunction& limit,
                            const NormSpec& spec) {
  if (chain.empty()) raise(Errc::InvalidInput, "empty chain");
  for (const auto& f : chain)
    if (!(f.space() == limit.space())) raise(Errc::SpaceMismatch, "chain on mixed spaces");

  auto refined = common_refinement(pointer_view(chain, limit));
  const size_t n = chain.size();
  for (const auto& rp : refined) {
    if (rp.values[0] < 0) raise(Errc::NotAChain, "chain must be nonnegative");
    for (size_t i = 0; i + 1 < n; ++i)
      if (rp.values[i] > rp.values[i + 1]) raise(Errc::NotAChain, "chain must be non-decreasing");
    if (rp.values[n - 1] > rp.values[n])
      raise(Errc::NotAChain, "chain must stay below its limit");
  }
  if (limit.space().is_infinite()) {
    Rat prev(0);
    for (const auto& f : chain) {
      if (f.tail_value() < prev) raise(Errc::NotAChain, "tail values must be non-decreasing");
      prev = f.tail_value();
    }
    if (prev > limit.tail_value()) raise(Errc::NotAChain, "chain must stay below its limit");
  }

  PropertyCGap out;
  out.sup_chain_norm = norm(chain.front(), spec);
  for (size_t i = 1; i < chain.size(); ++i)
    out.sup_chain_norm = norm_max(out.sup_chain_norm, norm(chain[i], spec));
  out.limit_norm = norm(limit, spec);
  out.gap = norm_sub(out.limit_norm, out.sup_chain_norm);
  return out;
}

FatouCheck fatou_check(const std::vector<StepFunction>& sequence, const StepFunction& limit,
                       const NormSpec& spec) {
  if (sequence.empty()) raise(Errc::InvalidInput, "empty sequence");
  for (const auto& f : sequence)
    if (!(f.space() == limit.space())) raise(Errc::SpaceMismatch, "sequence on mixed spaces");

  auto refined = common_refinement(pointer_view(sequence, limit));
  const size_t n = sequence.size();
  auto gap = [](const Rat& a, const Rat& b) { return a >= b ? a - b : b - a; };
  for (const auto& rp : refined)
    for (size_t i = 0; i + 1 < n; ++i)
      if (gap(rp.values[i + 1], rp.values[n]) > gap(rp.values[i], rp.values[n]))
        raise(Errc::NoConvergence, "pointwise distance to the limit increased");
  if (limit.space().is_infinite())
    for (size_t i = 0; i + 1 < n; ++i)
      if (gap(sequence[i + 1].tail_value(), limit.tail_value()) >
          gap(sequence[i].tail_value(), limit.tail_value()))
        raise(Errc::NoConvergence, "tail distance to the limit increased");

  FatouCheck out;
  out.norms.reserve(n);
  bool bounded = true;
  for (const auto& f : sequence) {
    out.norms.push_back(norm(f, spec));
    if (out.norms.back().infinite) bounded = false;
  }
  out.limit_norm = norm(limit, spec);
  // A finite list cannot certify sup_n ||f_n|| < inf when the limit escapes
  // the space; treat that as the unbounded case.
  if (out.limit_norm.infinite) bounded = false;
  size_t tail_begin = n / 2;
  out.liminf_norm = out.norms[tail_begin];
  for (size_t i = tail_begin + 1; i < n; ++i)
    if (norm_compare(out.norms[i], out.liminf_norm).sign < 0) out.liminf_norm = out.norms[i];
  if (!bounded) {
    out.status = FatouStatus::NotApplicable;
    return out;
  }
  out.status = norm_leq(out.limit_norm, out.liminf_norm) ? FatouStatus::Holds : FatouStatus::Fails;
  return out;
}

}  // namespace symspace
