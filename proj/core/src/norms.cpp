#include "symspace/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symspace {

namespace {

struct SmallExp {
  unsigned num = 1;
  unsigned den = 1;
};

// Exponent as a pair of machine integers; comparisons on powers need the
// products of exponents to stay small.
std::optional<SmallExp> small_exponent(const Rat& p) {
  if (p <= 0) return std::nullopt;
  Int n = numerator(p), d = denominator(p);
  if (n > 64 || d > 64) return std::nullopt;
  return SmallExp{n.template convert_to<unsigned>(), d.template convert_to<unsigned>()};
}

double power_approx(const Rat& power_value, const Rat& power) {
  return std::pow(to_double(power_value), 1.0 / to_double(power));
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

NormSpec NormSpec::lp(Rat p) {
  if (p <= 0) raise(Errc::InvalidInput, "Lp requires p > 0");
  return NormSpec{Kind::Lp, std::move(p)};
}

std::string NormSpec::name() const {
  switch (kind) {
    case Kind::Lp: return "Lp:" + rat_to_string(p);
    case Kind::LInf: return "LInf";
    case Kind::L1CapLInf: return "L1CapLInf";
    case Kind::L1PlusLInf: return "L1PlusLInf";
    case Kind::LInfPlusTail: return "LInfPlusTail";
  }
  return "?";
}

NormValue NormValue::zero() { return from_exact(Rat(0)); }

NormValue NormValue::from_exact(Rat value) {
  NormValue v;
  v.exact = std::move(value);
  v.approx = to_double(*v.exact);
  return v;
}

NormValue NormValue::from_power(Rat power_value, Rat power) {
  if (power_value < 0) raise(Errc::InvalidInput, "norm power must be nonnegative");
  if (auto exp = small_exponent(power)) {
    if (auto root = rroot_exact(rpow(power_value, exp->den), exp->num))
      return from_exact(std::move(*root));
  }
  NormValue v;
  v.power_value = std::move(power_value);
  v.power = std::move(power);
  v.approx = power_approx(*v.power_value, v.power);
  return v;
}

NormValue NormValue::from_approx(double value) {
  NormValue v;
  v.approx = value;
  return v;
}

NormValue NormValue::infinity() {
  NormValue v;
  v.infinite = true;
  v.approx = std::numeric_limits<double>::infinity();
  return v;
}

NormOrder norm_compare(const NormValue& a, const NormValue& b) {
  if (a.infinite || b.infinite) {
    if (a.infinite && b.infinite) return {0, true};
    return {a.infinite ? 1 : -1, true};
  }
  if (a.exact && b.exact) return {sign_of(*a.exact - *b.exact), true};
  if (a.exact && b.power_value) {
    if (*a.exact < 0) return {-1, true};
    if (auto exp = small_exponent(b.power)) {
      // a vs w^(den/num)  <=>  a^num vs w^den
      return {sign_of(rpow(*a.exact, exp->num) - rpow(*b.power_value, exp->den)), true};
    }
  }
  if (b.exact && a.power_value) {
    NormOrder rev = norm_compare(b, a);
    if (rev.exact) return {-rev.sign, true};
  }
  if (a.power_value && b.power_value) {
    auto ea = small_exponent(a.power);
    auto eb = small_exponent(b.power);
    if (ea && eb && ea->num * eb->num <= 64) {
      // w1^(d1/n1) vs w2^(d2/n2), both raised to n1*n2
      Rat lhs = rpow(*a.power_value, ea->den * eb->num);
      Rat rhs = rpow(*b.power_value, eb->den * ea->num);
      return {sign_of(lhs - rhs), true};
    }
  }
  double scale = std::max({1.0, std::fabs(a.approx), std::fabs(b.approx)});
  if (std::fabs(a.approx - b.approx) <= approx_tolerance() * scale) return {0, false};
  return {a.approx < b.approx ? -1 : 1, false};
}

bool norm_leq(const NormValue& a, const NormValue& b) { return norm_compare(a, b).sign <= 0; }

bool norm_close(const NormValue& a, const NormValue& b, double rel_tol) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  if (a.exact && b.exact && *a.exact == *b.exact) return true;
  double scale = std::max({1.0, std::fabs(a.approx), std::fabs(b.approx)});
  return std::fabs(a.approx - b.approx) <= rel_tol * scale;
}

NormValue norm_scale(const NormValue& v, const Rat& c) {
  if (c < 0) raise(Errc::InvalidInput, "norm scale must be nonnegative");
  if (c == 0) return NormValue::zero();
  if (v.infinite) return NormValue::infinity();
  if (v.exact) return NormValue::from_exact(*v.exact * c);
  if (v.power_value) {
    if (auto exp = small_exponent(v.power)) {
      // (c*x)^p = c^p * x^p with c^p rational iff c^num has an exact den-root
      if (auto cp = rroot_exact(rpow(c, exp->num), exp->den))
        return NormValue::from_power(*cp * *v.power_value, v.power);
    }
  }
  return NormValue::from_approx(v.approx * to_double(c));
}

NormValue norm_add(const NormValue& a, const NormValue& b) {
  if (a.infinite || b.infinite) return NormValue::infinity();
  if (a.exact && b.exact) return NormValue::from_exact(*a.exact + *b.exact);
  return NormValue::from_approx(a.approx + b.approx);
}

NormValue norm_sub(const NormValue& a, const NormValue& b) {
  if (a.infinite && b.infinite) return NormValue::zero();  // no gap certified
  if (a.infinite) return NormValue::infinity();
  if (a.exact && b.exact) return NormValue::from_exact(*a.exact - *b.exact);
  return NormValue::from_approx(a.approx - b.approx);
}

NormValue norm_max(const NormValue& a, const NormValue& b) {
  return norm_compare(a, b).sign >= 0 ? a : b;
}

namespace {

Rat abs_rat(const Rat& v) { return v < 0 ? -v : v; }

NormValue linf_norm(const StepFunction& f) {
  Rat top(0);
  for (const auto& p : f.pieces())
    if (p.mass > 0) top = std::max(top, abs_rat(p.value));
  if (f.space().is_infinite()) top = std::max(top, f.tail_value());
  return NormValue::from_exact(top);
}

NormValue lp_norm(const StepFunction& f, const Rat& p) {
  if (f.space().is_infinite() && f.tail_value() > 0) return NormValue::infinity();
  auto exp = small_exponent(p);
  if (exp) {
    // The power integral is rational whenever every |value|^p is; always the
    // case for integer p, and for fractional p on perfect-power values.
    Rat power_sum(0);
    bool exact = true;
    for (const auto& piece : f.pieces()) {
      Rat term = rpow(abs_rat(piece.value), exp->num);
      if (exp->den != 1) {
        auto root = rroot_exact(term, exp->den);
        if (!root) {
          exact = false;
          break;
        }
        term = *root;
      }
      power_sum += term * piece.mass;
    }
    if (exact) return NormValue::from_power(std::move(power_sum), p);
  }
  double pd = to_double(p);
  double sum = 0;
  for (const auto& piece : f.pieces())
    sum += std::pow(std::fabs(to_double(piece.value)), pd) * to_double(piece.mass);
  if (sum == 0) return NormValue::zero();
  return NormValue::from_approx(std::pow(sum, 1.0 / pd));
}

NormValue l1_norm(const StepFunction& f) { return lp_norm(f, Rat(1)); }

}  // namespace

NormValue norm(const StepFunction& f, const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::Lp:
      return lp_norm(f, spec.p);
    case NormSpec::Kind::LInf:
      return linf_norm(f);
    case NormSpec::Kind::L1CapLInf:
      return norm_max(l1_norm(f), linf_norm(f));
    case NormSpec::Kind::L1PlusLInf:
      return decompose_l1_linf(f).value;
    case NormSpec::Kind::LInfPlusTail: {
      Rat tail = f.space().is_infinite() ? f.tail_value() : Rat(0);
      return norm_add(linf_norm(f), NormValue::from_exact(tail));
    }
  }
  raise(Errc::InvalidInput, "unknown norm spec");
}

NormValue norm_of_profile(const DecreasingProfile& xi, const NormSpec& spec) {
  return norm(xi.as_step_function(), spec);
}

L1LInfDecomposition decompose_l1_linf(const StepFunction& f) {
  StepFunction cf = canonicalize(f);
  const Rat tail = cf.space().is_infinite() ? cf.tail_value() : Rat(0);
  Rat vmax = tail;
  for (const auto& p : cf.pieces()) vmax = std::max(vmax, abs_rat(p.value));

  std::vector<Rat> candidates;
  candidates.push_back(Rat(0));
  candidates.push_back(tail);
  for (const auto& p : cf.pieces()) candidates.push_back(abs_rat(p.value));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The objective is piecewise linear in the cut level with knots exactly at
  // the attained |values|, so scanning the knots finds the true minimum.
  bool have = false;
  Rat best_value(0), best_cut(0);
  for (const auto& c : candidates) {
    if (c < tail) continue;  // the L1 part would carry infinite mass
    Rat l1_part(0);
    for (const auto& p : cf.pieces()) {
      Rat a = abs_rat(p.value);
      if (a > c) l1_part += (a - c) * p.mass;
    }
    Rat value = l1_part + std::min(c, vmax);
    if (!have || value < best_value) {
      have = true;
      best_value = value;
      best_cut = c;
    }
  }

  std::vector<Piece> bulk_pieces = cf.pieces();
  std::vector<Piece> peak_pieces = cf.pieces();
  const Rat neg_cut = -best_cut;
  for (size_t i = 0; i < bulk_pieces.size(); ++i) {
    Rat v = cf.pieces()[i].value;
    Rat clamped = std::min(std::max(v, neg_cut), best_cut);
    bulk_pieces[i].value = clamped;
    peak_pieces[i].value = v - clamped;
  }
  StepFunction bulk(cf.space(), std::move(bulk_pieces), std::min(tail, best_cut));
  StepFunction peak(cf.space(), std::move(peak_pieces), tail - std::min(tail, best_cut));
  return L1LInfDecomposition{std::move(peak), std::move(bulk),
                             NormValue::from_exact(best_value), best_cut};
}

NormValue fundamental_function(const NormSpec& spec, const Rat& t) {
  if (t < 0) raise(Errc::InvalidInput, "fundamental function needs t >= 0");
  if (t == 0) return NormValue::zero();
  auto indicator = DecreasingProfile::from_segments({{ExtRat(t), Rat(1)}});
  return norm_of_profile(indicator, spec);
}

EmbeddingCheck embedding_check(const StepFunction& f, const NormSpec& spec) {
  if (!spec.is_banach())
    raise(Errc::QuasiNormSpec, "embedding bounds are stated for Banach norms");
  NormValue phi1 = fundamental_function(spec, Rat(1));
  if (!phi1.exact) raise(Errc::InvalidInput, "fundamental function at 1 must be rational");
  EmbeddingCheck out;
  out.lhs = norm_scale(norm(f, NormSpec::l1_cap_linf()), *phi1.exact);
  out.mid = norm(f, spec);
  out.rhs = norm_scale(norm(f, NormSpec::l1_plus_linf()), *phi1.exact);
  out.holds = norm_leq(out.mid, out.lhs) && norm_leq(out.rhs, out.mid);
  return out;
}

NormValue aoki_rolewicz_exponent(const Rat& concavity_modulus) {
  if (concavity_modulus < 1) raise(Errc::InvalidConstant, "modulus of concavity must be >= 1");
  if (concavity_modulus == 1) return NormValue::from_exact(Rat(1));
  Int n = numerator(concavity_modulus), d = denominator(concavity_modulus);
  auto is_pow2 = [](const Int& x) { return x > 0 && boost::multiprecision::lsb(x) == boost::multiprecision::msb(x); };
  if (is_pow2(n) && is_pow2(d)) {
    // C = 2^k gives ln2 / (ln2 + k ln2) = 1/(1+k)
    long k = static_cast<long>(boost::multiprecision::msb(n)) -
             static_cast<long>(boost::multiprecision::msb(d));
    return NormValue::from_exact(Rat(1, 1 + k));
  }
  double c = to_double(concavity_modulus);
  return NormValue::from_approx(std::log(2.0) / (std::log(2.0) + std::log(c)));
}

PSubadditivityCheck p_subadditivity_check(const StepFunction& f, const StepFunction& g,
                                          const Rat& p) {
  if (p <= 0 || p > 1) raise(Errc::InvalidInput, "p-subadditivity is stated for 0 < p <= 1");
  if (!(f.space() == g.space())) raise(Errc::SpaceMismatch, "operands on different spaces");
  if (f.space().is_infinite() && (f.tail_value() > 0 || g.tail_value() > 0))
    raise(Errc::NormInfinite, "quasi-norm is infinite for a positive tail value");

  auto refined = common_refinement({&f, &g});
  auto exp = small_exponent(p);

  PSubadditivityCheck out;
  if (exp && exp->den <= 3) {
    // Per-piece brackets |x|^p + |y|^p - |x+y|^p share a sign, so the sums
    // compare exactly: equal iff every bracket vanishes.
    Rat lhs_pow(0), rhs_pow(0);  // meaningful only for den == 1
    bool all_zero = true;
    bool all_nonneg = true;
    double lhs_d = 0, rhs_d = 0;
    double pd = to_double(p);
    for (const auto& rp : refined) {
      Rat x = abs_rat(rp.values[0]);
      Rat y = abs_rat(rp.values[1]);
      Rat s = abs_rat(rp.values[0] + rp.values[1]);
      Rat A = rpow(s, exp->num), B = rpow(x, exp->num), C = rpow(y, exp->num);
      int sign = root_sum_gap_sign(A, B, C, exp->den);
      if (sign < 0) all_nonneg = false;
      if (sign != 0) all_zero = false;
      if (exp->den == 1) {
        lhs_pow += A * rp.mass;
        rhs_pow += (B + C) * rp.mass;
      }
      double md = to_double(rp.mass);
      lhs_d += std::pow(to_double(s), pd) * md;
      rhs_d += (std::pow(to_double(x), pd) + std::pow(to_double(y), pd)) * md;
    }
    out.lhs = exp->den == 1 ? NormValue::from_exact(lhs_pow) : NormValue::from_approx(lhs_d);
    out.rhs = exp->den == 1 ? NormValue::from_exact(rhs_pow) : NormValue::from_approx(rhs_d);
    out.holds = all_nonneg;
    out.exact = true;
    out.equality = all_zero;
    return out;
  }

  double pd = to_double(p);
  double lhs = 0, rhs = 0;
  for (const auto& rp : refined) {
    double md = to_double(rp.mass);
    lhs += std::pow(std::fabs(to_double(rp.values[0] + rp.values[1])), pd) * md;
    rhs += (std::pow(std::fabs(to_double(rp.values[0])), pd) +
            std::pow(std::fabs(to_double(rp.values[1])), pd)) *
           md;
  }
  out.lhs = NormValue::from_approx(lhs);
  out.rhs = NormValue::from_approx(rhs);
  out.holds = lhs <= rhs + approx_tolerance() * std::max({1.0, lhs, rhs});
  out.exact = false;
  return out;
}

namespace {

// xi - min(xi, n): the part of the profile above the level n.
DecreasingProfile profile_excess_above(const DecreasingProfile& xi, const Rat& level) {
  std::vector<ProfileSegment> segments;
  for (const auto& seg : xi.segments()) {
    if (seg.value > level) segments.push_back({seg.length, seg.value - level});
  }
  return DecreasingProfile::from_segments(std::move(segments));
}

// xi * 1_[n, inf) rearranged, i.e. the profile shifted left by n.
DecreasingProfile profile_shift_left(const DecreasingProfile& xi, const Rat& amount) {
  std::vector<ProfileSegment> segments;
  Rat to_skip = amount;
  for (const auto& seg : xi.segments()) {
    if (seg.length.is_infinite()) {
      segments.push_back(seg);
      continue;
    }
    Rat len = seg.length.finite();
    if (to_skip >= len) {
      to_skip -= len;
      continue;
    }
    segments.push_back({ExtRat(len - to_skip), seg.value});
    to_skip = 0;
  }
  return DecreasingProfile::from_segments(std::move(segments));
}

}  // namespace

std::vector<CutoffEntry> cutoff_sequences(const StepFunction& f, const NormSpec& spec, int n_max) {
  NormValue base = norm(f, spec);
  if (base.infinite) raise(Errc::NormInfinite, "cutoff diagnostics need a finite norm");
  if (n_max < 1) raise(Errc::InvalidInput, "n_max must be positive");
  DecreasingProfile xi = rearrangement(f);
  std::vector<CutoffEntry> out;
  out.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    CutoffEntry entry;
    entry.n = n;
    entry.top_residual = norm_of_profile(profile_excess_above(xi, Rat(n)), spec);
    entry.support_residual = norm_of_profile(profile_shift_left(xi, Rat(n)), spec);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace symspace
