#include <doctest.h>

#include <cmath>

#include "symspace/duality.hpp"
#include "symspace/random_instances.hpp"

using namespace symspace;

namespace {

StepFunction make(std::vector<Piece> pieces) {
  Rat total(0);
  for (const auto& p : pieces) total += p.mass;
  return StepFunction(MeasureSpace::finite(total), std::move(pieces));
}

StepFunction f0() { return make({{Rat(3), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1, 2)}}); }

StepFunction one_with_unit_tail() { return StepFunction(MeasureSpace::infinite(), {}, Rat(1)); }

DecreasingProfile profile(std::vector<std::pair<ExtRat, Rat>> segs) {
  std::vector<ProfileSegment> out;
  for (auto& [len, val] : segs) out.push_back({len, val});
  return DecreasingProfile::from_segments(std::move(out));
}

const double kTol20 = std::ldexp(1.0, -20);
const double kTol30 = std::ldexp(1.0, -30);

}  // namespace

TEST_CASE("pairing of decreasing profiles") {
  DecreasingProfile a = profile({{ExtRat(Rat(1)), Rat(3)}, {ExtRat(Rat(1)), Rat(1)}});
  DecreasingProfile b = profile({{ExtRat(Rat(1)), Rat(2)}, {ExtRat(Rat(1)), Rat(1)}});
  CHECK(hl_pairing(a, b) == ExtRat(Rat(7)));
  CHECK(hl_pairing(a, DecreasingProfile()) == ExtRat(Rat(0)));
  CHECK(hl_pairing(profile({{ExtRat::infinity(), Rat(1)}}), profile({{ExtRat::infinity(), Rat(2)}}))
            .is_infinite());
  // finite against infinite stays finite
  CHECK(hl_pairing(a, profile({{ExtRat::infinity(), Rat(2)}})) == ExtRat(Rat(8)));

  // aligned pairing of the two-piece case is dominated: 1*2 + 3*1 = 5 <= 7
  StepFunction f = make({{Rat(1), Rat(1)}, {Rat(3), Rat(1)}});
  StepFunction g = make({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(integrate(abs(pointwise(f, g, PointwiseOp::Multiply))) == ExtRat(Rat(5)));
  CHECK(hl_pairing(rearrangement(f), rearrangement(g)) == ExtRat(Rat(7)));
}

TEST_CASE("associate norms along the conjugate-exponent family") {
  StepFunction g = make({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  auto res = associate_norm(g, NormSpec::lp(Rat(2)));
  CHECK(res.method == DualNormResult::Method::Analytic);
  REQUIRE(res.value.power_value.has_value());
  CHECK(*res.value.power_value == Rat(5));  // sqrt(5)
  NormValue wn = norm_of_profile(res.witness, NormSpec::lp(Rat(2)));
  CHECK(wn.approx <= 1.0 + kTol30);
  ExtRat paired = hl_pairing(res.witness, rearrangement(g));
  CHECK(to_double(paired.finite()) == doctest::Approx(std::sqrt(5.0)).epsilon(kTol20));

  auto indicator = StepFunction::indicator(MeasureSpace::finite(Rat(2)), Rat(1));
  CHECK(associate_norm(indicator, NormSpec::l1()).value.is_exactly(Rat(1)));
  CHECK(associate_norm(indicator, NormSpec::linf()).value.is_exactly(Rat(1)));

  // a constant on infinite mass escapes the dual of the tail-augmented norm
  CHECK(associate_norm(one_with_unit_tail(), NormSpec::linf_plus_tail()).value.infinite);
  CHECK_THROWS_AS(associate_norm(g, NormSpec::lp(Rat(1, 2))), Error);
}

TEST_CASE("oracle agrees with the analytic route") {
  StepFunction g = make({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  for (const auto& spec : {NormSpec::l1(), NormSpec::lp(Rat(3, 2)), NormSpec::lp(Rat(2)),
                           NormSpec::lp(Rat(3)), NormSpec::linf()}) {
    auto analytic = associate_norm(g, spec);
    auto oracle = dual_norm_oracle(g, spec);
    CHECK(oracle.method == DualNormResult::Method::Oracle);
    CHECK(norm_close(analytic.value, oracle.value, kTol20));
  }
}

TEST_CASE("oracle reproduces the classical conjugates of the mixed norms") {
  SplitMix64 rng(5);
  StepFunctionOptions opt;
  opt.max_pieces = 6;
  opt.allow_negative = false;
  opt.allow_tail = false;
  for (int i = 0; i < 40; ++i) {
    StepFunction g = random_step_function(rng, opt);
    NormValue cap_dual = dual_norm_oracle(g, NormSpec::l1_cap_linf()).value;
    NormValue sum_norm = norm(g, NormSpec::l1_plus_linf());
    CHECK(norm_close(cap_dual, sum_norm, kTol20));

    NormValue sum_dual = dual_norm_oracle(g, NormSpec::l1_plus_linf()).value;
    NormValue cap_norm = norm(g, NormSpec::l1_cap_linf());
    CHECK(norm_close(sum_dual, cap_norm, kTol20));

    NormValue tail_dual = dual_norm_oracle(g, NormSpec::linf_plus_tail()).value;
    NormValue l1_norm = norm(g, NormSpec::l1());
    CHECK(norm_close(tail_dual, l1_norm, kTol20));
  }
}

TEST_CASE("finer grids cannot beat the partition-aligned optimum") {
  SplitMix64 rng(17);
  StepFunctionOptions opt;
  opt.max_pieces = 5;
  opt.allow_negative = false;
  opt.allow_tail = false;
  for (int i = 0; i < 15; ++i) {
    StepFunction g = random_step_function(rng, opt);
    for (const auto& spec : {NormSpec::lp(Rat(2)), NormSpec::l1_cap_linf(),
                             NormSpec::l1_plus_linf(), NormSpec::linf_plus_tail()}) {
      double coarse = dual_norm_oracle(g, spec, 1).value.approx;
      for (int refinement : {2, 3}) {
        double fine = dual_norm_oracle(g, spec, refinement).value.approx;
        CHECK(fine <= coarse * (1.0 + kTol20) + kTol20);
      }
    }
  }
}

TEST_CASE("second associate norms") {
  NormValue v = second_associate_norm(f0(), NormSpec::lp(Rat(2)));
  CHECK(v.approx == doctest::Approx(std::sqrt(13.0)).epsilon(kTol20));
  CHECK(norm_leq(v, norm(f0(), NormSpec::lp(Rat(2)))));

  // the flat function with a unit tail contracts strictly
  NormValue tail_second = second_associate_norm(one_with_unit_tail(), NormSpec::linf_plus_tail());
  CHECK(tail_second.approx == doctest::Approx(1.0).epsilon(kTol20));
  CHECK(norm(one_with_unit_tail(), NormSpec::linf_plus_tail()).is_exactly(Rat(2)));
  CHECK(norm_leq(tail_second, NormValue::from_exact(Rat(1))));

  CHECK(second_associate_norm(StepFunction::zero(MeasureSpace::finite(Rat(1))), NormSpec::l1())
            .is_exactly(Rat(0)));
}

TEST_CASE("monotone chain gap detects the broken semicontinuity") {
  std::vector<StepFunction> chain;
  for (int n = 1; n <= 6; ++n)
    chain.push_back(StepFunction(MeasureSpace::infinite(), {{Rat(1), Rat(n)}}, Rat(0)));
  StepFunction limit = one_with_unit_tail();

  auto gap = property_C_gap(chain, limit, NormSpec::linf_plus_tail());
  CHECK(gap.sup_chain_norm.is_exactly(Rat(1)));
  CHECK(gap.limit_norm.is_exactly(Rat(2)));
  CHECK(gap.gap.is_exactly(Rat(1)));

  auto flat = property_C_gap(chain, limit, NormSpec::linf());
  CHECK(flat.sup_chain_norm.is_exactly(Rat(1)));
  CHECK(flat.limit_norm.is_exactly(Rat(1)));
  CHECK(flat.gap.is_exactly(Rat(0)));

  std::vector<StepFunction> constant(3, f0());
  for (const auto& spec : {NormSpec::l1(), NormSpec::lp(Rat(2)), NormSpec::l1_plus_linf()})
    CHECK(property_C_gap(constant, f0(), spec).gap.is_exactly(Rat(0)));

  std::vector<StepFunction> broken = {make({{Rat(2), Rat(1)}}), make({{Rat(1), Rat(1)}})};
  CHECK_THROWS_AS(property_C_gap(broken, make({{Rat(3), Rat(1)}}), NormSpec::l1()), Error);
}

TEST_CASE("finite Fatou surrogate") {
  SUBCASE("unbounded premise is not applicable") {
    std::vector<StepFunction> seq;
    for (int n = 1; n <= 4; ++n)
      seq.push_back(StepFunction(MeasureSpace::infinite(), {{Rat(1), Rat(n)}}, Rat(0)));
    auto res = fatou_check(seq, one_with_unit_tail(), NormSpec::l1());
    CHECK(res.status == FatouStatus::NotApplicable);
  }
  SUBCASE("stabilized scalar approach holds") {
    std::vector<StepFunction> seq;
    for (int n = 1; n <= 4; ++n) seq.push_back(scale(f0(), Rat(n - 1, n)));
    for (int k = 0; k < 4; ++k) seq.push_back(f0());
    auto res = fatou_check(seq, f0(), NormSpec::lp(Rat(2)));
    CHECK(res.status == FatouStatus::Holds);
    CHECK(res.liminf_norm.approx == doctest::Approx(std::sqrt(13.0)));
    CHECK(res.limit_norm.approx == doctest::Approx(std::sqrt(13.0)));
  }
  SUBCASE("oscillating signs are flagged") {
    std::vector<StepFunction> seq = {f0(), scale(f0(), Rat(-1)), f0(), scale(f0(), Rat(-1))};
    CHECK_THROWS_AS(fatou_check(seq, f0(), NormSpec::l1()), Error);
  }
}

TEST_CASE("norming property of the associate ball on semicontinuous specs") {
  SplitMix64 rng(23);
  StepFunctionOptions opt;
  opt.max_pieces = 6;
  opt.allow_negative = false;
  opt.allow_tail = false;
  for (int i = 0; i < 15; ++i) {
    StepFunction f = random_step_function(rng, opt);
    for (const auto& spec : {NormSpec::l1(), NormSpec::lp(Rat(2)), NormSpec::linf(),
                             NormSpec::l1_cap_linf(), NormSpec::l1_plus_linf()}) {
      NormValue second = second_associate_norm(f, spec);
      NormValue base = norm(f, spec);
      CHECK(norm_leq(second, base));
      CHECK(norm_close(second, base, kTol20));
    }
  }
}
