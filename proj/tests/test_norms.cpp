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

}  // namespace

TEST_CASE("norms of the running example") {
  CHECK(norm(f0(), NormSpec::l1()).is_exactly(Rat(6)));
  CHECK(norm(f0(), NormSpec::linf()).is_exactly(Rat(3)));
  CHECK(norm(f0(), NormSpec::l1_cap_linf()).is_exactly(Rat(6)));
  CHECK(norm(f0(), NormSpec::l1_plus_linf()).is_exactly(Rat(3)));
  NormValue l2 = norm(f0(), NormSpec::lp(Rat(2)));
  REQUIRE(l2.power_value.has_value());
  CHECK(*l2.power_value == Rat(13));
  CHECK(l2.power == Rat(2));
  CHECK(l2.approx == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));
}

TEST_CASE("the tail-augmented sup norm doubles on the flat function") {
  StepFunction f = one_with_unit_tail();
  CHECK(norm(f, NormSpec::linf_plus_tail()).is_exactly(Rat(2)));
  CHECK(norm(f, NormSpec::linf()).is_exactly(Rat(1)));
  CHECK(norm(f, NormSpec::l1()).infinite);
}

TEST_CASE("every norm of the zero function vanishes") {
  StepFunction z = StepFunction::zero(MeasureSpace::finite(Rat(3)));
  for (const auto& spec : {NormSpec::l1(), NormSpec::lp(Rat(1, 2)), NormSpec::lp(Rat(2)),
                           NormSpec::linf(), NormSpec::l1_cap_linf(), NormSpec::l1_plus_linf(),
                           NormSpec::linf_plus_tail()})
    CHECK(norm(z, spec).is_exactly(Rat(0)));
}

TEST_CASE("norm transfer through the profile") {
  DecreasingProfile xi = rearrangement(f0());
  CHECK(*norm_of_profile(xi, NormSpec::lp(Rat(2))).power_value == Rat(13));
  CHECK(norm_of_profile(xi, NormSpec::l1()).is_exactly(Rat(6)));
  DecreasingProfile flat =
      DecreasingProfile::from_segments({{ExtRat::infinity(), Rat(1)}});
  CHECK(norm_of_profile(flat, NormSpec::l1()).infinite);
}

TEST_CASE("optimal sum-norm decomposition") {
  auto dec = decompose_l1_linf(f0());
  CHECK(dec.value.is_exactly(Rat(3)));
  CHECK(dec.cut_level == Rat(2));
  CHECK(ae_equal(pointwise(dec.peak, dec.bulk, PointwiseOp::Add), f0()));
  CHECK(norm(dec.bulk, NormSpec::linf()).is_exactly(Rat(2)));
  CHECK(norm(dec.peak, NormSpec::l1()).is_exactly(Rat(1)));

  auto half = decompose_l1_linf(StepFunction::indicator(MeasureSpace::finite(Rat(1)), Rat(1, 2)));
  CHECK(half.value.is_exactly(Rat(1, 2)));
  CHECK(half.cut_level == Rat(0));

  auto zero = decompose_l1_linf(StepFunction::zero(MeasureSpace::finite(Rat(1))));
  CHECK(zero.value.is_exactly(Rat(0)));
}

TEST_CASE("sum norm equals the unit-initial integral of the rearrangement") {
  SplitMix64 rng(99);
  for (int i = 0; i < 200; ++i) {
    StepFunction f = random_step_function(rng);
    DecreasingProfile xi = rearrangement(f);
    // cross-check against int_0^1 xi computed by pairing with the unit indicator
    DecreasingProfile unit = DecreasingProfile::from_segments({{ExtRat(Rat(1)), Rat(1)}});
    ExtRat integral = hl_pairing(xi, unit);
    NormValue sum = norm(f, NormSpec::l1_plus_linf());
    REQUIRE(!sum.infinite);
    REQUIRE(!integral.is_infinite());
    CHECK(*sum.exact == integral.finite());
  }
}

TEST_CASE("fundamental functions") {
  CHECK(fundamental_function(NormSpec::lp(Rat(2)), Rat(4)).is_exactly(Rat(2)));
  CHECK(fundamental_function(NormSpec::l1_cap_linf(), Rat(1, 2)).is_exactly(Rat(1)));
  CHECK(fundamental_function(NormSpec::l1_plus_linf(), Rat(1, 2)).is_exactly(Rat(1, 2)));
  CHECK(fundamental_function(NormSpec::l1_cap_linf(), Rat(3)).is_exactly(Rat(3)));
  CHECK(fundamental_function(NormSpec::l1_plus_linf(), Rat(3)).is_exactly(Rat(1)));
  CHECK(fundamental_function(NormSpec::linf(), Rat(5)).is_exactly(Rat(1)));
  CHECK(fundamental_function(NormSpec::linf_plus_tail(), Rat(5)).is_exactly(Rat(1)));
  CHECK(fundamental_function(NormSpec::lp(Rat(3)), Rat(8)).is_exactly(Rat(2)));
  // every built-in family has phi(1) = 1
  for (const auto& spec : {NormSpec::l1(), NormSpec::lp(Rat(3, 2)), NormSpec::lp(Rat(2)),
                           NormSpec::linf(), NormSpec::l1_cap_linf(), NormSpec::l1_plus_linf(),
                           NormSpec::linf_plus_tail()})
    CHECK(fundamental_function(spec, Rat(1)).is_exactly(Rat(1)));
}

TEST_CASE("embedding bounds") {
  auto res = embedding_check(f0(), NormSpec::lp(Rat(2)));
  CHECK(res.holds);
  CHECK(res.lhs.is_exactly(Rat(6)));
  CHECK(*res.mid.power_value == Rat(13));
  CHECK(res.rhs.is_exactly(Rat(3)));

  auto unit = StepFunction::indicator(MeasureSpace::finite(Rat(2)), Rat(1));
  for (const auto& spec : {NormSpec::l1(), NormSpec::lp(Rat(2)), NormSpec::linf(),
                           NormSpec::l1_cap_linf(), NormSpec::l1_plus_linf()}) {
    auto r = embedding_check(unit, spec);
    CHECK(r.holds);
    CHECK(norm_compare(r.lhs, r.rhs).sign == 0);  // equality throughout at the unit indicator
  }

  auto tailed = embedding_check(one_with_unit_tail(), NormSpec::linf_plus_tail());
  CHECK(tailed.holds);
  CHECK(tailed.lhs.infinite);
  CHECK(tailed.mid.is_exactly(Rat(2)));
  CHECK(tailed.rhs.is_exactly(Rat(1)));

  CHECK_THROWS_AS(embedding_check(f0(), NormSpec::lp(Rat(1, 2))), Error);
}

TEST_CASE("renormalization exponent") {
  CHECK(aoki_rolewicz_exponent(Rat(2)).is_exactly(Rat(1, 2)));
  CHECK(aoki_rolewicz_exponent(Rat(1)).is_exactly(Rat(1)));
  CHECK(aoki_rolewicz_exponent(Rat(4)).is_exactly(Rat(1, 3)));
  NormValue v = aoki_rolewicz_exponent(Rat(3));
  CHECK(!v.exact.has_value());
  CHECK(v.approx == doctest::Approx(std::log(2.0) / std::log(6.0)));
  CHECK_THROWS_AS(aoki_rolewicz_exponent(Rat(1, 2)), Error);
}

TEST_CASE("p-subadditivity") {
  StepFunction f = make({{Rat(1), Rat(1)}});
  auto res = p_subadditivity_check(f, f, Rat(1, 2));
  CHECK(res.holds);
  CHECK(res.exact);
  CHECK(res.lhs.approx == doctest::Approx(std::sqrt(2.0)));
  CHECK(res.rhs.approx == doctest::Approx(2.0));

  // p = 1 is the triangle inequality with exact rational sums
  StepFunction g = make({{Rat(-2), Rat(1)}});
  auto tri = p_subadditivity_check(f, g, Rat(1));
  CHECK(tri.holds);
  CHECK(tri.lhs.is_exactly(Rat(1)));
  CHECK(tri.rhs.is_exactly(Rat(3)));

  // disjoint supports give exact equality
  StepFunction a = make({{Rat(2), Rat(1)}, {Rat(0), Rat(1)}});
  StepFunction b = make({{Rat(0), Rat(1)}, {Rat(5), Rat(1)}});
  for (const auto& p : {Rat(1, 3), Rat(1, 2), Rat(1)}) {
    auto eq = p_subadditivity_check(a, b, p);
    CHECK(eq.holds);
    CHECK(eq.equality);
  }

  CHECK_THROWS_AS(p_subadditivity_check(f, f, Rat(2)), Error);
  CHECK_THROWS_AS(p_subadditivity_check(f, make({{Rat(1), Rat(2)}}), Rat(1, 2)), Error);
}

TEST_CASE("cutoff sequences of the running example") {
  auto entries = cutoff_sequences(f0(), NormSpec::l1(), 4);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].top_residual.is_exactly(Rat(5, 2)));
  CHECK(entries[0].support_residual.is_exactly(Rat(3)));
  CHECK(entries[1].top_residual.is_exactly(Rat(1)));
  CHECK(entries[1].support_residual.is_exactly(Rat(3, 2)));
  CHECK(entries[2].top_residual.is_exactly(Rat(0)));
  CHECK(entries[2].support_residual.is_exactly(Rat(1, 2)));
  CHECK(entries[3].top_residual.is_exactly(Rat(0)));
  CHECK(entries[3].support_residual.is_exactly(Rat(0)));
}

TEST_CASE("support residual never drops below the value at infinity") {
  StepFunction tailed(MeasureSpace::infinite(), {{Rat(3), Rat(2)}}, Rat(1));
  auto entries = cutoff_sequences(tailed, NormSpec::linf(), 10);
  for (const auto& e : entries)
    CHECK(norm_compare(e.support_residual, NormValue::from_exact(Rat(1))).sign >= 0);
  CHECK_THROWS_AS(cutoff_sequences(one_with_unit_tail(), NormSpec::l1(), 3), Error);
}

TEST_CASE("norm value comparisons cross representations") {
  NormValue six = NormValue::from_exact(Rat(6));
  NormValue sqrt13 = NormValue::from_power(Rat(13), Rat(2));
  CHECK(norm_compare(six, sqrt13).sign == 1);
  CHECK(norm_compare(six, sqrt13).exact);
  CHECK(norm_compare(sqrt13, NormValue::from_exact(Rat(3))).sign == 1);
  NormValue cbrt13 = NormValue::from_power(Rat(13), Rat(3));
  CHECK(norm_compare(sqrt13, cbrt13).sign == 1);  // 13^(1/2) > 13^(1/3)
  CHECK(norm_compare(NormValue::infinity(), six).sign == 1);
  CHECK(norm_compare(NormValue::from_power(Rat(4), Rat(2)), NormValue::from_exact(Rat(2))).sign ==
        0);
}
