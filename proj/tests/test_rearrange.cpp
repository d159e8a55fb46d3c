#include <doctest.h>

#include "symspace/random_instances.hpp"
#include "symspace/rearrange.hpp"

using namespace symspace;

namespace {

StepFunction make(std::vector<Piece> pieces) {
  Rat total(0);
  for (const auto& p : pieces) total += p.mass;
  return StepFunction(MeasureSpace::finite(total), std::move(pieces));
}

StepFunction f0() { return make({{Rat(3), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1, 2)}}); }

DecreasingProfile profile(std::vector<std::pair<ExtRat, Rat>> segs) {
  std::vector<ProfileSegment> out;
  for (auto& [len, val] : segs) out.push_back({len, val});
  return DecreasingProfile::from_segments(std::move(out));
}

ThresholdProfile threshold(std::vector<std::pair<Rat, ExtRat>> brs) {
  std::vector<ThresholdBreak> out;
  for (auto& [t, v] : brs) out.push_back({t, v});
  return ThresholdProfile::from_breaks(std::move(out));
}

}  // namespace

TEST_CASE("distribution of the running example") {
  // superlevel masses counted by hand: 7/2, 3/2, 1, 0
  CHECK(distribution(f0()) == threshold({{Rat(0), ExtRat(Rat(7, 2))},
                                         {Rat(1), ExtRat(Rat(3, 2))},
                                         {Rat(2), ExtRat(Rat(1))},
                                         {Rat(3), ExtRat(Rat(0))}}));
  CHECK(distribution(StepFunction::zero(MeasureSpace::finite(Rat(2)))) ==
        threshold({{Rat(0), ExtRat(Rat(0))}}));
  StepFunction tailed(MeasureSpace::infinite(), {{Rat(3), Rat(2)}}, Rat(1));
  CHECK(distribution(tailed) == threshold({{Rat(0), ExtRat::infinity()},
                                           {Rat(1), ExtRat(Rat(2))},
                                           {Rat(3), ExtRat(Rat(0))}}));
}

TEST_CASE("rearrangement of the running example") {
  CHECK(rearrangement(f0()) == profile({{ExtRat(Rat(1)), Rat(3)},
                                        {ExtRat(Rat(1, 2)), Rat(2)},
                                        {ExtRat(Rat(2)), Rat(1)}}));
  CHECK(rearrangement(make({{Rat(-2), Rat(1)}, {Rat(1), Rat(1)}})) ==
        profile({{ExtRat(Rat(1)), Rat(2)}, {ExtRat(Rat(1)), Rat(1)}}));
  StepFunction tailed(MeasureSpace::infinite(), {{Rat(3), Rat(2)}}, Rat(1));
  DecreasingProfile xi = rearrangement(tailed);
  CHECK(xi == profile({{ExtRat(Rat(2)), Rat(3)}, {ExtRat::infinity(), Rat(1)}}));
  CHECK(xi_infinity(xi) == Rat(1));
  CHECK(xi_infinity(rearrangement(f0())) == Rat(0));
}

TEST_CASE("generalized inverse of a distribution") {
  CHECK(rearrangement_from_distribution(distribution(f0())) == rearrangement(f0()));
  CHECK(rearrangement_from_distribution(threshold({{Rat(0), ExtRat(Rat(0))}})).is_zero());
  CHECK(rearrangement_from_distribution(
            threshold({{Rat(0), ExtRat(Rat(2))}, {Rat(5), ExtRat(Rat(0))}})) ==
        profile({{ExtRat(Rat(2)), Rat(5)}}));
  // distribution with infinite mass below level 1 inverts to an infinite tail
  CHECK(rearrangement_from_distribution(threshold({{Rat(0), ExtRat::infinity()},
                                                   {Rat(1), ExtRat(Rat(2))},
                                                   {Rat(3), ExtRat(Rat(0))}})) ==
        profile({{ExtRat(Rat(2)), Rat(3)}, {ExtRat::infinity(), Rat(1)}}));
}

TEST_CASE("distribution of a profile") {
  CHECK(distribution_of_profile(profile({{ExtRat(Rat(1)), Rat(3)}, {ExtRat(Rat(1)), Rat(1)}})) ==
        threshold({{Rat(0), ExtRat(Rat(2))}, {Rat(1), ExtRat(Rat(1))}, {Rat(3), ExtRat(Rat(0))}}));
  CHECK(distribution_of_profile(DecreasingProfile()) == threshold({{Rat(0), ExtRat(Rat(0))}}));
}

TEST_CASE("equimeasurability") {
  StepFunction f = make({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}});
  StepFunction g = make({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(equimeasurable(f, g));
  CHECK(!equimeasurable(make({{Rat(1), Rat(2)}}), make({{Rat(1), Rat(1)}})));
  StepFunction split = make({{Rat(1), Rat(1, 2)}, {Rat(1), Rat(1, 2)}, {Rat(2), Rat(1)}});
  CHECK(equimeasurable(f, split));
  // signs are invisible to the rearrangement
  CHECK(equimeasurable(f, make({{Rat(-1), Rat(1)}, {Rat(2), Rat(1)}})));
}

TEST_CASE("transport maps") {
  SUBCASE("two-piece swap") {
    StepFunction f = make({{Rat(2), Rat(1)}, {Rat(5), Rat(1)}});
    TransportMap map = transport_map(f);
    CHECK(map.moves == std::vector<TransportMove>{{Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(0)}});
    CHECK(verify_transport(f, map, rearrangement(f)).ok());
  }
  SUBCASE("already decreasing gives the identity") {
    StepFunction f = make({{Rat(5), Rat(1)}, {Rat(2), Rat(1)}});
    TransportMap map = transport_map(f);
    CHECK(map.moves == std::vector<TransportMove>{{Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(1)}});
  }
  SUBCASE("stable three-piece example") {
    StepFunction f = make({{Rat(1), Rat(1)}, {Rat(3), Rat(1)}, {Rat(2), Rat(1)}});
    TransportMap map = transport_map(f);
    CHECK(map.moves == std::vector<TransportMove>{{Rat(0), Rat(1), Rat(2)},
                                                  {Rat(1), Rat(1), Rat(0)},
                                                  {Rat(2), Rat(1), Rat(1)}});
    CHECK(verify_transport(f, map, rearrangement(f)).ok());
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(transport_map(make({{Rat(-1), Rat(1)}})), Error);
    CHECK_THROWS_AS(transport_map(StepFunction(MeasureSpace::infinite(), {}, Rat(1))), Error);
  }
  SUBCASE("a corrupted map fails verification") {
    StepFunction f = make({{Rat(2), Rat(1)}, {Rat(5), Rat(1)}});
    TransportMap map = transport_map(f);
    map.moves[0].destination_start = Rat(0);  // collide with the other move
    CHECK(!verify_transport(f, map, rearrangement(f)).ok());
  }
}

TEST_CASE("monotonicity of the rearrangement") {
  SplitMix64 rng(7);
  StepFunctionOptions opt;
  opt.allow_tail = false;
  for (int i = 0; i < 100; ++i) {
    StepFunction f = random_step_function(rng, opt);
    StepFunction bump = abs(resample_on_space(rng, f.space(), opt));
    StepFunction g = pointwise(abs(f), bump, PointwiseOp::Add);  // |f| <= g
    DecreasingProfile xf = rearrangement(f);
    DecreasingProfile xg = rearrangement(g);
    // compare on a grid containing every breakpoint of either profile
    Rat pos(0);
    bool ok = true;
    for (const auto& seg : xf.segments()) {
      if (seg.length.is_infinite()) break;
      ok = ok && xf.value_at(pos) <= xg.value_at(pos);
      pos += seg.length.finite();
    }
    CHECK(ok);
  }
}
