#include <doctest.h>

#include "symspace/measure.hpp"
#include "symspace/random_instances.hpp"

using namespace symspace;

namespace {

StepFunction make(std::vector<Piece> pieces) {
  Rat total(0);
  for (const auto& p : pieces) total += p.mass;
  return StepFunction(MeasureSpace::finite(total), std::move(pieces));
}

}  // namespace

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(StepFunction(MeasureSpace::finite(Rat(2)), {{Rat(1), Rat(1)}}), Error);
  CHECK_THROWS_AS(StepFunction(MeasureSpace::finite(Rat(2)), {}), Error);
  CHECK_THROWS_AS(StepFunction(MeasureSpace::finite(Rat(1)), {{Rat(1), Rat(1)}}, Rat(1)), Error);
  CHECK_THROWS_AS(MeasureSpace::finite(Rat(0)), Error);
  CHECK_NOTHROW(StepFunction(MeasureSpace::infinite(), {}, Rat(1)));
}

TEST_CASE("canonicalize merges and drops") {
  StepFunction f = make({{Rat(2), Rat(1)}, {Rat(2), Rat(1)}});
  CHECK(canonicalize(f).pieces() == std::vector<Piece>{{Rat(2), Rat(2)}});

  StepFunction g = make({{Rat(3), Rat(0)}, {Rat(1), Rat(1)}});
  CHECK(canonicalize(g).pieces() == std::vector<Piece>{{Rat(1), Rat(1)}});

  StepFunction h = make({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}});
  CHECK(canonicalize(canonicalize(h)).pieces() == canonicalize(h).pieces());
}

TEST_CASE("integrate") {
  StepFunction f = make({{Rat(3), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1, 2)}});
  CHECK(integrate(f) == ExtRat(Rat(6)));
  CHECK(integrate(make({{Rat(-2), Rat(1)}, {Rat(1), Rat(1)}})) == ExtRat(Rat(-1)));
  StepFunction tailed(MeasureSpace::infinite(), {{Rat(3), Rat(2)}}, Rat(1));
  CHECK(integrate(tailed).is_infinite());
}

TEST_CASE("pointwise combinations") {
  CHECK(pointwise(make({{Rat(1), Rat(2)}}), make({{Rat(2), Rat(2)}}), PointwiseOp::Add).pieces() ==
        std::vector<Piece>{{Rat(3), Rat(2)}});
  // overlap refinement merges back to one piece
  StepFunction a = make({{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  StepFunction b = make({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(pointwise(a, b, PointwiseOp::Add).pieces() == std::vector<Piece>{{Rat(1), Rat(2)}});
  CHECK(pointwise(make({{Rat(3), Rat(1)}, {Rat(1), Rat(1)}}), make({{Rat(2), Rat(2)}}),
                  PointwiseOp::Min)
            .pieces() == std::vector<Piece>{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK_THROWS_AS(pointwise(make({{Rat(1), Rat(1)}}), make({{Rat(1), Rat(2)}}), PointwiseOp::Add),
                  Error);
  // subtraction that would leave a negative constant on infinite mass
  StepFunction t1(MeasureSpace::infinite(), {}, Rat(1));
  StepFunction t3(MeasureSpace::infinite(), {}, Rat(3));
  CHECK_THROWS_AS(pointwise(t1, t3, PointwiseOp::Subtract), Error);
  CHECK(pointwise(t1, t3, PointwiseOp::AbsDiff).tail_value() == Rat(2));
}

TEST_CASE("conditional expectation") {
  StepFunction f = make({{Rat(2), Rat(1)}, {Rat(4), Rat(1)}});
  PartitionMap one_block{{0, 0}};
  CHECK(canonicalize(conditional_expectation(f, one_block)).pieces() ==
        std::vector<Piece>{{Rat(3), Rat(2)}});

  PartitionMap singletons{{0, 1}};
  CHECK(ae_equal(conditional_expectation(f, singletons), f));

  StepFunction g = make({{Rat(6), Rat(1)}, {Rat(0), Rat(2)}});
  StepFunction eg = conditional_expectation(g, one_block);
  CHECK(canonicalize(eg).pieces() == std::vector<Piece>{{Rat(2), Rat(3)}});
  CHECK(integrate(eg) == integrate(g));
}

TEST_CASE("delta0 metric examples") {
  StepFunction w = make({{Rat(1), Rat(1)}});
  CHECK(delta0_metric(make({{Rat(1), Rat(1)}}), make({{Rat(0), Rat(1)}}), w) == Rat(1, 2));
  CHECK(delta0_metric(make({{Rat(3), Rat(1)}}), make({{Rat(3), Rat(1)}}), w) == 0);
  // |f-g| = 2 so the integrand is 2/3
  CHECK(delta0_metric(make({{Rat(3), Rat(1)}}), make({{Rat(1), Rat(1)}}), w) == Rat(2, 3));
  StepFunction bad_weight(MeasureSpace::infinite(), {{Rat(1), Rat(1)}}, Rat(1));
  StepFunction t1(MeasureSpace::infinite(), {}, Rat(1));
  CHECK_THROWS_AS(delta0_metric(t1, t1, bad_weight), Error);
}

TEST_CASE("delta0 separates tail differences under the default weight") {
  StepFunction t1(MeasureSpace::infinite(), {}, Rat(1));
  StepFunction t2(MeasureSpace::infinite(), {}, Rat(2));
  CHECK(delta0_metric(t1, t2) > 0);
  CHECK(delta0_metric(t1, t1) == 0);
}

TEST_CASE("integrate is linear over random pairs") {
  SplitMix64 rng(2026);
  for (int i = 0; i < 200; ++i) {
    StepFunctionOptions opt;
    opt.allow_tail = false;
    StepFunction f = random_step_function(rng, opt);
    StepFunction g = resample_on_space(rng, f.space(), opt);
    CHECK(integrate(pointwise(f, g, PointwiseOp::Add)) == integrate(f) + integrate(g));
  }
}
