#include "symspace/random_instances.hpp"

namespace symspace {

Rat random_rational(SplitMix64& rng, int max_numerator, int max_denominator, bool allow_negative,
                    bool allow_zero) {
  long long num = static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_numerator) + 1));
  if (!allow_zero && num == 0) num = 1;
  long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_denominator)));
  if (allow_negative && num != 0 && rng.one_in(2)) num = -num;
  return Rat(Int(num), Int(den));
}

Rat random_positive_rational(SplitMix64& rng, int max_numerator, int max_denominator) {
  return random_rational(rng, max_numerator, max_denominator, false, false);
}

StepFunction random_step_function(SplitMix64& rng, const StepFunctionOptions& options) {
  const bool infinite = options.allow_infinite_space && rng.one_in(3);
  const int pieces_count = rng.range(infinite ? 0 : 1, options.max_pieces);
  std::vector<Piece> pieces;
  pieces.reserve(static_cast<size_t>(pieces_count));
  Rat total(0);
  for (int i = 0; i < pieces_count; ++i) {
    Piece p;
    p.value = random_rational(rng, options.max_numerator, options.max_denominator,
                              options.allow_negative, options.allow_zero_values);
    p.mass = random_positive_rational(rng, options.max_numerator, options.max_denominator);
    total += p.mass;
    pieces.push_back(std::move(p));
  }
  if (!infinite) return StepFunction(MeasureSpace::finite(total), std::move(pieces));
  Rat tail(0);
  if (options.allow_tail && rng.one_in(2))
    tail = random_rational(rng, options.max_numerator, options.max_denominator, false, true);
  return StepFunction(MeasureSpace::infinite(), std::move(pieces), std::move(tail));
}

StepFunction resample_on_space(SplitMix64& rng, const MeasureSpace& space,
                               const StepFunctionOptions& options) {
  const int pieces_count = rng.range(space.is_infinite() ? 0 : 1, options.max_pieces);
  std::vector<Piece> pieces;
  pieces.reserve(static_cast<size_t>(pieces_count));
  for (int i = 0; i < pieces_count; ++i) {
    Piece p;
    p.value = random_rational(rng, options.max_numerator, options.max_denominator,
                              options.allow_negative, options.allow_zero_values);
    p.mass = random_positive_rational(rng, options.max_numerator, options.max_denominator);
    pieces.push_back(std::move(p));
  }
  if (space.is_infinite()) {
    Rat tail(0);
    if (options.allow_tail && rng.one_in(2))
      tail = random_rational(rng, options.max_numerator, options.max_denominator, false, true);
    return StepFunction(space, std::move(pieces), std::move(tail));
  }
  Rat raw_total(0);
  for (const auto& p : pieces) raw_total += p.mass;
  const Rat& total = space.total_mass().finite();
  Rat ratio = total / raw_total;
  Rat assigned(0);
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    pieces[i].mass *= ratio;
    assigned += pieces[i].mass;
  }
  pieces.back().mass = total - assigned;
  return StepFunction(space, std::move(pieces));
}

NormSpec random_banach_spec(SplitMix64& rng) {
  switch (rng.range(0, 7)) {
    case 0: return NormSpec::l1();
    case 1: return NormSpec::lp(Rat(3, 2));
    case 2: return NormSpec::lp(Rat(2));
    case 3: return NormSpec::lp(Rat(3));
    case 4: return NormSpec::linf();
    case 5: return NormSpec::l1_cap_linf();
    case 6: return NormSpec::l1_plus_linf();
    default: return NormSpec::linf_plus_tail();
  }
}

AlgebraInput random_algebra_input(SplitMix64& rng, int max_ground) {
  AlgebraInput in;
  in.ground_size = rng.range(1, max_ground);
  const Mask full = (Mask(1) << in.ground_size) - 1;
  const int generator_count = rng.range(0, 4);
  for (int i = 0; i < generator_count; ++i)
    in.generators.push_back(static_cast<Mask>(rng.below(full + 1)));
  return in;
}

}  // namespace symspace
