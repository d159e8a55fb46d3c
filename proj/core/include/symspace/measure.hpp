#pragma once

#include <vector>

#include "symspace/rational.hpp"

namespace symspace {

// A non-atomic measure space identified with the interval [0, a) or [0, inf).
// Only the total mass is carried; all geometry lives in the step functions.
class MeasureSpace {
 public:
  static MeasureSpace finite(Rat total_mass);
  static MeasureSpace infinite();

  const ExtRat& total_mass() const { return total_mass_; }
  bool is_infinite() const { return total_mass_.is_infinite(); }

  friend bool operator==(const MeasureSpace& a, const MeasureSpace& b) {
    return a.total_mass_ == b.total_mass_;
  }

 private:
  explicit MeasureSpace(ExtRat total_mass) : total_mass_(std::move(total_mass)) {}
  ExtRat total_mass_;
};

struct Piece {
  Rat value;  // signed
  Rat mass;   // >= 0 raw, > 0 canonical

  friend bool operator==(const Piece&, const Piece&) = default;
};

// A signed simple function. Pieces are consecutive left-closed intervals of
// the standard interval starting at 0; on an infinite space the function
// equals tail_value (>= 0) on the remainder [finite_mass, inf).
class StepFunction {
 public:
  StepFunction(MeasureSpace space, std::vector<Piece> pieces, Rat tail_value = Rat(0));

  const MeasureSpace& space() const { return space_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rat& tail_value() const { return tail_value_; }

  // Total mass of the explicit pieces, i.e. the extent of the piece region.
  Rat finite_mass() const;

  bool is_nonnegative() const;

  static StepFunction zero(MeasureSpace space);
  // Indicator of a set of measure `mass` inside `space`, scaled by `height`.
  static StepFunction indicator(MeasureSpace space, const Rat& mass, const Rat& height = Rat(1));

 private:
  MeasureSpace space_;
  std::vector<Piece> pieces_;
  Rat tail_value_;
};

// Removes zero-mass pieces and merges adjacent pieces of equal value.
// Idempotent; the result is equal almost everywhere to the input.
StepFunction canonicalize(const StepFunction& f);

bool ae_equal(const StepFunction& f, const StepFunction& g);

// Exact integral; +inf when a positive tail value sits on infinite mass.
ExtRat integrate(const StepFunction& f);

enum class PointwiseOp { Add, Subtract, Multiply, Min, Max, AbsDiff };

// Pointwise combination after refining both operands to a common partition.
// Raises SpaceMismatch for different total masses and UnrepresentableTail
// when Subtract would put a negative value on the infinite-mass remainder.
StepFunction pointwise(const StepFunction& f, const StepFunction& g, PointwiseOp op);

StepFunction scale(const StepFunction& f, const Rat& c);
StepFunction abs(const StepFunction& f);

// Assignment of every piece index to a block of a finite partition.
struct PartitionMap {
  std::vector<int> block_of_piece;
};

// Averages f over each block. The result takes the block mean on every piece
// of the block, so it is measurable with respect to the block partition.
StepFunction conditional_expectation(const StepFunction& f, const PartitionMap& blocks);

// Weight for the convergence-in-measure metric. The density is constant on
// [0, extent); beyond it the weight has finite total mass tail_mass spread
// with halving unit masses. Because both arguments of the metric are constant
// on the remainder, only the total tail mass ever enters the integral.
struct Delta0Weight {
  Rat finite_density;
  Rat extent;
  Rat tail_mass;

  // density 1 on [0, extent) and unit tail mass, normalised to integral 1
  static Delta0Weight defaults_for(const MeasureSpace& space, const Rat& extent);
};

// delta0(f, g) = integral of |f-g| / (1 + |f-g|) against the weight.
Rat delta0_metric(const StepFunction& f, const StepFunction& g, const StepFunction& weight);
Rat delta0_metric(const StepFunction& f, const StepFunction& g, const Delta0Weight& weight);
Rat delta0_metric(const StepFunction& f, const StepFunction& g);

// Common refinement of several functions on one space over [0, max extent).
// Each refined piece records the value of every input; beyond its own extent
// an input contributes its tail value.
struct RefinedPiece {
  Rat mass;
  std::vector<Rat> values;
};
std::vector<RefinedPiece> common_refinement(const std::vector<const StepFunction*>& fs);

}  // namespace symspace
