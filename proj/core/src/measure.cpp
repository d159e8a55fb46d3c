#include "symspace/measure.hpp"

#include <algorithm>

namespace symspace {

MeasureSpace MeasureSpace::finite(Rat total_mass) {
  if (total_mass <= 0) raise(Errc::InvalidInput, "total mass must be positive");
  return MeasureSpace(ExtRat(std::move(total_mass)));
}

MeasureSpace MeasureSpace::infinite() { return MeasureSpace(ExtRat::infinity()); }

StepFunction::StepFunction(MeasureSpace space, std::vector<Piece> pieces, Rat tail_value)
    : space_(space), pieces_(std::move(pieces)), tail_value_(std::move(tail_value)) {
  Rat total(0);
  for (const auto& p : pieces_) {
    if (p.mass < 0) raise(Errc::InvalidInput, "piece mass must be nonnegative");
    total += p.mass;
  }
  if (space_.is_infinite()) {
    if (tail_value_ < 0) raise(Errc::InvalidInput, "tail value must be nonnegative");
  } else {
    if (tail_value_ != 0) raise(Errc::InvalidInput, "finite space admits no tail value");
    if (total != space_.total_mass().finite())
      raise(Errc::InvalidInput, "piece masses must sum to the total mass");
  }
}

Rat StepFunction::finite_mass() const {
  Rat total(0);
  for (const auto& p : pieces_) total += p.mass;
  return total;
}

bool StepFunction::is_nonnegative() const {
  for (const auto& p : pieces_)
    if (p.value < 0 && p.mass > 0) return false;
  return true;
}

StepFunction StepFunction::zero(MeasureSpace space) {
  if (space.is_infinite()) return StepFunction(space, {});
  return StepFunction(space, {{Rat(0), space.total_mass().finite()}});
}

StepFunction StepFunction::indicator(MeasureSpace space, const Rat& mass, const Rat& height) {
  if (mass < 0) raise(Errc::InvalidInput, "indicator mass must be nonnegative");
  if (!space.is_infinite()) {
    const Rat& total = space.total_mass().finite();
    if (mass > total) raise(Errc::InvalidInput, "indicator mass exceeds the space");
    if (mass == 0) return zero(space);
    if (mass == total) return StepFunction(space, {{height, mass}});
    return StepFunction(space, {{height, mass}, {Rat(0), total - mass}});
  }
  if (mass == 0) return zero(space);
  return StepFunction(space, {{height, mass}});
}

StepFunction canonicalize(const StepFunction& f) {
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) {
    if (p.mass == 0) continue;
    if (!out.empty() && out.back().value == p.value)
      out.back().mass += p.mass;
    else
      out.push_back(p);
  }
  return StepFunction(f.space(), std::move(out), f.tail_value());
}

bool ae_equal(const StepFunction& f, const StepFunction& g) {
  if (!(f.space() == g.space())) return false;
  StepFunction cf = canonicalize(f);
  StepFunction cg = canonicalize(g);
  return cf.pieces() == cg.pieces() && cf.tail_value() == cg.tail_value();
}

ExtRat integrate(const StepFunction& f) {
  if (f.space().is_infinite() && f.tail_value() > 0) return ExtRat::infinity();
  Rat total(0);
  for (const auto& p : f.pieces()) total += p.value * p.mass;
  return ExtRat(total);
}

std::vector<RefinedPiece> common_refinement(const std::vector<const StepFunction*>& fs) {
  Rat extent(0);
  for (const auto* f : fs) extent = std::max(extent, f->finite_mass());

  std::vector<RefinedPiece> out;
  std::vector<size_t> idx(fs.size(), 0);
  std::vector<Rat> consumed(fs.size(), Rat(0));  // mass used of the current piece
  Rat position(0);
  while (position < extent) {
    // Distance to the nearest piece boundary across all functions.
    Rat step = extent - position;
    for (size_t k = 0; k < fs.size(); ++k) {
      const auto& pieces = fs[k]->pieces();
      if (idx[k] < pieces.size()) {
        Rat remaining = pieces[idx[k]].mass - consumed[k];
        step = std::min(step, remaining);
      }
    }
    RefinedPiece rp;
    rp.mass = step;
    rp.values.reserve(fs.size());
    for (size_t k = 0; k < fs.size(); ++k) {
      const auto& pieces = fs[k]->pieces();
      rp.values.push_back(idx[k] < pieces.size() ? pieces[idx[k]].value : fs[k]->tail_value());
    }
    out.push_back(std::move(rp));
    position += step;
    for (size_t k = 0; k < fs.size(); ++k) {
      const auto& pieces = fs[k]->pieces();
      if (idx[k] >= pieces.size()) continue;
      consumed[k] += step;
      while (idx[k] < pieces.size() && consumed[k] == pieces[idx[k]].mass) {
        consumed[k] = 0;
        ++idx[k];
      }
    }
  }
  return out;
}

namespace {

Rat apply_op(const Rat& a, const Rat& b, PointwiseOp op) {
  switch (op) {
    case PointwiseOp::Add: return a + b;
    case PointwiseOp::Subtract: return a - b;
    case PointwiseOp::Multiply: return a * b;
    case PointwiseOp::Min: return std::min(a, b);
    case PointwiseOp::Max: return std::max(a, b);
    case PointwiseOp::AbsDiff: return a >= b ? a - b : b - a;
  }
  raise(Errc::InvalidInput, "unknown pointwise op");
}

}  // namespace

StepFunction pointwise(const StepFunction& f, const StepFunction& g, PointwiseOp op) {
  if (!(f.space() == g.space())) raise(Errc::SpaceMismatch, "operands on different spaces");
  auto refined = common_refinement({&f, &g});
  std::vector<Piece> pieces;
  pieces.reserve(refined.size());
  for (const auto& rp : refined) pieces.push_back({apply_op(rp.values[0], rp.values[1], op), rp.mass});
  Rat tail(0);
  if (f.space().is_infinite()) {
    tail = apply_op(f.tail_value(), g.tail_value(), op);
    if (tail < 0)
      raise(Errc::UnrepresentableTail, "negative value on the infinite-mass remainder");
  }
  return canonicalize(StepFunction(f.space(), std::move(pieces), std::move(tail)));
}

StepFunction scale(const StepFunction& f, const Rat& c) {
  if (c < 0 && f.space().is_infinite() && f.tail_value() > 0)
    raise(Errc::UnrepresentableTail, "negative value on the infinite-mass remainder");
  std::vector<Piece> pieces = f.pieces();
  for (auto& p : pieces) p.value *= c;
  return StepFunction(f.space(), std::move(pieces), f.tail_value() * c);
}

StepFunction abs(const StepFunction& f) {
  std::vector<Piece> pieces = f.pieces();
  for (auto& p : pieces)
    if (p.value < 0) p.value = -p.value;
  return StepFunction(f.space(), std::move(pieces), f.tail_value());
}

StepFunction conditional_expectation(const StepFunction& f, const PartitionMap& blocks) {
  if (blocks.block_of_piece.size() != f.pieces().size())
    raise(Errc::InvalidInput, "partition map must assign every piece");
  int max_block = -1;
  for (int b : blocks.block_of_piece) {
    if (b < 0) raise(Errc::InvalidInput, "negative block id");
    max_block = std::max(max_block, b);
  }
  std::vector<Rat> mass(max_block + 1, Rat(0));
  std::vector<Rat> moment(max_block + 1, Rat(0));
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    const auto& p = f.pieces()[i];
    mass[blocks.block_of_piece[i]] += p.mass;
    moment[blocks.block_of_piece[i]] += p.value * p.mass;
  }
  std::vector<Rat> mean(max_block + 1, Rat(0));
  for (int b = 0; b <= max_block; ++b) {
    if (mass[b] == 0) raise(Errc::InvalidInput, "empty block " + std::to_string(b));
    mean[b] = moment[b] / mass[b];
  }
  std::vector<Piece> pieces = f.pieces();
  for (size_t i = 0; i < pieces.size(); ++i) pieces[i].value = mean[blocks.block_of_piece[i]];
  return StepFunction(f.space(), std::move(pieces), f.tail_value());
}

Delta0Weight Delta0Weight::defaults_for(const MeasureSpace& space, const Rat& extent) {
  if (extent <= 0) raise(Errc::InvalidInput, "weight extent must be positive");
  if (!space.is_infinite()) {
    const Rat& total = space.total_mass().finite();
    return Delta0Weight{Rat(1) / total, total, Rat(0)};
  }
  Rat denom = extent + 1;
  return Delta0Weight{Rat(1) / denom, extent, Rat(1) / denom};
}

namespace {

Rat metric_integrand(const Rat& diff) {
  Rat d = diff < 0 ? -diff : diff;
  return d / (1 + d);
}

}  // namespace

Rat delta0_metric(const StepFunction& f, const StepFunction& g, const StepFunction& weight) {
  if (!(f.space() == g.space()) || !(f.space() == weight.space()))
    raise(Errc::SpaceMismatch, "metric arguments on different spaces");
  if (weight.space().is_infinite() && weight.tail_value() > 0)
    raise(Errc::WeightNotIntegrable, "constant positive tail has infinite integral");
  for (const auto& p : weight.pieces())
    if (p.value <= 0 && p.mass > 0) raise(Errc::InvalidInput, "weight must be positive");
  auto refined = common_refinement({&f, &g, &weight});
  Rat out(0);
  for (const auto& rp : refined)
    out += metric_integrand(rp.values[0] - rp.values[1]) * rp.values[2] * rp.mass;
  // Tail weight is zero here, so the remainder contributes nothing.
  return out;
}

Rat delta0_metric(const StepFunction& f, const StepFunction& g, const Delta0Weight& weight) {
  if (!(f.space() == g.space())) raise(Errc::SpaceMismatch, "metric arguments on different spaces");
  Rat extent = std::max(f.finite_mass(), g.finite_mass());
  if (extent > weight.extent)
    raise(Errc::InvalidInput, "weight extent smaller than the functions' piece region");
  auto refined = common_refinement({&f, &g});
  Rat out(0);
  for (const auto& rp : refined)
    out += metric_integrand(rp.values[0] - rp.values[1]) * weight.finite_density * rp.mass;
  if (f.space().is_infinite()) {
    // Both functions are constant past `extent`, so the geometric shape of
    // the tail weight never matters, only its total mass.
    Rat tail_gap = metric_integrand(f.tail_value() - g.tail_value());
    out += tail_gap * (weight.finite_density * (weight.extent - extent) + weight.tail_mass);
  }
  return out;
}

Rat delta0_metric(const StepFunction& f, const StepFunction& g) {
  Rat extent = std::max(std::max(f.finite_mass(), g.finite_mass()), Rat(1));
  return delta0_metric(f, g, Delta0Weight::defaults_for(f.space(), extent));
}

}  // namespace symspace
