#include "symspace/rearrange.hpp"

#include <algorithm>
#include <numeric>

namespace symspace {

DecreasingProfile DecreasingProfile::from_segments(std::vector<ProfileSegment> raw) {
  DecreasingProfile out;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto& seg = raw[i];
    if (seg.value < 0) raise(Errc::InvalidInput, "profile values must be nonnegative");
    if (!(ExtRat(Rat(0)) < seg.length))
      raise(Errc::InvalidInput, "profile segment lengths must be positive");
    if (seg.length.is_infinite() && i + 1 != raw.size())
      raise(Errc::InvalidInput, "only the final segment may be infinite");
    if (!out.segments_.empty() && out.segments_.back().value < seg.value)
      raise(Errc::InvalidInput, "profile values must be non-increasing");
    if (seg.value == 0) break;  // implicit zero past the support
    if (!out.segments_.empty() && out.segments_.back().value == seg.value)
      out.segments_.back().length = out.segments_.back().length + seg.length;
    else
      out.segments_.push_back(seg);
  }
  return out;
}

Rat DecreasingProfile::infinity_value() const {
  if (!segments_.empty() && segments_.back().length.is_infinite()) return segments_.back().value;
  return Rat(0);
}

ExtRat DecreasingProfile::support_length() const {
  ExtRat total{Rat(0)};
  for (const auto& seg : segments_) total = total + seg.length;
  return total;
}

Rat DecreasingProfile::top_value() const {
  return segments_.empty() ? Rat(0) : segments_.front().value;
}

Rat DecreasingProfile::value_at(const Rat& x) const {
  Rat position(0);
  for (const auto& seg : segments_) {
    if (seg.length.is_infinite()) return x >= position ? seg.value : Rat(0);
    position += seg.length.finite();
    if (x < position) return seg.value;
  }
  return Rat(0);
}

StepFunction DecreasingProfile::as_step_function() const {
  std::vector<Piece> pieces;
  Rat tail(0);
  bool infinite = false;
  for (const auto& seg : segments_) {
    if (seg.length.is_infinite()) {
      infinite = true;
      tail = seg.value;
    } else {
      pieces.push_back({seg.value, seg.length.finite()});
    }
  }
  if (infinite) return StepFunction(MeasureSpace::infinite(), std::move(pieces), std::move(tail));
  if (pieces.empty()) return StepFunction::zero(MeasureSpace::finite(Rat(1)));
  Rat total(0);
  for (const auto& p : pieces) total += p.mass;
  return StepFunction(MeasureSpace::finite(total), std::move(pieces));
}

ThresholdProfile ThresholdProfile::from_breaks(std::vector<ThresholdBreak> raw) {
  ThresholdProfile out;
  for (const auto& br : raw) {
    if (br.threshold < 0) raise(Errc::InvalidInput, "thresholds must be nonnegative");
    if (out.breaks_.empty()) {
      if (br.threshold != 0) raise(Errc::InvalidInput, "first threshold must be 0");
    } else {
      if (!(out.breaks_.back().threshold < br.threshold))
        raise(Errc::InvalidInput, "thresholds must be strictly increasing");
      if (!(br.value < out.breaks_.back().value)) continue;  // merge equal values
      if (br.value.is_infinite())
        raise(Errc::InvalidInput, "infinite value admissible only at level 0");
    }
    out.breaks_.push_back(br);
  }
  if (out.breaks_.empty()) raise(Errc::InvalidInput, "distribution needs a breakpoint at 0");
  if (!(out.breaks_.back().value == ExtRat(Rat(0))))
    raise(Errc::InvalidInput, "distribution must vanish at high levels");
  return out;
}

ExtRat ThresholdProfile::value_at(const Rat& y) const {
  ExtRat out{Rat(0)};
  for (const auto& br : breaks_) {
    if (br.threshold <= y)
      out = br.value;
    else
      break;
  }
  return out;
}

bool ThresholdProfile::is_zero() const {
  return breaks_.size() == 1 && breaks_.front().value == ExtRat(Rat(0));
}

ThresholdProfile distribution(const StepFunction& f) {
  StepFunction cf = canonicalize(f);
  // Candidate levels: 0 together with every attained |value| and the tail value.
  std::vector<Rat> levels;
  levels.push_back(Rat(0));
  for (const auto& p : cf.pieces()) levels.push_back(p.value < 0 ? -p.value : p.value);
  if (cf.space().is_infinite()) levels.push_back(cf.tail_value());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto eta_at = [&cf](const Rat& y) -> ExtRat {
    if (cf.space().is_infinite() && cf.tail_value() > y) return ExtRat::infinity();
    Rat mass(0);
    for (const auto& p : cf.pieces()) {
      Rat a = p.value < 0 ? -p.value : p.value;
      if (a > y) mass += p.mass;
    }
    return ExtRat(mass);
  };

  std::vector<ThresholdBreak> breaks;
  for (const auto& y : levels) breaks.push_back({y, eta_at(y)});
  return ThresholdProfile::from_breaks(std::move(breaks));
}

DecreasingProfile rearrangement(const StepFunction& f) {
  StepFunction cf = canonicalize(f);
  std::vector<std::pair<Rat, Rat>> sorted;  // (|value|, mass), descending
  sorted.reserve(cf.pieces().size());
  for (const auto& p : cf.pieces())
    sorted.emplace_back(p.value < 0 ? -p.value : p.value, p.mass);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  const bool infinite = cf.space().is_infinite();
  const Rat& tail = cf.tail_value();
  std::vector<ProfileSegment> segments;
  for (auto& [value, mass] : sorted) {
    if (infinite && value <= tail) break;  // swallowed by the level of the tail
    segments.push_back({ExtRat(mass), value});
  }
  if (infinite && tail > 0) segments.push_back({ExtRat::infinity(), tail});
  return DecreasingProfile::from_segments(std::move(segments));
}

DecreasingProfile rearrangement_from_distribution(const ThresholdProfile& eta) {
  const auto& breaks = eta.breaks();
  // xi(x) = inf{y : eta(y) <= x} equals threshold t_k exactly on the interval
  // [h_k, h_{k-1}) of masses, where h_k is the value of eta at level t_k.
  std::vector<ProfileSegment> segments;
  for (size_t k = breaks.size(); k-- > 1;) {
    const ExtRat& upper = breaks[k - 1].value;
    const ExtRat& lower = breaks[k].value;
    if (upper.is_infinite()) {
      segments.push_back({ExtRat::infinity(), breaks[k].threshold});
    } else {
      segments.push_back({ExtRat(upper.finite() - lower.finite()), breaks[k].threshold});
    }
  }
  return DecreasingProfile::from_segments(std::move(segments));
}

ThresholdProfile distribution_of_profile(const DecreasingProfile& xi) {
  std::vector<ThresholdBreak> breaks;
  // Walk levels downward; at level y in [value_{k+1}, value_k) the superlevel
  // set is the union of segments 0..k.
  ExtRat cumulative{Rat(0)};
  std::vector<std::pair<Rat, ExtRat>> reversed;  // (level, mass above that level)
  for (const auto& seg : xi.segments()) {
    cumulative = cumulative + seg.length;
    reversed.emplace_back(seg.value, cumulative);
  }
  breaks.push_back({Rat(0), xi.segments().empty() ? ExtRat(Rat(0)) : reversed.back().second});
  for (size_t k = reversed.size(); k-- > 0;) {
    ExtRat mass_above = k == 0 ? ExtRat(Rat(0)) : reversed[k - 1].second;
    breaks.push_back({reversed[k].first, mass_above});
  }
  return ThresholdProfile::from_breaks(std::move(breaks));
}

bool equimeasurable(const StepFunction& f, const StepFunction& g) {
  return rearrangement(f) == rearrangement(g);
}

Rat xi_infinity(const DecreasingProfile& xi) { return xi.infinity_value(); }

TransportMap transport_map(const StepFunction& f) {
  if (!f.is_nonnegative()) raise(Errc::NegativeValues, "transport requires f >= 0");
  if (f.space().is_infinite() && f.tail_value() > 0)
    raise(Errc::TailPresent, "transport requires a vanishing tail value");
  StepFunction cf = canonicalize(f);

  const auto& pieces = cf.pieces();
  std::vector<size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&pieces](size_t a, size_t b) {
    return pieces[a].value > pieces[b].value;
  });

  std::vector<Rat> source_start(pieces.size(), Rat(0));
  Rat position(0);
  for (size_t i = 0; i < pieces.size(); ++i) {
    source_start[i] = position;
    position += pieces[i].mass;
  }
  std::vector<Rat> destination_start(pieces.size(), Rat(0));
  position = 0;
  for (size_t rank = 0; rank < order.size(); ++rank) {
    destination_start[order[rank]] = position;
    position += pieces[order[rank]].mass;
  }

  TransportMap map;
  map.moves.reserve(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i)
    map.moves.push_back({source_start[i], pieces[i].mass, destination_start[i]});
  return map;
}

TransportCheck verify_transport(const StepFunction& f, const TransportMap& map,
                                const DecreasingProfile& xi) {
  TransportCheck check;
  StepFunction cf = canonicalize(f);
  Rat extent = cf.finite_mass();

  // Sources must tile [0, extent) and destinations must be disjoint with
  // matching lengths.
  auto moves = map.moves;
  std::sort(moves.begin(), moves.end(), [](const TransportMove& a, const TransportMove& b) {
    return a.source_start < b.source_start;
  });
  Rat position(0);
  bool tiles = true;
  for (const auto& mv : moves) {
    if (mv.length <= 0 || mv.source_start != position) {
      tiles = false;
      break;
    }
    position += mv.length;
  }
  tiles = tiles && position == extent;

  auto by_destination = map.moves;
  std::sort(by_destination.begin(), by_destination.end(),
            [](const TransportMove& a, const TransportMove& b) {
              return a.destination_start < b.destination_start;
            });
  bool disjoint = true;
  Rat watermark(0);
  for (const auto& mv : by_destination) {
    if (mv.destination_start < watermark) {
      disjoint = false;
      break;
    }
    watermark = mv.destination_start + mv.length;
  }
  check.mass_preserving = tiles && disjoint;

  // Composition f = xi o phi, checked on a refinement of every move by the
  // piece boundaries of f and the segment boundaries of xi shifted into the
  // move's source interval.
  auto value_of_f = [&cf](const Rat& x) {
    Rat pos(0);
    for (const auto& p : cf.pieces()) {
      pos += p.mass;
      if (x < pos) return p.value;
    }
    return cf.tail_value();
  };
  std::vector<Rat> f_bounds;
  Rat pos(0);
  for (const auto& p : cf.pieces()) {
    f_bounds.push_back(pos);
    pos += p.mass;
  }
  f_bounds.push_back(pos);
  std::vector<Rat> xi_bounds;
  Rat xpos(0);
  xi_bounds.push_back(xpos);
  for (const auto& seg : xi.segments()) {
    if (seg.length.is_infinite()) break;
    xpos += seg.length.finite();
    xi_bounds.push_back(xpos);
  }

  bool composed = true;
  for (const auto& mv : map.moves) {
    std::vector<Rat> cuts;
    cuts.push_back(mv.source_start);
    cuts.push_back(mv.source_start + mv.length);
    for (const auto& b : f_bounds)
      if (mv.source_start < b && b < mv.source_start + mv.length) cuts.push_back(b);
    for (const auto& b : xi_bounds) {
      Rat pulled = mv.source_start + (b - mv.destination_start);
      if (mv.source_start < pulled && pulled < mv.source_start + mv.length) cuts.push_back(pulled);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rat midpoint = (cuts[i] + cuts[i + 1]) / 2;
      Rat image = mv.destination_start + (midpoint - mv.source_start);
      if (value_of_f(midpoint) != xi.value_at(image)) {
        composed = false;
        break;
      }
    }
    if (!composed) break;
  }
  check.composition_exact = composed;
  return check;
}

}  // namespace symspace
