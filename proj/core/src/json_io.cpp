#include "symspace/json_io.hpp"

#include <cstdint>

namespace symspace {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  raise(Errc::InvalidInput, "field '" + field + "': " + what);
}

std::string string_field(const Json& j, const std::string& field) {
  if (!j.is_string()) bad_field(field, "expected a string");
  return j.get<std::string>();
}

Rat rat_field(const Json& j, const std::string& field) {
  try {
    return rat_from_string(string_field(j, field));
  } catch (const Error&) {
    bad_field(field, "expected a rational 'p/q' string");
  }
}

ExtRat ext_field(const Json& j, const std::string& field) {
  try {
    return ext_from_string(string_field(j, field));
  } catch (const Error&) {
    bad_field(field, "expected a rational 'p/q' string or 'inf'");
  }
}

const Json& require(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) raise(Errc::InvalidInput, "missing field '" + field + "'");
  return j.at(field);
}

}  // namespace

Json step_to_json(const StepFunction& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces())
    pieces.push_back(Json::array({rat_to_string(p.value), rat_to_string(p.mass)}));
  return Json{{"space", {{"total_mass", ext_to_string(f.space().total_mass())}}},
              {"pieces", pieces},
              {"tail_value", rat_to_string(f.tail_value())}};
}

StepFunction step_from_json(const Json& j) {
  const Json& space_j = require(j, "space");
  ExtRat total = ext_field(require(space_j, "total_mass"), "space.total_mass");
  MeasureSpace space =
      total.is_infinite() ? MeasureSpace::infinite() : MeasureSpace::finite(total.finite());
  const Json& pieces_j = require(j, "pieces");
  if (!pieces_j.is_array()) bad_field("pieces", "expected an array");
  std::vector<Piece> pieces;
  pieces.reserve(pieces_j.size());
  for (const auto& pj : pieces_j) {
    if (!pj.is_array() || pj.size() != 2) bad_field("pieces", "expected [value, mass] pairs");
    pieces.push_back({rat_field(pj[0], "pieces[].value"), rat_field(pj[1], "pieces[].mass")});
  }
  Rat tail(0);
  if (j.contains("tail_value")) tail = rat_field(j.at("tail_value"), "tail_value");
  return StepFunction(space, std::move(pieces), std::move(tail));
}

Json profile_to_json(const DecreasingProfile& xi) {
  Json segments = Json::array();
  for (const auto& seg : xi.segments())
    segments.push_back(Json::array({ext_to_string(seg.length), rat_to_string(seg.value)}));
  return Json{{"segments", segments}};
}

DecreasingProfile profile_from_json(const Json& j) {
  const Json& segs = require(j, "segments");
  if (!segs.is_array()) bad_field("segments", "expected an array");
  std::vector<ProfileSegment> out;
  out.reserve(segs.size());
  for (const auto& sj : segs) {
    if (!sj.is_array() || sj.size() != 2) bad_field("segments", "expected [length, value] pairs");
    out.push_back({ext_field(sj[0], "segments[].length"), rat_field(sj[1], "segments[].value")});
  }
  return DecreasingProfile::from_segments(std::move(out));
}

Json threshold_profile_to_json(const ThresholdProfile& eta) {
  Json breaks = Json::array();
  for (const auto& br : eta.breaks())
    breaks.push_back(Json::array({rat_to_string(br.threshold), ext_to_string(br.value)}));
  return Json{{"breakpoints", breaks}};
}

ThresholdProfile threshold_profile_from_json(const Json& j) {
  const Json& breaks = require(j, "breakpoints");
  if (!breaks.is_array()) bad_field("breakpoints", "expected an array");
  std::vector<ThresholdBreak> out;
  out.reserve(breaks.size());
  for (const auto& bj : breaks) {
    if (!bj.is_array() || bj.size() != 2)
      bad_field("breakpoints", "expected [threshold, value] pairs");
    out.push_back(
        {rat_field(bj[0], "breakpoints[].threshold"), ext_field(bj[1], "breakpoints[].value")});
  }
  return ThresholdProfile::from_breaks(std::move(out));
}

Json norm_spec_to_json(const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::Lp: return Json{{"variant", "Lp"}, {"p", rat_to_string(spec.p)}};
    case NormSpec::Kind::LInf: return Json{{"variant", "LInf"}};
    case NormSpec::Kind::L1CapLInf: return Json{{"variant", "L1CapLInf"}};
    case NormSpec::Kind::L1PlusLInf: return Json{{"variant", "L1PlusLInf"}};
    case NormSpec::Kind::LInfPlusTail: return Json{{"variant", "LInfPlusTail"}};
  }
  raise(Errc::InvalidInput, "unknown norm spec");
}

NormSpec norm_spec_from_json(const Json& j) {
  std::string variant = string_field(require(j, "variant"), "variant");
  if (variant == "Lp") return NormSpec::lp(rat_field(require(j, "p"), "p"));
  if (variant == "LInf") return NormSpec::linf();
  if (variant == "L1CapLInf") return NormSpec::l1_cap_linf();
  if (variant == "L1PlusLInf") return NormSpec::l1_plus_linf();
  if (variant == "LInfPlusTail") return NormSpec::linf_plus_tail();
  bad_field("variant", "unknown norm variant '" + variant + "'");
}

NormSpec norm_spec_from_string(const std::string& text) {
  if (!text.empty() && text.front() == '{') return norm_spec_from_json(Json::parse(text));
  if (text.rfind("Lp:", 0) == 0) return NormSpec::lp(rat_from_string(text.substr(3)));
  if (text == "L1") return NormSpec::l1();
  if (text == "LInf") return NormSpec::linf();
  if (text == "L1CapLInf") return NormSpec::l1_cap_linf();
  if (text == "L1PlusLInf") return NormSpec::l1_plus_linf();
  if (text == "LInfPlusTail") return NormSpec::linf_plus_tail();
  raise(Errc::InvalidInput, "unknown norm spec '" + text + "'");
}

Json norm_value_to_json(const NormValue& v) {
  Json out{{"infinite", v.infinite}, {"approx", v.approx}};
  if (v.exact) out["exact"] = rat_to_string(*v.exact);
  if (v.power_value) {
    out["power_value"] = rat_to_string(*v.power_value);
    out["power"] = rat_to_string(v.power);
  }
  return out;
}

Json transport_map_to_json(const TransportMap& map) {
  Json moves = Json::array();
  for (const auto& mv : map.moves)
    moves.push_back(Json::array({rat_to_string(mv.source_start), rat_to_string(mv.length),
                                 rat_to_string(mv.destination_start)}));
  return Json{{"moves", moves}};
}

TransportMap transport_map_from_json(const Json& j) {
  const Json& moves = require(j, "moves");
  if (!moves.is_array()) bad_field("moves", "expected an array");
  TransportMap out;
  out.moves.reserve(moves.size());
  for (const auto& mj : moves) {
    if (!mj.is_array() || mj.size() != 3)
      bad_field("moves", "expected [source, length, destination] triples");
    out.moves.push_back({rat_field(mj[0], "moves[].source"), rat_field(mj[1], "moves[].length"),
                         rat_field(mj[2], "moves[].destination")});
  }
  return out;
}

Json mask_to_json(Mask m) {
  Json points = Json::array();
  for (int bit = 0; bit < FiniteBooleanAlgebra::kMaxGround; ++bit)
    if ((m >> bit) & 1u) points.push_back(bit);
  return points;
}

StoneInput stone_input_from_json(const Json& j) {
  StoneInput in;
  const Json& n = require(j, "n");
  if (!n.is_number_integer()) bad_field("n", "expected an integer");
  in.ground_size = n.get<int>();
  const Json& gens = require(j, "generators");
  if (!gens.is_array()) bad_field("generators", "expected an array of point arrays");
  for (const auto& gj : gens) {
    if (!gj.is_array()) bad_field("generators", "expected an array of point arrays");
    Mask m = 0;
    for (const auto& pj : gj) {
      if (!pj.is_number_integer()) bad_field("generators", "points must be integers");
      int point = pj.get<int>();
      if (point < 0 || point >= in.ground_size) bad_field("generators", "point outside 0..n-1");
      m |= Mask(1) << point;
    }
    in.generators.push_back(m);
  }
  return in;
}

Json stone_report_to_json(const FiniteBooleanAlgebra& alg) {
  Json members = Json::array();
  for (Mask m : alg.members()) members.push_back(mask_to_json(m));
  Json atoms = Json::array();
  for (Mask a : alg.atoms()) atoms.push_back(mask_to_json(a));
  Json ufs = Json::array();
  for (const auto& uf : ultrafilters(alg)) ufs.push_back(uf.selected);
  Json table = Json::array();
  for (size_t i = 0; i < alg.members().size(); ++i)
    table.push_back(Json{{"member", i}, {"ultrafilters", stone_map(alg, alg.members()[i])}});
  auto iso = verify_stone_isomorphism(alg);
  return Json{{"n", alg.ground_size()}, {"members", members},      {"atoms", atoms},
              {"ultrafilters", ufs},    {"stone_map", table},      {"isomorphism_ok", iso.ok}};
}

std::string digest(const std::string& payload) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace symspace
