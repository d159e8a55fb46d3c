#include "symspace/verify.hpp"

#include <algorithm>
#include <cmath>

#include "symspace/random_instances.hpp"

namespace symspace {

namespace {

constexpr int kMaxCounterexamples = 5;

struct Recorder {
  SuiteReport& report;

  void check(bool pass, const std::function<Json()>& describe) {
    ++report.checks;
    if (pass) {
      ++report.passes;
    } else if (static_cast<int>(report.counterexamples.size()) < kMaxCounterexamples) {
      report.counterexamples.push_back(describe());
    }
  }
};

// Independent evaluation of the rearrangement through the inf-formula,
// scanning candidate levels directly on the function.
Rat xi_by_inf_formula(const StepFunction& f, const Rat& x) {
  std::vector<Rat> levels;
  levels.push_back(Rat(0));
  for (const auto& p : f.pieces()) levels.push_back(p.value < 0 ? -p.value : p.value);
  if (f.space().is_infinite()) levels.push_back(f.tail_value());
  std::sort(levels.begin(), levels.end());
  auto eta = [&f](const Rat& y) -> ExtRat {
    if (f.space().is_infinite() && f.tail_value() > y) return ExtRat::infinity();
    Rat mass(0);
    for (const auto& p : f.pieces())
      if ((p.value < 0 ? -p.value : p.value) > y) mass += p.mass;
    return ExtRat(mass);
  };
  for (const auto& y : levels)
    if (eta(y) <= ExtRat(x)) return y;
  // No candidate level works only if eta never drops to x, which cannot
  // happen for step data at x >= 0.
  return levels.back();
}

std::vector<Rat> probe_grid(const DecreasingProfile& a, const DecreasingProfile& b) {
  std::vector<Rat> cuts;
  cuts.push_back(Rat(0));
  for (const DecreasingProfile* p : {&a, &b}) {
    Rat pos(0);
    for (const auto& seg : p->segments()) {
      if (seg.length.is_infinite()) {
        cuts.push_back(pos + 1);
        cuts.push_back(pos + 7);
        break;
      }
      pos += seg.length.finite();
      cuts.push_back(pos);
    }
    cuts.push_back(pos + 3);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rat> grid;
  for (size_t i = 0; i < cuts.size(); ++i) {
    grid.push_back(cuts[i]);
    if (i + 1 < cuts.size()) grid.push_back((cuts[i] + cuts[i + 1]) / 2);
  }
  return grid;
}

StepFunctionOptions tailless_options() {
  StepFunctionOptions opt;
  opt.allow_tail = false;
  return opt;
}

void suite_rearrangement(Recorder& rec, SplitMix64& rng, int n) {
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng);
    auto describe = [&f](const char* what) {
      return [&f, what] { return Json{{"instance", step_to_json(f)}, {"failed", what}}; };
    };
    DecreasingProfile xi = rearrangement(f);
    ThresholdProfile eta = distribution(f);
    DecreasingProfile xi_inv = rearrangement_from_distribution(eta);
    bool ok = xi == xi_inv;
    // Pointwise agreement with the inf-formula on a grid refining all
    // breakpoints of both constructions.
    if (ok)
      for (const auto& x : probe_grid(xi, xi_inv))
        if (xi.value_at(x) != xi_by_inf_formula(f, x)) {
          ok = false;
          break;
        }
    rec.check(ok, describe("generalized-inverse oracle equivalence"));
    rec.check(rearrangement(xi.as_step_function()) == xi, describe("idempotence"));
    rec.check(distribution_of_profile(xi) == eta, describe("distribution round-trip"));
    Rat c = random_rational(rng, 20, 10, true, true);
    if (f.tail_value() > 0 && c < 0) c = -c;  // negative tails are unrepresentable
    DecreasingProfile xi_scaled = rearrangement(scale(f, c));
    std::vector<ProfileSegment> expect;
    Rat ac = c < 0 ? -c : c;
    for (const auto& seg : xi.segments()) expect.push_back({seg.length, seg.value * ac});
    rec.check(xi_scaled == DecreasingProfile::from_segments(std::move(expect)),
              describe("scalar homogeneity of the rearrangement"));
  }
}

void suite_norm_transfer(Recorder& rec, SplitMix64& rng, int n) {
  const std::vector<NormSpec> exact_specs = {NormSpec::l1(), NormSpec::linf(),
                                             NormSpec::l1_cap_linf(), NormSpec::l1_plus_linf(),
                                             NormSpec::linf_plus_tail()};
  const std::vector<Rat> ps = {Rat(1, 2), Rat(3, 2), Rat(2), Rat(3)};
  const double tol = std::ldexp(1.0, -40);
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng);
    DecreasingProfile xi = rearrangement(f);
    for (const auto& spec : exact_specs) {
      NormValue direct = norm(f, spec);
      NormValue transferred = norm_of_profile(xi, spec);
      bool ok = direct.infinite == transferred.infinite;
      if (ok && !direct.infinite) ok = direct.exact && transferred.exact && *direct.exact == *transferred.exact;
      rec.check(ok, [&] {
        return Json{{"instance", step_to_json(f)}, {"spec", spec.name()}, {"failed", "exact transfer"}};
      });
    }
    for (const auto& p : ps) {
      NormSpec spec = NormSpec::lp(p);
      NormValue direct = norm(f, spec);
      NormValue transferred = norm_of_profile(xi, spec);
      bool ok = direct.infinite == transferred.infinite;
      if (ok && !direct.infinite) {
        if (direct.power_value && transferred.power_value)
          ok = *direct.power_value == *transferred.power_value;
        else
          ok = norm_close(direct, transferred, tol);
      }
      rec.check(ok, [&] {
        return Json{{"instance", step_to_json(f)}, {"spec", spec.name()}, {"failed", "Lp transfer"}};
      });
    }
  }
}

StepFunction shuffled_refinement(SplitMix64& rng, const StepFunction& f) {
  // Split pieces randomly, then permute; the result stays equimeasurable.
  std::vector<Piece> pieces;
  for (const auto& p : f.pieces()) {
    if (p.mass > 1 && rng.one_in(2)) {
      Rat half = p.mass / 2;
      pieces.push_back({p.value, half});
      pieces.push_back({p.value, p.mass - half});
    } else {
      pieces.push_back(p);
    }
  }
  for (size_t i = pieces.size(); i > 1; --i) std::swap(pieces[i - 1], pieces[rng.below(i)]);
  return StepFunction(f.space(), std::move(pieces), f.tail_value());
}

void suite_symmetry(Recorder& rec, SplitMix64& rng, int n) {
  const std::vector<NormSpec> specs = {NormSpec::l1(),          NormSpec::lp(Rat(1, 2)),
                                       NormSpec::lp(Rat(2)),    NormSpec::linf(),
                                       NormSpec::l1_cap_linf(), NormSpec::l1_plus_linf(),
                                       NormSpec::linf_plus_tail()};
  const double tol = std::ldexp(1.0, -40);
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng);
    StepFunction g = shuffled_refinement(rng, f);
    rec.check(equimeasurable(f, g), [&] {
      return Json{{"instance", step_to_json(f)}, {"failed", "equimeasurable under permutation"}};
    });
    for (const auto& spec : specs) {
      rec.check(norm_close(norm(f, spec), norm(g, spec), tol), [&] {
        return Json{{"instance", step_to_json(f)}, {"spec", spec.name()}, {"failed", "symmetry"}};
      });
    }
    // Ideal property: |h| <= |f| pointwise forces norm(h) <= norm(f).
    StepFunction h = pointwise(abs(f), abs(resample_on_space(rng, f.space())), PointwiseOp::Min);
    for (const auto& spec : specs) {
      rec.check(norm_leq(norm(h, spec), norm(f, spec)), [&] {
        return Json{{"instance", step_to_json(f)}, {"spec", spec.name()}, {"failed", "ideal bound"}};
      });
    }
  }
}

void suite_embedding(Recorder& rec, SplitMix64& rng, int n) {
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng);
    NormSpec spec = random_banach_spec(rng);
    auto res = embedding_check(f, spec);
    rec.check(res.holds, [&] {
      return Json{{"instance", step_to_json(f)},
                  {"spec", spec.name()},
                  {"lhs", norm_value_to_json(res.lhs)},
                  {"mid", norm_value_to_json(res.mid)},
                  {"rhs", norm_value_to_json(res.rhs)}};
    });
  }
}

void suite_subadditivity(Recorder& rec, SplitMix64& rng, int n) {
  const std::vector<Rat> ps = {Rat(1, 3), Rat(1, 2), Rat(1)};
  StepFunctionOptions opt = tailless_options();
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng, opt);
    StepFunction g = resample_on_space(rng, f.space(), opt);
    for (const auto& p : ps) {
      auto res = p_subadditivity_check(f, g, p);
      rec.check(res.holds && res.exact, [&] {
        return Json{{"f", step_to_json(f)}, {"g", step_to_json(g)}, {"p", rat_to_string(p)}};
      });
    }
  }
}

void suite_duality(Recorder& rec, SplitMix64& rng, int n) {
  const double tol20 = std::ldexp(1.0, -20);
  StepFunctionOptions opt;
  opt.max_pieces = 8;
  opt.allow_negative = false;
  opt.allow_tail = false;
  const std::vector<NormSpec> lp_specs = {NormSpec::l1(), NormSpec::lp(Rat(3, 2)),
                                          NormSpec::lp(Rat(2)), NormSpec::lp(Rat(3)),
                                          NormSpec::linf()};
  const std::vector<NormSpec> all_specs = {NormSpec::l1(),          NormSpec::lp(Rat(3, 2)),
                                           NormSpec::lp(Rat(2)),    NormSpec::lp(Rat(3)),
                                           NormSpec::linf(),        NormSpec::l1_cap_linf(),
                                           NormSpec::l1_plus_linf(), NormSpec::linf_plus_tail()};
  for (int it = 0; it < n; ++it) {
    StepFunction g = random_step_function(rng, opt);
    const NormSpec& spec = lp_specs[rng.below(lp_specs.size())];
    auto analytic = associate_norm(g, spec);
    auto oracle = dual_norm_oracle(g, spec);
    rec.check(norm_close(analytic.value, oracle.value, tol20), [&] {
      return Json{{"g", step_to_json(g)},
                  {"spec", spec.name()},
                  {"analytic", norm_value_to_json(analytic.value)},
                  {"oracle", norm_value_to_json(oracle.value)}};
    });
    if (!oracle.value.infinite && !oracle.witness.is_zero()) {
      NormValue wnorm = norm_of_profile(oracle.witness, spec);
      rec.check(!wnorm.infinite && wnorm.approx <= 1.0 + std::ldexp(1.0, -30), [&] {
        return Json{{"g", step_to_json(g)}, {"spec", spec.name()}, {"failed", "witness feasibility"}};
      });
    }
    const NormSpec& cspec = all_specs[rng.below(all_specs.size())];
    NormValue base = norm(g, cspec);
    NormValue second = second_associate_norm(g, cspec);
    rec.check(norm_leq(second, base), [&] {
      return Json{{"g", step_to_json(g)},
                  {"spec", cspec.name()},
                  {"norm", norm_value_to_json(base)},
                  {"second", norm_value_to_json(second)}};
    });
    if (cspec.kind != NormSpec::Kind::LInfPlusTail) {
      // order semi-continuous specs: the embedding into the second associate
      // space is isometric
      rec.check(norm_close(second, base, tol20), [&] {
        return Json{{"g", step_to_json(g)},
                    {"spec", cspec.name()},
                    {"norm", norm_value_to_json(base)},
                    {"second", norm_value_to_json(second)},
                    {"failed", "isometry on an order semi-continuous spec"}};
      });
    }
  }
}

void suite_triple_dual(Recorder& rec, SplitMix64& rng, int n) {
  const double tol15 = std::ldexp(1.0, -15);
  StepFunctionOptions opt;
  opt.max_pieces = 6;
  opt.allow_negative = false;
  opt.allow_tail = false;
  opt.allow_infinite_space = false;
  const std::vector<NormSpec> specs = {NormSpec::l1(), NormSpec::lp(Rat(3, 2)),
                                       NormSpec::lp(Rat(2)), NormSpec::linf()};
  for (int it = 0; it < n; ++it) {
    StepFunction g = random_step_function(rng, opt);
    const NormSpec& spec = specs[rng.below(specs.size())];
    NormValue first = associate_norm(g, spec).value;
    NormValue third = third_associate_norm(g, spec);
    rec.check(norm_close(first, third, tol15), [&] {
      return Json{{"g", step_to_json(g)},
                  {"spec", spec.name()},
                  {"associate", norm_value_to_json(first)},
                  {"third", norm_value_to_json(third)}};
    });
  }
}

void suite_transport(Recorder& rec, SplitMix64& rng, int n) {
  StepFunctionOptions opt;
  opt.allow_negative = false;
  opt.allow_tail = false;
  opt.allow_infinite_space = false;
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng, opt);
    DecreasingProfile xi = rearrangement(f);
    TransportMap map = transport_map(f);
    auto check = verify_transport(f, map, xi);
    rec.check(check.ok(), [&] {
      return Json{{"instance", step_to_json(f)},
                  {"mass_preserving", check.mass_preserving},
                  {"composition_exact", check.composition_exact}};
    });
  }
}

void suite_stone(Recorder& rec, SplitMix64& rng, int n) {
  for (int it = 0; it < n; ++it) {
    AlgebraInput in = random_algebra_input(rng, 12);
    auto alg = FiniteBooleanAlgebra::generate(in.ground_size, in.generators);
    auto describe = [&in](const char* what) {
      return [&in, what] {
        Json gens = Json::array();
        for (Mask g : in.generators) gens.push_back(mask_to_json(g));
        return Json{{"n", in.ground_size}, {"generators", gens}, {"failed", what}};
      };
    };
    auto ufs = ultrafilters(alg);
    rec.check(ufs.size() == alg.atoms().size(), describe("ultrafilter count equals atom count"));
    bool axioms = true;
    for (const auto& uf : ufs) axioms = axioms && is_ultrafilter(alg, uf);
    rec.check(axioms, describe("ultrafilter axioms"));
    rec.check(verify_stone_isomorphism(alg).ok, describe("clopen-image isomorphism"));
    bool zeta_ok = true;
    for (Mask m : alg.members()) zeta_ok = zeta_ok && is_zeta_set(alg, m);
    rec.check(zeta_ok, describe("members are unions of blocks"));

    ZetaPartition zeta = zeta_partition(alg);
    bool point_map_ok = true;
    for (size_t b = 0; b < zeta.blocks.size() && point_map_ok; ++b)
      point_map_ok = point_ultrafilter(alg, zeta.blocks[b].front()) == ufs[b];
    rec.check(point_map_ok, describe("principal ultrafilters at block representatives"));

    WeightedSpace ws;
    for (int i = 0; i < alg.ground_size(); ++i)
      ws.weights.push_back(random_positive_rational(rng, 20, 10));
    FactorSpace factor = factor_space(ws, alg);
    std::vector<Rat> block_values;
    for (size_t b = 0; b < factor.space.weights.size(); ++b)
      block_values.push_back(random_rational(rng, 20, 10, true, true));
    Rat direct(0), factored(0);
    for (int i = 0; i < alg.ground_size(); ++i)
      direct += block_values[factor.projection[i]] * ws.weights[i];
    for (size_t b = 0; b < factor.space.weights.size(); ++b)
      factored += block_values[b] * factor.space.weights[b];
    rec.check(direct == factored, describe("factor space preserves integrals"));
  }
}

void suite_metric(Recorder& rec, SplitMix64& rng, int n) {
  for (int it = 0; it < n; ++it) {
    StepFunctionOptions opt;
    opt.max_pieces = 6;
    StepFunction f = random_step_function(rng, opt);
    StepFunction g = resample_on_space(rng, f.space(), opt);
    StepFunction h = resample_on_space(rng, f.space(), opt);
    Rat extent = std::max({f.finite_mass(), g.finite_mass(), h.finite_mass(), Rat(1)});
    Delta0Weight w = Delta0Weight::defaults_for(f.space(), extent);
    Rat dfg = delta0_metric(f, g, w);
    Rat dgf = delta0_metric(g, f, w);
    Rat dfh = delta0_metric(f, h, w);
    Rat dgh = delta0_metric(g, h, w);
    auto describe = [&](const char* what) {
      return [&f, &g, &h, what] {
        return Json{{"f", step_to_json(f)}, {"g", step_to_json(g)}, {"h", step_to_json(h)},
                    {"failed", what}};
      };
    };
    rec.check(dfg == dgf, describe("symmetry"));
    rec.check(dfh <= dfg + dgh, describe("triangle inequality"));
    bool zero_iff = (dfg == 0) == ae_equal(f, g);
    rec.check(zero_iff, describe("identity of indiscernibles"));
    rec.check(delta0_metric(f, f, w) == 0, describe("reflexivity"));
  }
}

void suite_conditional_expectation(Recorder& rec, SplitMix64& rng, int n) {
  StepFunctionOptions opt = tailless_options();
  opt.allow_infinite_space = false;
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng, opt);
    const int piece_count = static_cast<int>(f.pieces().size());
    PartitionMap blocks;
    const int block_count = rng.range(1, piece_count);
    for (int i = 0; i < piece_count; ++i) {
      int b = i < block_count ? i : rng.range(0, block_count - 1);  // every block non-empty
      blocks.block_of_piece.push_back(b);
    }
    StepFunction ef = conditional_expectation(f, blocks);
    auto describe = [&](const char* what) {
      return [&f, what] { return Json{{"instance", step_to_json(f)}, {"failed", what}}; };
    };
    rec.check(ae_equal(conditional_expectation(ef, blocks), ef), describe("idempotence"));
    // adjointness against a random block-measurable function
    std::vector<Piece> gp = f.pieces();
    std::vector<Rat> block_values(static_cast<size_t>(block_count));
    for (auto& v : block_values) v = random_rational(rng, 20, 10, true, true);
    for (int i = 0; i < piece_count; ++i) gp[i].value = block_values[blocks.block_of_piece[i]];
    StepFunction g(f.space(), std::move(gp));
    rec.check(integrate(pointwise(ef, g, PointwiseOp::Multiply)) ==
                  integrate(pointwise(f, g, PointwiseOp::Multiply)),
              describe("adjointness"));
    ExtRat lhs = integrate(abs(ef));
    ExtRat rhs = integrate(abs(f));
    rec.check(lhs <= rhs, describe("L1 contraction"));
    StepFunction h = resample_on_space(rng, f.space(), opt);
    rec.check(integrate(pointwise(f, h, PointwiseOp::Add)) == integrate(f) + integrate(h),
              describe("integral linearity"));
  }
}

void suite_cutoff(Recorder& rec, SplitMix64& rng, int n) {
  const std::vector<NormSpec> specs = {NormSpec::l1(), NormSpec::lp(Rat(1, 2)), NormSpec::lp(Rat(2)),
                                       NormSpec::linf(), NormSpec::l1_plus_linf()};
  StepFunctionOptions opt = tailless_options();
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng, opt);
    const NormSpec& spec = specs[rng.below(specs.size())];
    NormValue base = norm(f, spec);
    if (base.infinite) continue;
    auto entries = cutoff_sequences(f, spec, 8);
    bool monotone = true;
    for (size_t i = 0; i + 1 < entries.size(); ++i) {
      monotone = monotone && norm_leq(entries[i + 1].top_residual, entries[i].top_residual);
      monotone = monotone && norm_leq(entries[i + 1].support_residual, entries[i].support_residual);
    }
    rec.check(monotone, [&] {
      return Json{{"instance", step_to_json(f)}, {"spec", spec.name()},
                  {"failed", "cutoff sequences must be non-increasing"}};
    });
  }
}

void suite_hl_dominance(Recorder& rec, SplitMix64& rng, int n) {
  StepFunctionOptions opt = tailless_options();
  opt.max_pieces = 8;
  for (int it = 0; it < n; ++it) {
    StepFunction f = random_step_function(rng, opt);
    StepFunction g = resample_on_space(rng, f.space(), opt);
    ExtRat aligned = integrate(abs(pointwise(f, g, PointwiseOp::Multiply)));
    ExtRat paired = hl_pairing(rearrangement(f), rearrangement(g));
    rec.check(aligned <= paired, [&] {
      return Json{{"f", step_to_json(f)}, {"g", step_to_json(g)},
                  {"failed", "rearranged pairing must dominate"}};
    });
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"rearrangement", "norm-transfer", "symmetry",  "embedding",
          "subadditivity", "duality",       "triple-dual", "transport",
          "stone",         "metric",        "conditional-expectation",
          "cutoff",        "hl-dominance",  "all"};
}

SuiteReport run_suite(const std::string& name, int instances, std::uint64_t seed) {
  SuiteReport report;
  report.suite = name;
  report.seed = seed;
  report.requested = instances;
  Recorder rec{report};
  SplitMix64 rng(seed);
  if (name == "rearrangement") suite_rearrangement(rec, rng, instances);
  else if (name == "norm-transfer") suite_norm_transfer(rec, rng, instances);
  else if (name == "symmetry") suite_symmetry(rec, rng, instances);
  else if (name == "embedding") suite_embedding(rec, rng, instances);
  else if (name == "subadditivity") suite_subadditivity(rec, rng, instances);
  else if (name == "duality") suite_duality(rec, rng, instances);
  else if (name == "triple-dual") suite_triple_dual(rec, rng, instances);
  else if (name == "transport") suite_transport(rec, rng, instances);
  else if (name == "stone") suite_stone(rec, rng, instances);
  else if (name == "metric") suite_metric(rec, rng, instances);
  else if (name == "conditional-expectation") suite_conditional_expectation(rec, rng, instances);
  else if (name == "cutoff") suite_cutoff(rec, rng, instances);
  else if (name == "hl-dominance") suite_hl_dominance(rec, rng, instances);
  else if (name == "all") {
    int per = std::max(1, instances / 10);
    for (const auto& sub : suite_names()) {
      if (sub == "all") continue;
      SuiteReport inner = run_suite(sub, per, seed);
      report.checks += inner.checks;
      report.passes += inner.passes;
      for (auto& ce : inner.counterexamples)
        if (static_cast<int>(report.counterexamples.size()) < kMaxCounterexamples)
          report.counterexamples.push_back(std::move(ce));
    }
  } else {
    raise(Errc::InvalidInput, "unknown suite '" + name + "'");
  }
  return report;
}

Json run_manifest(const std::string& command, const std::string& input_payload,
                  const SuiteReport& report) {
  return Json{{"command", command},
              {"input_digest", digest(input_payload)},
              {"library_version", kLibraryVersion},
              {"seed", report.seed},
              {"outputs", Json{{"suite", report.suite},
                               {"requested", report.requested},
                               {"checks", report.checks},
                               {"passes", report.passes},
                               {"counterexamples", report.counterexamples}}}};
}

}  // namespace symspace
