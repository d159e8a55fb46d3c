// Command-line front end: every operation of the library on JSON documents.
// Exit codes: 0 success, 1 input error, 2 property violation found by verify.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symspace/verify.hpp"

namespace {

using symspace::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) symspace::raise(symspace::Errc::InvalidInput, "cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) symspace::raise(symspace::Errc::InvalidInput, "cannot open output file '" + path + "'");
  out << payload;
  if (payload.empty() || payload.back() != '\n') out << "\n";
}

Json parse_json(const std::string& payload) {
  return Json::parse(payload);  // nlohmann reports byte-position on failure
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input, "input path or '-' for stdin");
  cmd->add_option("--output", opts.output, "output path or '-' for stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rearrangement, symmetric-norm and duality calculator"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string spec_text = "Lp:1";
  std::string method = "analytic";
  std::string suite = "all";
  std::uint64_t seed = 0;
  int n_instances = 100;
  int n_max = 8;
  int refinement = 1;

  auto* cmd_rearrange = app.add_subcommand("rearrange", "decreasing rearrangement of |f|");
  add_common(cmd_rearrange, opts);

  auto* cmd_distribution = app.add_subcommand("distribution", "distribution function of |f|");
  add_common(cmd_distribution, opts);

  auto* cmd_equi = app.add_subcommand("equimeasurable", "compare rearrangements of f and g");
  add_common(cmd_equi, opts);

  auto* cmd_transport = app.add_subcommand("transport", "measure preserving map onto the rearrangement");
  add_common(cmd_transport, opts);

  auto* cmd_cutoff = app.add_subcommand("cutoff", "upper and right cutoff residual norms");
  add_common(cmd_cutoff, opts);
  cmd_cutoff->add_option("--spec", spec_text, "norm spec, e.g. Lp:2 or {\"variant\":\"LInf\"}");
  cmd_cutoff->add_option("--n-max", n_max, "largest cutoff index");

  auto* cmd_norm = app.add_subcommand("norm", "norm of one function, or a CSV table for an array");
  add_common(cmd_norm, opts);
  std::vector<std::string> spec_list;
  cmd_norm->add_option("--spec", spec_list, "norm spec(s)")->expected(-1);

  auto* cmd_dual = app.add_subcommand("dual-norm", "associate (Koethe dual) norm");
  add_common(cmd_dual, opts);
  cmd_dual->add_option("--spec", spec_text, "norm spec");
  cmd_dual->add_option("--method", method, "analytic|oracle|both");
  cmd_dual->add_option("--refinement", refinement, "oracle grid subdivision");

  auto* cmd_second = app.add_subcommand("second-dual", "second associate norm");
  add_common(cmd_second, opts);
  cmd_second->add_option("--spec", spec_text, "norm spec");

  auto* cmd_propc = app.add_subcommand("property-c", "norm gap along a monotone chain");
  add_common(cmd_propc, opts);
  cmd_propc->add_option("--spec", spec_text, "norm spec");

  auto* cmd_fatou = app.add_subcommand("fatou", "norm lower semicontinuity along a sequence");
  add_common(cmd_fatou, opts);
  cmd_fatou->add_option("--spec", spec_text, "norm spec");

  auto* cmd_stone = app.add_subcommand("stone", "members, atoms, ultrafilters and the clopen map");
  add_common(cmd_stone, opts);

  auto* cmd_verify = app.add_subcommand("verify", "seeded property suites with a run manifest");
  add_common(cmd_verify, opts);
  cmd_verify->add_option("--suite", suite, "suite name (see --list)");
  cmd_verify->add_option("--n", n_instances, "instances per suite");
  cmd_verify->add_option("--seed", seed, "random seed");
  bool list_suites = false;
  cmd_verify->add_flag("--list", list_suites, "list suite names and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_rearrange->parsed()) {
      auto f = symspace::step_from_json(parse_json(read_input(opts.input)));
      write_output(opts.output, symspace::profile_to_json(symspace::rearrangement(f)).dump());
    } else if (cmd_distribution->parsed()) {
      auto f = symspace::step_from_json(parse_json(read_input(opts.input)));
      write_output(opts.output,
                   symspace::threshold_profile_to_json(symspace::distribution(f)).dump());
    } else if (cmd_equi->parsed()) {
      Json j = parse_json(read_input(opts.input));
      if (!j.contains("f") || !j.contains("g"))
        symspace::raise(symspace::Errc::InvalidInput, "expected an object with fields 'f' and 'g'");
      auto f = symspace::step_from_json(j.at("f"));
      auto g = symspace::step_from_json(j.at("g"));
      write_output(opts.output, Json{{"equimeasurable", symspace::equimeasurable(f, g)}}.dump());
    } else if (cmd_transport->parsed()) {
      auto f = symspace::step_from_json(parse_json(read_input(opts.input)));
      auto xi = symspace::rearrangement(f);
      auto map = symspace::transport_map(f);
      auto check = symspace::verify_transport(f, map, xi);
      Json out = symspace::transport_map_to_json(map);
      out["xi"] = symspace::profile_to_json(xi);
      out["mass_preserving"] = check.mass_preserving;
      out["composition_exact"] = check.composition_exact;
      write_output(opts.output, out.dump());
    } else if (cmd_cutoff->parsed()) {
      auto f = symspace::step_from_json(parse_json(read_input(opts.input)));
      auto spec = symspace::norm_spec_from_string(spec_text);
      Json rows = Json::array();
      for (const auto& e : symspace::cutoff_sequences(f, spec, n_max))
        rows.push_back(Json{{"n", e.n},
                            {"top_residual", symspace::norm_value_to_json(e.top_residual)},
                            {"support_residual", symspace::norm_value_to_json(e.support_residual)}});
      write_output(opts.output, Json{{"spec", symspace::norm_spec_to_json(spec)}, {"entries", rows}}.dump());
    } else if (cmd_norm->parsed()) {
      if (spec_list.empty()) spec_list.push_back("Lp:1");
      Json j = parse_json(read_input(opts.input));
      if (j.is_array()) {
        // batch mode: CSV table, one row per (function, spec)
        std::ostringstream csv;
        csv << "id,spec,exact,approx,infinite\n";
        for (size_t i = 0; i < j.size(); ++i) {
          auto f = symspace::step_from_json(j[i]);
          for (const auto& stext : spec_list) {
            auto spec = symspace::norm_spec_from_string(stext);
            auto v = symspace::norm(f, spec);
            csv << i << "," << csv_escape(spec.name()) << ","
                << (v.exact ? symspace::rat_to_string(*v.exact) : "") << "," << v.approx << ","
                << (v.infinite ? "true" : "false") << "\n";
          }
        }
        write_output(opts.output, csv.str());
      } else {
        auto f = symspace::step_from_json(j);
        auto spec = symspace::norm_spec_from_string(spec_list.front());
        write_output(opts.output, symspace::norm_value_to_json(symspace::norm(f, spec)).dump());
      }
    } else if (cmd_dual->parsed()) {
      auto f = symspace::step_from_json(parse_json(read_input(opts.input)));
      auto spec = symspace::norm_spec_from_string(spec_text);
      Json out;
      auto report = [](const symspace::DualNormResult& r) {
        return Json{{"value", symspace::norm_value_to_json(r.value)},
                    {"witness", symspace::profile_to_json(r.witness)},
                    {"method",
                     r.method == symspace::DualNormResult::Method::Analytic ? "analytic" : "oracle"}};
      };
      if (method == "analytic") {
        out = report(symspace::associate_norm(f, spec));
      } else if (method == "oracle") {
        out = report(symspace::dual_norm_oracle(f, spec, refinement));
      } else if (method == "both") {
        auto a = symspace::associate_norm(f, spec);
        auto o = symspace::dual_norm_oracle(f, spec, refinement);
        double discrepancy = 0;
        if (!a.value.infinite && !o.value.infinite)
          discrepancy = std::abs(a.value.approx - o.value.approx);
        out = Json{{"analytic", report(a)}, {"oracle", report(o)}, {"discrepancy", discrepancy}};
      } else {
        symspace::raise(symspace::Errc::InvalidInput, "--method must be analytic, oracle or both");
      }
      write_output(opts.output, out.dump());
    } else if (cmd_second->parsed()) {
      auto f = symspace::step_from_json(parse_json(read_input(opts.input)));
      auto spec = symspace::norm_spec_from_string(spec_text);
      auto second = symspace::second_associate_norm(f, spec);
      auto base = symspace::norm(f, spec);
      write_output(opts.output, Json{{"second_dual", symspace::norm_value_to_json(second)},
                                     {"norm", symspace::norm_value_to_json(base)},
                                     {"contractive", symspace::norm_leq(second, base)}}
                                    .dump());
    } else if (cmd_propc->parsed()) {
      Json j = parse_json(read_input(opts.input));
      if (!j.contains("chain") || !j.contains("limit"))
        symspace::raise(symspace::Errc::InvalidInput,
                        "expected an object with fields 'chain' and 'limit'");
      std::vector<symspace::StepFunction> chain;
      for (const auto& fj : j.at("chain")) chain.push_back(symspace::step_from_json(fj));
      auto limit = symspace::step_from_json(j.at("limit"));
      auto spec = symspace::norm_spec_from_string(spec_text);
      auto gap = symspace::property_C_gap(chain, limit, spec);
      write_output(opts.output,
                   Json{{"sup_chain_norm", symspace::norm_value_to_json(gap.sup_chain_norm)},
                        {"limit_norm", symspace::norm_value_to_json(gap.limit_norm)},
                        {"gap", symspace::norm_value_to_json(gap.gap)}}
                       .dump());
    } else if (cmd_fatou->parsed()) {
      Json j = parse_json(read_input(opts.input));
      if (!j.contains("sequence") || !j.contains("limit"))
        symspace::raise(symspace::Errc::InvalidInput,
                        "expected an object with fields 'sequence' and 'limit'");
      std::vector<symspace::StepFunction> seq;
      for (const auto& fj : j.at("sequence")) seq.push_back(symspace::step_from_json(fj));
      auto limit = symspace::step_from_json(j.at("limit"));
      auto spec = symspace::norm_spec_from_string(spec_text);
      auto res = symspace::fatou_check(seq, limit, spec);
      Json norms = Json::array();
      for (const auto& v : res.norms) norms.push_back(symspace::norm_value_to_json(v));
      const char* status = res.status == symspace::FatouStatus::Holds
                               ? "holds"
                               : (res.status == symspace::FatouStatus::Fails ? "fails"
                                                                             : "not-applicable");
      write_output(opts.output,
                   Json{{"norms", norms},
                        {"liminf_norm", symspace::norm_value_to_json(res.liminf_norm)},
                        {"limit_norm", symspace::norm_value_to_json(res.limit_norm)},
                        {"status", status}}
                       .dump());
    } else if (cmd_stone->parsed()) {
      auto in = symspace::stone_input_from_json(parse_json(read_input(opts.input)));
      auto alg = symspace::FiniteBooleanAlgebra::generate(in.ground_size, in.generators);
      write_output(opts.output, symspace::stone_report_to_json(alg).dump());
    } else if (cmd_verify->parsed()) {
      if (list_suites) {
        Json names = Json::array();
        for (const auto& s : symspace::suite_names()) names.push_back(s);
        write_output(opts.output, names.dump());
        return 0;
      }
      std::string payload =
          Json{{"suite", suite}, {"n", n_instances}, {"seed", seed}}.dump();
      auto report = symspace::run_suite(suite, n_instances, seed);
      write_output(opts.output, symspace::run_manifest("verify", payload, report).dump(2));
      if (!report.ok()) return 2;
    }
  } catch (const Json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const symspace::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
