// bipc4: generate, detect, reduce, and verify from the command line.
//
// All machine output is a single JSON document on stdout; human summaries go
// to stderr. Exit codes: 0 success and no counterexample; 1 usage, IO, or
// generation error; 2 hypothesis violation reported; 3 counterexample found.

#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "bipc4/construct.hpp"
#include "bipc4/detect.hpp"
#include "bipc4/errors.hpp"
#include "bipc4/json_io.hpp"
#include "bipc4/reduction.hpp"
#include "bipc4/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kHypothesisViolation = 2;
constexpr int kCounterexample = 3;

json violation_json(const bipc4::HypothesisViolation& v) {
  json j;
  j["side"] = v.vertex.side == bipc4::Side::A ? "A" : "B";
  j["index"] = v.vertex.index;
  j["degree"] = v.degree;
  j["required"] = v.required;
  return j;
}

std::string violation_text(const bipc4::HypothesisViolation& v) {
  return std::string("vertex ") + (v.vertex.side == bipc4::Side::A ? "A[" : "B[") +
         std::to_string(v.vertex.index) + "] has degree " + std::to_string(v.degree) +
         ", needs " + std::to_string(v.required);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int report_exit_code(const bipc4::VerificationReport& report) {
  bool found = !report.oriented_counterexamples.empty() || !report.colored_counterexamples.empty();
  return found ? kCounterexample : kOk;
}

void summarize_report(const bipc4::VerificationReport& report) {
  std::cerr << report.theorem << " " << report.mode << " (" << report.m << ", " << report.n
            << "): examined " << report.instances_examined << ", hypothesis ok "
            << report.hypothesis_satisfied << ", with cycle " << report.with_cycle
            << ", extremal " << report.extremal;
  if (report.mode == "random")
    std::cerr << ", generation failures " << report.generation_failures;
  if (report.theorem == "rainbow-c4")
    std::cerr << ", proof gaps " << report.proof_gap_count;
  std::cerr << ", counterexamples "
            << report.oriented_counterexamples.size() + report.colored_counterexamples.size()
            << " [" << report.elapsed_seconds << "s]\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed and rainbow 4-cycle toolkit for bipartite graphs"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate graphs as canonical JSON");
  gen->require_subcommand(1);

  struct {
    int m = 3, n = 3;
  } dstar_opts;
  auto* gen_dstar_cmd = gen->add_subcommand("dstar", "Extremal orientation D*(m, n)");
  gen_dstar_cmd->add_option("--m", dstar_opts.m, "Side-A size (positive multiple of 3)")
      ->required();
  gen_dstar_cmd->add_option("--n", dstar_opts.n, "Side-B size (positive multiple of 3)")
      ->required();
  gen_dstar_cmd->callback([&] {
    bipc4::OrientedBipartiteGraph g = bipc4::gen_dstar(dstar_opts.m, dstar_opts.n);
    std::cout << bipc4::serialize(g);
    std::cerr << "D*(" << g.m() << ", " << g.n() << "): " << g.arc_count() << " arcs\n";
  });

  int proper_n = 3;
  auto* gen_proper_cmd =
      gen->add_subcommand("k33-proper", "Properly edge-colored complete K_{n,n}");
  gen_proper_cmd->add_option("--n", proper_n, "Side size (default 3)")
      ->check(CLI::PositiveNumber);
  gen_proper_cmd->callback([&] {
    bipc4::ColoredBipartiteGraph g = bipc4::gen_proper_coloring_complete(proper_n);
    std::cout << bipc4::serialize(g);
    std::cerr << "K_{" << proper_n << "," << proper_n << "} with proper " << proper_n
              << "-coloring: " << g.edge_count() << " edges\n";
  });

  struct {
    int m = 4, n = 4;
    bipc4::OrientationProfile profile;
    std::uint64_t seed = 0;
    bool enforce = false;
  } rand_o_opts;
  auto* gen_ro_cmd = gen->add_subcommand("random-oriented", "Seeded random orientation");
  gen_ro_cmd->add_option("--m", rand_o_opts.m, "Side-A size")->required()->check(CLI::PositiveNumber);
  gen_ro_cmd->add_option("--n", rand_o_opts.n, "Side-B size")->required()->check(CLI::PositiveNumber);
  gen_ro_cmd->add_option("--p-none", rand_o_opts.profile.p_none, "P(pair has no arc)");
  gen_ro_cmd->add_option("--p-atob", rand_o_opts.profile.p_a_to_b, "P(arc points A to B)");
  gen_ro_cmd->add_option("--p-btoa", rand_o_opts.profile.p_b_to_a, "P(arc points B to A)");
  gen_ro_cmd->add_option("--seed", rand_o_opts.seed, "Stream seed (default 0)");
  gen_ro_cmd->add_flag("--enforce", rand_o_opts.enforce,
                       "Repair the sample until 3*outdeg >= opposite side everywhere");
  gen_ro_cmd->callback([&] {
    bipc4::OrientedBipartiteGraph g = bipc4::gen_random_oriented(
        rand_o_opts.m, rand_o_opts.n, rand_o_opts.profile, rand_o_opts.seed, rand_o_opts.enforce);
    std::cout << bipc4::serialize(g);
    std::cerr << "random oriented (" << g.m() << ", " << g.n() << "), seed " << rand_o_opts.seed
              << ": " << g.arc_count() << " arcs\n";
  });

  struct {
    int m = 4, n = 4;
    double edge_prob = 0.5;
    int palette = 8;
    std::uint64_t seed = 0;
    bool enforce = false;
  } rand_c_opts;
  auto* gen_rc_cmd = gen->add_subcommand("random-colored", "Seeded random edge coloring");
  gen_rc_cmd->add_option("--m", rand_c_opts.m, "Side-A size")->required()->check(CLI::PositiveNumber);
  gen_rc_cmd->add_option("--n", rand_c_opts.n, "Side-B size")->required()->check(CLI::PositiveNumber);
  gen_rc_cmd->add_option("--edge-prob", rand_c_opts.edge_prob, "P(pair carries an edge)");
  gen_rc_cmd->add_option("--palette", rand_c_opts.palette, "Colors drawn uniformly from 1..K")
      ->check(CLI::PositiveNumber);
  gen_rc_cmd->add_option("--seed", rand_c_opts.seed, "Stream seed (default 0)");
  gen_rc_cmd->add_flag("--enforce", rand_c_opts.enforce,
                       "Reject samples until 5*colordeg >= 3*opposite+8 everywhere");
  gen_rc_cmd->callback([&] {
    bipc4::ColoredBipartiteGraph g =
        bipc4::gen_random_colored(rand_c_opts.m, rand_c_opts.n, rand_c_opts.edge_prob,
                                  rand_c_opts.palette, rand_c_opts.seed, rand_c_opts.enforce);
    std::cout << bipc4::serialize(g);
    std::cerr << "random colored (" << g.m() << ", " << g.n() << "), seed " << rand_c_opts.seed
              << ": " << g.edge_count() << " edges\n";
  });

  // ---- detect -------------------------------------------------------------
  auto* detect = app.add_subcommand("detect", "Find 4-cycles in a graph file");
  detect->require_subcommand(1);

  std::string detect_d_in;
  auto* detect_d_cmd = detect->add_subcommand("directed-c4", "Directed C4 in an oriented graph");
  detect_d_cmd->add_option("--in", detect_d_in, "Input graph file")->required();
  detect_d_cmd->callback([&] {
    bipc4::OrientedBipartiteGraph g = [&] {
      bipc4::GraphVariant v = bipc4::load_graph_file(detect_d_in);
      if (auto* og = std::get_if<bipc4::OrientedBipartiteGraph>(&v)) return std::move(*og);
      throw bipc4::Error("detect directed-c4 expects an oriented graph file");
    }();
    json out;
    if (auto cert = bipc4::find_directed_c4(g)) {
      out["found"] = true;
      out["certificate"] = json::parse(bipc4::serialize(*cert));
      std::cerr << "directed C4: a" << cert->a1 << " -> b" << cert->b1 << " -> a" << cert->a2
                << " -> b" << cert->b2 << " -> a" << cert->a1 << "\n";
    } else {
      out["found"] = false;
      std::cerr << "no directed C4\n";
    }
    emit(out);
  });

  std::string detect_r_in;
  bool detect_guided = false;
  bool detect_exhaustive = false;
  auto* detect_r_cmd = detect->add_subcommand("rainbow-c4", "Rainbow C4 in a colored graph");
  detect_r_cmd->add_option("--in", detect_r_in, "Input graph file")->required();
  auto* guided_flag = detect_r_cmd->add_flag("--guided", detect_guided,
                                             "Use the hypothesis-guided pipeline");
  detect_r_cmd->add_flag("--exhaustive", detect_exhaustive, "Use plain exhaustive search (default)")
      ->excludes(guided_flag);
  detect_r_cmd->callback([&] {
    bipc4::ColoredBipartiteGraph g = [&] {
      bipc4::GraphVariant v = bipc4::load_graph_file(detect_r_in);
      if (auto* cg = std::get_if<bipc4::ColoredBipartiteGraph>(&v)) return std::move(*cg);
      throw bipc4::Error("detect rainbow-c4 expects a colored graph file");
    }();
    json out;
    if (detect_guided) {
      bipc4::GuidedOutcome outcome = bipc4::find_rainbow_c4_guided(g);
      if (auto* violation = std::get_if<bipc4::HypothesisViolation>(&outcome)) {
        out["found"] = false;
        out["hypothesis_violation"] = violation_json(*violation);
        emit(out);
        std::cerr << "hypothesis violation: " << violation_text(*violation) << "\n";
        exit_code = kHypothesisViolation;
        return;
      }
      const auto& find = std::get<bipc4::GuidedFind>(outcome);
      out["found"] = true;
      out["certificate"] = json::parse(bipc4::serialize(find.certificate));
      switch (find.route) {
        case bipc4::GuidedRoute::early_rainbow: out["route"] = "early-rainbow"; break;
        case bipc4::GuidedRoute::lifted: out["route"] = "lifted"; break;
        case bipc4::GuidedRoute::extremal_escape: out["route"] = "extremal-escape"; break;
        case bipc4::GuidedRoute::exhaustive_fallback: out["route"] = "exhaustive-fallback"; break;
      }
      out["proof_gap"] = find.proof_gap;
      std::cerr << "rainbow C4 via " << out["route"].get<std::string>() << "\n";
    } else {
      if (auto cert = bipc4::find_rainbow_c4_exhaustive(g)) {
        out["found"] = true;
        out["certificate"] = json::parse(bipc4::serialize(*cert));
        std::cerr << "rainbow C4 found\n";
      } else {
        out["found"] = false;
        std::cerr << "no rainbow C4\n";
      }
    }
    emit(out);
  });

  // ---- reduce -------------------------------------------------------------
  std::string reduce_in;
  int reduce_x = 0;
  int reduce_y = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the auxiliary orientation for edge (x, y)");
  reduce_cmd->add_option("--in", reduce_in, "Colored graph file")->required();
  reduce_cmd->add_option("--x", reduce_x, "Side-A anchor index")->required();
  reduce_cmd->add_option("--y", reduce_y, "Side-B anchor index")->required();
  reduce_cmd->callback([&] {
    bipc4::ColoredBipartiteGraph g = [&] {
      bipc4::GraphVariant v = bipc4::load_graph_file(reduce_in);
      if (auto* cg = std::get_if<bipc4::ColoredBipartiteGraph>(&v)) return std::move(*cg);
      throw bipc4::Error("reduce expects a colored graph file");
    }();
    bipc4::ReductionOutcome outcome = bipc4::build_reduction(g, reduce_x, reduce_y);
    if (auto* early = std::get_if<bipc4::RainbowC4Certificate>(&outcome)) {
      json out;
      out["type"] = "early-rainbow";
      out["certificate"] = json::parse(bipc4::serialize(*early));
      emit(out);
      std::cerr << "early rainbow C4: the reduction is unnecessary for this edge\n";
      return;
    }
    const auto& ctx = std::get<bipc4::ReductionContext>(outcome);
    std::cout << bipc4::serialize(ctx);
    std::cerr << "context: |A1| = " << ctx.A1.size() << " (target " << ctx.s - 1
              << "), |B1| = " << ctx.B1.size() << " (target " << ctx.r - 1 << "), "
              << ctx.D.arc_count() << " arcs, " << ctx.skipped_edges.size()
              << " skipped edges\n";
  });

  // ---- verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Exhaustive or randomized verification sweeps");
  verify->require_subcommand(1);

  struct {
    int m = 3, n = 3;
    bool exhaustive = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    bipc4::OrientationProfile profile;
  } thm9_opts;
  auto* thm9_cmd = verify->add_subcommand("thm9", "Directed-C4 claim for oriented graphs");
  thm9_cmd->add_option("--m", thm9_opts.m, "Side-A size")->required();
  thm9_cmd->add_option("--n", thm9_opts.n, "Side-B size")->required();
  auto* ex_flag = thm9_cmd->add_flag("--exhaustive", thm9_opts.exhaustive,
                                     "Enumerate all 3^(mn) assignments (default)");
  thm9_cmd->add_option("--trials", thm9_opts.trials, "Random mode with this many trials")
      ->excludes(ex_flag)
      ->check(CLI::PositiveNumber);
  thm9_cmd->add_option("--seed", thm9_opts.seed, "Base seed for random mode (default 0)");
  thm9_cmd->add_option("--jobs", thm9_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  thm9_cmd->add_option("--p-none", thm9_opts.profile.p_none, "Random mode: P(no arc)");
  thm9_cmd->add_option("--p-atob", thm9_opts.profile.p_a_to_b, "Random mode: P(A to B)");
  thm9_cmd->add_option("--p-btoa", thm9_opts.profile.p_b_to_a, "Random mode: P(B to A)");
  thm9_cmd->callback([&] {
    bipc4::VerificationReport report =
        thm9_opts.trials > 0
            ? bipc4::verify_directed_random(thm9_opts.m, thm9_opts.n, thm9_opts.trials,
                                            thm9_opts.seed, thm9_opts.profile, thm9_opts.jobs)
            : bipc4::verify_directed_exhaustive(thm9_opts.m, thm9_opts.n, thm9_opts.jobs);
    std::cout << bipc4::serialize(report);
    summarize_report(report);
    exit_code = report_exit_code(report);
  });

  struct {
    int m = 14, n = 14;
    std::uint64_t trials = 0;
    int palette = 30;
    double edge_prob = 0.9;
    std::uint64_t seed = 0;
    int jobs = 1;
  } thm10_opts;
  auto* thm10_cmd = verify->add_subcommand("thm10", "Rainbow-C4 claim for colored graphs");
  thm10_cmd->add_option("--m", thm10_opts.m, "Side-A size")->required();
  thm10_cmd->add_option("--n", thm10_opts.n, "Side-B size")->required();
  thm10_cmd->add_option("--trials", thm10_opts.trials, "Number of random trials")
      ->required()
      ->check(CLI::PositiveNumber);
  thm10_cmd->add_option("--palette", thm10_opts.palette, "Colors drawn uniformly from 1..K")
      ->required()
      ->check(CLI::PositiveNumber);
  thm10_cmd->add_option("--edge-prob", thm10_opts.edge_prob, "P(pair carries an edge)")
      ->required();
  thm10_cmd->add_option("--seed", thm10_opts.seed, "Base seed (default 0)");
  thm10_cmd->add_option("--jobs", thm10_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  thm10_cmd->callback([&] {
    bipc4::VerificationReport report = bipc4::verify_rainbow_random(
        thm10_opts.m, thm10_opts.n, thm10_opts.trials, thm10_opts.palette, thm10_opts.edge_prob,
        thm10_opts.seed, thm10_opts.jobs);
    std::cout << bipc4::serialize(report);
    summarize_report(report);
    exit_code = report_exit_code(report);
  });

  // ---- check --------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Hypothesis checks on a graph file");
  check->require_subcommand(1);
  std::string check_in;
  bool check_strict = false;
  auto* check_cmd = check->add_subcommand("hypothesis", "Degree-threshold hypothesis");
  check_cmd->add_option("--in", check_in, "Input graph file (either kind)")->required();
  check_cmd->add_flag("--strict", check_strict,
                      "Colored graphs: require strict inequality 5*cd > 3*opposite+8");
  check_cmd->callback([&] {
    bipc4::GraphVariant v = bipc4::load_graph_file(check_in);
    std::optional<bipc4::HypothesisViolation> violation;
    if (auto* og = std::get_if<bipc4::OrientedBipartiteGraph>(&v))
      violation = bipc4::check_out_degree_hypothesis(*og);
    else
      violation = bipc4::check_color_degree_hypothesis(
          std::get<bipc4::ColoredBipartiteGraph>(v), check_strict);
    json out;
    out["pass"] = !violation.has_value();
    if (violation) {
      out["violation"] = violation_json(*violation);
      std::cerr << "hypothesis fails: " << violation_text(*violation) << "\n";
      exit_code = kHypothesisViolation;
    } else {
      std::cerr << "hypothesis holds\n";
    }
    emit(out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  } catch (const bipc4::CounterexampleError& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return kCounterexample;
  } catch (const bipc4::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return exit_code;
}
