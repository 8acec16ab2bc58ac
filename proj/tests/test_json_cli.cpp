#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <variant>

#include <json.hpp>

#include "bipc4/construct.hpp"
#include "bipc4/json_io.hpp"
#include "bipc4/verify.hpp"

using namespace bipc4;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

struct CommandResult {
  int code;
  std::string out;
};

// Runs the installed tool with the given arguments, capturing stdout and the
// exit code; stderr is the human channel and is dropped here.
CommandResult run_tool(const std::string& args) {
  std::string cmd = std::string(BIPC4_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) out += buffer;
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

const std::string kTrioPrefix =
    R"({"kind":"colored","m":2,"n":2,"edges":[[0,0,1],[0,1,2],[1,0,3])";

}  // namespace

TEST_CASE("oriented graph JSON round-trips byte-for-byte") {
  OrientedBipartiteGraph g = gen_dstar(6, 6);
  std::string text = serialize(g);
  CHECK(text == serialize(g));  // stable bytes
  OrientedBipartiteGraph back = parse_oriented(text);
  CHECK(back == g);
  CHECK(serialize(back) == text);

  json j = json::parse(text);
  CHECK(j["kind"] == "oriented");
  CHECK(j["m"] == 6);
  CHECK(j["arcs"].size() == 24);
  // Arcs are sorted by (a, b).
  CHECK(j["arcs"][0] == json::array({0, 0, "AtoB"}));
}

TEST_CASE("colored graph JSON round-trips byte-for-byte") {
  ColoredBipartiteGraph g = gen_proper_coloring_complete(3);
  std::string text = serialize(g);
  ColoredBipartiteGraph back = parse_colored(text);
  CHECK(back == g);
  CHECK(serialize(back) == text);

  json j = json::parse(text);
  CHECK(j["kind"] == "colored");
  CHECK(j["edges"].size() == 9);
  CHECK(j["edges"][0] == json::array({0, 0, 1}));
}

TEST_CASE("parse_graph dispatches on the kind field") {
  GraphVariant oriented = parse_graph(serialize(gen_dstar(3, 3)));
  CHECK(std::holds_alternative<OrientedBipartiteGraph>(oriented));
  GraphVariant colored = parse_graph(serialize(gen_proper_coloring_complete(2)));
  CHECK(std::holds_alternative<ColoredBipartiteGraph>(colored));
}

TEST_CASE("parsing rejects malformed graph documents") {
  // Duplicate pair.
  CHECK_THROWS_AS(parse_oriented(
      R"({"kind":"oriented","m":2,"n":2,"arcs":[[0,0,"AtoB"],[0,0,"AtoB"]]})"), Error);
  // Digon.
  CHECK_THROWS_AS(parse_oriented(
      R"({"kind":"oriented","m":2,"n":2,"arcs":[[0,0,"AtoB"],[0,0,"BtoA"]]})"), Error);
  // Out-of-range index.
  CHECK_THROWS_AS(parse_oriented(
      R"({"kind":"oriented","m":2,"n":2,"arcs":[[2,0,"AtoB"]]})"), Error);
  // Unknown direction.
  CHECK_THROWS_AS(parse_oriented(
      R"({"kind":"oriented","m":2,"n":2,"arcs":[[0,0,"XtoY"]]})"), Error);
  // Nonpositive color.
  CHECK_THROWS_AS(parse_colored(
      R"({"kind":"colored","m":2,"n":2,"edges":[[0,0,0]]})"), Error);
  // Duplicate colored pair.
  CHECK_THROWS_AS(parse_colored(
      R"({"kind":"colored","m":2,"n":2,"edges":[[0,0,1],[0,0,2]]})"), Error);
  // Unknown kind.
  CHECK_THROWS_AS(parse_graph(R"({"kind":"undirected","m":2,"n":2})"), Error);
  // Kind mismatch against the typed entry points.
  CHECK_THROWS_AS(parse_oriented(serialize(gen_proper_coloring_complete(2))), Error);
  CHECK_THROWS_AS(parse_colored(serialize(gen_dstar(3, 3))), Error);
  // Negative size.
  CHECK_THROWS_AS(parse_oriented(R"({"kind":"oriented","m":-1,"n":2,"arcs":[]})"), Error);
}

TEST_CASE("malformed JSON reports the failure position") {
  try {
    parse_graph(R"({"kind": "oriented", )");
    FAIL("expected Error");
  } catch (const Error& e) {
    std::string message = e.what();
    CHECK(message.find("malformed JSON") != std::string::npos);
    CHECK(message.find("line") != std::string::npos);  // position diagnostic
  }
}

TEST_CASE("loading a missing file names the path") {
  try {
    load_graph_file("/nonexistent/bipc4-no-such-file.json");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/bipc4-no-such-file.json") !=
          std::string::npos);
  }
}

TEST_CASE("certificate JSON shapes") {
  json directed = json::parse(serialize(DirectedC4Certificate{0, 1, 2, 3}));
  CHECK(directed["type"] == "directed-c4");
  CHECK(directed["a1"] == 0);
  CHECK(directed["b1"] == 1);
  CHECK(directed["a2"] == 2);
  CHECK(directed["b2"] == 3);

  json rainbow = json::parse(serialize(RainbowC4Certificate{0, 1, 2, 3, {4, 5, 6, 7}}));
  CHECK(rainbow["type"] == "rainbow-c4");
  CHECK(rainbow["colors"] == json::array({4, 5, 6, 7}));
}

TEST_CASE("report JSON carries mode-dependent fields and no worker count") {
  VerificationReport exhaustive = verify_directed_exhaustive(2, 2, 4);
  json je = json::parse(serialize(exhaustive));
  CHECK(je["theorem"] == "directed-c4");
  CHECK(je["mode"] == "exhaustive");
  CHECK(je["instances_examined"] == 81);
  CHECK(je["hypothesis_satisfied"] == 2);
  CHECK(je["counterexamples"] == json::array());
  // Reports are a function of the results only; the worker count is not part
  // of them, so runs at different parallelism degrees stay byte-identical.
  CHECK(!je.contains("jobs"));
  CHECK(!je.contains("seed"));
  CHECK(!je.contains("routes"));

  VerificationReport random_directed = verify_directed_random(4, 4, 5, 21);
  json jr = json::parse(serialize(random_directed));
  CHECK(jr["mode"] == "random");
  CHECK(jr["seed"] == 21);
  CHECK(jr["trials"] == 5);
  CHECK(jr["profile"].contains("p_none"));
  CHECK(!jr.contains("palette"));
  CHECK(!jr.contains("jobs"));

  VerificationReport rainbow = verify_rainbow_random(4, 4, 5, 16, 1.0, 2);
  json jc = json::parse(serialize(rainbow));
  CHECK(jc["theorem"] == "rainbow-c4");
  CHECK(jc["palette"] == 16);
  CHECK(jc["edge_prob"] == 1.0);
  CHECK(jc["routes"].contains("early_rainbow"));
  CHECK(jc.contains("proof_gap_count"));
  CHECK(!jc.contains("profile"));
  CHECK(!jc.contains("jobs"));
}

TEST_CASE("strip_elapsed normalizes only the timing field") {
  VerificationReport a = verify_directed_exhaustive(2, 3);
  VerificationReport b = verify_directed_exhaustive(2, 3);
  // Timings differ run to run; everything else must not.
  CHECK(strip_elapsed(serialize(a)) == strip_elapsed(serialize(b)));
  json j = json::parse(strip_elapsed(serialize(a)));
  CHECK(j["elapsed_seconds"] == 0.0);
  CHECK(j["instances_examined"] == 729);
}

TEST_CASE("reduction context JSON shape") {
  ColoredBipartiteGraph g(2, 2);
  g.add_edge(0, 0, 1);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 0, 3);
  g.add_edge(1, 1, 2);
  auto outcome = build_reduction(g, 0, 0);
  const auto& ctx = std::get<ReductionContext>(outcome);
  json j = json::parse(serialize(ctx));
  CHECK(j["type"] == "reduction-context");
  CHECK(j["x"] == 0);
  CHECK(j["y"] == 0);
  CHECK(j["c0"] == 1);
  CHECK(j["s"] == 3);
  CHECK(j["r"] == 3);
  CHECK(j["A1"] == json::array({1}));
  CHECK(j["B1"] == json::array({1}));
  CHECK(j["D"]["kind"] == "oriented");
  CHECK(j["D"]["arcs"] == json::array({json::array({0, 0, "AtoB"})}));
  REQUIRE(j["arc_provenance"].size() == 1);
  CHECK(j["arc_provenance"][0]["rule"] == "matches-x-edge");
  CHECK(j["skipped_edges"] == json::array());
}

TEST_CASE("cli: gen dstar emits canonical JSON") {
  CommandResult result = run_tool("gen dstar --m 3 --n 3");
  CHECK(result.code == 0);
  CHECK(result.out == serialize(gen_dstar(3, 3)));
  // Two invocations emit identical bytes.
  CHECK(run_tool("gen dstar --m 6 --n 6").out == run_tool("gen dstar --m 6 --n 6").out);
}

TEST_CASE("cli: gen dstar rejects indivisible sizes") {
  CHECK(run_tool("gen dstar --m 4 --n 3").code == 1);
}

TEST_CASE("cli: detect rainbow-c4 on the properly colored correction") {
  std::string path = write_temp("bipc4_k33.json", run_tool("gen k33-proper").out);

  CommandResult exhaustive = run_tool("detect rainbow-c4 --in " + path);
  CHECK(exhaustive.code == 0);
  json je = json::parse(exhaustive.out);
  CHECK(je["found"] == false);

  // The guided pipeline refuses: the hypothesis fails, and that is the point
  // of this example.
  CommandResult guided = run_tool("detect rainbow-c4 --in " + path + " --guided");
  CHECK(guided.code == 2);
  json jg = json::parse(guided.out);
  CHECK(jg["found"] == false);
  CHECK(jg["hypothesis_violation"]["side"] == "A");
  CHECK(jg["hypothesis_violation"]["index"] == 0);
  CHECK(jg["hypothesis_violation"]["degree"] == 3);
  CHECK(jg["hypothesis_violation"]["required"] == 4);

  CHECK(run_tool("detect rainbow-c4 --in " + path + " --guided --exhaustive").code == 1);
}

TEST_CASE("cli: detect directed-c4 finds the canonical witness") {
  std::string path = write_temp(
      "bipc4_cycle.json",
      R"({"kind":"oriented","m":2,"n":2,"arcs":[[0,0,"AtoB"],[0,1,"BtoA"],[1,0,"BtoA"],[1,1,"AtoB"]]})");
  CommandResult result = run_tool("detect directed-c4 --in " + path);
  CHECK(result.code == 0);
  json j = json::parse(result.out);
  CHECK(j["found"] == true);
  CHECK(j["certificate"]["a1"] == 0);
  CHECK(j["certificate"]["b1"] == 0);
  CHECK(j["certificate"]["a2"] == 1);
  CHECK(j["certificate"]["b2"] == 1);

  // Kind mismatch is a usage error.
  std::string colored = write_temp("bipc4_colored.json", serialize(gen_proper_coloring_complete(2)));
  CHECK(run_tool("detect directed-c4 --in " + colored).code == 1);
}

TEST_CASE("cli: reduce reports early rainbows and contexts") {
  std::string early = write_temp("bipc4_trio4.json", kTrioPrefix + ",[1,1,4]]}");
  CommandResult result = run_tool("reduce --in " + early + " --x 0 --y 0");
  CHECK(result.code == 0);
  json j = json::parse(result.out);
  CHECK(j["type"] == "early-rainbow");
  CHECK(j["certificate"]["colors"] == json::array({2, 4, 3, 1}));

  std::string arc = write_temp("bipc4_trio2.json", kTrioPrefix + ",[1,1,2]]}");
  result = run_tool("reduce --in " + arc + " --x 0 --y 0");
  CHECK(result.code == 0);
  j = json::parse(result.out);
  CHECK(j["type"] == "reduction-context");
  CHECK(j["D"]["arcs"] == json::array({json::array({0, 0, "AtoB"})}));

  // Anchoring on a missing edge is a usage error.
  CHECK(run_tool("reduce --in " + arc + " --x 1 --y 1 ").code == 0);
  CHECK(run_tool("reduce --in " + arc + " --x 0 --y 5").code == 1);
}

TEST_CASE("cli: verify thm9 exhaustively at (3, 3)") {
  CommandResult result = run_tool("verify thm9 --m 3 --n 3 --exhaustive");
  CHECK(result.code == 0);
  json j = json::parse(result.out);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["instances_examined"] == 19683);
  CHECK(j["hypothesis_satisfied"] == 1284);
  CHECK(j["with_cycle"] == 1272);
  CHECK(j["extremal"] == 12);
  CHECK(j["counterexamples"] == json::array());

  // --exhaustive and --trials are mutually exclusive.
  CHECK(run_tool("verify thm9 --m 3 --n 3 --exhaustive --trials 5").code == 1);
}

TEST_CASE("cli: verify thm9 random mode echoes its parameters") {
  CommandResult result = run_tool("verify thm9 --m 4 --n 4 --trials 6 --seed 11");
  CHECK(result.code == 0);
  json j = json::parse(result.out);
  CHECK(j["mode"] == "random");
  CHECK(j["seed"] == 11);
  CHECK(j["trials"] == 6);
  CHECK(j["counterexamples"] == json::array());
}

TEST_CASE("cli: verify thm10 runs the guided sweep") {
  CommandResult result = run_tool("verify thm10 --m 4 --n 4 --trials 4 --palette 16 --edge-prob 1.0");
  CHECK(result.code == 0);
  json j = json::parse(result.out);
  CHECK(j["theorem"] == "rainbow-c4");
  CHECK(j["seed"] == 0);  // default echoed
  CHECK(j["palette"] == 16);
  CHECK(j["counterexamples"] == json::array());
  CHECK(j["routes"]["early_rainbow"].get<std::uint64_t>() +
            j["routes"]["lifted"].get<std::uint64_t>() +
            j["routes"]["extremal_escape"].get<std::uint64_t>() +
            j["routes"]["exhaustive_fallback"].get<std::uint64_t>() ==
        j["with_cycle"].get<std::uint64_t>());
}

TEST_CASE("cli: check hypothesis on both graph kinds") {
  std::string dstar = write_temp("bipc4_dstar.json", serialize(gen_dstar(3, 3)));
  CommandResult pass = run_tool("check hypothesis --in " + dstar);
  CHECK(pass.code == 0);
  CHECK(json::parse(pass.out)["pass"] == true);

  std::string empty = write_temp("bipc4_empty.json",
                                 R"({"kind":"oriented","m":3,"n":3,"arcs":[]})");
  CommandResult fail = run_tool("check hypothesis --in " + empty);
  CHECK(fail.code == 2);
  json j = json::parse(fail.out);
  CHECK(j["pass"] == false);
  CHECK(j["violation"]["side"] == "A");
  CHECK(j["violation"]["index"] == 0);
  CHECK(j["violation"]["degree"] == 0);
  CHECK(j["violation"]["required"] == 1);

  // Strict mode pushes the all-distinct K_{4,4} boundary case to failure.
  ColoredBipartiteGraph distinct4(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) distinct4.add_edge(a, b, a * 4 + b + 1);
  std::string boundary = write_temp("bipc4_k44.json", serialize(distinct4));
  CHECK(run_tool("check hypothesis --in " + boundary).code == 0);
  CHECK(run_tool("check hypothesis --in " + boundary + " --strict").code == 2);
}

TEST_CASE("cli: IO and usage failures exit with code 1") {
  CHECK(run_tool("").code == 1);  // a subcommand is required
  CHECK(run_tool("frobnicate").code == 1);
  CHECK(run_tool("detect directed-c4 --in /nonexistent/missing.json").code == 1);
  std::string malformed = write_temp("bipc4_malformed.json", "{\"kind\": ");
  CHECK(run_tool("detect directed-c4 --in " + malformed).code == 1);
  CHECK(run_tool("--help").code == 0);
  CHECK(run_tool("verify thm9 --help").code == 0);
}
