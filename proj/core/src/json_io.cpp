#include "bipc4/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

namespace bipc4 {

namespace {

using nlohmann::json;

// nlohmann::json stores object keys in a std::map, so dumps are key-sorted
// and byte-stable for equal values; together with (a, b)-sorted arc/edge
// arrays this makes every serialization canonical.
std::string dump(const json& j) { return j.dump(2) + "\n"; }

json graph_json(const OrientedBipartiteGraph& g) {
  json j;
  j["kind"] = "oriented";
  j["m"] = g.m();
  j["n"] = g.n();
  json arcs = json::array();
  for (const Arc& arc : g.arcs())
    arcs.push_back(json::array({arc.a, arc.b, arc.dir == ArcDir::AtoB ? "AtoB" : "BtoA"}));
  j["arcs"] = std::move(arcs);
  return j;
}

json graph_json(const ColoredBipartiteGraph& g) {
  json j;
  j["kind"] = "colored";
  j["m"] = g.m();
  j["n"] = g.n();
  json edges = json::array();
  for (const ColoredEdge& e : g.edges()) edges.push_back(json::array({e.a, e.b, e.color}));
  j["edges"] = std::move(edges);
  return j;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries the line/column position of the failure.
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

int require_size_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer() || j[name].get<int>() < 0)
    throw Error(std::string("field \"") + name + "\" must be a nonnegative integer");
  return j[name].get<int>();
}

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

OrientedBipartiteGraph oriented_from_json(const json& j) {
  const int m = require_size_field(j, "m");
  const int n = require_size_field(j, "n");
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw Error("field \"arcs\" must be an array");
  OrientedBipartiteGraph g(m, n);
  std::set<std::pair<int, int>> seen;
  std::size_t position = 0;
  for (const json& entry : j["arcs"]) {
    const std::string where = "arcs[" + std::to_string(position++) + "]";
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_string())
      throw Error(where + " must be [a, b, \"AtoB\"|\"BtoA\"]");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    const std::string dir = entry[2].get<std::string>();
    if (dir != "AtoB" && dir != "BtoA")
      throw Error(where + ": unknown direction \"" + dir + "\"");
    if (a < 0 || a >= m || b < 0 || b >= n)
      throw Error(where + ": pair " + pair_text(a, b) + " out of range for sides (" +
                  std::to_string(m) + ", " + std::to_string(n) + ")");
    if (!seen.insert({a, b}).second)
      throw Error(where + ": duplicate pair " + pair_text(a, b));
    g.add_arc(a, b, dir == "AtoB" ? ArcDir::AtoB : ArcDir::BtoA);
  }
  return g;
}

ColoredBipartiteGraph colored_from_json(const json& j) {
  const int m = require_size_field(j, "m");
  const int n = require_size_field(j, "n");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw Error("field \"edges\" must be an array");
  ColoredBipartiteGraph g(m, n);
  std::set<std::pair<int, int>> seen;
  std::size_t position = 0;
  for (const json& entry : j["edges"]) {
    const std::string where = "edges[" + std::to_string(position++) + "]";
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer())
      throw Error(where + " must be [a, b, color]");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    const int color = entry[2].get<int>();
    if (a < 0 || a >= m || b < 0 || b >= n)
      throw Error(where + ": pair " + pair_text(a, b) + " out of range for sides (" +
                  std::to_string(m) + ", " + std::to_string(n) + ")");
    if (color < 1) throw Error(where + ": color must be a positive integer");
    if (!seen.insert({a, b}).second)
      throw Error(where + ": duplicate pair " + pair_text(a, b));
    g.add_edge(a, b, color);
  }
  return g;
}

}  // namespace

std::string serialize(const OrientedBipartiteGraph& g) { return dump(graph_json(g)); }
std::string serialize(const ColoredBipartiteGraph& g) { return dump(graph_json(g)); }

GraphVariant parse_graph(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error("graph object must carry a string \"kind\" field");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "oriented") return oriented_from_json(j);
  if (kind == "colored") return colored_from_json(j);
  throw Error("unknown graph kind \"" + kind + "\"");
}

OrientedBipartiteGraph parse_oriented(const std::string& text) {
  GraphVariant v = parse_graph(text);
  if (auto* g = std::get_if<OrientedBipartiteGraph>(&v)) return std::move(*g);
  throw Error("expected an oriented graph, got a colored one");
}

ColoredBipartiteGraph parse_colored(const std::string& text) {
  GraphVariant v = parse_graph(text);
  if (auto* g = std::get_if<ColoredBipartiteGraph>(&v)) return std::move(*g);
  throw Error("expected a colored graph, got an oriented one");
}

GraphVariant load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize(const DirectedC4Certificate& cert) {
  json j;
  j["type"] = "directed-c4";
  j["a1"] = cert.a1;
  j["b1"] = cert.b1;
  j["a2"] = cert.a2;
  j["b2"] = cert.b2;
  return dump(j);
}

std::string serialize(const RainbowC4Certificate& cert) {
  json j;
  j["type"] = "rainbow-c4";
  j["a1"] = cert.a1;
  j["b1"] = cert.b1;
  j["a2"] = cert.a2;
  j["b2"] = cert.b2;
  j["colors"] = cert.colors;
  return dump(j);
}

std::string serialize(const ReductionContext& ctx) {
  json j;
  j["type"] = "reduction-context";
  j["x"] = ctx.x;
  j["y"] = ctx.y;
  j["c0"] = ctx.c0;
  j["s"] = ctx.s;
  j["r"] = ctx.r;
  j["A1"] = ctx.A1;
  j["B1"] = ctx.B1;
  j["x_colors"] = ctx.x_colors;
  j["y_colors"] = ctx.y_colors;
  j["D"] = graph_json(ctx.D);
  json provenance = json::array();
  for (const auto& [pair, rule] : ctx.arc_provenance) {
    json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    entry["rule"] = rule == ArcRule::matches_x_edge ? "matches-x-edge" : "matches-y-edge";
    provenance.push_back(std::move(entry));
  }
  j["arc_provenance"] = std::move(provenance);
  json skipped = json::array();
  for (const SkippedEdge& e : ctx.skipped_edges) {
    json entry;
    entry["i"] = e.i;
    entry["j"] = e.j;
    entry["reason"] = e.reason == SkipReason::color_equals_base ? "color-equals-base"
                                                                : "anchor-colors-collide";
    skipped.push_back(std::move(entry));
  }
  j["skipped_edges"] = std::move(skipped);
  return dump(j);
}

std::string serialize(const VerificationReport& report) {
  json j;
  j["theorem"] = report.theorem;
  j["mode"] = report.mode;
  j["m"] = report.m;
  j["n"] = report.n;
  // jobs is deliberately not serialized: reports are a function of results
  // only, and must compare byte-identical across parallelism degrees.
  j["instances_examined"] = report.instances_examined;
  j["hypothesis_satisfied"] = report.hypothesis_satisfied;
  j["with_cycle"] = report.with_cycle;
  j["extremal"] = report.extremal;
  j["elapsed_seconds"] = report.elapsed_seconds;

  const bool random_mode = report.mode == "random";
  if (random_mode) {
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["generation_failures"] = report.generation_failures;
  }
  if (report.theorem == "directed-c4" && random_mode) {
    j["profile"] = {{"p_none", report.profile.p_none},
                    {"p_a_to_b", report.profile.p_a_to_b},
                    {"p_b_to_a", report.profile.p_b_to_a}};
  }
  if (report.theorem == "rainbow-c4") {
    j["palette"] = report.palette;
    j["edge_prob"] = report.edge_prob;
    j["proof_gap_count"] = report.proof_gap_count;
    j["routes"] = {{"early_rainbow", report.routes.early_rainbow},
                   {"lifted", report.routes.lifted},
                   {"extremal_escape", report.routes.extremal_escape},
                   {"exhaustive_fallback", report.routes.exhaustive_fallback}};
  }

  json counterexamples = json::array();
  for (const OrientedCounterexample& ce : report.oriented_counterexamples) {
    json entry;
    entry["graph"] = graph_json(ce.graph);
    if (random_mode) {
      entry["trial"] = ce.index;
      entry["seed"] = ce.seed;
    } else {
      entry["index"] = ce.index;
    }
    counterexamples.push_back(std::move(entry));
  }
  for (const ColoredCounterexample& ce : report.colored_counterexamples) {
    json entry;
    entry["graph"] = graph_json(ce.graph);
    entry["trial"] = ce.index;
    entry["seed"] = ce.seed;
    counterexamples.push_back(std::move(entry));
  }
  j["counterexamples"] = std::move(counterexamples);
  return dump(j);
}

std::string strip_elapsed(const std::string& report_text) {
  json j = parse_text(report_text);
  if (j.is_object() && j.contains("elapsed_seconds")) j["elapsed_seconds"] = 0.0;
  return dump(j);
}

}  // namespace bipc4
