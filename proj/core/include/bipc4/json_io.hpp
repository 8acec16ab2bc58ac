#pragma once

#include <string>
#include <variant>

#include "bipc4/bigraph.hpp"
#include "bipc4/reduction.hpp"
#include "bipc4/verify.hpp"

namespace bipc4 {

/// Canonical single-object JSON for graphs:
///   {"kind":"oriented","m":M,"n":N,"arcs":[[a,b,"AtoB"|"BtoA"],...]}
///   {"kind":"colored","m":M,"n":N,"edges":[[a,b,c],...]}
/// Arrays are sorted by (a, b) on output; serializing the same value always
/// produces the same bytes. Parsing rejects duplicate pairs, digons,
/// out-of-range indices, nonpositive colors, and malformed JSON, throwing
/// Error with a position-bearing diagnostic where applicable.
std::string serialize(const OrientedBipartiteGraph& g);
std::string serialize(const ColoredBipartiteGraph& g);

using GraphVariant = std::variant<OrientedBipartiteGraph, ColoredBipartiteGraph>;

/// Parses either graph kind, dispatching on the "kind" field.
GraphVariant parse_graph(const std::string& text);

OrientedBipartiteGraph parse_oriented(const std::string& text);
ColoredBipartiteGraph parse_colored(const std::string& text);

/// Reads and parses a graph file; IO failures become Error with the path.
GraphVariant load_graph_file(const std::string& path);

/// Certificate objects, e.g. {"type":"directed-c4","a1":..,"b1":..,...};
/// the rainbow form adds "colors" in cycle order (a1b1, a2b1, a2b2, a1b2).
std::string serialize(const DirectedC4Certificate& cert);
std::string serialize(const RainbowC4Certificate& cert);

/// Full reduction context: anchors, s/r targets, A1/B1, the auxiliary
/// orientation, per-arc provenance, and skipped edges.
std::string serialize(const ReductionContext& ctx);

/// Verification report with mode-appropriate parameter echo. All content is
/// deterministic for fixed inputs except the "elapsed_seconds" field, which
/// callers comparing reports should strip (see strip_elapsed).
std::string serialize(const VerificationReport& report);

/// The same report text with the "elapsed_seconds" value normalized to 0,
/// for byte-comparing reports across runs and parallelism degrees.
std::string strip_elapsed(const std::string& report_text);

}  // namespace bipc4
