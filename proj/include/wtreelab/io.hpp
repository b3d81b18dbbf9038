#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wtreelab/betti.hpp"
#include "wtreelab/verify.hpp"
#include "wtreelab/weighted_tree.hpp"

namespace wtreelab {

/// Parsed graph file: vertex order is document order and becomes the
/// variable order everywhere downstream.
struct GraphDocument {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, Weight>> edges;

  WeightedTree to_tree() const;
  static GraphDocument from_tree(const WeightedTree& tree);

  bool operator==(const GraphDocument&) const = default;
};

enum class GraphFormat { json, edgelist };

/// Raised by parse_graph with a line (edge list) or field (JSON) location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, const std::string& location)
      : std::runtime_error(what + " (" + location + ")"), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

GraphDocument parse_graph(const std::string& text, GraphFormat format);
GraphFormat graph_format_from_extension(const std::string& path);
std::string render_graph_json(const GraphDocument& doc);
std::string render_graph_edgelist(const GraphDocument& doc);

enum class RenderMode { plain, json, csv };

struct BettiBlock {
  std::string engine;
  std::string field;
  Exponent power = 1;
  BettiTable table;

  bool operator==(const BettiBlock&) const = default;
};

/// Structured command output. The JSON rendering round-trips through
/// parse_report_json; plain and csv are write-only views.
struct Report {
  std::string command;
  std::optional<GraphDocument> graph;
  std::optional<TreeAnalysis> analysis;
  std::optional<BettiBlock> betti;
  std::optional<Campaign> campaign;

  bool operator==(const Report&) const = default;
};

std::string render_report(const Report& report, RenderMode mode);
Report parse_report_json(const std::string& text);

/// Standalone Macaulay2 script computing regularity, pdim and depth of the
/// t-th power of the tree's edge ideal; text emission only, nothing is run.
std::string export_macaulay2(const WeightedTree& tree, Exponent t);

/// Full command dispatch; returns the process exit code.
/// 0 success / all claims hold, 1 counterexample, 2 input error,
/// 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtreelab
