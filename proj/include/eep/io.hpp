#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eep/labeling.hpp"
#include "eep/multigraph.hpp"

namespace eep {

enum class GraphFormat { kEdgeList, kGraph6, kLabeledEdgeList };

/// Accepts "edge-list", "graph6", "labeled-edge-list".
GraphFormat parse_graph_format(std::string_view name);

/// Malformed input. `line()` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  Multigraph graph;
  std::optional<EdgeLabeling> labels;
};

/// Edge list: header "n m" then m lines "u v" (labeled: "u v label").
/// Blank lines and lines starting with '#' are ignored.
ParsedGraph parse_graph(std::string_view text, GraphFormat format);
ParsedGraph parse_graph_file(const std::filesystem::path& path, GraphFormat format);

/// Simple graphs only; throws GraphError on loops or parallel edges.
std::string encode_graph6(const Multigraph& g);
/// Optional ">>graph6<<" header is accepted. Throws InputError.
Multigraph decode_graph6(std::string_view code);

/// Inverse of the edge-list parser (labeled when `labels` is given).
std::string format_edge_list(const Multigraph& g, const EdgeLabeling* labels = nullptr);

}  // namespace eep
