#include "eep/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace eep {

namespace {

constexpr std::size_t kGraph6MaxOrder = 68719476735ULL;

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::size_t to_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError(std::string("expected ") + what + ", got '" + token + "'", line);
  }
  return value;
}

}  // namespace

InputError::InputError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list") return GraphFormat::kEdgeList;
  if (name == "graph6") return GraphFormat::kGraph6;
  if (name == "labeled-edge-list") return GraphFormat::kLabeledEdgeList;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kGraph6) {
    std::string trimmed(text);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    std::size_t first = 0;
    while (first < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[first]))) ++first;
    if (trimmed.find('\n', first) != std::string::npos) throw InputError("graph6 input must be a single graph");
    return {decode_graph6(std::string_view(trimmed).substr(first)), std::nullopt};
  }

  const bool labeled = format == GraphFormat::kLabeledEdgeList;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::string> names;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokens_of(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2) throw InputError("header must be 'n m'", line_no);
      n = to_count(tokens[0], line_no, "vertex count");
      m = to_count(tokens[1], line_no, "edge count");
      have_header = true;
      continue;
    }
    const std::size_t want = labeled ? 3 : 2;
    if (tokens.size() != want) {
      throw InputError(labeled ? "edge line must be 'u v label'" : "edge line must be 'u v'", line_no);
    }
    if (pairs.size() == m) throw InputError("more edge lines than declared (" + std::to_string(m) + ")", line_no);
    const std::size_t u = to_count(tokens[0], line_no, "vertex");
    const std::size_t v = to_count(tokens[1], line_no, "vertex");
    if (u >= n || v >= n) throw InputError("vertex out of range [0, " + std::to_string(n) + ")", line_no);
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (labeled) names.push_back(tokens[2]);
  }
  if (!have_header) throw InputError("missing header 'n m'", line_no);
  if (pairs.size() != m) {
    throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()), line_no);
  }

  ParsedGraph out{Multigraph::from_edge_list(n, pairs), std::nullopt};
  if (labeled) {
    EdgeLabeling labels;
    for (std::size_t i = 0; i < names.size(); ++i) labels.set(EdgeId{static_cast<std::uint32_t>(i)}, names[i]);
    out.labels = std::move(labels);
  }
  return out;
}

ParsedGraph parse_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

std::string encode_graph6(const Multigraph& g) {
  if (!is_simple(g)) throw GraphError("graph6 cannot encode loops or parallel edges");
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }

  std::vector<bool> adjacent(n * n, false);
  for (const Edge& e : g.edges()) adjacent[e.u * n + e.v] = adjacent[e.v * n + e.u] = true;
  int bits = 0, value = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) | (adjacent[i * n + j] ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + value));
        bits = value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
  return out;
}

Multigraph decode_graph6(std::string_view code) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (code.substr(0, kHeader.size()) == kHeader) code.remove_prefix(kHeader.size());
  if (code.empty()) throw InputError("empty graph6 string");
  if (code.front() == ':' || code.front() == ';' || code.front() == '&') {
    throw InputError("sparse6/digraph6 input (loops or parallel edges) is not graph6");
  }
  for (char c : code) {
    if (c < 63 || c > 126) throw InputError("invalid graph6 character");
  }

  std::size_t pos = 0;
  auto next = [&]() -> std::size_t {
    if (pos >= code.size()) throw InputError("truncated graph6 string");
    return static_cast<std::size_t>(code[pos++] - 63);
  };
  std::size_t n = 0;
  if (code[0] != 126) {
    n = next();
  } else if (code.size() > 1 && code[1] != 126) {
    pos = 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next();
  } else {
    pos = 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | next();
  }
  if (n > kGraph6MaxOrder) throw InputError("graph6 order out of range");

  const std::size_t pair_bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t needed = (pair_bits + 5) / 6;
  if (code.size() - pos != needed) throw InputError("graph6 body has wrong length");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t chunk = static_cast<std::size_t>(code[pos + bit / 6] - 63);
      if ((chunk >> (5 - bit % 6)) & 1) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bit % 6 != 0) {
    const std::size_t chunk = static_cast<std::size_t>(code[pos + bit / 6] - 63);
    if (chunk & ((1u << (6 - bit % 6)) - 1)) throw InputError("graph6 padding bits must be zero");
  }
  return Multigraph::from_edge_list(n, pairs);
}

std::string format_edge_list(const Multigraph& g, const EdgeLabeling* labels) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (labels) out << ' ' << labels->at(e.id);
    out << '\n';
  }
  return out.str();
}

}  // namespace eep
