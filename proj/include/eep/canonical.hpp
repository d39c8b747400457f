#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eep/labeling.hpp"
#include "eep/multigraph.hpp"

namespace eep {

/// Symmetric n x n matrix of nonnegative codes. Off-diagonal zero means
/// "not adjacent"; the diagonal carries a per-vertex code (loops).
class CodeMatrix {
 public:
  explicit CodeMatrix(std::size_t n) : n_(n), codes_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return codes_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t code) {
    codes_[i * n_ + j] = code;
    codes_[j * n_ + i] = code;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> codes_;
};

struct CanonicalForm {
  /// Byte string; equal for two matrices iff they are isomorphic.
  std::string key;
  /// position[v] is the canonical index assigned to vertex v.
  std::vector<Vertex> position;
};

/// Colour refinement plus individualisation backtracking. Branches are pruned
/// with twin transpositions and with automorphisms discovered at equal leaves.
/// `header` is prepended verbatim to the key.
CanonicalForm canonical_form(const CodeMatrix& m, const std::string& header = {});

/// Loop count on the diagonal, edge multiplicity off it.
CodeMatrix multiplicity_matrix(const Multigraph& g);

/// Isomorphism-complete key for multigraphs.
std::string canonical_key(const Multigraph& g);
/// Key for edge-labeled multigraphs: isomorphisms must preserve labels.
std::string canonical_key(const Multigraph& g, const EdgeLabeling& labels);

/// Plain encoding in the graph's own vertex order (no canonicalisation).
/// Equal only for identical graphs, up to edge ids.
std::string raw_key(const Multigraph& g);
std::string raw_key(const Multigraph& g, const EdgeLabeling& labels);

}  // namespace eep
