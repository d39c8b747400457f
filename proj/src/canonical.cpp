#include "eep/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

namespace eep {

namespace {

void append_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

using Coloring = std::vector<std::uint32_t>;
using Permutation = std::vector<Vertex>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const CodeMatrix& m) : m_(m), n_(m.size()), adj_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && m_.at(i, j) != 0) adj_[i].emplace_back(static_cast<Vertex>(j), m_.at(i, j));
  }

  CanonicalForm run(const std::string& header) {
    CanonicalForm out;
    out.key = header;
    append_varint(out.key, n_);
    if (n_ == 0) return out;

    Coloring initial(n_);
    {
      std::vector<std::uint32_t> diag(n_);
      for (std::size_t v = 0; v < n_; ++v) diag[v] = m_.at(v, v);
      initial = rank_by(diag);
    }
    std::vector<Vertex> path;
    search(refine(std::move(initial)), path);

    for (std::uint32_t code : best_certificate_) append_varint(out.key, code);
    out.position.assign(best_position_.begin(), best_position_.end());
    return out;
  }

 private:
  template <class Sig>
  static Coloring rank_by(const std::vector<Sig>& sigs) {
    std::vector<std::size_t> order(sigs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });
    Coloring colors(sigs.size());
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sigs[order[i - 1]] < sigs[order[i]]) ++rank;
      colors[order[i]] = rank;
    }
    return colors;
  }

  static std::size_t color_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  // Iterates to the coarsest equitable refinement.
  Coloring refine(Coloring colors) const {
    using Signature = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
    std::size_t count = color_count(colors);
    std::vector<Signature> sigs(n_);
    while (count < n_) {
      for (std::size_t v = 0; v < n_; ++v) {
        sigs[v].first = colors[v];
        auto& nb = sigs[v].second;
        nb.clear();
        for (auto [w, code] : adj_[v]) nb.emplace_back(colors[w], code);
        std::sort(nb.begin(), nb.end());
      }
      Coloring next = rank_by(sigs);
      std::size_t next_count = color_count(next);
      colors = std::move(next);
      if (next_count == count) break;
      count = next_count;
    }
    return colors;
  }

  bool twins(Vertex a, Vertex b) const {
    if (m_.at(a, a) != m_.at(b, b)) return false;
    for (std::size_t w = 0; w < n_; ++w)
      if (w != a && w != b && m_.at(a, w) != m_.at(b, w)) return false;
    return true;
  }

  void leaf(const Coloring& colors) {
    Permutation inverse(n_);
    for (std::size_t v = 0; v < n_; ++v) inverse[colors[v]] = static_cast<Vertex>(v);
    std::vector<std::uint32_t> cert;
    cert.reserve(n_ * (n_ + 1) / 2);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) cert.push_back(m_.at(inverse[i], inverse[j]));

    if (!have_best_ || cert < best_certificate_) {
      have_best_ = true;
      best_certificate_ = std::move(cert);
      best_position_.assign(colors.begin(), colors.end());
      best_inverse_ = std::move(inverse);
    } else if (cert == best_certificate_) {
      Permutation automorphism(n_);
      for (std::size_t v = 0; v < n_; ++v) automorphism[v] = best_inverse_[colors[v]];
      generators_.push_back(std::move(automorphism));
    }
  }

  void search(const Coloring& colors, std::vector<Vertex>& path) {
    const std::size_t count = color_count(colors);
    if (count == n_) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> cell_size(count, 0);
    for (auto c : colors) ++cell_size[c];
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < count; ++c)
      if (cell_size[c] > 1 && (!target || cell_size[c] < cell_size[*target])) target = c;

    std::vector<Vertex> cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (colors[v] == *target) cell.push_back(static_cast<Vertex>(v));

    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (!tried.empty() && equivalent_to_tried(v, tried, cell, path)) continue;
      tried.push_back(v);

      Coloring next(colors);
      for (std::size_t w = 0; w < n_; ++w) {
        if (colors[w] > *target) ++next[w];
        else if (colors[w] == *target && w != v) next[w] = *target + 1;
      }
      path.push_back(v);
      search(refine(std::move(next)), path);
      path.pop_back();
    }
  }

  // True when some automorphism fixing `path` pointwise maps v onto a tried vertex.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried, const std::vector<Vertex>& cell,
                           const std::vector<Vertex>& path) const {
    DisjointSets orbits(n_);
    for (Vertex t : tried)
      if (twins(t, v)) return true;
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        if (twins(cell[i], cell[j])) orbits.unite(cell[i], cell[j]);
    for (const Permutation& g : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return g[p] == p; });
      if (!fixes) continue;
      for (std::size_t w = 0; w < n_; ++w) orbits.unite(w, g[w]);
    }
    const std::size_t root = orbits.find(v);
    return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbits.find(t) == root; });
  }

  const CodeMatrix& m_;
  std::size_t n_;
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj_;

  bool have_best_ = false;
  std::vector<std::uint32_t> best_certificate_;
  std::vector<Vertex> best_position_;
  Permutation best_inverse_;
  std::vector<Permutation> generators_;
};

// Per vertex pair, the sorted multiset of labels on the connecting edges.
using LabelBags = std::map<std::pair<Vertex, Vertex>, std::vector<std::string>>;

LabelBags label_bags(const Multigraph& g, const EdgeLabeling& labels) {
  LabelBags bags;
  for (const Edge& e : g.edges()) bags[{e.u, e.v}].push_back(labels.at(e.id));
  for (auto& [ends, bag] : bags) std::sort(bag.begin(), bag.end());
  return bags;
}

// Codes are ranks of the distinct bags; the bag table becomes the key header.
std::pair<CodeMatrix, std::string> labeled_matrix(const Multigraph& g, const EdgeLabeling& labels) {
  LabelBags bags = label_bags(g, labels);
  std::map<std::vector<std::string>, std::uint32_t> codes;
  for (const auto& [ends, bag] : bags) codes.emplace(bag, 0);
  std::string header = "L";
  append_varint(header, codes.size());
  std::uint32_t next = 1;
  for (auto& [bag, code] : codes) {
    code = next++;
    append_varint(header, bag.size());
    for (const std::string& label : bag) {
      append_varint(header, label.size());
      header += label;
    }
  }
  CodeMatrix m(g.vertex_count());
  for (const auto& [ends, bag] : bags) m.set(ends.first, ends.second, codes.at(bag));
  return {std::move(m), std::move(header)};
}

std::string identity_key(const CodeMatrix& m, std::string key) {
  append_varint(key, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) append_varint(key, m.at(i, j));
  return key;
}

}  // namespace

CanonicalForm canonical_form(const CodeMatrix& m, const std::string& header) {
  return Canonicalizer(m).run(header);
}

CodeMatrix multiplicity_matrix(const Multigraph& g) {
  CodeMatrix m(g.vertex_count());
  for (const Edge& e : g.edges()) m.set(e.u, e.v, m.at(e.u, e.v) + 1);
  return m;
}

std::string canonical_key(const Multigraph& g) { return canonical_form(multiplicity_matrix(g), "U").key; }

std::string canonical_key(const Multigraph& g, const EdgeLabeling& labels) {
  auto [m, header] = labeled_matrix(g, labels);
  return canonical_form(m, header).key;
}

std::string raw_key(const Multigraph& g) { return identity_key(multiplicity_matrix(g), "U"); }

std::string raw_key(const Multigraph& g, const EdgeLabeling& labels) {
  auto [m, header] = labeled_matrix(g, labels);
  return identity_key(m, std::move(header));
}

}  // namespace eep
