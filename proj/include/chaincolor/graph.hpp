#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chaincolor/chain.hpp"
#include "chaincolor/core.hpp"

namespace chaincolor {

/// Loop-free undirected graph with vertices 0..n-1 and optional chain labels.
/// Edges are kept as a sorted list of (u,v) with u < v; the list order is the
/// canonical edge order used by edge-indexed set systems.
struct AdjGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  std::vector<Chain> labels;  // empty, or one chain per vertex

  static AdjGraph build(int n, std::vector<std::pair<int, int>> raw_edges,
                        std::vector<Chain> labels = {}) {
    AdjGraph g;
    g.n = n;
    for (auto& [u, v] : raw_edges) {
      require(u >= 0 && u < n && v >= 0 && v < n, Errc::OutOfUniverse, "edge endpoint out of range");
      require(u != v, Errc::DomainMismatch, "loops are not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());
    g.edges = std::move(raw_edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    if (!labels.empty()) {
      require(static_cast<int>(labels.size()) == n, Errc::DomainMismatch, "label count mismatch");
      g.labels = std::move(labels);
    }
    return g;
  }

  static AdjGraph complete(int m) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
    return build(m, std::move(e));
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Index of edge (u,v) in the canonical edge list, or -1.
  int edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Total vertex coloring; colors are 0-based, palette counts them.
struct ColorMap {
  std::vector<int> color;
  int palette = 0;
};

inline void check_total(const AdjGraph& g, const ColorMap& cm) {
  require(static_cast<int>(cm.color.size()) == g.n, Errc::PartialColoring, "coloring size mismatch");
  for (int c : cm.color)
    require(c >= 0 && c < cm.palette, Errc::PartialColoring, "color outside palette");
}

// ---------------------------------------------------------------------------
// graph + coloring text formats
// ---------------------------------------------------------------------------

/// DIMACS-like text: `p edge <n> <m>` then `e <u> <v>` lines, 1-based.
inline void write_dimacs(std::ostream& os, const AdjGraph& g) {
  os << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline AdjGraph read_dimacs(std::istream& is) {
  int n = -1;
  long long m = 0;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string fmt;
      ls >> fmt >> n >> m;
      require(static_cast<bool>(ls) && (fmt == "edge" || fmt == "edges" || fmt == "col"),
              Errc::DomainMismatch, "bad DIMACS header");
    } else if (tag == "e") {
      int u, v;
      ls >> u >> v;
      require(static_cast<bool>(ls), Errc::DomainMismatch, "bad edge line");
      edges.emplace_back(u - 1, v - 1);
    }
  }
  require(n >= 0, Errc::DomainMismatch, "missing DIMACS header");
  return AdjGraph::build(n, std::move(edges));
}

/// Sidecar labels: `<vertex id>\t<chain text>` per line, 1-based ids.
inline void write_labels(std::ostream& os, const AdjGraph& g) {
  for (int v = 0; v < static_cast<int>(g.labels.size()); ++v)
    os << v + 1 << '\t' << g.labels[v].text() << '\n';
}

inline void write_colors_tsv(std::ostream& os, const ColorMap& cm) {
  for (std::size_t v = 0; v < cm.color.size(); ++v) os << v + 1 << '\t' << cm.color[v] + 1 << '\n';
}

inline ColorMap read_colors_tsv(std::istream& is, int n) {
  ColorMap cm;
  cm.color.assign(n, -1);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int v, c;
    ls >> v >> c;
    require(static_cast<bool>(ls), Errc::DomainMismatch, "bad color line");
    require(v >= 1 && v <= n, Errc::OutOfUniverse, "vertex id out of range");
    cm.color[v - 1] = c - 1;
    cm.palette = std::max(cm.palette, c);
  }
  for (int c : cm.color) require(c >= 0, Errc::PartialColoring, "vertex without color");
  return cm;
}

// ---------------------------------------------------------------------------
// homomorphisms
// ---------------------------------------------------------------------------

/// Non-owning vertex map from H into G.
struct HomMap {
  const AdjGraph* H = nullptr;
  const AdjGraph* G = nullptr;
  std::vector<int> map;
};

inline bool is_homomorphism(const HomMap& phi) {
  if (static_cast<int>(phi.map.size()) != phi.H->n) return false;
  for (int v : phi.map)
    if (v < 0 || v >= phi.G->n) return false;
  for (auto [x, y] : phi.H->edges)
    if (!phi.G->has_edge(phi.map[x], phi.map[y])) return false;
  return true;
}

namespace detail {

/// phi(N(x)) for every x, as bit rows over V(G).
inline std::vector<std::vector<std::uint64_t>> image_neighborhoods(const HomMap& phi) {
  const int words = (phi.G->n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> img(phi.H->n, std::vector<std::uint64_t>(words, 0));
  for (int x = 0; x < phi.H->n; ++x)
    for (int y : phi.H->adj[x]) {
      int g = phi.map[y];
      img[x][g / 64] |= std::uint64_t(1) << (g % 64);
    }
  return img;
}

}  // namespace detail

/// phi(N(x)) as a deduplicated sorted vertex list of G.
inline std::vector<int> image_of_neighborhood(const HomMap& phi, int x) {
  std::vector<int> out;
  for (int y : phi.H->adj[x]) out.push_back(phi.map[y]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// A homomorphism is complete when phi(z) in phi(N(x)) and phi(x) in phi(N(z))
/// already force the edge (x,z) in H. Checked over all vertex pairs.
inline bool is_complete_hom(const HomMap& phi) {
  require(is_homomorphism(phi), Errc::NotAHomomorphism, "vertex map is not a homomorphism");
  auto img = detail::image_neighborhoods(phi);
  auto in_img = [&](int x, int g) { return (img[x][g / 64] >> (g % 64)) & 1u; };
  for (int x = 0; x < phi.H->n; ++x)
    for (int z = x; z < phi.H->n; ++z) {
      if (in_img(x, phi.map[z]) && in_img(z, phi.map[x]) && !phi.H->has_edge(x, z)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// restricted neighborhood graph
// ---------------------------------------------------------------------------

/// Vertex (v,S) of RN(G,r): S is a subset of N(v) plus v itself, contains v,
/// and has at most r+1 elements.
struct RnVertex {
  int v;
  std::vector<int> s;  // sorted, includes v
};

struct RnGraph {
  AdjGraph graph;
  std::vector<RnVertex> verts;
  std::vector<int> proj;  // projection (v,S) -> v

  HomMap hom(const AdjGraph& base) const { return HomMap{&graph, &base, proj}; }
};

/// Builds RN(G,r) together with the projection map. Vertices are ordered by
/// (v, S) with S compared as a sorted element list; edges join (v,S),(u,T)
/// exactly when u != v, u in S, v in T.
inline RnGraph rn_graph(const AdjGraph& g, int r, long long size_budget = kDefaultSizeBudget) {
  require(r >= 1, Errc::DomainMismatch, "r must be >= 1");
  RnGraph out;
  for (int v = 0; v < g.n; ++v) {
    const auto& nb = g.adj[v];
    int d = static_cast<int>(nb.size());
    for (int k = 0; k <= std::min(r, d); ++k) {
      for_each_combination(d, k, [&](const std::vector<int>& idx) {
        RnVertex rv;
        rv.v = v;
        rv.s.reserve(k + 1);
        for (int i : idx) rv.s.push_back(nb[i]);
        rv.s.push_back(v);
        std::sort(rv.s.begin(), rv.s.end());
        out.verts.push_back(std::move(rv));
        require(static_cast<long long>(out.verts.size()) <= size_budget, Errc::SizeBudget,
                "restricted neighborhood graph exceeds budget");
      });
    }
  }
  std::sort(out.verts.begin(), out.verts.end(), [](const RnVertex& a, const RnVertex& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.s < b.s;
  });
  const int n = static_cast<int>(out.verts.size());
  std::vector<std::pair<int, int>> edges;
  auto member = [](const std::vector<int>& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const RnVertex& a = out.verts[i];
      const RnVertex& b = out.verts[j];
      if (a.v != b.v && member(a.s, b.v) && member(b.s, a.v)) edges.emplace_back(i, j);
    }
  out.graph = AdjGraph::build(n, std::move(edges));
  out.proj.reserve(n);
  for (const RnVertex& rv : out.verts) out.proj.push_back(rv.v);
  return out;
}

/// Subgraph induced by `verts` (original ids, any order). Vertices keep their
/// relative id order, which keeps every "u < v" convention intact.
inline AdjGraph induced_subgraph(const AdjGraph& g, std::vector<int> verts,
                                 std::vector<int>* old_ids = nullptr) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> to_sub(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) to_sub[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges)
    if (to_sub[u] >= 0 && to_sub[v] >= 0) edges.emplace_back(to_sub[u], to_sub[v]);
  std::vector<Chain> labels;
  if (!g.labels.empty())
    for (int v : verts) labels.push_back(g.labels[v]);
  if (old_ids) *old_ids = verts;
  return AdjGraph::build(static_cast<int>(verts.size()), std::move(edges), std::move(labels));
}

/// Relabels vertices: vertex v becomes perm[v].
inline AdjGraph relabel(const AdjGraph& g, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == g.n, Errc::DomainMismatch, "permutation size mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  std::vector<Chain> labels;
  if (!g.labels.empty()) {
    std::vector<int> inv(g.n);
    for (int v = 0; v < g.n; ++v) inv[perm[v]] = v;
    for (int v = 0; v < g.n; ++v) labels.push_back(g.labels[inv[v]]);
  }
  return AdjGraph::build(g.n, std::move(edges), std::move(labels));
}

/// Lookup table from chain label to vertex id.
inline std::unordered_map<Chain, int, ChainHash> label_index(const AdjGraph& g) {
  std::unordered_map<Chain, int, ChainHash> idx;
  idx.reserve(g.labels.size() * 2);
  for (int v = 0; v < static_cast<int>(g.labels.size()); ++v) idx.emplace(g.labels[v], v);
  return idx;
}

}  // namespace chaincolor
