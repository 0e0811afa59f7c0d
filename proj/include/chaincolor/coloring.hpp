#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "chaincolor/chain.hpp"
#include "chaincolor/core.hpp"
#include "chaincolor/graph.hpp"

namespace chaincolor {

inline bool is_proper(const AdjGraph& g, const ColorMap& cm) {
  check_total(g, cm);
  for (auto [u, v] : g.edges)
    if (cm.color[u] == cm.color[v]) return false;
  return true;
}

/// Proper coloring that shows at most R colors in every radius-delta ball
/// (the ball includes its center).
inline bool is_local_coloring(const AdjGraph& g, const ColorMap& cm, int R, int delta) {
  require(is_proper(g, cm), Errc::NotProper, "local check needs a proper coloring");
  std::vector<int> dist(g.n);
  std::vector<char> seen(cm.palette);
  for (int v = 0; v < g.n; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<int> q{v};
    dist[v] = 0;
    int used = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (!seen[cm.color[x]]) {
        seen[cm.color[x]] = 1;
        if (++used > R) return false;
      }
      if (dist[x] == delta) continue;
      for (int y : g.adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
  }
  return true;
}

/// First-fit in the given vertex order (identity when empty).
inline ColorMap greedy_coloring(const AdjGraph& g, std::vector<int> order = {}) {
  if (order.empty()) {
    order.resize(g.n);
    std::iota(order.begin(), order.end(), 0);
  }
  require(static_cast<int>(order.size()) == g.n, Errc::DomainMismatch, "order size mismatch");
  ColorMap cm;
  cm.color.assign(g.n, -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(cm.palette + 1, 0);
    for (int u : g.adj[v])
      if (cm.color[u] >= 0) used[std::min(cm.color[u], cm.palette)] = 1;
    int c = 0;
    while (c < static_cast<int>(used.size()) && used[c]) ++c;
    cm.color[v] = c;
    cm.palette = std::max(cm.palette, c + 1);
  }
  return cm;
}

namespace detail {

struct ExactColorer {
  const AdjGraph& g;
  std::vector<int> color;
  std::vector<int> best_color;
  int best = 0;

  explicit ExactColorer(const AdjGraph& graph) : g(graph) {}

  /// Greedy clique on highest-degree candidates; deterministic tie-breaks.
  std::vector<int> seed_clique() const {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
      bool ok = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
  }

  int pick_vertex(int used_colors) const {
    int best_v = -1, best_sat = -1, best_deg = -1;
    std::vector<char> seen(used_colors + 1);
    for (int v = 0; v < g.n; ++v) {
      if (color[v] >= 0) continue;
      std::fill(seen.begin(), seen.end(), 0);
      int sat = 0;
      for (int u : g.adj[v])
        if (color[u] >= 0 && !seen[color[u]]) {
          seen[color[u]] = 1;
          ++sat;
        }
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best_v = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best_v;
  }

  void dfs(int colored, int used_colors) {
    if (used_colors >= best) return;  // cannot improve
    if (colored == g.n) {
      best = used_colors;
      best_color = color;
      return;
    }
    int v = pick_vertex(used_colors);
    std::vector<char> banned(used_colors + 1, 0);
    for (int u : g.adj[v])
      if (color[u] >= 0) banned[color[u]] = 1;
    for (int c = 0; c < used_colors && c + 1 <= best; ++c) {
      if (banned[c]) continue;
      color[v] = c;
      dfs(colored + 1, used_colors);
      color[v] = -1;
    }
    if (used_colors + 1 < best) {  // open a fresh color
      color[v] = used_colors;
      dfs(colored + 1, used_colors + 1);
      color[v] = -1;
    }
  }
};

}  // namespace detail

/// Exact chromatic number with a witness, by branch and bound: clique seeding
/// for the lower bound, saturation-order branching, greedy DSATUR-flavored
/// upper bound from the first dive. Deterministic.
inline std::pair<int, ColorMap> chromatic_exact(const AdjGraph& g, int vertex_cap = 80) {
  require(g.n <= vertex_cap, Errc::SizeBudget,
          "graph has " + std::to_string(g.n) + " vertices, cap " + std::to_string(vertex_cap));
  if (g.n == 0) return {0, ColorMap{}};
  detail::ExactColorer ec(g);
  ec.color.assign(g.n, -1);

  ColorMap greedy = greedy_coloring(g);
  ec.best = greedy.palette;
  ec.best_color = greedy.color;

  std::vector<int> clique = ec.seed_clique();
  if (static_cast<int>(clique.size()) < ec.best) {
    // pre-color the clique; any optimal coloring can be relabeled this way
    for (std::size_t i = 0; i < clique.size(); ++i) ec.color[clique[i]] = static_cast<int>(i);
    ec.dfs(static_cast<int>(clique.size()), static_cast<int>(clique.size()));
  }
  ColorMap witness;
  witness.color = ec.best_color;
  witness.palette = ec.best;
  require(is_proper(g, witness), Errc::PropertyViolation, "exact solver produced an improper witness");
  return {ec.best, witness};
}

// ---------------------------------------------------------------------------
// colorings of chain sets keyed by the chain itself
// ---------------------------------------------------------------------------

/// Coloring of all chains over [m] with a fixed length and bounded size.
/// Carries its own domain description so encoders and decoders can agree on
/// it without rebuilding anything.
struct S1ColorMap {
  int m = 0;
  int length = 0;
  int max_size = 0;
  int palette = 0;
  std::unordered_map<Chain, int, ChainHash> color;

  int color_of(const Chain& c) const {
    auto it = color.find(c);
    require(it != color.end(), Errc::DomainMismatch, "chain outside coloring domain: " + c.text());
    return it->second;
  }
};

inline void write_s1_colors_tsv(std::ostream& os, const S1ColorMap& s1) {
  std::vector<const Chain*> keys;
  keys.reserve(s1.color.size());
  for (const auto& [c, col] : s1.color) keys.push_back(&c);
  std::sort(keys.begin(), keys.end(),
            [](const Chain* a, const Chain* b) { return chain_canonical_less(*a, *b); });
  for (const Chain* c : keys) os << c->text() << '\t' << s1.color.at(*c) + 1 << '\n';
}

}  // namespace chaincolor
