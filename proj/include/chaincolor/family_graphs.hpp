#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "chaincolor/chain.hpp"
#include "chaincolor/core.hpp"
#include "chaincolor/graph.hpp"

namespace chaincolor {

/// The four chain-graph families. A vertex is a chain <alpha, A_1, ..., A_delta>
/// over [m]; the families differ only in the admissible level sizes:
///   U(m,R,delta):   |A_delta| <= R, repeats allowed
///   W_r(m,sigma,d): |A_i| = r^(sigma+i-1), strictly growing
///   Y(m,delta):     |A_i| = 2i+1
///   Z(m,R,delta):   |A_i| = 2i+1 for i < delta, |A_delta| = R
/// At delta = 0 every family degenerates to the complete graph K_m.
struct FamilySpec {
  enum class Kind { U, W, Y, Z };

  Kind kind = Kind::U;
  int m = 0;
  int R = 0;      // U, Z
  int delta = 0;  // all
  int r = 0;      // W growth base
  int sigma = 0;  // W

  static FamilySpec U(int m, int R, int delta) { return make(Kind::U, m, R, delta, 0, 0); }
  static FamilySpec W(int m, int r, int sigma, int delta) { return make(Kind::W, m, 0, delta, r, sigma); }
  static FamilySpec Y(int m, int delta) { return make(Kind::Y, m, 0, delta, 0, 0); }
  static FamilySpec Z(int m, int R, int delta) { return make(Kind::Z, m, R, delta, 0, 0); }

  std::string name() const {
    switch (kind) {
      case Kind::U: return "U(" + std::to_string(m) + "," + std::to_string(R) + "," + std::to_string(delta) + ")";
      case Kind::W:
        return "W_" + std::to_string(r) + "(" + std::to_string(m) + "," + std::to_string(sigma) + "," +
               std::to_string(delta) + ")";
      case Kind::Y: return "Y(" + std::to_string(m) + "," + std::to_string(delta) + ")";
      case Kind::Z: return "Z(" + std::to_string(m) + "," + std::to_string(R) + "," + std::to_string(delta) + ")";
    }
    return "?";
  }

  /// Required size of level i (1-based), or nullopt when only bounded above
  /// (the U family).
  std::optional<int> level_size(int i) const {
    switch (kind) {
      case Kind::U: return std::nullopt;
      case Kind::W: return ipow(r, sigma + i - 1);
      case Kind::Y: return 2 * i + 1;
      case Kind::Z: return i < delta ? 2 * i + 1 : R;
    }
    return std::nullopt;
  }

  int max_size() const {
    switch (kind) {
      case Kind::U: return delta == 0 ? 1 : R;
      case Kind::W: return delta == 0 ? 1 : ipow(r, sigma + delta - 1);
      case Kind::Y: return delta == 0 ? 1 : 2 * delta + 1;
      case Kind::Z: return R;
    }
    return 0;
  }

  void validate() const {
    require(m >= 1, Errc::DomainError, "m must be positive");
    require(delta >= 0, Errc::DomainError, "delta must be nonnegative");
    switch (kind) {
      case Kind::U:
        require(delta == 0 || R >= 1, Errc::DomainError, "U needs R >= 1");
        break;
      case Kind::W:
        require(r >= 2, Errc::DomainError, "W needs r >= 2");
        require(sigma >= 1, Errc::DomainError, "W needs sigma >= 1");
        require(delta == 0 || ipow(r, sigma + delta - 1) <= m, Errc::DomainError,
                "W level sizes exceed the universe");
        break;
      case Kind::Y:
        require(delta == 0 || 2 * delta + 1 <= m, Errc::DomainError, "Y level sizes exceed the universe");
        break;
      case Kind::Z:
        require(delta >= 1, Errc::DomainError, "Z needs delta >= 1");
        require(R >= 2 * delta + 1, Errc::DomainError, "Z needs R >= 2*delta+1");
        require(R <= m, Errc::DomainError, "Z level sizes exceed the universe");
        break;
    }
  }

  /// Spec of the graph that chains map into by dropping their last level.
  FamilySpec drop_target() const {
    require(delta >= 1, Errc::EmptyChain, "no drop target below delta = 1");
    switch (kind) {
      case Kind::U: return U(m, R, delta - 1);
      case Kind::W: return W(m, r, sigma, delta - 1);
      case Kind::Y: return Y(m, delta - 1);
      case Kind::Z: return Y(m, delta - 1);  // removing the top level leaves the arithmetic profile
    }
    return *this;
  }

  static int ipow(int b, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
      v *= b;
      require(v <= (1LL << 40), Errc::SizeBudget, "level size overflow");
    }
    return static_cast<int>(v);
  }

 private:
  static FamilySpec make(Kind k, int m, int R, int delta, int r, int sigma) {
    FamilySpec s;
    s.kind = k;
    s.m = m;
    s.R = R;
    s.delta = delta;
    s.r = r;
    s.sigma = sigma;
    s.validate();
    return s;
  }
};

inline bool is_vertex(const FamilySpec& spec, const Chain& c) {
  if (c.universe() != spec.m || c.length() != spec.delta) return false;
  for (int i = 1; i <= spec.delta; ++i) {
    auto want = spec.level_size(i);
    int sz = c.level(i).size();
    if (want ? sz != *want : sz > spec.R) return false;
  }
  return true;
}

/// Edge test between two vertices of the family graph: distinct heads that
/// appear in each other's first level, with the level-shift containments
/// A_i <= B_{i+1} and B_i <= A_{i+1} for 1 <= i <= delta-1. At delta = 0 the
/// graph is K_m, so only alpha != beta remains.
inline bool u_adjacent(const FamilySpec& spec, const Chain& a, const Chain& b) {
  require(is_vertex(spec, a) && is_vertex(spec, b), Errc::NotAVertex,
          "chain is not a vertex of " + spec.name());
  if (a.alpha() == b.alpha()) return false;
  if (spec.delta == 0) return true;
  if (!b.level(1).contains(a.alpha()) || !a.level(1).contains(b.alpha())) return false;
  for (int i = 1; i <= spec.delta - 1; ++i) {
    if (!a.level(i).subset_of(b.level(i + 1))) return false;
    if (!b.level(i).subset_of(a.level(i + 1))) return false;
  }
  return true;
}

/// All vertices of the family graph in canonical (text) order. The position
/// in this list is the vertex's integer id everywhere downstream.
inline std::vector<Chain> vertices(const FamilySpec& spec, long long size_budget = kDefaultSizeBudget) {
  spec.validate();
  std::vector<Chain> out;
  std::vector<SmallSet> stack;
  const int m = spec.m;
  std::function<void(int)> rec = [&](int lvl) {
    if (lvl == spec.delta + 1) {
      out.emplace_back(m, stack[0].min(), std::vector<SmallSet>(stack.begin() + 1, stack.end()));
      require(static_cast<long long>(out.size()) <= size_budget, Errc::SizeBudget,
              spec.name() + " vertex enumeration exceeds budget");
      return;
    }
    SmallSet lower = lvl == 0 ? SmallSet(m) : stack.back();
    auto want = spec.level_size(lvl);
    int cap = lvl == 0 ? 1 : (want ? *want : spec.R);
    detail::enum_supersets(lower, SmallSet::all(m), cap, [&](const SmallSet& s) {
      if (lvl == 0 && s.size() != 1) return;
      if (lvl > 0 && want && s.size() != *want) return;
      stack.push_back(s);
      rec(lvl + 1);
      stack.pop_back();
    });
  };
  rec(0);
  sort_chains_canonically(out);
  return out;
}

/// Materializes the family graph: canonical vertex order, edges by u_adjacent,
/// chain labels attached.
inline AdjGraph build_graph(const FamilySpec& spec, long long size_budget = kDefaultSizeBudget) {
  std::vector<Chain> verts = vertices(spec, size_budget);
  const int n = static_cast<int>(verts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u_adjacent(spec, verts[i], verts[j])) edges.emplace_back(i, j);
  return AdjGraph::build(n, std::move(edges), std::move(verts));
}

/// Distinct drops of A's neighbors, i.e. the image of N(A) under the
/// last-level-removing map. `graph` must be the labeled graph of `spec`.
inline std::vector<Chain> phi_image_of_neighborhood(const AdjGraph& graph, int vertex_id) {
  require(!graph.labels.empty(), Errc::DomainMismatch, "graph has no chain labels");
  std::vector<Chain> out;
  for (int u : graph.adj[vertex_id]) out.push_back(graph.labels[u].drop_last());
  sort_chains_canonically(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Chain> phi_image_of_neighborhood(const FamilySpec& spec, const Chain& a,
                                                    long long size_budget = kDefaultSizeBudget) {
  AdjGraph g = build_graph(spec, size_budget);
  auto idx = label_index(g);
  auto it = idx.find(a);
  require(it != idx.end(), Errc::NotAVertex, "chain is not a vertex of " + spec.name());
  return phi_image_of_neighborhood(g, it->second);
}

/// The level-dropping homomorphism of a family graph onto its target, with
/// both graphs materialized.
struct DropHom {
  FamilySpec source_spec;
  FamilySpec target_spec;
  AdjGraph H;  // level delta
  AdjGraph G;  // level delta-1
  std::vector<int> map;

  HomMap hom() const { return HomMap{&H, &G, map}; }
};

inline DropHom drop_hom(const FamilySpec& spec, long long size_budget = kDefaultSizeBudget) {
  DropHom d{spec, spec.drop_target(), build_graph(spec, size_budget),
            build_graph(spec.drop_target(), size_budget), {}};
  auto idx = label_index(d.G);
  d.map.reserve(d.H.n);
  for (int x = 0; x < d.H.n; ++x) {
    auto it = idx.find(d.H.labels[x].drop_last());
    require(it != idx.end(), Errc::NotAVertex, "dropped chain missing from target graph");
    d.map.push_back(it->second);
  }
  return d;
}

}  // namespace chaincolor
