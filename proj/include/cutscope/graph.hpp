#pragma once

// Finite simple graphs with a fixed edge labeling. The position of an edge in
// the edge list is its label e_k (1-based), and that label is the index of the
// variable pair s_k, t_k everywhere else in the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutscope/error.hpp"

namespace cutscope {

/// Unordered vertex pair. The stored orientation is kept as given so that
/// graph files round-trip unchanged; comparisons ignore it.
struct Edge {
  int u = 0;
  int v = 0;

  int lo() const { return std::min(u, v); }
  int hi() const { return std::max(u, v); }
  bool touches(int w) const { return u == w || v == w; }

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.lo() == b.lo() && a.hi() == b.hi();
  }
};

class Graph {
 public:
  /// Vertices are 1..vertex_count. Throws Errc::invalid_graph unless the
  /// graph has at least two vertices, at least one edge, no loops, no
  /// repeated edges and only in-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 2) throw Error(Errc::invalid_graph, "a graph needs at least 2 vertices");
    if (edges_.empty()) throw Error(Errc::invalid_graph, "a graph needs at least one edge");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
        throw Error(Errc::invalid_graph, "edge endpoint outside 1.." + std::to_string(n_));
      if (e.u == e.v) throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(e.u));
      if (!seen.emplace(e.lo(), e.hi()).second)
        throw Error(Errc::invalid_graph, "duplicate edge {" + std::to_string(e.lo()) + "," +
                                             std::to_string(e.hi()) + "}");
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// 1-based edge label.
  const Edge& edge(int label) const { return edges_.at(static_cast<std::size_t>(label - 1)); }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
      ++deg[static_cast<std::size_t>(e.u - 1)];
      ++deg[static_cast<std::size_t>(e.v - 1)];
    }
    return deg;
  }

  bool has_edge(int a, int b) const {
    return std::find(edges_.begin(), edges_.end(), Edge{a, b}) != edges_.end();
  }

  /// Same vertex count and the same edge list label by label.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Short text form "n=4 E=[{1,2},...]".
inline std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " E=[";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (k) s += ",";
    s += "{" + std::to_string(g.edges()[k].u) + "," + std::to_string(g.edges()[k].v) + "}";
  }
  return s + "]";
}

/// Shared-vertex data for a clique sum over K_0 (one identified vertex) or
/// K_{-1} (disjoint union, no pairs).
struct VertexPairing {
  std::vector<std::pair<int, int>> pairs;

  static VertexPairing disjoint() { return {}; }
  static VertexPairing glue(int vertex_in_first, int vertex_in_second) {
    return {{{vertex_in_first, vertex_in_second}}};
  }
};

/// C_n with e_i = {i, i+1} for i < n and e_n = {1, n}.
inline Graph cycle(int n) {
  if (n < 3) throw Error(Errc::invalid_family, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

inline Graph path(int n) {
  if (n < 2) throw Error(Errc::invalid_family, "path needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

/// K_n with edges labeled lexicographically on (u, v), u < v.
inline Graph complete(int n) {
  if (n < 2) throw Error(Errc::invalid_family, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// Vertex map used by clique_sum: where the vertices of the second summand
/// land in the sum. The first summand keeps its labels.
inline std::vector<int> clique_sum_vertex_map(const Graph& g1, const Graph& g2,
                                              const VertexPairing& pairing) {
  if (pairing.pairs.size() > 1)
    throw Error(Errc::invalid_pairing, "clique sums over more than one shared vertex are not supported");
  std::optional<std::pair<int, int>> shared;
  if (!pairing.pairs.empty()) {
    shared = pairing.pairs.front();
    if (shared->first < 1 || shared->first > g1.vertex_count() || shared->second < 1 ||
        shared->second > g2.vertex_count())
      throw Error(Errc::invalid_pairing, "pairing references a vertex that does not exist");
  }
  std::vector<int> map(static_cast<std::size_t>(g2.vertex_count()) + 1, 0);
  int next = g1.vertex_count() + 1;
  for (int v = 1; v <= g2.vertex_count(); ++v) {
    if (shared && shared->second == v)
      map[static_cast<std::size_t>(v)] = shared->first;
    else
      map[static_cast<std::size_t>(v)] = next++;
  }
  return map;
}

/// G1 #_{K_0} G2 (one shared vertex) or G1 ⊔ G2 (empty pairing). Edges of g1
/// keep labels 1..m1; edges of g2 follow as m1+1..m1+m2. Unshared vertices of
/// g2 are renumbered after g1's in increasing order.
inline Graph clique_sum(const Graph& g1, const Graph& g2, const VertexPairing& pairing) {
  const auto map = clique_sum_vertex_map(g1, g2, pairing);
  std::vector<Edge> edges = g1.edges();
  for (const auto& e : g2.edges())
    edges.push_back({map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]});
  const int n = g1.vertex_count() + g2.vertex_count() - static_cast<int>(pairing.pairs.size());
  return Graph(n, std::move(edges));
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> slot(n + 1, -1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int root = find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
  }
  return parts;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Random simple graph on 2..max_vertices vertices, each vertex pair an edge
/// with probability 1/2, redrawn until it has an edge. Isolated vertices are
/// allowed.
template <class Rng>
Graph random_graph(Rng& rng, int max_vertices) {
  std::uniform_int_distribution<int> pick_n(2, max_vertices);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    const int n = pick_n(rng);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    if (!edges.empty()) return Graph(n, std::move(edges));
  }
}

/// Induced subgraph on the edges with the given labels (1-based). Vertices
/// are renumbered 1..k in increasing order of their original label, and edges
/// keep their relative order. Used to split a graph into clique-sum factors.
inline Graph edge_subgraph(const Graph& g, const std::vector<int>& labels) {
  std::vector<int> used;
  for (int l : labels) {
    used.push_back(g.edge(l).u);
    used.push_back(g.edge(l).v);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin()) + 1;
  };
  std::vector<Edge> edges;
  for (int l : labels) edges.push_back({rank(g.edge(l).u), rank(g.edge(l).v)});
  return Graph(static_cast<int>(used.size()), std::move(edges));
}

/// Blocks (maximal 2-connected pieces and bridges) as edge-label lists,
/// ordered so that each block shares at most one vertex with the union of the
/// blocks before it. Consecutive blocks are therefore 0-clique sums or
/// disjoint unions of what came before.
inline std::vector<std::vector<int>> blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= g.edge_count(); ++l) {
    adj[static_cast<std::size_t>(g.edge(l).u)].push_back({g.edge(l).v, l});
    adj[static_cast<std::size_t>(g.edge(l).v)].push_back({g.edge(l).u, l});
  }
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0), low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> result;
  int timer = 0;
  // Iterative Hopcroft–Tarjan; a DFS from each root visits components in
  // discovery order, so every emitted block meets earlier ones in at most one
  // vertex once the list is reversed per component.
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int root = 1; root <= n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<std::vector<int>> comp_blocks;
    std::vector<Frame> stack{{root, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = adj[static_cast<std::size_t>(f.v)];
      if (f.next < nbrs.size()) {
        const auto [w, l] = nbrs[f.next++];
        if (l == f.parent_edge) continue;
        if (disc[static_cast<std::size_t>(w)] == 0) {
          edge_stack.push_back(l);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = ++timer;
          stack.push_back({w, l, 0});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.push_back(l);
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const int u = stack.back().v;
      low[static_cast<std::size_t>(u)] =
          std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(done.v)]);
      if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(u)]) {
        std::vector<int> block;
        while (true) {
          const int l = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(l);
          if (l == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        comp_blocks.push_back(std::move(block));
      }
    }
    // Blocks pop leaf-first; reversing gives a root-first order.
    result.insert(result.end(), comp_blocks.rbegin(), comp_blocks.rend());
  }
  return result;
}

}  // namespace cutscope
