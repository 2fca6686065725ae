#pragma once

// Independent reference computations used only by the test suites. Nothing
// here calls into the library's algorithms beyond the Digraph value type.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "dunion/digraph.hpp"
#include "dunion/matrix.hpp"

namespace oracle {

using dunion::Arc;
using dunion::Digraph;
using dunion::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Digraph& d) {
  std::vector<std::vector<bool>> m(d.order(), std::vector<bool>(d.order(), false));
  for (const Arc& a : d.arcs()) m[a.tail][a.head] = true;
  return m;
}

/// First permutation (in lexicographic order) mapping A onto B, if any.
inline std::optional<std::vector<Vertex>> brute_force_iso(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const auto ma = adjacency(a);
  const auto mb = adjacency(b);
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (std::size_t u = 0; u < p.size() && ok; ++u)
      for (std::size_t v = 0; v < p.size() && ok; ++v) ok = ma[u][v] == mb[p[u]][p[v]];
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

/// All-pairs distances by Floyd-Warshall (loops ignored, d(v, v) = 0).
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Arc& a : d.arcs())
    if (!a.is_loop()) dist[a.tail][a.head] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  return dist;
}

/// nullopt for infinite.
inline std::optional<std::size_t> diameter(const Digraph& d) {
  std::size_t worst = 0;
  for (const auto& row : floyd_warshall(d))
    for (std::size_t x : row) {
      if (x >= kInf) return std::nullopt;
      worst = std::max(worst, x);
    }
  return worst;
}

/// Strong connectivity of D restricted to the vertices with alive[v].
inline bool strongly_connected_on(const Digraph& d, const std::vector<bool>& alive) {
  const std::size_t n = d.order();
  const auto reach = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::size_t start = 0;
    while (start < n && !alive[start]) ++start;
    if (start == n) return std::vector<bool>(n, true);
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    seen[start] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const Arc& a : d.arcs()) {
        const Vertex from = forward ? a.tail : a.head;
        const Vertex to = forward ? a.head : a.tail;
        if (from == u && alive[to] && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return seen;
  };
  const auto f = reach(true);
  const auto b = reach(false);
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && (!f[v] || !b[v])) return false;
  return true;
}

/// Smallest vertex set whose removal leaves a non-strong digraph or a single
/// vertex, by subset enumeration. n <= ~12.
inline std::size_t vertex_connectivity(const Digraph& d) {
  const std::size_t n = d.order();
  if (n <= 1) return 0;
  for (std::size_t size = 0; size + 1 < n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<bool> alive(n);
      for (std::size_t v = 0; v < n; ++v) alive[v] = !pick[v];
      if (!strongly_connected_on(d, alive)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

/// Smallest arc set (loops excluded) whose removal breaks strong connectivity.
inline std::size_t arc_connectivity(const Digraph& d) {
  const std::size_t n = d.order();
  if (n <= 1) return 0;
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (!a.is_loop()) arcs.push_back(a);
  const std::vector<bool> all(n, true);
  for (std::size_t size = 0; size <= arcs.size(); ++size) {
    std::vector<bool> pick(arcs.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Arc> kept;
      for (std::size_t i = 0; i < arcs.size(); ++i)
        if (!pick[i]) kept.push_back(arcs[i]);
      if (!strongly_connected_on(Digraph(n, kept), all)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return arcs.size();
}

/// Connected components of the underlying simple graph after deleting
/// `dead_vertex` (if any) and the undirected edge `dead_edge` (if any).
inline std::size_t undirected_components(const Digraph& d, std::optional<Vertex> dead_vertex,
                                         std::optional<std::pair<Vertex, Vertex>> dead_edge) {
  const std::size_t n = d.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : d.arcs()) {
    if (a.is_loop() || a.tail == dead_vertex || a.head == dead_vertex) continue;
    const auto lo = std::min(a.tail, a.head), hi = std::max(a.tail, a.head);
    if (dead_edge && dead_edge->first == lo && dead_edge->second == hi) continue;
    parent[find(a.tail)] = find(a.head);
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (v != dead_vertex && find(v) == v) ++count;
  return count;
}

/// Articulation points by deleting each vertex in turn.
inline std::vector<Vertex> articulation_points(const Digraph& d) {
  const std::size_t base = undirected_components(d, std::nullopt, std::nullopt);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < d.order(); ++v)
    if (undirected_components(d, v, std::nullopt) > base) out.push_back(v);
  return out;
}

/// Bridges by deleting each underlying edge in turn; pairs with u < v.
inline std::vector<std::pair<Vertex, Vertex>> bridges(const Digraph& d) {
  const std::size_t base = undirected_components(d, std::nullopt, std::nullopt);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Arc& a : d.arcs())
    if (!a.is_loop()) edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : edges)
    if (undirected_components(d, std::nullopt, e) > base) out.push_back(e);
  return out;
}

/// Direct triple-loop product, no shortcuts.
inline dunion::DenseMatrix multiply(const dunion::DenseMatrix& a, const dunion::DenseMatrix& b) {
  dunion::DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      dunion::Complex acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

/// Line digraph straight from the definition, vertices in canonical arc order.
inline Digraph line_digraph(const Digraph& d) {
  const auto arcs = d.arcs();
  std::vector<Arc> out;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j)
      if (arcs[i].head == arcs[j].tail) out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Digraph(arcs.size(), out);
}

}  // namespace oracle
