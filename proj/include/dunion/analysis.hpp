#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dunion/digraph.hpp"

namespace dunion {

/// Strong component id per vertex; ids are assigned in order of completion.
std::vector<std::size_t> strong_components(const Digraph& d);
bool strongly_connected(const Digraph& d);

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Directed hop distances from `source`; kUnreachable where there is no path.
std::vector<std::size_t> bfs_distances(const Digraph& d, Vertex source);

/// Largest shortest-path length over ordered pairs; nullopt (infinite) when D
/// is not strongly connected. Loops do not shorten anything; d(v, v) = 0.
std::optional<std::size_t> diameter(const Digraph& d);

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Cut vertices and bridges of the underlying simple undirected graph: loops
/// dropped, antiparallel arcs merged.
struct CutAnalysis {
  std::vector<Vertex> articulation_points;
  std::vector<Edge> bridges;
  bool operator==(const CutAnalysis&) const = default;
};
CutAnalysis underlying_cut_analysis(const Digraph& d);

/// Arc-disjoint s-t paths (loops ignored).
std::size_t local_arc_connectivity(const Digraph& d, Vertex s, Vertex t);
/// Internally vertex-disjoint s-t paths; requires s != t and no arc s -> t.
std::size_t local_vertex_connectivity(const Digraph& d, Vertex s, Vertex t);

/// Directed vertex connectivity: min local connectivity over ordered pairs
/// without an arc s -> t, or n - 1 when every such arc exists. 0 when D is not
/// strongly connected.
std::size_t vertex_connectivity(const Digraph& d);
/// Directed arc connectivity; 0 when D is not strongly connected or n = 1.
std::size_t arc_connectivity(const Digraph& d);

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

/// Isomorphism A -> B, or nullopt. Backtracking over vertices of A in
/// ascending order, candidates in ascending order after colour refinement, so
/// the returned map is the lexicographically least one. Throws Budget after
/// `budget` search nodes.
std::optional<VertexMap> isomorphic(const Digraph& a, const Digraph& b,
                                    std::uint64_t budget = kDefaultIsoBudget);

struct AnalysisReport {
  std::size_t order = 0;
  std::size_t size = 0;
  std::optional<std::size_t> regular_degree;
  bool strongly_connected = false;
  std::optional<std::size_t> diameter;  // nullopt = infinite
  std::vector<Vertex> articulation_points;
  std::vector<Edge> bridges;
  std::size_t vertex_connectivity = 0;
  std::size_t arc_connectivity = 0;
  bool is_line_digraph = false;
};

AnalysisReport analyze(const Digraph& d);

namespace serial {
// Single-threaded references for the parallel metric kernels.
std::optional<std::size_t> diameter(const Digraph& d);
/// Minimum over all ordered pairs; the parallel version roots at vertex 0.
std::size_t arc_connectivity(const Digraph& d);
std::size_t vertex_connectivity(const Digraph& d);
}  // namespace serial

}  // namespace dunion
