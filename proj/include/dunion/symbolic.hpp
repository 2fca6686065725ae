#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dunion/digraph.hpp"
#include "dunion/factorization.hpp"

namespace dunion {

struct LineDigraph {
  Digraph digraph;
  /// arc_of_vertex[i] is the arc of the source digraph that vertex i stands for;
  /// vertices follow the canonical arc order.
  std::vector<Arc> arc_of_vertex;
};

/// Vertices are the arcs of D; (u, v) -> (v, w).
LineDigraph line_digraph(const Digraph& d);
/// t-fold line digraph; t = 0 returns D.
Digraph iterated_line_digraph(const Digraph& d, std::size_t times);

enum class SplitMode { In, Out };

/// Per-vertex ordered classes of incident arcs (incoming for In, outgoing for
/// Out). Empty classes are allowed; every vertex has at least one class.
struct ArcPartition {
  SplitMode mode = SplitMode::Out;
  std::vector<std::vector<std::vector<Arc>>> classes;  // [vertex][class] -> arcs

  std::size_t class_count(Vertex v) const { return classes[v].size(); }
  bool operator==(const ArcPartition&) const = default;
};

/// nullopt if P partitions the declared side of every vertex of D.
std::optional<std::string> validate_partition(const Digraph& d, const ArcPartition& p);

struct SplitVertex {
  Vertex base = 0;
  std::size_t cls = 0;  // zero-based class index j - 1
  bool operator==(const SplitVertex&) const = default;
};

/// State split graph with two labelings of the same vertex set.
///
/// `digraph` groups copies by base vertex: v_i^j has index offset(i) + j - 1.
/// `class_major` orders vertices by (class, base vertex); when every vertex has
/// k classes this is v_i^j -> (j - 1) n + i, the diagonal-union labeling.
struct SplitResult {
  Digraph digraph;
  std::vector<SplitVertex> vertex_labels;  // indexed by `digraph` vertex
  Digraph class_major;
  std::vector<SplitVertex> class_major_labels;
};

/// Out-split: arc (h, l) in outgoing class c at h gives h^c -> l^j for every j.
/// In-split: arc (h, l) in incoming class c at l gives h^j -> l^c for every j.
SplitResult state_split(const Digraph& d, const ArcPartition& p);

/// Class j at v holds the arcs of factor j incident to v on the given side.
/// Every vertex gets exactly k classes, some possibly empty.
ArcPartition partition_from_factorization(const Factorization& f, SplitMode mode);

struct LineDigraphCheck {
  bool is_line_digraph = true;
  /// Two vertices whose out-neighborhoods (or in-neighborhoods, if
  /// `in_side`) intersect without being equal.
  std::optional<std::pair<Vertex, Vertex>> witness;
  bool in_side = false;
};

/// Recognizes line digraphs of (multi)digraphs: every two out-neighborhoods,
/// and every two in-neighborhoods, are equal or disjoint.
LineDigraphCheck is_line_digraph(const Digraph& d);

}  // namespace dunion
