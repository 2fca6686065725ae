#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dunion/matrix.hpp"

namespace dunion {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
  bool is_loop() const noexcept { return tail == head; }
};

/// Upper bound on the vertex count of any constructed digraph. Read once from
/// DUNION_VERTEX_LIMIT (default 65536).
std::size_t vertex_limit();
/// Overrides the limit for the current process; 0 restores the environment value.
void set_vertex_limit(std::size_t limit);
/// Throws SizeLimit if `count` exceeds vertex_limit().
void check_vertex_count(std::size_t count, const char* what);

/// Simple digraph on vertices 0..n-1. Loops allowed, parallel arcs rejected.
/// Arcs are kept in lexicographic order, so iteration and serialization are
/// canonical. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : Digraph(n, {}) {}
  /// Throws InvalidArgument on out-of-range endpoints or duplicate arcs.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Heads of the arcs leaving v, ascending.
  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {heads_.data() + out_offset_[v], heads_.data() + out_offset_[v + 1]};
  }
  /// Tails of the arcs entering v, ascending.
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {tails_.data() + in_offset_[v], tails_.data() + in_offset_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return out_offset_[v + 1] - out_offset_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offset_[v + 1] - in_offset_[v]; }

  bool has_arc(Vertex tail, Vertex head) const;
  /// Position of the arc in arcs(), if present.
  std::optional<std::size_t> arc_index(Vertex tail, Vertex head) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<Vertex> heads_;
  std::vector<std::size_t> in_offset_{0};
  std::vector<Vertex> tails_;
};

/// Bijection on [0, n); the witness type for isomorphisms and relabelings.
class VertexMap {
 public:
  explicit VertexMap(std::vector<Vertex> forward);

  std::size_t size() const noexcept { return forward_.size(); }
  Vertex operator()(Vertex v) const { return forward_[v]; }
  std::span<const Vertex> forward() const noexcept { return forward_; }
  VertexMap inverse() const;

  bool operator==(const VertexMap&) const = default;

 private:
  std::vector<Vertex> forward_;
};

/// Image of D under the relabeling v -> map(v).
Digraph relabel(const Digraph& d, const VertexMap& map);
/// True iff (u, v) in A <=> (map u, map v) in B.
bool is_isomorphism(const Digraph& a, const Digraph& b, const VertexMap& map);

/// 0/1 matrix with row index = tail.
DenseMatrix adjacency_matrix(const Digraph& d);
/// Digraph whose arcs mark the entries of modulus above tol. M must be square.
Digraph from_matrix(const DenseMatrix& m, double tol = kSupportTolerance);

/// k if every in- and out-degree equals k (a loop counts once on each side).
std::optional<std::size_t> regular_degree(const Digraph& d);

Digraph complete_with_loops(std::size_t n);
Digraph cayley_zn(std::size_t n, std::span<const std::size_t> generators);
/// Directed n-cycle i -> i+1 mod n.
Digraph directed_cycle(std::size_t n);
/// B(b, m): words of length m over [0, b) read as base-b integers, most
/// significant symbol first; w1..wm -> w2..wm c.
Digraph de_bruijn(std::size_t b, std::size_t m);
/// k-in/k-out regular digraph built from k arc-disjoint random permutations.
/// Deterministic for a fixed seed.
Digraph random_regular(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace dunion
