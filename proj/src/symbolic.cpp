#include "dunion/symbolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "dunion/error.hpp"

namespace dunion {
namespace {

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

// Finds two vertices adjacent to a common vertex whose neighbor sets on the
// same side differ. `side(v)` is the neighbor set being grouped; `other(w)`
// lists the vertices sharing w in that set.
template <typename Side, typename Other>
std::optional<std::pair<Vertex, Vertex>> neighborhood_clash(std::size_t n, Side side, Other other) {
  std::map<std::vector<Vertex>, std::size_t> group_of_set;
  std::vector<std::size_t> group(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = side(v);
    group[v] = group_of_set.try_emplace({nb.begin(), nb.end()}, group_of_set.size()).first->second;
  }
  for (Vertex w = 0; w < n; ++w) {
    const auto sharing = other(w);
    for (std::size_t i = 1; i < sharing.size(); ++i)
      if (group[sharing[i]] != group[sharing[0]]) return std::pair{sharing[0], sharing[i]};
  }
  return std::nullopt;
}

}  // namespace

LineDigraph line_digraph(const Digraph& d) {
  check_vertex_count(d.size(), "line_digraph");
  std::vector<Arc> arc_of_vertex(d.arcs().begin(), d.arcs().end());
  // First arc index with tail v; arcs are sorted by tail.
  std::vector<std::size_t> first_out(d.order() + 1, 0);
  for (const Arc& a : arc_of_vertex) ++first_out[a.tail + 1];
  std::partial_sum(first_out.begin(), first_out.end(), first_out.begin());

  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < arc_of_vertex.size(); ++i) {
    const Vertex v = arc_of_vertex[i].head;
    for (std::size_t j = first_out[v]; j < first_out[v + 1]; ++j)
      arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return {Digraph(arc_of_vertex.size(), std::move(arcs)), std::move(arc_of_vertex)};
}

Digraph iterated_line_digraph(const Digraph& d, std::size_t times) {
  Digraph current = d;
  for (std::size_t t = 0; t < times; ++t) current = line_digraph(current).digraph;
  return current;
}

std::optional<std::string> validate_partition(const Digraph& d, const ArcPartition& p) {
  if (p.classes.size() != d.order()) {
    return "partition lists " + std::to_string(p.classes.size()) + " vertices, digraph has " +
           std::to_string(d.order());
  }
  const bool in = p.mode == SplitMode::In;
  std::vector<bool> seen(d.size(), false);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (p.classes[v].empty()) return "vertex " + std::to_string(v) + " has no classes";
    std::size_t listed = 0;
    for (const auto& cls : p.classes[v]) {
      for (const Arc& a : cls) {
        if ((in ? a.head : a.tail) != v) {
          return "arc " + arc_text(a) + " is not " + (in ? "incoming at " : "outgoing at ") +
                 std::to_string(v);
        }
        const auto idx = d.arc_index(a.tail, a.head);
        if (!idx) return "arc " + arc_text(a) + " is not in the digraph";
        if (seen[*idx]) return "arc " + arc_text(a) + " appears in two classes";
        seen[*idx] = true;
        ++listed;
      }
    }
    const std::size_t expected = in ? d.in_degree(v) : d.out_degree(v);
    if (listed != expected) {
      return "classes at vertex " + std::to_string(v) + " cover " + std::to_string(listed) +
             " of " + std::to_string(expected) + " arcs";
    }
  }
  return std::nullopt;
}

SplitResult state_split(const Digraph& d, const ArcPartition& p) {
  if (auto problem = validate_partition(d, p))
    throw Error(ErrorKind::InvalidPartition, "state_split: " + *problem);

  const std::size_t n = d.order();
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + p.class_count(v);
  const std::size_t order = offset[n];
  check_vertex_count(order, "state_split");

  std::vector<SplitVertex> labels(order);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t c = 0; c < p.class_count(v); ++c) labels[offset[v] + c] = {v, c};

  std::vector<Arc> arcs;
  const auto push = [&](std::size_t tail, std::size_t head) {
    arcs.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
  };
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < p.class_count(v); ++c) {
      for (const Arc& a : p.classes[v][c]) {
        if (p.mode == SplitMode::Out) {
          for (std::size_t j = 0; j < p.class_count(a.head); ++j)
            push(offset[a.tail] + c, offset[a.head] + j);
        } else {
          for (std::size_t j = 0; j < p.class_count(a.tail); ++j)
            push(offset[a.tail] + j, offset[a.head] + c);
        }
      }
    }
  }
  Digraph grouped(order, std::move(arcs));

  std::vector<Vertex> by_class(order);
  std::iota(by_class.begin(), by_class.end(), Vertex{0});
  std::stable_sort(by_class.begin(), by_class.end(), [&](Vertex a, Vertex b) {
    return labels[a].cls < labels[b].cls;
  });
  std::vector<Vertex> to_class_major(order);
  std::vector<SplitVertex> class_major_labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    to_class_major[by_class[i]] = static_cast<Vertex>(i);
    class_major_labels[i] = labels[by_class[i]];
  }
  Digraph class_major = relabel(grouped, VertexMap(std::move(to_class_major)));
  return {std::move(grouped), std::move(labels), std::move(class_major),
          std::move(class_major_labels)};
}

ArcPartition partition_from_factorization(const Factorization& f, SplitMode mode) {
  require_valid(f);
  const std::size_t k = f.count();
  ArcPartition p{mode, std::vector<std::vector<std::vector<Arc>>>(
                           f.base.order(), std::vector<std::vector<Arc>>(k))};
  for (std::size_t j = 0; j < k; ++j)
    for (const Arc& a : f.factors[j].arcs())
      p.classes[mode == SplitMode::In ? a.head : a.tail][j].push_back(a);
  return p;
}

LineDigraphCheck is_line_digraph(const Digraph& d) {
  const std::size_t n = d.order();
  const auto out = [&](Vertex v) { return d.out_neighbors(v); };
  const auto in = [&](Vertex v) { return d.in_neighbors(v); };
  if (auto clash = neighborhood_clash(n, out, in)) return {false, clash, false};
  if (auto clash = neighborhood_clash(n, in, out)) return {false, clash, true};
  return {};
}

}  // namespace dunion
