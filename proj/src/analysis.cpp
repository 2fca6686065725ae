#include "dunion/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "dunion/error.hpp"
#include "dunion/symbolic.hpp"

namespace dunion {
namespace {

// Unit-capacity max flow by shortest augmenting paths. Small and
// allocation-light; one instance per (thread, pair).
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, std::size_t cap) {
    adj_[from].push_back(edges_.size());
    edges_.push_back({to, cap});
    adj_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
  }

  std::size_t max_flow(std::size_t s, std::size_t t) {
    std::size_t flow = 0;
    std::vector<std::size_t> via(adj_.size());
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (;;) {
      std::fill(via.begin(), via.end(), kNone);
      std::deque<std::size_t> queue{s};
      via[s] = kNone - 1;
      while (!queue.empty() && via[t] == kNone) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t e : adj_[u]) {
          const Edge& edge = edges_[e];
          if (edge.cap > 0 && via[edge.to] == kNone) {
            via[edge.to] = e;
            queue.push_back(edge.to);
          }
        }
      }
      if (via[t] == kNone) return flow;
      std::size_t push = kNone;
      for (std::size_t v = t; v != s; v = edges_[via[v] ^ 1].to)
        push = std::min(push, edges_[via[v]].cap);
      for (std::size_t v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= push;
        edges_[via[v] ^ 1].cap += push;
      }
      flow += push;
    }
  }

 private:
  struct Edge {
    std::size_t to;
    std::size_t cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
};

// Pairs (s, t) over which directed vertex connectivity is minimized.
std::vector<std::pair<Vertex, Vertex>> nonadjacent_pairs(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex s = 0; s < d.order(); ++s)
    for (Vertex t = 0; t < d.order(); ++t)
      if (s != t && !d.has_arc(s, t)) pairs.emplace_back(s, t);
  return pairs;
}

std::vector<std::vector<Vertex>> underlying_graph(const Digraph& d) {
  std::vector<std::vector<Vertex>> adj(d.order());
  for (const Arc& a : d.arcs()) {
    if (a.is_loop()) continue;
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

// Stable colour refinement on the disjoint union of A and B (B shifted by n).
// Colour refinement run jointly on A (indices 0..n-1) and B (n..2n-1) so that
// colour ids are comparable across the two graphs.
void refine(const Digraph& a, const Digraph& b, std::vector<std::size_t>& colour) {
  const std::size_t n = a.order();
  const auto graph_of = [&](std::size_t x) -> const Digraph& { return x < n ? a : b; };
  const auto local = [&](std::size_t x) { return static_cast<Vertex>(x < n ? x : x - n); };
  const auto global = [&](std::size_t x, Vertex v) { return x < n ? v : v + n; };

  std::size_t classes = std::set<std::size_t>(colour.begin(), colour.end()).size();
  for (;;) {
    using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(2 * n);
    for (std::size_t x = 0; x < 2 * n; ++x) {
      const Digraph& g = graph_of(x);
      const Vertex v = local(x);
      std::vector<std::size_t> outs;
      std::vector<std::size_t> ins;
      for (Vertex w : g.out_neighbors(v)) outs.push_back(colour[global(x, w)]);
      for (Vertex w : g.in_neighbors(v)) ins.push_back(colour[global(x, w)]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      next[x] = ids.try_emplace({colour[x], std::move(outs), std::move(ins)}, ids.size())
                    .first->second;
    }
    colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
}

// Same multiset of colours on both sides.
bool balanced(const std::vector<std::size_t>& colour, std::size_t n) {
  std::vector<std::size_t> hist(2 * n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) ++hist[colour[x]];
  for (std::size_t x = n; x < 2 * n; ++x)
    if (hist[colour[x]]-- == 0) return false;
  return true;
}

std::vector<std::size_t> initial_colours(const Digraph& a, const Digraph& b) {
  const std::size_t n = a.order();
  std::vector<std::size_t> colour(2 * n);
  std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> ids;
  for (std::size_t x = 0; x < 2 * n; ++x) {
    const Digraph& g = x < n ? a : b;
    const Vertex v = static_cast<Vertex>(x < n ? x : x - n);
    colour[x] = ids.try_emplace({g.out_degree(v), g.in_degree(v), g.has_arc(v, v)}, ids.size())
                    .first->second;
  }
  refine(a, b, colour);
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const Digraph& a, const Digraph& b, std::vector<std::size_t> colour,
            std::uint64_t budget)
      : a_(a), b_(b), n_(a.order()), colour_(std::move(colour)), budget_(budget),
        forward_(n_, kFree), backward_(n_, kFree) {}

  std::optional<VertexMap> run() {
    if (!extend(0, colour_)) return std::nullopt;
    return VertexMap(forward_);
  }

 private:
  static constexpr Vertex kFree = static_cast<Vertex>(-1);

  // Arcs between u and the mapped set in A correspond one-to-one with arcs
  // between v and the image set in B.
  bool consistent(Vertex u, Vertex v) const {
    std::size_t count_a = 0;
    for (Vertex w : a_.out_neighbors(u)) {
      if (w == u || forward_[w] == kFree) continue;
      if (!b_.has_arc(v, forward_[w])) return false;
      ++count_a;
    }
    std::size_t count_b = 0;
    for (Vertex x : b_.out_neighbors(v))
      if (x != v && backward_[x] != kFree) ++count_b;
    if (count_a != count_b) return false;

    count_a = 0;
    for (Vertex w : a_.in_neighbors(u)) {
      if (w == u || forward_[w] == kFree) continue;
      if (!b_.has_arc(forward_[w], v)) return false;
      ++count_a;
    }
    count_b = 0;
    for (Vertex x : b_.in_neighbors(v))
      if (x != v && backward_[x] != kFree) ++count_b;
    return count_a == count_b;
  }

  bool extend(Vertex u, const std::vector<std::size_t>& colour) {
    if (u == n_) return true;
    for (Vertex v = 0; v < n_; ++v) {
      if (backward_[v] != kFree || colour[n_ + v] != colour[u]) continue;
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::Budget, "isomorphism search exceeded " + std::to_string(budget_) +
                                           " nodes");
      }
      if (!consistent(u, v)) continue;
      // individualize the pair and refine; an unbalanced colouring has no extension
      std::vector<std::size_t> next = colour;
      next[u] = next[n_ + v] = 2 * n_;
      refine(a_, b_, next);
      if (!balanced(next, n_)) continue;
      forward_[u] = v;
      backward_[v] = u;
      if (extend(u + 1, next)) return true;
      forward_[u] = kFree;
      backward_[v] = kFree;
    }
    return false;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> forward_;
  std::vector<Vertex> backward_;
};

}  // namespace

std::vector<std::size_t> strong_components(const Digraph& d) {
  // Iterative Tarjan.
  const std::size_t n = d.order();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<Vertex> stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0;
  std::size_t comps = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto nb = d.out_neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  return comp;
}

bool strongly_connected(const Digraph& d) {
  const auto comp = strong_components(d);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

std::vector<std::size_t> bfs_distances(const Digraph& d, Vertex source) {
  std::vector<std::size_t> dist(d.order(), kUnreachable);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex u = frontier[head];
    for (Vertex w : d.out_neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      frontier.push_back(w);
    }
  }
  return dist;
}

std::optional<std::size_t> diameter(const Digraph& d) {
  if (!strongly_connected(d)) return std::nullopt;
  const auto n = static_cast<std::ptrdiff_t>(d.order());
  std::size_t worst = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto dist = bfs_distances(d, static_cast<Vertex>(s));
    worst = std::max(worst, *std::max_element(dist.begin(), dist.end()));
  }
  return worst;
}

CutAnalysis underlying_cut_analysis(const Digraph& d) {
  const auto adj = underlying_graph(d);
  const std::size_t n = d.order();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
  std::vector<bool> cut(n, false);
  CutAnalysis out;
  std::size_t timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::size_t children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, root, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        const Vertex w = adj[f.v][f.next++];
        if (disc[w] == kUnvisited) {
          disc[w] = low[w] = timer++;
          ++f.children;
          call.push_back({w, f.v, 0, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      call.pop_back();
      if (call.empty()) {
        if (done.children >= 2) cut[done.v] = true;
        continue;
      }
      const Vertex p = done.parent;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] > disc[p]) out.bridges.push_back({std::min(p, done.v), std::max(p, done.v)});
      if (p != root && low[done.v] >= disc[p]) cut[p] = true;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (cut[v]) out.articulation_points.push_back(v);
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

std::size_t local_arc_connectivity(const Digraph& d, Vertex s, Vertex t) {
  FlowNetwork net(d.order());
  for (const Arc& a : d.arcs())
    if (!a.is_loop()) net.add_edge(a.tail, a.head, 1);
  return net.max_flow(s, t);
}

std::size_t local_vertex_connectivity(const Digraph& d, Vertex s, Vertex t) {
  if (s == t || d.has_arc(s, t)) {
    throw Error(ErrorKind::InvalidArgument,
                "local vertex connectivity needs distinct, non-adjacent s and t");
  }
  const std::size_t n = d.order();
  // v_in = 2v, v_out = 2v + 1.
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_edge(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (const Arc& a : d.arcs())
    if (!a.is_loop()) net.add_edge(2 * a.tail + 1, 2 * a.head, 1);
  return net.max_flow(2 * s + 1, 2 * t);
}

std::size_t vertex_connectivity(const Digraph& d) {
  if (d.order() <= 1 || !strongly_connected(d)) return 0;
  const auto pairs = nonadjacent_pairs(d);
  std::size_t best = d.order() - 1;
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto [s, t] = pairs[static_cast<std::size_t>(i)];
    best = std::min(best, local_vertex_connectivity(d, s, t));
  }
  return best;
}

std::size_t arc_connectivity(const Digraph& d) {
  if (d.order() <= 1 || !strongly_connected(d)) return 0;
  // Every arc cut separates vertex 0 from some t in one direction or the other.
  const auto n = static_cast<std::ptrdiff_t>(d.order());
  std::size_t best = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::ptrdiff_t t = 1; t < n; ++t) {
    const auto v = static_cast<Vertex>(t);
    best = std::min({best, local_arc_connectivity(d, 0, v), local_arc_connectivity(d, v, 0)});
  }
  return best;
}

std::optional<VertexMap> isomorphic(const Digraph& a, const Digraph& b, std::uint64_t budget) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  auto colour = initial_colours(a, b);
  if (!balanced(colour, a.order())) return std::nullopt;
  return IsoSearch(a, b, std::move(colour), budget).run();
}

AnalysisReport analyze(const Digraph& d) {
  AnalysisReport r;
  r.order = d.order();
  r.size = d.size();
  r.regular_degree = regular_degree(d);
  r.strongly_connected = strongly_connected(d);
  r.diameter = diameter(d);
  auto cuts = underlying_cut_analysis(d);
  r.articulation_points = std::move(cuts.articulation_points);
  r.bridges = std::move(cuts.bridges);
  r.vertex_connectivity = vertex_connectivity(d);
  r.arc_connectivity = arc_connectivity(d);
  r.is_line_digraph = is_line_digraph(d).is_line_digraph;
  return r;
}

namespace serial {

std::optional<std::size_t> diameter(const Digraph& d) {
  std::size_t worst = 0;
  for (Vertex s = 0; s < d.order(); ++s) {
    for (std::size_t dist : bfs_distances(d, s)) {
      if (dist == kUnreachable) return std::nullopt;
      worst = std::max(worst, dist);
    }
  }
  return worst;
}

std::size_t arc_connectivity(const Digraph& d) {
  if (d.order() <= 1) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < d.order(); ++s)
    for (Vertex t = 0; t < d.order(); ++t)
      if (s != t) best = std::min(best, local_arc_connectivity(d, s, t));
  return best;
}

std::size_t vertex_connectivity(const Digraph& d) {
  if (d.order() <= 1 || !strongly_connected(d)) return 0;
  std::size_t best = d.order() - 1;
  for (const auto& [s, t] : nonadjacent_pairs(d))
    best = std::min(best, local_vertex_connectivity(d, s, t));
  return best;
}

}  // namespace serial
}  // namespace dunion
