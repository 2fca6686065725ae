#include "dunion/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunion/error.hpp"

namespace dunion {
namespace {

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

// Kuhn's augmenting-path matching on the bipartite graph tails x heads whose
// edges are the arcs still available. Left vertices are tried in ascending
// order and each DFS scans heads ascending.
class PerfectMatcher {
 public:
  PerfectMatcher(std::size_t n, const std::vector<std::vector<Vertex>>& adj)
      : n_(n), adj_(adj), match_head_(n, kNone), visited_(n, 0) {}

  // Returns the head matched to each tail, or nullopt if no perfect matching.
  std::optional<std::vector<Vertex>> solve() {
    for (Vertex u = 0; u < n_; ++u) {
      ++stamp_;
      if (!augment(u)) return std::nullopt;
    }
    std::vector<Vertex> image(n_);
    for (Vertex h = 0; h < n_; ++h) image[match_head_[h]] = h;
    return image;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  // Iterative DFS to avoid deep recursion on long alternating paths.
  bool augment(Vertex root) {
    struct Frame {
      Vertex tail;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<Vertex> via;  // head chosen at each stack level
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& heads = adj_[top.tail];
      bool descended = false;
      while (top.next < heads.size()) {
        const Vertex h = heads[top.next++];
        if (visited_[h] == stamp_) continue;
        visited_[h] = stamp_;
        if (match_head_[h] == kNone) {
          via.push_back(h);
          // Flip the alternating path.
          for (std::size_t i = 0; i < via.size(); ++i) match_head_[via[i]] = stack[i].tail;
          return true;
        }
        via.push_back(h);
        stack.push_back({match_head_[h], 0});
        descended = true;
        break;
      }
      if (!descended) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  }

  std::size_t n_;
  const std::vector<std::vector<Vertex>>& adj_;
  std::vector<Vertex> match_head_;
  std::vector<std::size_t> visited_;
  std::size_t stamp_ = 0;
};

}  // namespace

std::optional<Violation> validate(const Factorization& f) {
  const Digraph& base = f.base;
  if (f.factors.empty() && base.size() > 0)
    return Violation{"no factors but the base digraph has arcs"};
  std::vector<int> cover(base.size(), -1);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Digraph& h = f.factors[i];
    if (h.order() != base.order()) {
      return Violation{"factor " + std::to_string(i) + " has " + std::to_string(h.order()) +
                       " vertices, base has " + std::to_string(base.order()) +
                       " (factors must span)"};
    }
    for (const Arc& a : h.arcs()) {
      const auto idx = base.arc_index(a.tail, a.head);
      if (!idx) {
        return Violation{"factor " + std::to_string(i) + " arc " + arc_text(a) +
                         " is not an arc of the base"};
      }
      if (cover[*idx] >= 0) {
        return Violation{"arc " + arc_text(a) + " covered twice (factors " +
                         std::to_string(cover[*idx]) + " and " + std::to_string(i) + ")"};
      }
      cover[*idx] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover[i] < 0) return Violation{"arc " + arc_text(base.arcs()[i]) + " is in no factor"};
  return std::nullopt;
}

void require_valid(const Factorization& f) {
  if (auto v = validate(f)) throw Error(ErrorKind::InvalidFactorization, v->message);
}

bool is_cycle_factorization(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const Digraph& h) { return regular_degree(h) == std::size_t{1}; });
}

Factorization trivial(const Digraph& d) { return {d, {d}}; }

Factorization cycle_factorization(const Digraph& d) {
  const auto k = regular_degree(d);
  if (!k) throw Error(ErrorKind::NotRegular, "cycle_factorization: digraph is not regular");
  const std::size_t n = d.order();
  std::vector<std::vector<Vertex>> available(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto heads = d.out_neighbors(v);
    available[v].assign(heads.begin(), heads.end());
  }
  Factorization f{d, {}};
  f.factors.reserve(*k);
  for (std::size_t round = 0; round < *k; ++round) {
    // The remaining graph is (k - round)-regular bipartite, so Hall's
    // condition guarantees a perfect matching.
    auto image = PerfectMatcher(n, available).solve();
    if (!image) {
      throw Error(ErrorKind::MatchingFailed,
                  "cycle_factorization: no perfect matching in round " + std::to_string(round));
    }
    std::vector<Arc> arcs;
    arcs.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      arcs.push_back({v, (*image)[v]});
      auto& heads = available[v];
      heads.erase(std::find(heads.begin(), heads.end(), (*image)[v]));
    }
    f.factors.emplace_back(n, std::move(arcs));
  }
  return f;
}

Factorization factor_from_matrices(const Digraph& d, std::span<const DenseMatrix> matrices) {
  const std::size_t n = d.order();
  DenseMatrix sum(n, n);
  Factorization f{d, {}};
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const DenseMatrix& m = matrices[i];
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorKind::InvalidFactorization,
                  "factor matrix " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                      std::to_string(n) + " (factors must span)");
    }
    for (const Complex& z : m.entries()) {
      if (std::abs(z) > kSupportTolerance && std::abs(z - Complex{1.0}) > kSupportTolerance)
        throw Error(ErrorKind::InvalidFactorization,
                    "factor matrix " + std::to_string(i) + " is not a 0/1 matrix");
    }
    sum = add(sum, m);
    f.factors.push_back(from_matrix(m));
  }
  if (max_abs_diff(sum, adjacency_matrix(d)) > kSupportTolerance)
    throw Error(ErrorKind::InvalidFactorization,
                "factor matrices do not sum to the adjacency matrix");
  require_valid(f);
  return f;
}

Factorization reorder(const Factorization& f, std::span<const std::size_t> order) {
  std::vector<bool> seen(f.count(), false);
  if (order.size() != f.count())
    throw Error(ErrorKind::InvalidArgument, "reorder: order must list every factor once");
  Factorization out{f.base, {}};
  for (std::size_t i : order) {
    if (i >= f.count() || seen[i])
      throw Error(ErrorKind::InvalidArgument, "reorder: order must list every factor once");
    seen[i] = true;
    out.factors.push_back(f.factors[i]);
  }
  return out;
}

}  // namespace dunion
