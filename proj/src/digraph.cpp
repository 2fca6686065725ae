#include "dunion/digraph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>

#include "dunion/error.hpp"

namespace dunion {
namespace {

constexpr std::size_t kDefaultVertexLimit = 65536;

std::atomic<std::size_t> g_limit_override{0};

std::size_t env_vertex_limit() {
  static const std::size_t limit = [] {
    const char* raw = std::getenv("DUNION_VERTEX_LIMIT");
    if (raw == nullptr || *raw == '\0') return kDefaultVertexLimit;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) return kDefaultVertexLimit;
    return static_cast<std::size_t>(parsed);
  }();
  return limit;
}

// splitmix64: small, portable, and fully specified, so seeds reproduce across
// standard libraries (std::shuffle and the std distributions do not).
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next(); while (x >= limit);
    return x % bound;
  }
};

}  // namespace

std::size_t vertex_limit() {
  const std::size_t forced = g_limit_override.load();
  return forced != 0 ? forced : env_vertex_limit();
}

void set_vertex_limit(std::size_t limit) { g_limit_override.store(limit); }

void check_vertex_count(std::size_t count, const char* what) {
  if (count > vertex_limit()) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + ": " + std::to_string(count) +
                                          " vertices exceeds the limit of " +
                                          std::to_string(vertex_limit()));
  }
}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.tail >= n_ || a.head >= n_) {
      throw Error(ErrorKind::InvalidArgument,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                      ") has an endpoint outside [0," + std::to_string(n_) + ")");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw Error(ErrorKind::InvalidArgument, "parallel arc (" + std::to_string(dup->tail) + "," +
                                                std::to_string(dup->head) + ")");
  }

  out_offset_.assign(n_ + 1, 0);
  in_offset_.assign(n_ + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offset_[a.tail + 1];
    ++in_offset_[a.head + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());

  heads_.resize(arcs_.size());
  tails_.resize(arcs_.size());
  std::vector<std::size_t> fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    heads_[i] = arcs_[i].head;
    // Arcs are sorted by tail, so each in-list comes out ascending.
    tails_[fill[arcs_[i].head]++] = arcs_[i].tail;
  }
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  return arc_index(tail, head).has_value();
}

std::optional<std::size_t> Digraph::arc_index(Vertex tail, Vertex head) const {
  if (tail >= n_ || head >= n_) return std::nullopt;
  const auto begin = heads_.begin() + static_cast<std::ptrdiff_t>(out_offset_[tail]);
  const auto end = heads_.begin() + static_cast<std::ptrdiff_t>(out_offset_[tail + 1]);
  const auto it = std::lower_bound(begin, end, head);
  if (it == end || *it != head) return std::nullopt;
  return static_cast<std::size_t>(it - heads_.begin());
}

VertexMap::VertexMap(std::vector<Vertex> forward) : forward_(std::move(forward)) {
  std::vector<bool> seen(forward_.size(), false);
  for (Vertex v : forward_) {
    if (v >= forward_.size() || seen[v])
      throw Error(ErrorKind::InvalidArgument, "vertex map is not a bijection");
    seen[v] = true;
  }
}

VertexMap VertexMap::inverse() const {
  std::vector<Vertex> back(forward_.size());
  for (std::size_t i = 0; i < forward_.size(); ++i) back[forward_[i]] = static_cast<Vertex>(i);
  return VertexMap(std::move(back));
}

Digraph relabel(const Digraph& d, const VertexMap& map) {
  if (map.size() != d.order())
    throw Error(ErrorKind::InvalidArgument, "relabel: map size differs from digraph order");
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({map(a.tail), map(a.head)});
  return Digraph(d.order(), std::move(arcs));
}

bool is_isomorphism(const Digraph& a, const Digraph& b, const VertexMap& map) {
  if (a.order() != b.order() || a.size() != b.size() || map.size() != a.order()) return false;
  return std::all_of(a.arcs().begin(), a.arcs().end(),
                     [&](const Arc& arc) { return b.has_arc(map(arc.tail), map(arc.head)); });
}

DenseMatrix adjacency_matrix(const Digraph& d) {
  DenseMatrix m(d.order(), d.order());
  for (const Arc& a : d.arcs()) m(a.tail, a.head) = 1.0;
  return m;
}

Digraph from_matrix(const DenseMatrix& m, double tol) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "from_matrix: matrix is not square");
  check_vertex_count(m.rows(), "from_matrix");
  std::vector<Arc> arcs;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > tol) arcs.push_back({static_cast<Vertex>(r), static_cast<Vertex>(c)});
  return Digraph(m.rows(), std::move(arcs));
}

std::optional<std::size_t> regular_degree(const Digraph& d) {
  if (d.order() == 0) return std::nullopt;
  const std::size_t k = d.out_degree(0);
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) != k || d.in_degree(v) != k) return std::nullopt;
  return k;
}

Digraph complete_with_loops(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "complete_with_loops: n must be >= 1");
  check_vertex_count(n, "complete_with_loops");
  std::vector<Arc> arcs;
  arcs.reserve(n * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) arcs.push_back({u, v});
  return Digraph(n, std::move(arcs));
}

Digraph cayley_zn(std::size_t n, std::span<const std::size_t> generators) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cayley_zn: n must be >= 1");
  check_vertex_count(n, "cayley_zn");
  std::vector<std::size_t> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t s : gens)
    if (s >= n)
      throw Error(ErrorKind::InvalidArgument,
                  "cayley_zn: generator " + std::to_string(s) + " is not a residue mod " +
                      std::to_string(n));
  std::vector<Arc> arcs;
  arcs.reserve(n * gens.size());
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t s : gens) arcs.push_back({i, static_cast<Vertex>((i + s) % n)});
  return Digraph(n, std::move(arcs));
}

Digraph directed_cycle(std::size_t n) {
  const std::size_t one[] = {1 % (n == 0 ? 1 : n)};
  return cayley_zn(n, one);
}

Digraph de_bruijn(std::size_t b, std::size_t m) {
  if (b < 2 || m < 1) throw Error(ErrorKind::InvalidArgument, "de_bruijn: need b >= 2, m >= 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (count > vertex_limit() / b) {
      throw Error(ErrorKind::SizeLimit, "de_bruijn: b^m exceeds the vertex limit of " +
                                            std::to_string(vertex_limit()));
    }
    count *= b;
  }
  check_vertex_count(count, "de_bruijn");
  // Dropping the leading symbol is `w mod b^(m-1)`; appending c is `* b + c`.
  const std::size_t suffix_mod = count / b;
  std::vector<Arc> arcs;
  arcs.reserve(count * b);
  for (std::size_t w = 0; w < count; ++w)
    for (std::size_t c = 0; c < b; ++c)
      arcs.push_back({static_cast<Vertex>(w), static_cast<Vertex>((w % suffix_mod) * b + c)});
  return Digraph(count, std::move(arcs));
}

Digraph random_regular(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 || k > n) {
    throw Error(ErrorKind::InvalidArgument,
                "random_regular: need 1 <= n and k <= n (k > n forces parallel arcs)");
  }
  check_vertex_count(n, "random_regular");
  constexpr std::size_t kAttemptsPerRound = 200000;
  SplitMix64 rng{seed};
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Arc> arcs;
  arcs.reserve(n * k);
  std::vector<Vertex> perm(n);
  for (std::size_t round = 0; round < k; ++round) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kAttemptsPerRound && !placed; ++attempt) {
      std::iota(perm.begin(), perm.end(), Vertex{0});
      for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      placed = true;
      for (Vertex v = 0; v < n && placed; ++v) placed = !used[v][perm[v]];
    }
    if (!placed) {
      throw Error(ErrorKind::Budget, "random_regular: rejection budget exhausted in round " +
                                         std::to_string(round));
    }
    for (Vertex v = 0; v < n; ++v) {
      used[v][perm[v]] = true;
      arcs.push_back({v, perm[v]});
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace dunion
