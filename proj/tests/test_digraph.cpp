#include <vector>

#include "doctest.h"
#include "dunion/digraph.hpp"
#include "dunion/error.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace dunion;

TEST_CASE("digraph construction canonicalizes and rejects parallel arcs") {
  const Digraph d(3, {{2, 0}, {0, 1}, {1, 1}});
  CHECK(d.arcs()[0] == Arc{0, 1});
  CHECK(d.arcs()[2] == Arc{2, 0});
  CHECK(d.has_arc(1, 1));
  CHECK_FALSE(d.has_arc(1, 0));
  CHECK(d.in_neighbors(1).size() == 2);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), Error);
}

TEST_CASE("adjacency matrix") {
  CHECK(adjacency_matrix(complete_with_loops(2)) == DenseMatrix::ones(2, 2));
  CHECK(adjacency_matrix(suite::cayley4()) ==
        add(DenseMatrix::ones(4, 4), scale(DenseMatrix::identity(4), -1.0)));
  CHECK(adjacency_matrix(Digraph(3)) == DenseMatrix::zeros(3, 3));
}

TEST_CASE("from_matrix") {
  CHECK(from_matrix(DenseMatrix::from_rows({{0, 1}, {1, 0}})) == Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(from_matrix(fourier(2)) == complete_with_loops(2));
  CHECK(from_matrix(DenseMatrix::zeros(2, 2)) == Digraph(2));
  CHECK_THROWS_AS(from_matrix(DenseMatrix::ones(2, 3)), Error);
}

TEST_CASE("adjacency round trip on random digraphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = suite::random_digraph(1 + seed % 9, 0.35, seed);
    CHECK(from_matrix(adjacency_matrix(d), 0.5) == d);
  }
}

TEST_CASE("complete_with_loops") {
  CHECK(complete_with_loops(1) == Digraph(1, {{0, 0}}));
  CHECK(complete_with_loops(2) == Digraph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const auto k3 = complete_with_loops(3);
  CHECK(k3.size() == 9);
  CHECK(regular_degree(k3) == std::size_t{3});
  CHECK_THROWS_AS(complete_with_loops(0), Error);
}

TEST_CASE("cayley_zn") {
  const auto c4 = suite::cayley4();
  CHECK(c4.size() == 12);
  CHECK(regular_degree(c4) == std::size_t{3});
  const std::size_t one[] = {1};
  CHECK(cayley_zn(5, one) == Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  const std::size_t two[] = {2};
  CHECK(cayley_zn(4, two) == Digraph(4, {{0, 2}, {1, 3}, {2, 0}, {3, 1}}));
  const std::size_t bad[] = {4};
  CHECK_THROWS_AS(cayley_zn(4, bad), Error);
}

TEST_CASE("de_bruijn") {
  CHECK(de_bruijn(2, 1) == complete_with_loops(2));
  // 00 -> {00, 01}, 01 -> {10, 11}, 10 -> {00, 01}, 11 -> {10, 11}
  CHECK(de_bruijn(2, 2) ==
        Digraph(4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 2}, {3, 3}}));
  const auto b23 = de_bruijn(2, 3);
  CHECK(b23.order() == 8);
  CHECK(b23.size() == 16);
  CHECK(oracle::diameter(b23) == std::size_t{3});
  for (std::size_t b = 2; b <= 4; ++b)
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto d = de_bruijn(b, m);
      std::size_t count = 1;
      for (std::size_t i = 0; i < m; ++i) count *= b;
      CHECK(d.order() == count);
      CHECK(d.size() == count * b);
      CHECK(regular_degree(d) == b);
    }
  CHECK_THROWS_AS(de_bruijn(1, 3), Error);
}

TEST_CASE("vertex limit") {
  set_vertex_limit(64);
  CHECK_THROWS_AS(de_bruijn(2, 7), Error);
  CHECK_NOTHROW(de_bruijn(2, 6));
  set_vertex_limit(0);
  CHECK(vertex_limit() >= 64);
}

TEST_CASE("random_regular") {
  CHECK(random_regular(1, 1, 99) == Digraph(1, {{0, 0}}));
  const auto d = random_regular(4, 2, 7);
  CHECK(regular_degree(d) == std::size_t{2});
  CHECK(random_regular(4, 2, 7) == d);
  CHECK_THROWS_AS(random_regular(2, 3, 0), Error);
  for (const auto& g : suite::regular_family(8, 3, 5)) CHECK(regular_degree(g).has_value());
  // k = n is forced to the complete digraph with loops.
  CHECK(random_regular(4, 4, 3) == complete_with_loops(4));
}

TEST_CASE("generators are deterministic") {
  const std::size_t gens[] = {1, 3};
  CHECK(cayley_zn(7, gens) == cayley_zn(7, gens));
  CHECK(de_bruijn(3, 3) == de_bruijn(3, 3));
  CHECK(random_regular(6, 3, 42) == random_regular(6, 3, 42));
}

TEST_CASE("relabel and is_isomorphism") {
  const auto d = de_bruijn(2, 2);
  const VertexMap swap({3, 2, 1, 0});
  CHECK(is_isomorphism(d, relabel(d, swap), swap));
  CHECK(relabel(relabel(d, swap), swap.inverse()) == d);
  CHECK_THROWS_AS(VertexMap({0, 0}), Error);
}
