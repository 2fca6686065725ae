#include <array>
#include <cmath>

#include "doctest.h"
#include "dunion/analysis.hpp"
#include "dunion/error.hpp"
#include "dunion/fixtures.hpp"
#include "dunion/transforms.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace dunion;

namespace {

const DenseMatrix kSigmaX = DenseMatrix::from_rows({{0, 1}, {1, 0}});

// Rows of the 8x8 display for Cay(Z_4, {1,2,3}) with {rho(1)+rho(3), rho(2)},
// vertex order v_0^1..v_3^1, v_0^2..v_3^2.
DenseMatrix cayley4_union_display() {
  return DenseMatrix::from_rows({
      {0, 1, 0, 1, 0, 0, 1, 0},
      {1, 0, 1, 0, 0, 0, 0, 1},
      {0, 1, 0, 1, 1, 0, 0, 0},
      {1, 0, 1, 0, 0, 1, 0, 0},
      {0, 1, 0, 1, 0, 0, 1, 0},
      {1, 0, 1, 0, 0, 0, 0, 1},
      {0, 1, 0, 1, 1, 0, 0, 0},
      {1, 0, 1, 0, 0, 1, 0, 0},
  });
}

DenseMatrix block2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                   const DenseMatrix& d) {
  const std::size_t s = a.rows();
  DenseMatrix out(2 * s, 2 * s);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t col = 0; col < s; ++col) {
      out(r, col) = a(r, col);
      out(r, s + col) = b(r, col);
      out(s + r, col) = c(r, col);
      out(s + r, s + col) = d(r, col);
    }
  return out;
}

}  // namespace

TEST_CASE("diagonal union of K2+ with {I, sigma_x}") {
  const auto f = fixtures::complete2_loops_swap();
  const auto result = diagonal_union(f);
  CHECK(result.digraph.order() == 4);
  CHECK(result.factor_count == 2);
  CHECK(adjacency_matrix(result.digraph) == DenseMatrix::from_rows({{1, 0, 0, 1},
                                                                    {0, 1, 1, 0},
                                                                    {1, 0, 0, 1},
                                                                    {0, 1, 1, 0}}));
  // 0 -> 00, 1 -> 11, 2 -> 10, 3 -> 01
  const VertexMap expected({0, 3, 2, 1});
  CHECK(is_isomorphism(result.digraph, de_bruijn(2, 2), expected));
  const auto brute = oracle::brute_force_iso(result.digraph, de_bruijn(2, 2));
  REQUIRE(brute.has_value());
  CHECK(std::vector<Vertex>(expected.forward().begin(), expected.forward().end()) == *brute);
}

TEST_CASE("diagonal union of the trivial factorization is the digraph itself") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = suite::random_digraph(1 + seed % 7, 0.4, seed);
    CHECK(diagonal_union(trivial(d)).digraph == d);
  }
}

TEST_CASE("diagonal union reproduces the Cay(Z_4) display") {
  const auto f = fixtures::cayley4_pairs();
  const auto expected = cayley4_union_display();
  CHECK(adjacency_matrix(diagonal_union(f).digraph) == expected);
  CHECK(diagonal_union_matrix(f) == expected);
}

TEST_CASE("matrix route and arc-rule route agree") {
  std::vector<Factorization> cases{fixtures::complete2_loops_swap(), fixtures::cayley4_pairs()};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    cases.push_back(trivial(suite::random_digraph(1 + seed % 6, 0.5, seed)));
    cases.push_back(cycle_factorization(random_regular(2 + seed % 4, 1 + seed % 2, seed)));
  }
  for (const auto& f : cases) {
    const std::size_t max_depth = f.count() >= 3 ? 2 : 3;
    for (std::size_t d = 1; d <= max_depth; ++d)
      CHECK(adjacency_matrix(diagonal_union_depth(f, d).digraph) == diagonal_union_matrix(f, d));
  }
}

TEST_CASE("depth iteration on the de Bruijn fixture") {
  const auto f = fixtures::complete2_loops_swap();
  CHECK(diagonal_union_depth(f, 1).digraph == diagonal_union(f).digraph);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto r = diagonal_union_depth(f, d);
    CHECK(r.depth == d);
    CHECK(r.digraph.order() == (std::size_t{2} << d));
    CHECK(r.block_size == (std::size_t{1} << d));
    const auto iso = isomorphic(r.digraph, de_bruijn(2, d + 1));
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(r.digraph, de_bruijn(2, d + 1), *iso));
  }
}

TEST_CASE("vertex and arc counts multiply by k per level") {
  for (const auto& d : suite::regular_family(5, 3, 2)) {
    const auto f = cycle_factorization(d);
    const std::size_t k = f.count();
    std::size_t order = d.order();
    std::size_t arcs = d.size();
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      order *= k;
      arcs *= k;
      const auto r = diagonal_union_depth(f, depth);
      CHECK(r.digraph.order() == order);
      CHECK(r.digraph.size() == arcs);
    }
  }
}

TEST_CASE("diagonal union errors") {
  const Factorization broken{suite::k2plus(), {Digraph(2, {{0, 0}})}};
  CHECK_THROWS_AS(diagonal_union(broken), Error);
  CHECK_THROWS_AS(diagonal_union_depth(fixtures::complete2_loops_swap(), 0), Error);
  set_vertex_limit(16);
  CHECK_NOTHROW(diagonal_union_depth(fixtures::complete2_loops_swap(), 3));
  try {
    diagonal_union_depth(fixtures::complete2_loops_swap(), 4);
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
  set_vertex_limit(0);
}

TEST_CASE("induced cycle factors") {
  const auto f = fixtures::complete2_loops_swap();
  const auto id = DenseMatrix::identity(2);
  const auto zero = DenseMatrix::zeros(2, 2);

  const auto base = induced_cycle_factors(f, 1);
  REQUIRE(base.size() == 2);
  CHECK(base[0].to_dense() == id);
  CHECK(base[1].to_dense() == kSigmaX);

  const auto q = induced_cycle_factors(f, 2);
  REQUIRE(q.size() == 2);
  CHECK(q[0].to_dense() == block2(id, zero, zero, kSigmaX));
  CHECK(q[1].to_dense() == block2(zero, kSigmaX, id, zero));
  CHECK(add(q[0].to_dense(), q[1].to_dense()) == diagonal_union_matrix(f, 1));

  try {
    induced_cycle_factors(fixtures::cayley4_pairs(), 2);
    FAIL("expected NonPermutationSummand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPermutationSummand);
  }
}

TEST_CASE("induced cycle factors match the generalized Hadamard definition") {
  for (const auto& d : suite::regular_family(4, 3, 2)) {
    const auto f = cycle_factorization(d);
    const std::size_t k = f.count();
    for (std::size_t depth = 2; depth <= 3; ++depth) {
      const auto prev = diagonal_union_matrix(f, depth - 1);
      const auto q = induced_cycle_factors(f, depth);
      DenseMatrix sum(prev.rows(), prev.rows());
      for (std::size_t l = 0; l < k; ++l) {
        CHECK(q[l].to_dense() == generalized_hadamard(rho_reg_zk(k, l).to_dense(), prev));
        sum = add(sum, q[l].to_dense());
      }
      CHECK(sum == prev);
    }
  }
}

TEST_CASE("unitary weighting at depth 1 on K2+") {
  const auto f = fixtures::complete2_loops_swap();
  const auto u = unitary_weighting(f, 1);
  const double h = 1.0 / std::sqrt(2.0);
  const auto expected = scale(block2(DenseMatrix::identity(2), kSigmaX, DenseMatrix::identity(2),
                                     scale(kSigmaX, -1.0)),
                              h);
  CHECK(max_abs_diff(u, expected) < 1e-15);
  CHECK(is_unitary(u).residual < 1e-12);
  CHECK(from_matrix(u) == diagonal_union(f).digraph);
  // Cross-check the structured product with a plain dense product.
  const PermutationMatrix parts[] = {PermutationMatrix::identity(2), rho_reg_zk(2, 1)};
  const auto dense = oracle::multiply(kronecker(fourier(2), DenseMatrix::identity(2)),
                                      direct_sum(parts).to_dense());
  CHECK(max_abs_diff(u, dense) < 1e-15);
}

TEST_CASE("unitary weighting is unitary and supported on the union") {
  const auto f = fixtures::complete2_loops_swap();
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    const auto u = unitary_weighting(f, depth);
    CHECK(u.rows() == (std::size_t{2} << depth));
    CHECK(is_unitary(u, 1e-10).unitary);
    CHECK(from_matrix(u) == diagonal_union_depth(f, depth).digraph);
  }
  const auto g = cycle_factorization(suite::cayley4());
  for (std::size_t depth = 1; depth <= 2; ++depth) {
    const auto u = unitary_weighting(g, depth);
    CHECK(is_unitary(u, 1e-10).unitary);
    CHECK(from_matrix(u) == diagonal_union_depth(g, depth).digraph);
  }
}

TEST_CASE("unitary weighting errors") {
  const auto f = fixtures::complete2_loops_swap();
  try {
    unitary_weighting(f, 1, DenseMatrix::identity(2));
    FAIL("expected DenseSupportViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenseSupportViolated);
  }
  try {
    unitary_weighting(f, 1, DenseMatrix::ones(2, 2));
    FAIL("expected CouplingNotUnitary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CouplingNotUnitary);
  }
  CHECK_THROWS_AS(unitary_weighting(f, 1, fourier(3)), Error);
  CHECK_THROWS_AS(unitary_weighting(fixtures::cayley4_pairs(), 1), Error);
}

TEST_CASE("general depth-1 weighting with unitary factor weights") {
  // Phased permutation matrices on a cycle factorization.
  const auto f = cycle_factorization(suite::cayley4());
  std::vector<DenseMatrix> weights;
  for (std::size_t j = 0; j < f.count(); ++j) {
    const Complex phase = std::polar(1.0, 0.3 * static_cast<double>(j + 1));
    weights.push_back(scale(adjacency_matrix(f.factors[j]), phase));
  }
  const auto u = unitary_weighting_general(f, weights, fourier(3));
  CHECK(is_unitary(u, 1e-10).unitary);
  CHECK(from_matrix(u) == diagonal_union(f).digraph);

  // A denser factor: K2+ trivially factored, weighted by the Fourier matrix.
  const auto t = trivial(suite::k2plus());
  const DenseMatrix single[] = {fourier(2)};
  const auto v = unitary_weighting_general(t, single, DenseMatrix::identity(1));
  CHECK(is_unitary(v, 1e-10).unitary);
  CHECK(from_matrix(v) == suite::k2plus());

  const DenseMatrix not_unitary[] = {DenseMatrix::ones(2, 2)};
  CHECK_THROWS_AS(unitary_weighting_general(t, not_unitary, DenseMatrix::identity(1)), Error);
  std::vector<DenseMatrix> wrong_support(weights.rbegin(), weights.rend());
  CHECK_THROWS_AS(unitary_weighting_general(f, wrong_support, fourier(3)), Error);
}
