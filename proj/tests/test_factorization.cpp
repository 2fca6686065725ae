#include <array>

#include "doctest.h"
#include "dunion/error.hpp"
#include "dunion/factorization.hpp"
#include "dunion/fixtures.hpp"
#include "suite.hpp"

using namespace dunion;

namespace {

void check_cycle_factorization(const Digraph& d, const Factorization& f) {
  REQUIRE_FALSE(validate(f).has_value());
  CHECK(f.base == d);
  CHECK(f.count() == regular_degree(d).value());
  DenseMatrix sum(d.order(), d.order());
  for (const Digraph& h : f.factors) {
    CHECK(PermutationMatrix::from_dense(adjacency_matrix(h)).has_value());
    sum = add(sum, adjacency_matrix(h));
  }
  CHECK(sum == adjacency_matrix(d));
}

}  // namespace

TEST_CASE("validate") {
  const auto k2 = suite::k2plus();
  CHECK_FALSE(validate(trivial(k2)).has_value());
  CHECK_FALSE(validate(fixtures::complete2_loops_swap()).has_value());

  const Factorization shared{k2, {Digraph(2, {{0, 0}, {0, 1}, {1, 1}}), Digraph(2, {{0, 1}, {1, 0}})}};
  const auto v = validate(shared);
  REQUIRE(v.has_value());
  CHECK(v->message.find("covered twice") != std::string::npos);

  const Factorization missing{k2, {Digraph(2, {{0, 0}, {1, 1}})}};
  CHECK(validate(missing).has_value());
  const Factorization foreign{suite::path(3), {Digraph(3, {{0, 1}, {1, 2}, {2, 0}})}};
  CHECK(validate(foreign).has_value());
  const Factorization not_spanning{k2, {Digraph(1, {{0, 0}}), Digraph(2, {{0, 1}, {1, 0}, {1, 1}})}};
  CHECK(validate(not_spanning).has_value());
}

TEST_CASE("trivial factorization") {
  const auto d = suite::random_digraph(5, 0.4, 3);
  const auto f = trivial(d);
  CHECK(f.count() == 1);
  CHECK(f.factors[0] == d);
  CHECK_FALSE(validate(trivial(Digraph(3))).has_value());
  CHECK(regular_degree(trivial(suite::k2plus()).factors[0]) == std::size_t{2});
}

TEST_CASE("cycle factorization of the named examples") {
  check_cycle_factorization(suite::k2plus(), cycle_factorization(suite::k2plus()));
  check_cycle_factorization(suite::cayley4(), cycle_factorization(suite::cayley4()));
  const auto c5 = directed_cycle(5);
  const auto f = cycle_factorization(c5);
  REQUIRE(f.count() == 1);
  CHECK(f.factors[0] == c5);
}

TEST_CASE("cycle factorization of every small regular digraph") {
  for (const auto& d : suite::regular_family(8, 3, 6)) check_cycle_factorization(d, cycle_factorization(d));
  for (std::size_t b = 2; b <= 3; ++b)
    for (std::size_t m = 1; m <= 3; ++m) check_cycle_factorization(de_bruijn(b, m), cycle_factorization(de_bruijn(b, m)));
}

TEST_CASE("cycle factorization is deterministic and rejects irregular input") {
  const auto d = random_regular(7, 3, 9);
  CHECK(cycle_factorization(d) == cycle_factorization(d));
  try {
    cycle_factorization(suite::path(3));
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegular);
  }
}

TEST_CASE("factor_from_matrices") {
  const auto f3 = fixtures::cayley4_pairs();
  CHECK(f3.count() == 2);
  CHECK(regular_degree(f3.factors[0]) == std::size_t{2});
  CHECK(regular_degree(f3.factors[1]) == std::size_t{1});

  const auto f2 = fixtures::complete2_loops_swap();
  CHECK(f2.factors[0] == Digraph(2, {{0, 0}, {1, 1}}));
  CHECK(f2.factors[1] == Digraph(2, {{0, 1}, {1, 0}}));

  const std::array twice{DenseMatrix::identity(2), DenseMatrix::identity(2)};
  CHECK_THROWS_AS(factor_from_matrices(suite::k2plus(), twice), Error);
  const std::array wrong_size{DenseMatrix::identity(3)};
  CHECK_THROWS_AS(factor_from_matrices(suite::k2plus(), wrong_size), Error);
}

TEST_CASE("reorder") {
  const auto f = fixtures::complete2_loops_swap();
  const std::size_t order[] = {1, 0};
  const auto g = reorder(f, order);
  CHECK(g.factors[0] == f.factors[1]);
  CHECK_FALSE(validate(g).has_value());
  const std::size_t dup[] = {0, 0};
  CHECK_THROWS_AS(reorder(f, dup), Error);
}
