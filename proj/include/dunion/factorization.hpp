#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dunion/digraph.hpp"
#include "dunion/matrix.hpp"

namespace dunion {

/// Ordered decomposition of `base` into spanning factors whose arc sets
/// partition A(base). Factor order fixes the block order of a diagonal union.
struct Factorization {
  Digraph base;
  std::vector<Digraph> factors;

  std::size_t count() const noexcept { return factors.size(); }
  bool operator==(const Factorization&) const = default;
};

struct Violation {
  std::string message;
};

/// nullopt when `f` is a valid factorization, else the first violation found.
std::optional<Violation> validate(const Factorization& f);
/// Throws InvalidFactorization when validate() reports a violation.
void require_valid(const Factorization& f);

/// True iff every factor is 1-in/1-out regular (its matrix is a permutation).
bool is_cycle_factorization(const Factorization& f);

Factorization trivial(const Digraph& d);

/// Splits a k-regular digraph into k cycle factors by repeated perfect
/// matching of tails against heads. Augmenting paths scan vertices in
/// ascending order, so the output is a function of the input alone.
Factorization cycle_factorization(const Digraph& d);

/// Factorization given by 0/1 matrices that must sum to M(d).
Factorization factor_from_matrices(const Digraph& d, std::span<const DenseMatrix> matrices);

/// Applies a reordering: factor i of the result is factor order[i] of `f`.
Factorization reorder(const Factorization& f, std::span<const std::size_t> order);

}  // namespace dunion
