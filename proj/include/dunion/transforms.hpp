#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dunion/digraph.hpp"
#include "dunion/factorization.hpp"
#include "dunion/matrix.hpp"

namespace dunion {

/// Result of a d-diagonal union of an n-vertex digraph with k factors.
///
/// Labeling: at depth 1, copy j of base vertex i is vertex j*n + i. At depth
/// t, block l of size s_{t-1} = k^{t-1} n holds vertices l*s_{t-1} + x, where
/// x is the depth t-1 index.
struct DiagonalUnionResult {
  Digraph digraph;
  std::size_t depth = 1;
  std::size_t block_size = 0;  // s_{d-1}, order of the depth d-1 digraph
  std::size_t factor_count = 0;
  std::size_t base_order = 0;
};

/// Depth-1 diagonal union via the arc rule:
/// (j*n + u) -> (j'*n + v) iff (u, v) is an arc of factor j'.
DiagonalUnionResult diagonal_union(const Factorization& f);

/// d-diagonal union. Level t >= 2 is obtained from level t-1 by copying each
/// arc (x, y) into every block row a, landing in block column
/// b = (block(y) - block(x)) mod k, where block() is the index of the
/// k-way block of level t-1 containing a vertex.
DiagonalUnionResult diagonal_union_depth(const Factorization& f, std::size_t depth);

/// Same constructions evaluated literally on dense matrices:
///   M_1 = (J_k (x) I_n) . (+)_i M(H_i)
///   M_t = (J_k (x) I_{s_{t-1}}) . (+)_j [rho_reg(j) o_G M_{t-1}]
/// Entries are checked to be 0 or 1 before thresholding. Quadratic memory in
/// the output order; used to cross-check the arc-rule route.
DenseMatrix diagonal_union_matrix(const Factorization& f, std::size_t depth = 1);

/// The k summands rho_reg(l) o_G M(D_{F,d-1}) (the base factors at d = 1), as
/// permutations. They are a cycle factorization of D_{F,d-1} whose diagonal
/// union is D_{F,d}. Throws NonPermutationSummand unless every base factor is
/// a cycle factor.
std::vector<PermutationMatrix> induced_cycle_factors(const Factorization& f, std::size_t depth);

/// U = (C (x) I_{s_{d-1}}) . (+)_l Q_l with Q_l from induced_cycle_factors.
/// Unitary whenever C is, and supported exactly on D_{F,d} when C has no zero
/// entry. C defaults to fourier(k).
DenseMatrix unitary_weighting(const Factorization& f, std::size_t depth,
                              const DenseMatrix& coupling);
DenseMatrix unitary_weighting(const Factorization& f, std::size_t depth);

/// Depth-1 weighting with arbitrary unitary factor weights:
/// U = (C (x) I_n) . (+)_j V_j, where support(V_j) must equal M(H_j).
DenseMatrix unitary_weighting_general(const Factorization& f,
                                      std::span<const DenseMatrix> factor_unitaries,
                                      const DenseMatrix& coupling);

}  // namespace dunion
