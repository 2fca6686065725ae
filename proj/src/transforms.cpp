#include "dunion/transforms.hpp"

#include <cmath>
#include <string>

#include "dunion/error.hpp"

namespace dunion {
namespace {

std::size_t union_order(std::size_t n, std::size_t k, std::size_t depth) {
  std::size_t order = n;
  for (std::size_t t = 0; t < depth; ++t) {
    if (k != 0 && order > vertex_limit() / k) {
      throw Error(ErrorKind::SizeLimit, "diagonal union of depth " + std::to_string(depth) +
                                            " exceeds the vertex limit of " +
                                            std::to_string(vertex_limit()));
    }
    order *= k;
  }
  check_vertex_count(order, "diagonal union");
  return order;
}

void require_factors(const Factorization& f) {
  require_valid(f);
  if (f.count() == 0)
    throw Error(ErrorKind::InvalidFactorization, "diagonal union needs at least one factor");
}

// Next level of the iteration, arc rule. `s` is the order of `prev`.
Digraph next_level(const Digraph& prev, std::size_t k) {
  const std::size_t s = prev.order();
  const std::size_t r = s / k;
  std::vector<Arc> arcs;
  arcs.reserve(prev.size() * k);
  for (const Arc& arc : prev.arcs()) {
    const std::size_t b = (arc.head / r + k - arc.tail / r) % k;
    for (std::size_t a = 0; a < k; ++a)
      arcs.push_back({static_cast<Vertex>(a * s + arc.tail), static_cast<Vertex>(b * s + arc.head)});
  }
  return Digraph(s * k, std::move(arcs));
}

// Rounds a 0/1-valued product to an exact 0/1 pattern; any other value means a
// multiplicity slipped in and is a construction bug.
DenseMatrix threshold_01(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      const bool zero = std::abs(z) <= kSupportTolerance;
      const bool one = std::abs(z - Complex{1.0}) <= kSupportTolerance;
      if (!zero && !one) {
        throw Error(ErrorKind::Internal, "diagonal union product has entry " +
                                             std::to_string(z.real()) + " at (" +
                                             std::to_string(r) + "," + std::to_string(c) + ")");
      }
      if (std::abs(z) > 0.5) out(r, c) = 1.0;
    }
  }
  return out;
}

void check_coupling(const DenseMatrix& c, std::size_t k) {
  if (c.rows() != k || c.cols() != k) {
    throw Error(ErrorKind::InvalidArgument, "coupling must be " + std::to_string(k) + "x" +
                                                std::to_string(k) + " (one row per factor)");
  }
  if (const auto check = is_unitary(c); !check.unitary) {
    throw Error(ErrorKind::CouplingNotUnitary,
                "coupling is not unitary (residual " + std::to_string(check.residual) + ")");
  }
  if (min_abs_entry(c) <= kSupportTolerance)
    throw Error(ErrorKind::DenseSupportViolated, "coupling has a zero entry");
}

}  // namespace

DiagonalUnionResult diagonal_union(const Factorization& f) {
  require_factors(f);
  const std::size_t n = f.base.order();
  const std::size_t k = f.count();
  const std::size_t order = union_order(n, k, 1);
  std::vector<Arc> arcs;
  arcs.reserve(f.base.size() * k);
  for (std::size_t target = 0; target < k; ++target) {
    for (const Arc& arc : f.factors[target].arcs()) {
      for (std::size_t copy = 0; copy < k; ++copy) {
        arcs.push_back({static_cast<Vertex>(copy * n + arc.tail),
                        static_cast<Vertex>(target * n + arc.head)});
      }
    }
  }
  return {Digraph(order, std::move(arcs)), 1, n, k, n};
}

DiagonalUnionResult diagonal_union_depth(const Factorization& f, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "diagonal union depth must be >= 1");
  require_factors(f);
  const std::size_t k = f.count();
  union_order(f.base.order(), k, depth);
  DiagonalUnionResult result = diagonal_union(f);
  for (std::size_t t = 2; t <= depth; ++t) {
    result.block_size = result.digraph.order();
    result.digraph = next_level(result.digraph, k);
    result.depth = t;
  }
  return result;
}

DenseMatrix diagonal_union_matrix(const Factorization& f, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "diagonal union depth must be >= 1");
  require_factors(f);
  const std::size_t n = f.base.order();
  const std::size_t k = f.count();
  union_order(n, k, depth);
  const DenseMatrix all_ones = DenseMatrix::ones(k, k);

  std::vector<DenseMatrix> blocks;
  for (const Digraph& h : f.factors) blocks.push_back(adjacency_matrix(h));
  DenseMatrix m = threshold_01(
      multiply(kronecker(all_ones, DenseMatrix::identity(n)), direct_sum(blocks)));

  for (std::size_t t = 2; t <= depth; ++t) {
    const std::size_t s = m.rows();
    blocks.clear();
    for (std::size_t j = 0; j < k; ++j)
      blocks.push_back(generalized_hadamard(rho_reg_zk(k, j).to_dense(), m));
    m = threshold_01(multiply(kronecker(all_ones, DenseMatrix::identity(s)), direct_sum(blocks)));
  }
  return m;
}

std::vector<PermutationMatrix> induced_cycle_factors(const Factorization& f, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
  require_factors(f);
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (regular_degree(f.factors[i]) != std::size_t{1}) {
      throw Error(ErrorKind::NonPermutationSummand,
                  "factor " + std::to_string(i) + " is not a cycle factor");
    }
  }
  const std::size_t k = f.count();
  if (depth == 1) {
    std::vector<PermutationMatrix> out;
    for (const Digraph& h : f.factors) {
      std::vector<std::size_t> image(h.order());
      for (const Arc& a : h.arcs()) image[a.tail] = a.head;
      out.emplace_back(std::move(image));
    }
    return out;
  }

  const Digraph prev = diagonal_union_depth(f, depth - 1).digraph;
  const std::size_t s = prev.order();
  const std::size_t r = s / k;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> images(k, std::vector<std::size_t>(s, kUnset));
  for (const Arc& arc : prev.arcs()) {
    const std::size_t l = (arc.head / r + k - arc.tail / r) % k;
    if (images[l][arc.tail] != kUnset) {
      throw Error(ErrorKind::NonPermutationSummand,
                  "summand " + std::to_string(l) + " has two entries in row " +
                      std::to_string(arc.tail));
    }
    images[l][arc.tail] = arc.head;
  }
  std::vector<PermutationMatrix> out;
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t x = 0; x < s; ++x) {
      if (images[l][x] == kUnset) {
        throw Error(ErrorKind::NonPermutationSummand,
                    "summand " + std::to_string(l) + " has an empty row " + std::to_string(x));
      }
    }
    out.emplace_back(std::move(images[l]));
  }
  return out;
}

DenseMatrix unitary_weighting(const Factorization& f, std::size_t depth,
                              const DenseMatrix& coupling) {
  require_factors(f);
  check_coupling(coupling, f.count());
  const auto summands = induced_cycle_factors(f, depth);
  const std::size_t s = summands.front().size();
  return multiply(kronecker(coupling, DenseMatrix::identity(s)), direct_sum(summands));
}

DenseMatrix unitary_weighting(const Factorization& f, std::size_t depth) {
  require_factors(f);
  return unitary_weighting(f, depth, fourier(f.count()));
}

DenseMatrix unitary_weighting_general(const Factorization& f,
                                      std::span<const DenseMatrix> factor_unitaries,
                                      const DenseMatrix& coupling) {
  require_factors(f);
  const std::size_t k = f.count();
  check_coupling(coupling, k);
  if (factor_unitaries.size() != k) {
    throw Error(ErrorKind::InvalidArgument,
                "need one unitary per factor (" + std::to_string(k) + ")");
  }
  for (std::size_t j = 0; j < k; ++j) {
    const DenseMatrix& v = factor_unitaries[j];
    if (v.rows() != f.base.order() || !v.square())
      throw Error(ErrorKind::InvalidArgument, "factor unitary " + std::to_string(j) +
                                                  " does not match the base order");
    if (!is_unitary(v).unitary)
      throw Error(ErrorKind::InvalidArgument,
                  "factor unitary " + std::to_string(j) + " is not unitary");
    if (from_matrix(v) != f.factors[j])
      throw Error(ErrorKind::InvalidArgument,
                  "factor unitary " + std::to_string(j) + " is not supported on factor " +
                      std::to_string(j));
  }
  return multiply(kronecker(coupling, DenseMatrix::identity(f.base.order())),
                  direct_sum(factor_unitaries));
}

}  // namespace dunion
