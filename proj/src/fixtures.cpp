#include "dunion/fixtures.hpp"

#include <array>

namespace dunion::fixtures {

Factorization complete2_loops_swap() {
  const std::array mats{DenseMatrix::identity(2), rho_reg_zk(2, 1).to_dense()};
  return factor_from_matrices(complete_with_loops(2), mats);
}

Factorization cayley4_pairs() {
  const std::size_t gens[] = {1, 2, 3};
  const std::array mats{add(rho_reg_zk(4, 1).to_dense(), rho_reg_zk(4, 3).to_dense()),
                        rho_reg_zk(4, 2).to_dense()};
  return factor_from_matrices(cayley_zn(4, gens), mats);
}

}  // namespace dunion::fixtures
