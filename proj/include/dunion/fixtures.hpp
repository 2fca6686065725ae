#pragma once

#include "dunion/factorization.hpp"

namespace dunion::fixtures {

/// K2+ factored into its loops (I_2) and its swap (sigma_x).
Factorization complete2_loops_swap();

/// Cay(Z_4, {1,2,3}) factored as {rho(1) + rho(3), rho(2)}.
Factorization cayley4_pairs();

}  // namespace dunion::fixtures
