#pragma once

#include "pident/matrix.hpp"
#include "pident/tableau.hpp"

#include <vector>

namespace pident {

/// Clifton matrix A^lambda_p over the given standard tableaux (in lex order).
/// Entry (i,j) is the sign of the column permutation of T_i sending each number
/// into its row in pT_j, or 0 when no such permutation exists.
IntMatrix clifton_matrix(const std::vector<Tableau>& tableaux, const Permutation& p);
IntMatrix clifton_matrix(const Partition& lambda, const Permutation& p);

}  // namespace pident
