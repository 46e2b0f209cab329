#pragma once

#include "jordan/algebra.hpp"

namespace jordan {

struct SymmetricEigen {
    Vector values;   // descending
    Matrix vectors;  // column k pairs with values[k]
    int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Stops once the
/// off-diagonal Frobenius mass drops below 1e-14·‖A‖_F or after 100 sweeps.
SymmetricEigen jacobi_eigen(const Matrix& a);

}  // namespace jordan
