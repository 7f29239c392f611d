#pragma once

#include "lsekit/dataset.hpp"
#include "lsekit/matrix.hpp"

namespace lsekit {

/// Stacked regression system: column j of `phi` is the regressor of sample
/// j+1, so `phi` is n x k and `outputs` has dimension k.
struct RegressionSystem {
    Matrix phi;
    Vector outputs;
};

RegressionSystem assemble(const Dataset& ds);

struct BatchSolution {
    Vector theta_hat;
    double residual_cost = 0.0;    // 0.5 * ||Y - Phi^T theta||^2
    Index rank = 0;                // numerical rank of Phi Phi^T
    bool used_pseudo_inverse = false;
};

/// One-shot least-squares solve. Full-rank systems go through a Cholesky
/// solve of the normal equations; rank-deficient systems fall back to the
/// SVD pseudo-inverse and return the minimum-norm solution.
BatchSolution solve_batch(const Dataset& ds, double rcond);
BatchSolution solve_batch(const Dataset& ds);

/// Forgetting-weighted half sum of squared residuals: with k samples the
/// residual of sample j carries weight lambda^(k-j). lambda = 1 gives the
/// plain least-squares objective.
double cost(const Dataset& ds, const Vector& theta, double lambda = 1.0);

} // namespace lsekit
