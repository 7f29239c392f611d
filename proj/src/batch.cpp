#include "lsekit/batch.hpp"

#include <Eigen/Cholesky>
#include <limits>
#include <sstream>

namespace lsekit {

RegressionSystem assemble(const Dataset& ds) {
    if (ds.empty()) {
        throw EmptyInputError("cannot assemble an empty dataset");
    }
    const Index n = ds.dim();
    const Index k = ds.size();
    RegressionSystem sys{Matrix(n, k), Vector(k)};
    for (Index j = 0; j < k; ++j) {
        sys.phi.col(j) = ds[j].regressor;
        sys.outputs(j) = ds[j].output;
    }
    return sys;
}

BatchSolution solve_batch(const Dataset& ds, double rcond) {
    const auto [phi, y] = assemble(ds);
    const Matrix gram = symmetrize(phi * phi.transpose());
    const Vector rhs = phi * y;

    const auto pinv = pseudo_inverse_svd(gram, rcond);

    BatchSolution sol;
    sol.rank = pinv.rank;
    if (pinv.rank == gram.rows()) {
        // Full numerical rank: plain inverse per the normal equations. The
        // result must agree with the pseudo-inverse route, so the fallback
        // below is unobservable apart from the report flag.
        Eigen::LLT<Matrix> llt(gram);
        if (llt.info() == Eigen::Success) {
            sol.theta_hat = llt.solve(rhs);
            sol.used_pseudo_inverse = false;
        } else {
            sol.theta_hat = pinv.pinv * rhs;
            sol.used_pseudo_inverse = true;
        }
    } else {
        sol.theta_hat = pinv.pinv * rhs;  // minimum-norm solution
        sol.used_pseudo_inverse = true;
    }

    const Vector residual = y - phi.transpose() * sol.theta_hat;
    sol.residual_cost = 0.5 * residual.squaredNorm();
    return sol;
}

BatchSolution solve_batch(const Dataset& ds) {
    if (ds.empty()) {
        throw EmptyInputError("cannot solve an empty dataset");
    }
    const double rcond = std::numeric_limits<double>::epsilon() *
                         static_cast<double>(ds.dim());
    return solve_batch(ds, rcond);
}

double cost(const Dataset& ds, const Vector& theta, double lambda) {
    if (theta.size() != ds.dim()) {
        std::ostringstream os;
        os << "theta dimension " << theta.size()
           << " does not match dataset dimension " << ds.dim();
        throw ShapeError(os.str());
    }
    if (!(lambda > 0.0) || lambda > 1.0) {
        throw ConfigError("forgetting factor must lie in (0, 1]");
    }
    require_finite(theta, "theta");

    // Accumulate from the newest sample backwards so the weight of sample j
    // is exactly lambda^(k-j) by repeated multiplication.
    double sum = 0.0;
    double weight = 1.0;
    for (Index j = ds.size() - 1; j >= 0; --j) {
        const double r = ds[j].output - ds[j].regressor.dot(theta);
        sum += weight * r * r;
        weight *= lambda;
    }
    return 0.5 * sum;
}

} // namespace lsekit
