#pragma once

#include <Eigen/Dense>
#include <span>

#include "lsekit/errors.hpp"

namespace lsekit {

// Dense 64-bit real carriers used throughout the library.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// True when every entry is a finite real (no NaN/Inf).
bool is_finite(const Matrix& m);
bool is_finite(const Vector& v);

/// Throws DataError naming `what` when the value holds NaN/Inf entries.
void require_finite(const Matrix& m, const char* what);
void require_finite(const Vector& v, const char* what);

/// Validated construction from row-major entries. Throws ShapeError when the
/// entry count does not match rows*cols and DataError on non-finite entries.
Matrix make_matrix(Index rows, Index cols, std::span<const double> row_major);
Vector make_vector(std::span<const double> entries);

inline Matrix make_matrix(Index rows, Index cols,
                          std::initializer_list<double> row_major) {
    return make_matrix(rows, cols,
                       std::span<const double>(row_major.begin(), row_major.size()));
}

inline Vector make_vector(std::initializer_list<double> entries) {
    return make_vector(std::span<const double>(entries.begin(), entries.size()));
}

/// Singular-value cutoff used when none is supplied: eps * max(rows, cols).
double default_rcond(const Matrix& m);

struct PseudoInverseResult {
    Matrix pinv;         // cols x rows
    Index rank = 0;      // number of singular values kept
    double max_singular = 0.0;
};

/// Moore-Penrose pseudo-inverse via SVD. Singular values sigma_i with
/// sigma_i <= rcond * sigma_max are treated as zero.
PseudoInverseResult pseudo_inverse_svd(const Matrix& m, double rcond);
Matrix pseudo_inverse(const Matrix& m, double rcond);
Matrix pseudo_inverse(const Matrix& m);

/// (A + U C V)^-1 from a known A^-1 using the rank-m update identity; only
/// m x m systems are inverted. Throws SingularityError when C or the inner
/// matrix C^-1 + V A^-1 U is singular beyond the condition threshold.
Matrix woodbury_inverse(const Matrix& a_inv, const Matrix& u, const Matrix& c,
                        const Matrix& v);

/// (A + u v^T)^-1 from a known A^-1 via the rank-one update formula, O(n^2).
/// Throws SingularityError when |1 + v^T A^-1 u| falls below `floor`.
Matrix sherman_morrison_update(const Matrix& a_inv, const Vector& u,
                               const Vector& v, double floor = 1e-12);

/// (M + M^T) / 2; exactly symmetric by construction. Throws ShapeError for
/// non-square input.
Matrix symmetrize(const Matrix& m);

} // namespace lsekit
