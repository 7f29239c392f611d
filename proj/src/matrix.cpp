#include "lsekit/matrix.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>

namespace lsekit {

namespace {

constexpr double kConditionLimit = 1e12;

std::string shape_of(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

// Condition-checked inverse of a small square matrix, shared by the
// Woodbury path for C and the inner matrix.
Matrix guarded_inverse(const Matrix& m, const char* what) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError(std::string("SVD failed on ") + what);
    }
    const auto& sigma = svd.singularValues();
    const double smax = sigma(0);
    const double smin = sigma(sigma.size() - 1);
    if (smin <= 0.0 || smax / smin > kConditionLimit) {
        std::ostringstream os;
        os << what << " is singular or too ill-conditioned (condition estimate ";
        if (smin <= 0.0) {
            os << "infinite";
        } else {
            os << smax / smin;
        }
        os << ")";
        throw SingularityError(os.str());
    }
    return svd.matrixV() * sigma.cwiseInverse().asDiagonal() *
           svd.matrixU().transpose();
}

} // namespace

bool is_finite(const Matrix& m) { return m.allFinite(); }
bool is_finite(const Vector& v) { return v.allFinite(); }

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw DataError(std::string(what) + " holds non-finite entries");
    }
}

void require_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) {
        throw DataError(std::string(what) + " holds non-finite entries");
    }
}

Matrix make_matrix(Index rows, Index cols, std::span<const double> row_major) {
    if (rows < 1 || cols < 1) {
        throw ShapeError("matrix dimensions must be positive");
    }
    if (static_cast<Index>(row_major.size()) != rows * cols) {
        std::ostringstream os;
        os << "entry count " << row_major.size() << " does not match " << rows
           << "x" << cols;
        throw ShapeError(os.str());
    }
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            m(i, j) = row_major[static_cast<std::size_t>(i * cols + j)];
        }
    }
    require_finite(m, "matrix entries");
    return m;
}

Vector make_vector(std::span<const double> entries) {
    if (entries.empty()) {
        throw ShapeError("vector dimension must be positive");
    }
    Vector v(static_cast<Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        v(static_cast<Index>(i)) = entries[i];
    }
    require_finite(v, "vector entries");
    return v;
}

double default_rcond(const Matrix& m) {
    return std::numeric_limits<double>::epsilon() *
           static_cast<double>(std::max(m.rows(), m.cols()));
}

PseudoInverseResult pseudo_inverse_svd(const Matrix& m, double rcond) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw ShapeError("pseudo_inverse requires a non-empty matrix");
    }
    if (!(rcond >= 0.0)) {
        throw ConfigError("rcond must be a nonnegative real");
    }
    require_finite(m, "pseudo_inverse input");

    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("SVD did not converge within its iteration budget");
    }

    const auto& sigma = svd.singularValues();
    PseudoInverseResult out;
    out.max_singular = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cutoff = rcond * out.max_singular;

    Vector inv_sigma = Vector::Zero(sigma.size());
    for (Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) {
            inv_sigma(i) = 1.0 / sigma(i);
            ++out.rank;
        }
    }
    out.pinv = svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose();
    return out;
}

Matrix pseudo_inverse(const Matrix& m, double rcond) {
    return pseudo_inverse_svd(m, rcond).pinv;
}

Matrix pseudo_inverse(const Matrix& m) {
    return pseudo_inverse_svd(m, default_rcond(m)).pinv;
}

Matrix woodbury_inverse(const Matrix& a_inv, const Matrix& u, const Matrix& c,
                        const Matrix& v) {
    const Index n = a_inv.rows();
    const Index m = c.rows();
    if (a_inv.cols() != n) {
        throw ShapeError("a_inv must be square, got " + shape_of(a_inv));
    }
    if (c.cols() != m) {
        throw ShapeError("c must be square, got " + shape_of(c));
    }
    if (u.rows() != n || u.cols() != m) {
        throw ShapeError("u must be " + std::to_string(n) + "x" +
                         std::to_string(m) + ", got " + shape_of(u));
    }
    if (v.rows() != m || v.cols() != n) {
        throw ShapeError("v must be " + std::to_string(m) + "x" +
                         std::to_string(n) + ", got " + shape_of(v));
    }
    require_finite(a_inv, "a_inv");
    require_finite(u, "u");
    require_finite(c, "c");
    require_finite(v, "v");

    const Matrix c_inv = guarded_inverse(c, "c");
    const Matrix inner = c_inv + v * a_inv * u;
    const Matrix inner_inv = guarded_inverse(inner, "inner matrix C^-1 + V A^-1 U");
    return a_inv - a_inv * u * inner_inv * v * a_inv;
}

Matrix sherman_morrison_update(const Matrix& a_inv, const Vector& u,
                               const Vector& v, double floor) {
    const Index n = a_inv.rows();
    if (a_inv.cols() != n) {
        throw ShapeError("a_inv must be square, got " + shape_of(a_inv));
    }
    if (u.size() != n || v.size() != n) {
        throw ShapeError("u and v must have dimension " + std::to_string(n));
    }
    if (!(floor > 0.0)) {
        throw ConfigError("denominator floor must be positive");
    }
    require_finite(a_inv, "a_inv");
    require_finite(u, "u");
    require_finite(v, "v");

    const Vector w = a_inv * u;               // A^-1 u
    const Vector z = a_inv.transpose() * v;   // (v^T A^-1)^T
    const double denom = 1.0 + v.dot(w);
    if (std::abs(denom) < floor) {
        std::ostringstream os;
        os << "rank-one update is numerically singular: |1 + v^T A^-1 u| = "
           << std::abs(denom) << " below floor " << floor;
        throw SingularityError(os.str());
    }
    return a_inv - (w * z.transpose()) / denom;
}

Matrix symmetrize(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("symmetrize requires a square matrix, got " + shape_of(m));
    }
    return (m + m.transpose()) * 0.5;
}

} // namespace lsekit
