#include <cmath>
#include <limits>

#include "doctest.h"
#include "test_support.hpp"

using namespace lsekit;
using test::direct_inverse;
using test::max_abs;
using test::random_matrix;
using test::random_vector;
using test::random_well_conditioned;

namespace {

void check_penrose(const Matrix& m, const Matrix& pinv, double rel = 1e-9) {
    const double scale_m = std::max(max_abs(m), 1e-30);
    const double scale_p = std::max(max_abs(pinv), 1e-30);
    CHECK(max_abs(m * pinv * m - m) <= rel * scale_m);
    CHECK(max_abs(pinv * m * pinv - pinv) <= rel * scale_p);
    const Matrix mp = m * pinv;
    const Matrix pm = pinv * m;
    CHECK(max_abs(mp - mp.transpose()) <= rel);
    CHECK(max_abs(pm - pm.transpose()) <= rel);
}

} // namespace

TEST_CASE("construction validates shapes and finiteness") {
    const double good[] = {1.0, 2.0, 3.0, 4.0};
    const Matrix m = make_matrix(2, 2, good);
    CHECK(m(0, 1) == 2.0);
    CHECK(m(1, 0) == 3.0);

    const double bad[] = {1.0, std::nan(""), 3.0, 4.0};
    CHECK_THROWS_AS(make_matrix(2, 2, bad), DataError);
    CHECK_THROWS_AS(make_matrix(2, 3, good), ShapeError);
    CHECK_THROWS_AS(make_matrix(0, 2, std::span<const double>{}), ShapeError);

    const double inf_entry[] = {std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(make_vector(inf_entry), DataError);
    CHECK_THROWS_AS(make_vector(std::span<const double>{}), ShapeError);
}

TEST_CASE("pseudo_inverse of the identity is the identity") {
    const Matrix id = Matrix::Identity(3, 3);
    CHECK(max_abs(pseudo_inverse(id, 0.0) - id) <= 1e-14);
}

TEST_CASE("pseudo_inverse of a diagonal reciprocates nonzero entries") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    const Matrix p = pseudo_inverse(d, 1e-12);
    CHECK(p(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p(0, 1) == 0.0);
    CHECK(p(1, 0) == 0.0);
    CHECK(p(1, 1) == 0.0);
}

TEST_CASE("pseudo_inverse of a full-rank rectangular matrix") {
    Prng rng(11);
    const Matrix m = random_matrix(rng, 4, 3);
    const Matrix p = pseudo_inverse(m, 1e-12);
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 4);
    CHECK(max_abs(m * p * m - m) <= 1e-10);
    check_penrose(m, p, 1e-10);
}

TEST_CASE("pseudo_inverse equals the inverse for square nonsingular input") {
    Prng rng(12);
    const Matrix a = random_well_conditioned(rng, 4);
    CHECK(max_abs(pseudo_inverse(a) - direct_inverse(a)) <= 1e-10);
}

TEST_CASE("pseudo_inverse of the zero matrix is zero with rank 0") {
    const auto r = pseudo_inverse_svd(Matrix::Zero(3, 2), 1e-12);
    CHECK(r.rank == 0);
    CHECK(max_abs(r.pinv) == 0.0);
}

TEST_CASE("pseudo_inverse rejects bad arguments") {
    CHECK_THROWS_AS(pseudo_inverse(Matrix::Identity(2, 2), -1.0), ConfigError);
    Matrix m = Matrix::Identity(2, 2);
    m(0, 0) = std::nan("");
    CHECK_THROWS_AS(pseudo_inverse(m, 0.0), DataError);
}

TEST_CASE("Penrose conditions hold on random matrices up to 8x8") {
    Prng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const Index rows = 1 + static_cast<Index>(rng.uniform() * 8.0);
        const Index cols = 1 + static_cast<Index>(rng.uniform() * 8.0);
        Matrix m;
        if (trial % 3 == 0) {
            // exactly rank-deficient: product through a thin inner dimension
            const Index r = std::max<Index>(1, std::min(rows, cols) - 1);
            m = random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
        } else if (trial % 3 == 1 && cols >= 2) {
            m = random_matrix(rng, rows, cols);
            m.col(cols - 1) = m.col(0);  // repeated column
        } else {
            m = random_matrix(rng, rows, cols);
        }
        check_penrose(m, pseudo_inverse(m));
    }
}

TEST_CASE("woodbury_inverse leaves the inverse unchanged for a zero update") {
    const Matrix a_inv = Matrix::Identity(2, 2);
    const Matrix u = Matrix::Zero(2, 1);
    const Matrix c = Matrix::Constant(1, 1, 1.0);
    const Matrix v = Matrix::Zero(1, 2);
    CHECK(max_abs(woodbury_inverse(a_inv, u, c, v) - a_inv) == 0.0);
}

TEST_CASE("woodbury_inverse on an analytically forced rank-one update") {
    // (2I + e1 e1^T)^-1 = diag(1/3, 1/2)
    const Matrix a_inv = 0.5 * Matrix::Identity(2, 2);
    Matrix u = Matrix::Zero(2, 1);
    u(0, 0) = 1.0;
    const Matrix c = Matrix::Constant(1, 1, 1.0);
    const Matrix v = u.transpose();
    const Matrix w = woodbury_inverse(a_inv, u, c, v);
    CHECK(w(0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(w(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(w(0, 1)) <= 1e-15);
    CHECK(std::abs(w(1, 0)) <= 1e-15);
}

TEST_CASE("woodbury_inverse matches direct inversion on random updates") {
    Prng rng(14);
    const Matrix a = random_well_conditioned(rng, 3);
    const Matrix a_inv = direct_inverse(a);
    const Matrix u = random_matrix(rng, 3, 2);
    const Matrix c = random_well_conditioned(rng, 2);
    const Matrix v = random_matrix(rng, 2, 3);
    const Matrix expected = direct_inverse(a + u * c * v);
    CHECK(max_abs(woodbury_inverse(a_inv, u, c, v) - expected) <= 1e-10);
}

TEST_CASE("woodbury_inverse times the updated matrix gives the identity") {
    Prng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = 2 + static_cast<Index>(rng.uniform() * 5.0);
        const Index m = 1 + static_cast<Index>(rng.uniform() * 3.0);
        const Matrix a = random_well_conditioned(rng, n);
        const Matrix u = random_matrix(rng, n, m);
        const Matrix c = random_well_conditioned(rng, m);
        const Matrix v = random_matrix(rng, m, n);
        const Matrix w = woodbury_inverse(direct_inverse(a), u, c, v);
        CHECK(max_abs(w * (a + u * c * v) - Matrix::Identity(n, n)) <= 1e-9);
    }
}

TEST_CASE("woodbury_inverse rejects singular factors") {
    const Matrix a_inv = Matrix::Identity(2, 2);
    Matrix u = Matrix::Zero(2, 1);
    u(0, 0) = 1.0;

    CHECK_THROWS_AS(
        woodbury_inverse(a_inv, u, Matrix::Zero(1, 1), u.transpose()),
        SingularityError);

    // inner matrix C^-1 + V A^-1 U = 1 - 1 = 0
    const Matrix c = Matrix::Constant(1, 1, 1.0);
    CHECK_THROWS_AS(woodbury_inverse(a_inv, u, c, -u.transpose()),
                    SingularityError);
}

TEST_CASE("woodbury_inverse rejects mismatched shapes") {
    const Matrix a_inv = Matrix::Identity(2, 2);
    const Matrix u = Matrix::Zero(2, 1);
    const Matrix c = Matrix::Constant(1, 1, 1.0);
    CHECK_THROWS_AS(woodbury_inverse(a_inv, u, c, Matrix::Zero(1, 3)),
                    ShapeError);
    CHECK_THROWS_AS(woodbury_inverse(Matrix::Zero(2, 3), u, c, u.transpose()),
                    ShapeError);
    CHECK_THROWS_AS(woodbury_inverse(a_inv, Matrix::Zero(3, 1), c, Matrix::Zero(1, 2)),
                    ShapeError);
}

TEST_CASE("sherman_morrison_update on an analytically forced case") {
    // (I + e1 e1^T)^-1 = diag(1/2, 1)
    const Matrix a_inv = Matrix::Identity(2, 2);
    Vector e1 = Vector::Zero(2);
    e1(0) = 1.0;
    const Matrix s = sherman_morrison_update(a_inv, e1, e1);
    CHECK(s(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s(0, 1) == 0.0);
    CHECK(s(1, 0) == 0.0);
}

TEST_CASE("sherman_morrison_update with a zero vector is the identity map") {
    Prng rng(16);
    const Matrix a_inv = direct_inverse(random_well_conditioned(rng, 3));
    const Vector u = Vector::Zero(3);
    const Vector v = random_vector(rng, 3);
    CHECK(max_abs(sherman_morrison_update(a_inv, u, v) - a_inv) == 0.0);
}

TEST_CASE("sherman_morrison_update matches direct inversion") {
    Prng rng(17);
    const Matrix a = random_well_conditioned(rng, 4);
    const Vector u = random_vector(rng, 4);
    const Vector v = random_vector(rng, 4);
    const Matrix expected = direct_inverse(a + u * v.transpose());
    CHECK(max_abs(sherman_morrison_update(direct_inverse(a), u, v) - expected) <=
          1e-10);
}

TEST_CASE("sherman_morrison_update agrees with woodbury_inverse at m = 1") {
    Prng rng(18);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.uniform() * 6.0);
        const Matrix a_inv = direct_inverse(random_well_conditioned(rng, n));
        const Vector u = random_vector(rng, n);
        const Vector v = random_vector(rng, n);
        const Matrix sm = sherman_morrison_update(a_inv, u, v);
        const Matrix wb = woodbury_inverse(a_inv, u, Matrix::Constant(1, 1, 1.0),
                                           v.transpose());
        CHECK(max_abs(sm - wb) <= 1e-12);
    }
}

TEST_CASE("sherman_morrison_update reports a singular rank-one update") {
    const Matrix a_inv = Matrix::Identity(2, 2);
    Vector e1 = Vector::Zero(2);
    e1(0) = 1.0;
    CHECK_THROWS_AS(sherman_morrison_update(a_inv, e1, Vector(-e1)),
                    SingularityError);

    // the floor is configurable: a small but nonzero denominator passes a
    // loose floor and trips a tight one
    Vector v = -e1;
    v(0) = -(1.0 - 1e-6);
    CHECK_NOTHROW(sherman_morrison_update(a_inv, e1, v, 1e-9));
    CHECK_THROWS_AS(sherman_morrison_update(a_inv, e1, v, 1e-3),
                    SingularityError);
    CHECK_THROWS_AS(sherman_morrison_update(a_inv, e1, v, 0.0), ConfigError);
}

TEST_CASE("sherman_morrison_update rejects mismatched dimensions") {
    CHECK_THROWS_AS(
        sherman_morrison_update(Matrix::Identity(2, 2), Vector::Zero(3),
                                Vector::Zero(2)),
        ShapeError);
}

TEST_CASE("symmetrize fixes asymmetry and preserves symmetric input") {
    Matrix m(2, 2);
    m << 1.0, 2.0, 0.0, 1.0;
    const Matrix s = symmetrize(m);
    CHECK(s(0, 0) == 1.0);
    CHECK(s(0, 1) == 1.0);
    CHECK(s(1, 0) == 1.0);
    CHECK(s(1, 1) == 1.0);

    Prng rng(19);
    const Matrix sym = symmetrize(random_matrix(rng, 5, 5));
    CHECK(max_abs(symmetrize(sym) - sym) == 0.0);  // idempotent, exactly
}

TEST_CASE("symmetrize output is exactly symmetric for random input") {
    Prng rng(20);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.uniform() * 7.0);
        const Matrix s = symmetrize(random_matrix(rng, n, n, -100.0, 100.0));
        CHECK(max_abs(s - s.transpose()) == 0.0);
    }
}

TEST_CASE("symmetrize rejects non-square input") {
    CHECK_THROWS_AS(symmetrize(Matrix::Zero(2, 3)), ShapeError);
}
