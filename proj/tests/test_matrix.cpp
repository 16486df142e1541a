#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rcnorm/matrix.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace rcnorm;

namespace {

// Independent extended-precision oracle for per-line statistics: long
// double accumulation, classic two-pass form. Deliberately separate from
// the library path.
void oracle_line_stats(const std::vector<long double>& line, double& mean,
                       double& std_dev) {
    long double sum = 0.0L;
    for (long double v : line) sum += v;
    const long double mu = sum / static_cast<long double>(line.size());
    long double ss = 0.0L;
    for (long double v : line) ss += (v - mu) * (v - mu);
    mean = static_cast<double>(mu);
    std_dev = static_cast<double>(std::sqrt(ss / static_cast<long double>(line.size())));
}

} // namespace

TEST_CASE("matrix construction and validation") {
    Matrix m(2, 3, 1.5);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 1.5);

    CHECK_THROWS_AS(Matrix(0, 3), InvalidInputError);
    CHECK_THROWS_AS(Matrix(3, 0), InvalidInputError);
    CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>{1.0, 2.0, 3.0}), InvalidInputError);
    CHECK_THROWS_AS(Matrix({{1.0, 2.0}, {3.0}}), InvalidInputError);

    Matrix nan_matrix{{1.0, std::nan("")}, {0.0, 2.0}};
    CHECK_FALSE(nan_matrix.all_finite());
    CHECK(m.all_finite());
}

TEST_CASE("row_stats on the printed 3x3 fixture") {
    const RowColumnStats stats = row_stats(fixtures::kX0_3x3);
    CHECK(stats.axis == Axis::Rows);
    CHECK(stats.means[0] == doctest::Approx(fixtures::kRow1Mean).epsilon(1e-12));
    CHECK(stats.std_devs[0] == doctest::Approx(fixtures::kRow1Std).epsilon(1e-10));
}

TEST_CASE("row_stats trivial lines") {
    const Matrix zeros(1, 4, 0.0);
    const RowColumnStats z = row_stats(zeros);
    CHECK(z.means[0] == 0.0);
    CHECK(z.std_devs[0] == 0.0);

    const Matrix symmetric{{-1.0, 0.0, 1.0}};
    const RowColumnStats s = row_stats(symmetric);
    CHECK(s.means[0] == doctest::Approx(0.0));
    CHECK(s.std_devs[0] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("column_stats on the printed 3x3 fixture") {
    const RowColumnStats stats = column_stats(fixtures::kX0_3x3);
    CHECK(stats.axis == Axis::Columns);
    CHECK(stats.means[0] == doctest::Approx(fixtures::kCol1Mean).epsilon(1e-10));
    // top-left entry of the column-polished display
    CHECK(fixtures::kX0_3x3(0, 0) - stats.means[0] == doctest::Approx(-0.4307).epsilon(5e-4));
}

TEST_CASE("column_stats of constant columns") {
    const Matrix constant(3, 2, 4.25);
    const RowColumnStats stats = column_stats(constant);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(stats.means[j] == 4.25);
        CHECK(stats.std_devs[j] == 0.0);
    }
}

TEST_CASE("column_stats matches the extended-precision oracle on random input") {
    std::mt19937_64 engine(2024);
    const Matrix m = testutil::random_matrix(4, 5, engine);
    const RowColumnStats stats = column_stats(m);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<long double> col;
        for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m(i, j));
        double mean = 0.0, std_dev = 0.0;
        oracle_line_stats(col, mean, std_dev);
        CHECK(stats.means[j] == doctest::Approx(mean).epsilon(1e-12));
        CHECK(stats.std_devs[j] == doctest::Approx(std_dev).epsilon(1e-12));
    }
}

TEST_CASE("squared_frobenius_diff basics") {
    const Matrix a(2, 2, 0.0);
    const Matrix b(2, 2, 1.0);
    CHECK(squared_frobenius_diff(a, a) == 0.0);
    CHECK(squared_frobenius_diff(a, b) == 4.0);
    CHECK_THROWS_AS(squared_frobenius_diff(a, Matrix(2, 3)), ShapeMismatchError);
}

TEST_CASE("variance decomposition: k*(std^2 + mean^2) sums to the squared norm") {
    std::mt19937_64 engine(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = testutil::random_matrix(5, 7, engine, -3.0, 5.0);
        const RowColumnStats stats = row_stats(m);
        double lhs = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            lhs += static_cast<double>(m.cols()) *
                   (stats.std_devs[i] * stats.std_devs[i] + stats.means[i] * stats.means[i]);
        double rhs = 0.0;
        for (double v : m.values()) rhs += v * v;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("squared_frobenius_diff is symmetric and zero iff equal") {
    std::mt19937_64 engine(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix a = testutil::random_matrix(3, 4, engine, -1.0, 1.0);
        Matrix b = testutil::random_matrix(3, 4, engine, -1.0, 1.0);
        CHECK(squared_frobenius_diff(a, b) == squared_frobenius_diff(b, a));
        CHECK(squared_frobenius_diff(a, a) == 0.0);
        b = a;
        b(1, 2) += 1e-9;
        CHECK(squared_frobenius_diff(a, b) > 0.0);
    }
}

TEST_CASE("row_stats equals column_stats of the transpose") {
    std::mt19937_64 engine(13);
    const Matrix m = testutil::random_matrix(6, 4, engine, -2.0, 2.0);
    const RowColumnStats rows = row_stats(m);
    const RowColumnStats cols = column_stats(testutil::transpose(m));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        CHECK(rows.means[i] == doctest::Approx(cols.means[i]).epsilon(1e-14));
        CHECK(rows.std_devs[i] == doctest::Approx(cols.std_devs[i]).epsilon(1e-14));
    }
}
