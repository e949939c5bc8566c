#include <doctest.h>

#include <random>

#include "nakwide/linalg.hpp"
#include "test_support.hpp"

using namespace nakwide;
using namespace nakwide::linalg;

namespace {

Matrix random_matrix(PrimeField f, std::size_t rows, std::size_t cols, std::mt19937& rng, int density = 2)
{
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<std::uint32_t> value(0, f.characteristic() - 1);
    std::uniform_int_distribution<int> coin(0, density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) == 0)
                m(r, c) = value(rng);
    return m;
}

} // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField f(101);
    CHECK(f.mul(f.inv(37), 37) == 1);
    CHECK(f.from_int(-1) == 100);
    CHECK(f.add(100, 5) == 4);
    CHECK(nakwide::testing::throws_kind(ErrorKind::InvalidConfig, [] { PrimeField bad(100); }));
    CHECK(nakwide::testing::throws_kind(ErrorKind::InvalidConfig, [] { PrimeField bad(1); }));
}

TEST_CASE("rank, nullspace and rref on a fixed matrix")
{
    PrimeField f(2);
    const auto m = Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(m) == 2); // rows sum to zero over F_2
    const auto k = nullspace(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());

    PrimeField g(101);
    const auto m2 = Matrix::from_rows(g, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(m2) == 3);
}

TEST_CASE("empty shapes")
{
    PrimeField f(2);
    CHECK(rank(Matrix(f, 0, 3)) == 0);
    CHECK(nullspace(Matrix(f, 0, 3)).cols() == 3);
    CHECK(nullspace(Matrix(f, 3, 0)).cols() == 0);
    CHECK(complement_columns(Matrix(f, 2, 0)).cols() == 2);
    CHECK(inverse(Matrix(f, 0, 0)).rows() == 0);
}

TEST_CASE("property: rank-nullity, kernel membership and solve round trip")
{
    std::mt19937 rng(20261015);
    for (std::uint32_t p : {2u, 3u, 101u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t rows = rng() % 7, cols = rng() % 7;
            const Matrix a = random_matrix(f, rows, cols, rng);
            const Matrix k = nullspace(a);
            CHECK(rank(a) + k.cols() == cols);
            CHECK((a * k).is_zero());
            CHECK(rank(k) == k.cols());

            const Matrix x = random_matrix(f, cols, 2, rng);
            const Matrix b = a * x;
            const auto solved = solve(a, b);
            REQUIRE(solved.has_value());
            CHECK(a * *solved == b);

            const Matrix c = complement_columns(a);
            CHECK(rank(hstack({a, c}, f, rows)) == rows);
            CHECK(c.cols() == rows - rank(a));
        }
    }
}

TEST_CASE("property: inverse of random invertible matrices")
{
    std::mt19937 rng(7);
    PrimeField f(101);
    int tested = 0;
    while (tested < 40) {
        const std::size_t n = 1 + rng() % 6;
        const Matrix a = random_matrix(f, n, n, rng, 0);
        if (rank(a) != n) {
            CHECK(nakwide::testing::throws_kind(ErrorKind::PreconditionViolation, [&] { inverse(a); }));
            continue;
        }
        CHECK(a * inverse(a) == Matrix::identity(f, n));
        ++tested;
    }
}

TEST_CASE("inconsistent systems have no solution")
{
    PrimeField f(2);
    const auto a = Matrix::from_rows(f, {{1, 0}, {1, 0}});
    const auto b = Matrix::from_rows(f, {{1}, {0}});
    CHECK_FALSE(solve(a, b).has_value());
}
