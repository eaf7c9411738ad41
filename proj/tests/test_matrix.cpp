#include <doctest.h>

#include <random>

#include "awrel/families.hpp"
#include "awrel/matrix.hpp"
#include "awrel/parameter_array.hpp"
#include "helpers.hpp"

using namespace awrel;
using namespace awrel::testing;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(static_cast<int>(rows.size()));
    for (int r = 0; r < m.order(); ++r)
        for (int c = 0; c < m.order(); ++c) m.at(r, c) = rat(rows[r][c]);
    return m;
}

FamilySpec krawtchouk_v2(int d) {
    FamilySpec spec = l7_spec(Family::Krawtchouk, d);
    spec.params.v = rat(2);
    return spec;
}

}  // namespace

TEST_CASE("basic matrix arithmetic") {
    Matrix x = from_rows({{0, 1}, {0, 0}});
    Matrix y = from_rows({{0, 0}, {1, 0}});
    CHECK(x * y == from_rows({{1, 0}, {0, 0}}));
    CHECK(Matrix::identity(2) * x == x);
    CHECK(rat(0) * x == Matrix(2));
    CHECK(x + y == from_rows({{0, 1}, {1, 0}}));
    CHECK(x - x == Matrix(2));
    CHECK(rat(-2) * y == from_rows({{0, 0}, {-2, 0}}));
    CHECK_THROWS_AS(x * Matrix(3), Error);
    CHECK_THROWS_AS(x + Matrix(3), Error);
}

TEST_CASE("irreducible tridiagonal predicate") {
    CHECK(is_irreducible_tridiagonal(from_rows({{5}})));
    CHECK(is_irreducible_tridiagonal(from_rows({{1, 2, 0}, {3, 4, 5}, {0, 6, 7}})));
    // zero subdiagonal entry
    CHECK(!is_irreducible_tridiagonal(from_rows({{1, 2, 0}, {0, 4, 5}, {0, 6, 7}})));
    // entry outside the band
    CHECK(!is_irreducible_tridiagonal(from_rows({{1, 2, 9}, {3, 4, 5}, {0, 6, 7}})));
    // zero entries on the band itself are fine off the two critical diagonals
    CHECK(is_irreducible_tridiagonal(from_rows({{0, 2, 0}, {3, 0, 5}, {0, 6, 0}})));
    // the split matrices are bidiagonal: one critical diagonal is zero
    auto [a, astar] = split1(generate(krawtchouk_v2(3)));
    CHECK(!is_irreducible_tridiagonal(a));      // zero superdiagonal
    CHECK(!is_irreducible_tridiagonal(astar));  // zero subdiagonal
}

TEST_CASE("residuals vanish exactly on a matching tuple and not otherwise") {
    auto [a, astar] = split1(generate(krawtchouk_v2(3)));
    AwCoefficients k{rat(2), rat(0), rat(0), rat(1), rat(1), rat(3), rat(0), rat(0)};
    auto [r1, r2] = aw_residuals(a, astar, k);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());

    AwCoefficients perturbed = k;
    perturbed.omega = rat(4);
    auto [p1, p2] = aw_residuals(a, astar, perturbed);
    CHECK(!(p1.is_zero() && p2.is_zero()));
    CHECK(p1.first_nonzero().has_value());
}

TEST_CASE("oracle solve matches frozen values") {
    FamilySpec spec = q_spec(Family::DualQKrawtchouk, Normalization::L5, 3);
    auto [a, astar] = split1(generate(spec));
    AwCoefficients k = solve_aw_coefficients(a, astar);
    CHECK(k.beta == rat(5, 2));
    CHECK(k.gamma == rat(0));
    CHECK(k.gamma_star == rat(0));
    CHECK(k.rho == rat(-27, 2));
    CHECK(k.rho_star == rat(0));
    CHECK(k.omega == rat(-49, 16));
    CHECK(k.eta == rat(153, 16));
    CHECK(k.eta_star == rat(0));

    auto [kr_a, kr_astar] = split1(generate(krawtchouk_v2(3)));
    AwCoefficients kr = solve_aw_coefficients(kr_a, kr_astar);
    CHECK(kr ==
          AwCoefficients{rat(2), rat(0), rat(0), rat(1), rat(1), rat(3), rat(0), rat(0)});
}

TEST_CASE("solve(a, astar) reproduces any tuple the residuals accept") {
    FamilySpec spec = q_spec(Family::QRacah, Normalization::L6, 4);
    auto [a, astar] = split1(generate(spec));
    AwCoefficients k = solve_aw_coefficients(a, astar);
    auto [r1, r2] = aw_residuals(a, astar, k);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
}

TEST_CASE("degenerate pairs: commuting, collapsed, structureless") {
    SUBCASE("generic commuting diagonals satisfy only the trivial relation") {
        Matrix a(4), astar(4);
        long diag_a[] = {1, 2, 3, 4};
        long diag_b[] = {5, 7, 11, 13};
        for (int i = 0; i < 4; ++i) {
            a.at(i, i) = rat(diag_a[i]);
            astar.at(i, i) = rat(diag_b[i]);
        }
        // X^2 Y - 2 X Y X + Y X^2 = 0 for commuting X, Y: the solved tuple
        // is AW(2,0,0,0,0,0,0,0) and the residuals accept it.
        AwCoefficients k = solve_aw_coefficients(a, astar);
        CHECK(k == AwCoefficients{rat(2), rat(0), rat(0), rat(0), rat(0), rat(0),
                                  rat(0), rat(0)});
        auto [r1, r2] = aw_residuals(a, astar, k);
        CHECK(r1.is_zero());
        CHECK(r2.is_zero());
    }

    SUBCASE("repeated eigenvalues leave the system underdetermined") {
        Matrix a(4), astar(4);
        for (int i = 0; i < 4; ++i) {
            a.at(i, i) = rat(i < 2 ? 1 : 2);
            astar.at(i, i) = rat(i % 2 ? 3 : 4);
        }
        try {
            solve_aw_coefficients(a, astar);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Underdetermined);
        }
    }

    SUBCASE("a structureless pair satisfies no AW relation") {
        Matrix a = from_rows(
            {{1, 2, 0, 0}, {3, 4, 5, 0}, {0, 6, 7, 8}, {0, 0, 9, 1}});
        Matrix astar = from_rows(
            {{2, 1, 0, 0}, {1, 3, 1, 0}, {0, 1, 5, 1}, {0, 0, 1, 7}});
        try {
            solve_aw_coefficients(a, astar);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Inconsistent);
        }
    }
}

TEST_CASE("small diameters") {
    // d <= 1: always underdetermined
    Matrix a(2), astar(2);
    a.at(0, 0) = rat(1);
    a.at(1, 0) = rat(1);
    a.at(1, 1) = rat(2);
    astar.at(0, 0) = rat(3);
    astar.at(0, 1) = rat(4);
    astar.at(1, 1) = rat(5);
    CHECK_THROWS_AS(solve_aw_coefficients(a, astar), Error);

    // d = 2: beta is free; pinning it makes the rest unique
    FamilySpec spec = l7_spec(Family::Krawtchouk, 2);
    auto [ka, kastar] = split1(generate(spec));
    CHECK_THROWS_AS(solve_aw_coefficients(ka, kastar), Error);
    AwCoefficients pinned = solve_aw_coefficients(ka, kastar, rat(2));
    CHECK(pinned.beta == rat(2));
    CHECK(pinned.rho == rat(1));
    CHECK(pinned.rho_star == rat(1));
    CHECK(pinned.omega == rat(5));  // 2v - 1 with v = 3
    auto [r1, r2] = aw_residuals(ka, kastar, pinned);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
}

TEST_CASE("solution is invariant under simultaneous conjugation") {
    std::mt19937_64 rng(23);
    FamilySpec spec = q_spec(Family::QHahn, Normalization::L6, 3);
    auto [a, astar] = split1(generate(spec));
    AwCoefficients reference = solve_aw_coefficients(a, astar);

    for (int trial = 0; trial < 5; ++trial) {
        int n = a.order();
        // unit lower-triangular times unit upper-triangular: invertible
        Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (r > c) lower.at(r, c) = random_rational(rng);
                if (r < c) upper.at(r, c) = random_rational(rng);
            }
        Matrix p = lower * upper;
        Matrix pinv = inverse(p);
        CHECK(p * pinv == Matrix::identity(n));
        AwCoefficients conjugated =
            solve_aw_coefficients(p * a * pinv, p * astar * pinv);
        CHECK(conjugated == reference);
    }
}

TEST_CASE("inverse rejects singular input") {
    Matrix m(2);
    m.at(0, 0) = rat(1);
    m.at(1, 0) = rat(2);
    CHECK_THROWS_AS(inverse(m), Error);
}
