#ifndef AWREL_MATRIX_HPP
#define AWREL_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "awrel/relations.hpp"
#include "awrel/scalar.hpp"

namespace awrel {

// Dense square matrix over Scalar, row-major.
class Matrix {
public:
    explicit Matrix(int order);
    static Matrix identity(int order);

    int order() const { return order_; }

    Scalar& at(int row, int col);
    const Scalar& at(int row, int col) const;

    bool is_zero() const;
    // Row-major position of the first nonzero entry, if any.
    std::optional<std::pair<int, int>> first_nonzero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int order_;
    std::vector<Scalar> entries_;
};

// True iff all entries strictly outside the three central diagonals are zero
// and every super- and subdiagonal entry is nonzero.
bool is_irreducible_tridiagonal(const Matrix& m);

Matrix inverse(const Matrix& m);

// (LHS - RHS) of the two Askey-Wilson relations; both zero iff (a, astar)
// satisfies AW(k).
std::pair<Matrix, Matrix> aw_residuals(const Matrix& a, const Matrix& astar,
                                       const AwCoefficients& k);

// Independent oracle: flattens the two relations into 2 n^2 equations linear
// in the 8 coefficients and solves them by exact Gaussian elimination. Unique
// on Leonard-pair input with d >= 3; d = 2 needs pinned_beta; d <= 1 is
// always reported Underdetermined.
AwCoefficients solve_aw_coefficients(const Matrix& a, const Matrix& astar,
                                     const std::optional<Scalar>& pinned_beta = {});

}  // namespace awrel

#endif
