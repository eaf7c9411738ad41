#include "awrel/matrix.hpp"

#include <cstdlib>

namespace awrel {

namespace {

void require_same_order(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order())
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

}  // namespace

Matrix::Matrix(int order) : order_(order) {
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "matrix order must be >= 1");
    entries_.resize(static_cast<size_t>(order) * order);
}

Matrix Matrix::identity(int order) {
    Matrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Scalar& Matrix::at(int row, int col) {
    if (row < 0 || row >= order_ || col < 0 || col >= order_)
        throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
    return entries_[static_cast<size_t>(row) * order_ + col];
}

const Scalar& Matrix::at(int row, int col) const {
    return const_cast<Matrix*>(this)->at(row, col);
}

bool Matrix::is_zero() const {
    for (const Scalar& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::pair<int, int>> Matrix::first_nonzero() const {
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            if (!at(r, c).is_zero()) return std::pair{r, c};
    return std::nullopt;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_order(*this, o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_order(*this, o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_order(a, b);
    int n = a.order();
    Matrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const Scalar& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix out = m;
    for (int r = 0; r < out.order(); ++r)
        for (int col = 0; col < out.order(); ++col) out.at(r, col) = c * m.at(r, col);
    return out;
}

bool is_irreducible_tridiagonal(const Matrix& m) {
    int n = m.order();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int band = std::abs(r - c);
            if (band > 1 && !m.at(r, c).is_zero()) return false;
            if (band == 1 && m.at(r, c).is_zero()) return false;
        }
    return true;
}

Matrix inverse(const Matrix& m) {
    int n = m.order();
    Matrix work = m;
    Matrix out = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
        for (int c = 0; c < n; ++c) {
            std::swap(work.at(pivot, c), work.at(col, c));
            std::swap(out.at(pivot, c), out.at(col, c));
        }
        Scalar factor = inv(work.at(col, col));
        for (int c = 0; c < n; ++c) {
            work.at(col, c) *= factor;
            out.at(col, c) *= factor;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = work.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                out.at(r, c) -= f * out.at(col, c);
            }
        }
    }
    return out;
}

std::pair<Matrix, Matrix> aw_residuals(const Matrix& a, const Matrix& astar,
                                       const AwCoefficients& k) {
    require_same_order(a, astar);
    int n = a.order();
    Matrix id = Matrix::identity(n);
    Matrix a2 = a * a;
    Matrix as2 = astar * astar;
    Matrix a_as = a * astar;
    Matrix as_a = astar * a;
    Matrix sym = a_as + as_a;

    Matrix r1 = a2 * astar - k.beta * (a_as * a) + astar * a2 - k.gamma * sym -
                k.rho * astar - k.gamma_star * a2 - k.omega * a - k.eta * id;
    Matrix r2 = as2 * a - k.beta * (as_a * astar) + a * as2 - k.gamma_star * sym -
                k.rho_star * a - k.gamma * as2 - k.omega * astar - k.eta_star * id;
    return {r1, r2};
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, int cols) {
    std::vector<int> pivots;
    size_t row = 0;
    for (int col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        Scalar factor = inv(rows[row][col]);
        for (auto& x : rows[row]) x *= factor;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col].is_zero()) continue;
            Scalar f = rows[r][col];
            for (size_t c = col; c < rows[r].size(); ++c)
                rows[r][c] -= f * rows[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

AwCoefficients solve_aw_coefficients(const Matrix& a, const Matrix& astar,
                                     const std::optional<Scalar>& pinned_beta) {
    require_same_order(a, astar);
    int n = a.order();
    if (n <= 2)
        throw Error(ErrorCode::Underdetermined,
                    "coefficients are never unique for d <= 1");

    Matrix a2 = a * a;
    Matrix as2 = astar * astar;
    Matrix a_as = a * astar;
    Matrix as_a = astar * a;
    Matrix sym = a_as + as_a;
    Matrix a_as_a = a_as * a;
    Matrix as_a_as = as_a * astar;
    Matrix rhs1 = a2 * astar + astar * a2;
    Matrix rhs2 = as2 * a + a * as2;

    // Unknowns: beta, gamma, gamma*, rho, rho*, omega, eta, eta*.
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(2 * static_cast<size_t>(n) * n + 1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Scalar delta = (r == c) ? Scalar(1) : Scalar(0);
            rows.push_back({a_as_a.at(r, c), sym.at(r, c), a2.at(r, c),
                            astar.at(r, c), Scalar(0), a.at(r, c), delta, Scalar(0),
                            rhs1.at(r, c)});
            rows.push_back({as_a_as.at(r, c), as2.at(r, c), sym.at(r, c), Scalar(0),
                            a.at(r, c), astar.at(r, c), Scalar(0), delta,
                            rhs2.at(r, c)});
        }
    if (pinned_beta) {
        std::vector<Scalar> pin(9, Scalar(0));
        pin[0] = Scalar(1);
        pin[8] = *pinned_beta;
        rows.push_back(std::move(pin));
    }

    std::vector<int> pivots = rref(rows, 8);
    for (const auto& row : rows) {
        bool lhs_zero = true;
        for (int c = 0; c < 8; ++c)
            if (!row[c].is_zero()) {
                lhs_zero = false;
                break;
            }
        if (lhs_zero && !row[8].is_zero())
            throw Error(ErrorCode::Inconsistent,
                        "the pair satisfies no Askey-Wilson relation");
    }
    if (pivots.size() < 8)
        throw Error(ErrorCode::Underdetermined,
                    "solution space has dimension " +
                        std::to_string(8 - pivots.size()));

    std::vector<Scalar> x(8);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][8];
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
}

}  // namespace awrel
