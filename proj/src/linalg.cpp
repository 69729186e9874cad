#include "mfact/linalg.hpp"

#include <numeric>
#include <stdexcept>

#include "mfact/deadline.hpp"

namespace mfact {

Echelon rref(const Field& k, const Matrix<Scalar>& A, const std::vector<std::size_t>& column_order) {
    std::vector<std::size_t> order = column_order;
    if (order.empty()) {
        order.resize(A.cols);
        std::iota(order.begin(), order.end(), 0);
    }
    Matrix<Scalar> M = A;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c : order) {
        if (r == M.rows) break;
        check_deadline();
        std::size_t p = r;
        while (p < M.rows && M(p, c).is_zero()) ++p;
        if (p == M.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M(p, j), M(r, j));
        Scalar inv = M(r, c).inverse();
        for (std::size_t j = 0; j < M.cols; ++j) M(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r || M(i, c).is_zero()) continue;
            Scalar f = M(i, c);
            for (std::size_t j = 0; j < M.cols; ++j)
                if (!M(r, j).is_zero()) M(i, j) -= f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon e;
    e.rows = Matrix<Scalar>(r, A.cols, Scalar::zero(k));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) e.rows(i, j) = M(i, j);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t rank(const Field& k, const Matrix<Scalar>& A) { return rref(k, A).pivots.size(); }

std::vector<Coords> nullspace(const Field& k, const Matrix<Scalar>& A) {
    Echelon e = rref(k, A);
    std::vector<bool> is_pivot(A.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Coords> out;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        Coords x(A.cols, Scalar::zero(k));
        x[f] = Scalar::one(k);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows(i, f);
        out.push_back(std::move(x));
    }
    return out;
}

FieldSolveResult solve(const Field& k, const Matrix<Scalar>& A, const Coords& b) {
    if (b.size() != A.rows) throw std::invalid_argument("solve: right-hand side length differs from row count");
    // Augment with [b | I] so the row operations are recorded.
    const std::size_t m = A.rows, n = A.cols;
    Matrix<Scalar> aug(m, n + 1 + m, Scalar::zero(k));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[i];
        aug(i, n + 1 + i) = Scalar::one(k);
    }
    std::vector<std::size_t> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    Echelon e = rref(k, aug, order);
    FieldSolveResult out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == n) {
            out.certificate.resize(m);
            for (std::size_t t = 0; t < m; ++t) out.certificate[t] = e.rows(i, n + 1 + t);
            return out;
        }
    }
    out.solvable = true;
    out.solution.assign(n, Scalar::zero(k));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.solution[e.pivots[i]] = e.rows(i, n);
    return out;
}

Coords mat_vec(const Field& k, const Matrix<Scalar>& A, const Coords& x) {
    Coords y(A.rows, Scalar::zero(k));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (!A(i, j).is_zero() && !x[j].is_zero()) y[i] += A(i, j) * x[j];
    return y;
}

Matrix<Scalar> identity_matrix(const Field& k, std::size_t n) {
    Matrix<Scalar> I(n, n, Scalar::zero(k));
    for (std::size_t i = 0; i < n; ++i) I(i, i) = Scalar::one(k);
    return I;
}

}  // namespace mfact
