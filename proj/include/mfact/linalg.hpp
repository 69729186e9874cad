#pragma once

// Dense linear algebra over an exact field.

#include <optional>
#include <vector>

#include "mfact/matrix.hpp"
#include "mfact/scalar.hpp"

namespace mfact {

using Coords = std::vector<Scalar>;

struct Echelon {
    Matrix<Scalar> rows;              // reduced rows, one per pivot
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form. Columns are scanned in the given order (default
/// left to right), so pivots land on the earliest columns of that order.
Echelon rref(const Field& k, const Matrix<Scalar>& A, const std::vector<std::size_t>& column_order = {});

std::size_t rank(const Field& k, const Matrix<Scalar>& A);

/// Basis of {x : A x = 0}.
std::vector<Coords> nullspace(const Field& k, const Matrix<Scalar>& A);

struct FieldSolveResult {
    bool solvable = false;
    Coords solution;
    /// For unsolvable systems: y with y A = 0 and y b = 1.
    Coords certificate;
};

FieldSolveResult solve(const Field& k, const Matrix<Scalar>& A, const Coords& b);

Coords mat_vec(const Field& k, const Matrix<Scalar>& A, const Coords& x);
Matrix<Scalar> identity_matrix(const Field& k, std::size_t n);

}  // namespace mfact
