#pragma once

// Matrices with backend entries. Composition follows the left-module
// convention: (g o f)(i,k) = sum_j f(j,k) * g(i,j). Over a commutative
// backend this is the ordinary product g * f.

#include <string>
#include <vector>

#include "mfact/backend.hpp"

namespace mfact {

using EMatrix = Matrix<Elem>;

EMatrix zero_matrix(const Backend& B, std::size_t rows, std::size_t cols);
EMatrix identity_matrix(const Backend& B, std::size_t n);
/// c on the diagonal.
EMatrix scalar_matrix(const Backend& B, std::size_t n, const Elem& c);

/// g o f. Throws std::invalid_argument unless g.cols == f.rows.
EMatrix compose(const Backend& B, const EMatrix& g, const EMatrix& f);
EMatrix add(const Backend& B, const EMatrix& a, const EMatrix& b);
EMatrix sub(const Backend& B, const EMatrix& a, const EMatrix& b);
EMatrix neg(const Backend& B, const EMatrix& a);
EMatrix normalize(const Backend& B, const EMatrix& a);
bool is_zero(const Backend& B, const EMatrix& a);
bool equal(const Backend& B, const EMatrix& a, const EMatrix& b);
EMatrix transpose(const EMatrix& a);

/// [[a, b], [c, d]]; block shapes must agree.
EMatrix block(const EMatrix& a, const EMatrix& b, const EMatrix& c, const EMatrix& d);
/// diag(a, b) with zero off-diagonal blocks.
EMatrix block_diag(const Backend& B, const EMatrix& a, const EMatrix& b);
EMatrix sub_block(const EMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);

EMatrix parse_matrix(const Backend& B, const std::vector<std::vector<std::string>>& rows, std::size_t expect_rows,
                     std::size_t expect_cols);
std::vector<std::vector<std::string>> render(const Backend& B, const EMatrix& a);

}  // namespace mfact
