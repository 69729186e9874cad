#pragma once

// Linear equations whose unknowns are matrices over a backend. Over a
// polynomial quotient the map must be linear over the ring (commutative);
// over a finite-dimensional algebra it need only be linear over the field.

#include <functional>
#include <string>
#include <vector>

#include "mfact/ematrix.hpp"

namespace mfact {

struct Shape {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

using EMatrices = std::vector<EMatrix>;
using LinearMap = std::function<EMatrices(const EMatrices&)>;

struct LinearSystem {
    std::vector<Shape> unknowns;
    LinearMap apply;
    EMatrices rhs;
};

/// Evidence that a system has no solution.
struct NoSolutionCertificate {
    /// "module-groebner": rhs has nonzero remainder modulo a Groebner basis of
    /// the column module (plus the defining ideal). "field-elimination": a
    /// functional vanishing on the image and taking value 1 on rhs.
    std::string method;
    std::vector<std::string> basis;
    std::string remainder;
    std::vector<std::string> functional;
};

struct SystemSolution {
    bool solvable = false;
    EMatrices x;
    NoSolutionCertificate certificate;
};

EMatrices zero_unknowns(const Backend& B, const std::vector<Shape>& shapes);

/// Solves apply(x) = rhs. The returned solution is re-verified.
SystemSolution solve_system(const Backend& B, const LinearSystem& sys);

/// Generators of {x : apply(x) = 0}: module generators over a polynomial
/// quotient, a field basis over an algebra.
std::vector<EMatrices> kernel_system(const Backend& B, const std::vector<Shape>& unknowns, const LinearMap& apply);

/// Field-linear matrix of apply on coordinates (finite-dimensional backends).
Matrix<Scalar> field_matrix(const Backend& B, const std::vector<Shape>& unknowns, const LinearMap& apply);
/// Coordinates of a tuple of matrices, and the inverse.
Coords flatten_coords(const Backend& B, const EMatrices& xs);
EMatrices unflatten_coords(const Backend& B, const std::vector<Shape>& shapes, const Coords& c);

}  // namespace mfact
