#include "mfact/linsys.hpp"

#include <stdexcept>

namespace mfact {

EMatrices zero_unknowns(const Backend& B, const std::vector<Shape>& shapes) {
    EMatrices xs;
    for (const auto& s : shapes) xs.push_back(zero_matrix(B, s.rows, s.cols));
    return xs;
}

namespace {

std::size_t entry_count(const std::vector<Shape>& shapes) {
    std::size_t n = 0;
    for (const auto& s : shapes) n += s.rows * s.cols;
    return n;
}

// Unknown tuple with entry number `pos` set to e.
EMatrices unit_unknowns(const Backend& B, const std::vector<Shape>& shapes, std::size_t pos, const Elem& e) {
    EMatrices xs = zero_unknowns(B, shapes);
    for (auto& x : xs) {
        if (pos < x.data.size()) {
            x.data[pos] = e;
            return xs;
        }
        pos -= x.data.size();
    }
    throw std::out_of_range("unit_unknowns");
}

std::vector<Elem> flatten(const EMatrices& xs) {
    std::vector<Elem> out;
    for (const auto& x : xs) out.insert(out.end(), x.data.begin(), x.data.end());
    return out;
}

EMatrices unflatten(const std::vector<Shape>& shapes, const std::vector<Elem>& v) {
    EMatrices xs;
    std::size_t pos = 0;
    for (const auto& s : shapes) {
        EMatrix m(s.rows, s.cols);
        for (auto& e : m.data) e = v[pos++];
        xs.push_back(std::move(m));
    }
    return xs;
}

void check_outputs(const EMatrices& out, const EMatrices& rhs) {
    if (out.size() != rhs.size()) throw std::invalid_argument("linear system: output count differs from rhs");
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].rows != rhs[i].rows || out[i].cols != rhs[i].cols)
            throw std::invalid_argument("linear system: output shape differs from rhs");
}

bool verify(const Backend& B, const LinearSystem& sys, const EMatrices& x) {
    EMatrices out = sys.apply(x);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!equal(B, out[i], sys.rhs[i])) return false;
    return true;
}

}  // namespace

Coords flatten_coords(const Backend& B, const EMatrices& xs) {
    Coords out;
    for (const auto& x : xs)
        for (const auto& e : x.data) {
            Coords c = B.coordinates(e);
            out.insert(out.end(), c.begin(), c.end());
        }
    return out;
}

EMatrices unflatten_coords(const Backend& B, const std::vector<Shape>& shapes, const Coords& c) {
    const std::vector<Elem> basis = B.k_basis();
    const std::size_t dim = basis.size();
    std::vector<Elem> entries;
    for (std::size_t pos = 0; pos < entry_count(shapes); ++pos) {
        Elem e = B.zero();
        for (std::size_t t = 0; t < dim; ++t)
            if (!c[pos * dim + t].is_zero()) e = B.add(e, B.scale(basis[t], c[pos * dim + t]));
        entries.push_back(std::move(e));
    }
    return unflatten(shapes, entries);
}

Matrix<Scalar> field_matrix(const Backend& B, const std::vector<Shape>& unknowns, const LinearMap& apply) {
    if (!B.k_dimension()) throw std::logic_error("field_matrix needs a finite-dimensional backend");
    const std::vector<Elem> basis = B.k_basis();
    const std::size_t dim = basis.size();
    const std::size_t n = entry_count(unknowns);
    Matrix<Scalar> M;
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t t = 0; t < dim; ++t) {
            Coords col = flatten_coords(B, apply(unit_unknowns(B, unknowns, pos, basis[t])));
            if (M.cols == 0 && M.rows == 0) M = Matrix<Scalar>(col.size(), n * dim, Scalar::zero(B.field()));
            for (std::size_t r = 0; r < col.size(); ++r) M(r, pos * dim + t) = col[r];
        }
    }
    if (n == 0 || dim == 0) {
        Coords out = flatten_coords(B, apply(zero_unknowns(B, unknowns)));
        M = Matrix<Scalar>(out.size(), 0, Scalar::zero(B.field()));
    }
    return M;
}

SystemSolution solve_system(const Backend& B, const LinearSystem& sys) {
    check_outputs(sys.apply(zero_unknowns(B, sys.unknowns)), sys.rhs);
    SystemSolution out;
    if (auto* rb = dynamic_cast<const RingBackend*>(&B)) {
        const QuotientRing& R = rb->ring();
        const std::size_t n = entry_count(sys.unknowns);
        std::vector<Elem> rhs = flatten(sys.rhs);
        Matrix<Poly> A(rhs.size(), n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Elem> col = flatten(sys.apply(unit_unknowns(B, sys.unknowns, j, B.one())));
            for (std::size_t i = 0; i < col.size(); ++i) A(i, j) = std::get<Poly>(col[i]);
        }
        std::vector<Poly> b;
        for (const auto& e : rhs) b.push_back(std::get<Poly>(e));
        LinearSolveResult r = solve_linear(R, A, b);
        if (!r.solvable) {
            out.certificate.method = "module-groebner";
            for (const auto& g : r.module_basis) out.certificate.basis.push_back(to_string(R.poly(), g, rhs.size()));
            out.certificate.remainder = to_string(R.poly(), r.remainder, rhs.size());
            return out;
        }
        std::vector<Elem> x(r.solution.begin(), r.solution.end());
        out.x = unflatten(sys.unknowns, x);
    } else {
        Matrix<Scalar> A = field_matrix(B, sys.unknowns, sys.apply);
        FieldSolveResult r = solve(B.field(), A, flatten_coords(B, sys.rhs));
        if (!r.solvable) {
            out.certificate.method = "field-elimination";
            for (const auto& c : r.certificate) out.certificate.functional.push_back(c.to_string());
            return out;
        }
        out.x = unflatten_coords(B, sys.unknowns, r.solution);
    }
    if (!verify(B, sys, out.x)) throw std::logic_error("solve_system: solution failed verification");
    out.solvable = true;
    return out;
}

std::vector<EMatrices> kernel_system(const Backend& B, const std::vector<Shape>& unknowns, const LinearMap& apply) {
    std::vector<EMatrices> out;
    if (auto* rb = dynamic_cast<const RingBackend*>(&B)) {
        const std::size_t n = entry_count(unknowns);
        std::size_t m = flatten(apply(zero_unknowns(B, unknowns))).size();
        Matrix<Poly> A(m, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Elem> col = flatten(apply(unit_unknowns(B, unknowns, j, B.one())));
            for (std::size_t i = 0; i < m; ++i) A(i, j) = std::get<Poly>(col[i]);
        }
        if (n == 0) return out;
        for (auto& s : kernel(rb->ring(), A)) out.push_back(unflatten(unknowns, std::vector<Elem>(s.begin(), s.end())));
    } else {
        Matrix<Scalar> A = field_matrix(B, unknowns, apply);
        for (auto& v : nullspace(B.field(), A)) out.push_back(unflatten_coords(B, unknowns, v));
    }
    return out;
}

}  // namespace mfact
