#include "mfact/ematrix.hpp"

#include <stdexcept>

namespace mfact {

EMatrix zero_matrix(const Backend& B, std::size_t rows, std::size_t cols) { return EMatrix(rows, cols, B.zero()); }

EMatrix identity_matrix(const Backend& B, std::size_t n) { return scalar_matrix(B, n, B.one()); }

EMatrix scalar_matrix(const Backend& B, std::size_t n, const Elem& c) {
    EMatrix m = zero_matrix(B, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

EMatrix compose(const Backend& B, const EMatrix& g, const EMatrix& f) {
    if (g.cols != f.rows)
        throw std::invalid_argument("compose: shapes " + std::to_string(g.rows) + "x" + std::to_string(g.cols) +
                                    " and " + std::to_string(f.rows) + "x" + std::to_string(f.cols) + " do not chain");
    EMatrix out = zero_matrix(B, g.rows, f.cols);
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = 0; j < g.cols; ++j) {
            if (B.is_zero(g(i, j))) continue;
            for (std::size_t k = 0; k < f.cols; ++k) {
                if (B.is_zero(f(j, k))) continue;
                out(i, k) = B.add(out(i, k), B.mul(f(j, k), g(i, j)));
            }
        }
    }
    return out;
}

namespace {
void same_shape(const EMatrix& a, const EMatrix& b, const char* what) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}
}  // namespace

EMatrix add(const Backend& B, const EMatrix& a, const EMatrix& b) {
    same_shape(a, b, "add");
    EMatrix out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = B.add(a.data[i], b.data[i]);
    return out;
}

EMatrix sub(const Backend& B, const EMatrix& a, const EMatrix& b) {
    same_shape(a, b, "sub");
    EMatrix out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = B.sub(a.data[i], b.data[i]);
    return out;
}

EMatrix neg(const Backend& B, const EMatrix& a) {
    EMatrix out = a;
    for (auto& e : out.data) e = B.neg(e);
    return out;
}

EMatrix normalize(const Backend& B, const EMatrix& a) {
    EMatrix out = a;
    for (auto& e : out.data) e = B.normalize(e);
    return out;
}

bool is_zero(const Backend& B, const EMatrix& a) {
    for (const auto& e : a.data)
        if (!B.is_zero(e)) return false;
    return true;
}

bool equal(const Backend& B, const EMatrix& a, const EMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        if (!B.equal(a.data[i], b.data[i])) return false;
    return true;
}

EMatrix transpose(const EMatrix& a) {
    EMatrix out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
    return out;
}

EMatrix block(const EMatrix& a, const EMatrix& b, const EMatrix& c, const EMatrix& d) {
    if (a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols)
        throw std::invalid_argument("block: inconsistent block shapes");
    EMatrix out(a.rows + c.rows, a.cols + b.cols);
    auto put = [&](const EMatrix& m, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) out(r0 + i, c0 + j) = m(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.cols);
    put(c, a.rows, 0);
    put(d, a.rows, a.cols);
    return out;
}

EMatrix block_diag(const Backend& B, const EMatrix& a, const EMatrix& b) {
    return block(a, zero_matrix(B, a.rows, b.cols), zero_matrix(B, b.rows, a.cols), b);
}

EMatrix sub_block(const EMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    if (r0 + rows > a.rows || c0 + cols > a.cols) throw std::invalid_argument("sub_block out of range");
    EMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(r0 + i, c0 + j);
    return out;
}

EMatrix parse_matrix(const Backend& B, const std::vector<std::vector<std::string>>& rows, std::size_t expect_rows,
                     std::size_t expect_cols) {
    if (rows.size() != expect_rows)
        throw std::invalid_argument("expected " + std::to_string(expect_rows) + " rows, got " + std::to_string(rows.size()));
    EMatrix out(expect_rows, expect_cols);
    for (std::size_t i = 0; i < expect_rows; ++i) {
        if (rows[i].size() != expect_cols)
            throw std::invalid_argument("row " + std::to_string(i) + ": expected " + std::to_string(expect_cols) +
                                        " entries, got " + std::to_string(rows[i].size()));
        for (std::size_t j = 0; j < expect_cols; ++j) out(i, j) = B.parse(rows[i][j]);
    }
    return out;
}

std::vector<std::vector<std::string>> render(const Backend& B, const EMatrix& a) {
    std::vector<std::vector<std::string>> out(a.rows, std::vector<std::string>(a.cols));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out[i][j] = B.to_string(a(i, j));
    return out;
}

}  // namespace mfact
