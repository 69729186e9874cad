#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace oracle {

namespace {
std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }
}  // namespace

TPoly from_poly(const mfact::Poly& f, std::size_t nvars) {
    TPoly out;
    for (const auto& t : f.terms) {
        Exps e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<int>(t.mono[i]);
        out.c[e] = static_cast<std::int64_t>(t.coef.residue());
    }
    return out;
}

TPoly tmul(const TPoly& a, const TPoly& b, std::int64_t p) {
    TPoly out;
    for (const auto& [ea, ca] : a.c)
        for (const auto& [eb, cb] : b.c) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto& slot = out.c[e];
            slot = md(slot + ca * cb, p);
            if (slot == 0) out.c.erase(e);
        }
    return out;
}

TPoly tadd(const TPoly& a, const TPoly& b, std::int64_t p) {
    TPoly out = a;
    for (const auto& [e, c] : b.c) {
        auto& slot = out.c[e];
        slot = md(slot + c, p);
        if (slot == 0) out.c.erase(e);
    }
    return out;
}

TPoly tscale(const TPoly& a, std::int64_t s, std::int64_t p) {
    TPoly out;
    for (const auto& [e, c] : a.c)
        if (md(c * s, p)) out.c[e] = md(c * s, p);
    return out;
}

TPoly tmono(const Exps& e) {
    TPoly out;
    out.c[e] = 1;
    return out;
}

int tdeg(const TPoly& a) {
    int d = -1;
    for (const auto& [e, c] : a.c) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool tzero(const TPoly& a) { return a.c.empty(); }

std::vector<Exps> monomials(std::size_t nvars, int lo, int hi) {
    std::vector<Exps> out;
    Exps e(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    for (int d = lo; d <= hi; ++d) {
        if (nvars == 0) {
            if (d == 0) out.push_back(e);
            continue;
        }
        rec(0, d);
    }
    return out;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, b = md(a, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::vector<std::int64_t> Span::reduce(std::vector<std::int64_t> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t c = pivots_[k];
        if (v[c] == 0) continue;
        const std::int64_t f = v[c];
        for (std::size_t j = 0; j < dim_; ++j) v[j] = md(v[j] - f * rows_[k][j], p_);
    }
    return v;
}

bool Span::insert(std::vector<std::int64_t> v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    const std::int64_t inv = inv_mod(v[c], p_);
    for (auto& x : v) x = x * inv % p_;
    // keep rows fully reduced against the new pivot
    for (auto& r : rows_) {
        if (r[c] == 0) continue;
        const std::int64_t f = r[c];
        for (std::size_t j = 0; j < dim_; ++j) r[j] = md(r[j] - f * v[j], p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
}

bool Span::contains(std::vector<std::int64_t> v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
    if (rows.empty()) return 0;
    Span s(rows[0].size(), p);
    for (auto& r : rows) s.insert(std::move(r));
    return s.rank();
}

Coordinates::Coordinates(std::size_t nvars, int max_degree, std::size_t components) : comps_(components) {
    for (const auto& e : monomials(nvars, 0, max_degree)) index_.emplace(e, index_.size());
}

std::optional<std::vector<std::int64_t>> Coordinates::vec(const std::vector<TPoly>& v) const {
    std::vector<std::int64_t> out(dim(), 0);
    for (std::size_t k = 0; k < v.size(); ++k)
        for (const auto& [e, c] : v[k].c) {
            auto it = index_.find(e);
            if (it == index_.end()) return std::nullopt;
            out[k * index_.size() + it->second] = c;
        }
    return out;
}

bool member_bounded(const TPoly& f, const std::vector<TPoly>& gens, std::size_t nvars, int D, std::int64_t p) {
    Coordinates co(nvars, D, 1);
    Span span(co.dim(), p);
    for (const auto& g : gens) {
        const int dg = tdeg(g);
        if (dg < 0 || dg > D) continue;
        for (const auto& m : monomials(nvars, 0, D - dg)) span.insert(*co.vec({tmul(tmono(m), g, p)}));
    }
    auto v = co.vec({f});
    return v && span.contains(*v);
}

bool solvable_bounded(const std::vector<std::vector<TPoly>>& A, const std::vector<TPoly>& b,
                      const std::vector<TPoly>& ideal, std::size_t nvars, int D, std::int64_t p) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    Coordinates co(nvars, D, m);
    Span span(co.dim(), p);
    for (std::size_t j = 0; j < n; ++j) {
        int dcol = 0;
        for (std::size_t i = 0; i < m; ++i) dcol = std::max(dcol, tdeg(A[i][j]));
        for (const auto& mono : monomials(nvars, 0, D - dcol)) {
            std::vector<TPoly> col(m);
            for (std::size_t i = 0; i < m; ++i) col[i] = tmul(tmono(mono), A[i][j], p);
            span.insert(*co.vec(col));
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& g : ideal) {
            const int dg = tdeg(g);
            if (dg < 0 || dg > D) continue;
            for (const auto& mono : monomials(nvars, 0, D - dg)) {
                std::vector<TPoly> col(m);
                col[i] = tmul(tmono(mono), g, p);
                span.insert(*co.vec(col));
            }
        }
    auto v = co.vec(b);
    return v && span.contains(*v);
}

std::pair<std::size_t, std::size_t> graded_exactness(const std::vector<std::vector<TPoly>>& A, int degA,
                                                     const std::vector<std::vector<TPoly>>& P, int degP,
                                                     const std::vector<TPoly>& ideal, std::size_t nvars, int t,
                                                     std::int64_t p) {
    const std::size_t n = P.size();  // C_q has rank n
    const std::size_t m = A.size();
    const std::size_t np = n ? P[0].size() : 0;
    auto hom = [&](int deg) { return monomials(nvars, deg, deg); };
    // I_deg as a span inside k[x]_deg
    auto ideal_part = [&](int deg) {
        std::vector<TPoly> out;
        for (const auto& g : ideal) {
            const int dg = tdeg(g);
            if (dg < 0 || dg > deg) continue;
            for (const auto& mono : hom(deg - dg)) out.push_back(tmul(tmono(mono), g, p));
        }
        return out;
    };
    const auto basis_t = hom(t);
    std::map<Exps, std::size_t> idx_t, idx_u;
    for (const auto& e : basis_t) idx_t.emplace(e, idx_t.size());
    const auto basis_u = hom(t + degA);
    for (const auto& e : basis_u) idx_u.emplace(e, idx_u.size());
    const auto It = ideal_part(t), Iu = ideal_part(t + degA);

    // Kernel of A on R_t^n: u with A u in I^m. Work in the quotient by
    // eliminating: unknowns are coefficients of u (n * |basis_t|) and of
    // ideal multiples in the target (m * |Iu|).
    const std::size_t nu = n * basis_t.size();
    const std::size_t target_dim = m * basis_u.size();
    // Columns: images of unit unknowns; the kernel we want is the projection
    // onto the u-part of the nullspace of [A_t | -I_u], modulo I_t^n.
    std::vector<std::vector<std::int64_t>> cols;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& e : basis_t) {
            std::vector<std::int64_t> col(target_dim, 0);
            for (std::size_t i = 0; i < m; ++i) {
                TPoly img = tmul(A[i][k], tmono(e), p);
                for (const auto& [ee, c] : img.c) col[i * basis_u.size() + idx_u.at(ee)] = c;
            }
            cols.push_back(col);
        }
    const std::size_t n_ideal_cols = m * Iu.size();
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& g : Iu) {
            std::vector<std::int64_t> col(target_dim, 0);
            for (const auto& [ee, c] : g.c) col[i * basis_u.size() + idx_u.at(ee)] = c;
            cols.push_back(col);
        }
    // dim{u : A u in I^m} = nu - rank([A | I]) + rank(I)
    std::vector<std::vector<std::int64_t>> ideal_cols(cols.begin() + static_cast<long>(nu), cols.end());
    const std::size_t r_all = rank_mod(cols, p);
    const std::size_t r_ideal = n_ideal_cols ? rank_mod(ideal_cols, p) : 0;
    const std::size_t pre_kernel = nu - (r_all - r_ideal);
    // I_t^n sits inside that preimage; kernel in R_t^n is the quotient.
    const std::size_t it_rank = It.empty() ? 0 : [&] {
        std::vector<std::vector<std::int64_t>> rows;
        for (const auto& g : It) {
            std::vector<std::int64_t> r(basis_t.size(), 0);
            for (const auto& [ee, c] : g.c) r[idx_t.at(ee)] = c;
            rows.push_back(r);
        }
        return rank_mod(rows, p);
    }();
    const std::size_t kernel_dim = pre_kernel - n * it_rank;

    // Image of P from R_{t-degP}^{n'} in R_t^n = span(P-images) + I_t^n, modulo I_t^n.
    std::vector<std::vector<std::int64_t>> rows;
    if (t - degP >= 0)
        for (std::size_t k = 0; k < np; ++k)
            for (const auto& e : hom(t - degP)) {
                std::vector<std::int64_t> r(nu, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    TPoly img = tmul(P[i][k], tmono(e), p);
                    for (const auto& [ee, c] : img.c) r[i * basis_t.size() + idx_t.at(ee)] = c;
                }
                rows.push_back(r);
            }
    std::vector<std::vector<std::int64_t>> ideal_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& g : It) {
            std::vector<std::int64_t> r(nu, 0);
            for (const auto& [ee, c] : g.c) r[i * basis_t.size() + idx_t.at(ee)] = c;
            ideal_rows.push_back(r);
        }
    std::vector<std::vector<std::int64_t>> both = rows;
    both.insert(both.end(), ideal_rows.begin(), ideal_rows.end());
    const std::size_t image_dim = (both.empty() ? 0 : rank_mod(both, p)) - (ideal_rows.empty() ? 0 : rank_mod(ideal_rows, p));
    return {kernel_dim, image_dim};
}

}  // namespace oracle
