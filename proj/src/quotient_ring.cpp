#include "mfact/quotient_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mfact/deadline.hpp"

namespace mfact {

namespace {

ModuleArith module_arith(const PolyRing& R, std::vector<int> blocks = {}) {
    return ModuleArith(R, ModuleOrder(R.order(), std::move(blocks)));
}

std::vector<Poly> ideal_basis(const PolyRing& R, const std::vector<Poly>& gens, const GroebnerOptions& opts) {
    ModuleArith M = module_arith(R);
    std::vector<TrackedVec> tv;
    for (const auto& g : gens)
        if (!g.is_zero()) tv.push_back(TrackedVec{M.embed(g, 0), {}});
    GroebnerOptions o = opts;
    o.track = false;
    std::vector<Poly> out;
    for (auto& t : groebner_basis(M, std::move(tv), o)) out.push_back(M.component(t.vec, 0));
    return out;
}

}  // namespace

std::vector<Poly> groebner(const PolyRing& R, const std::vector<Poly>& gens, const GroebnerOptions& opts) {
    for (const auto& g : gens) R.check(g);
    return ideal_basis(R, gens, opts);
}

Poly reduce_poly(const PolyRing& R, const Poly& f, const std::vector<Poly>& basis) {
    Poly cur = f;
    Poly rem;
    while (!cur.is_zero()) {
        check_deadline();
        const Term lt = cur.lead();
        const Poly* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.lead().mono.divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            cur = R.sub(cur, R.mul_term(*reducer, lt.mono / reducer->lead().mono, lt.coef / reducer->lead().coef));
        } else {
            rem.terms.push_back(lt);
            cur.terms.erase(cur.terms.begin());
        }
    }
    return rem;
}

QuotientRing::QuotientRing(PolyRing R, std::vector<Poly> ideal, const GroebnerOptions& opts)
    : R_(std::move(R)), ideal_(std::move(ideal)) {
    for (const auto& g : ideal_) R_.check(g);
    gb_ = ideal_basis(R_, ideal_, opts);
}

Poly QuotientRing::normal_form(const Poly& f) const {
    for (const auto& t : f.terms)
        if (t.mono.nvars() != R_.nvars()) throw std::invalid_argument("polynomial variable-count mismatch");
    return reduce_poly(R_, f, gb_);
}

QuotientRing QuotientRing::extend(const std::vector<Poly>& extra) const {
    std::vector<Poly> gens = gb_;
    for (const auto& e : extra) gens.push_back(e);
    return QuotientRing(R_, std::move(gens));
}

std::optional<std::vector<Monomial>> QuotientRing::standard_monomials() const {
    const std::size_t n = R_.nvars();
    for (const auto& g : gb_)
        if (g.lead().mono.is_one()) return std::vector<Monomial>{};
    std::vector<unsigned> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& g : gb_) {
            const Monomial& m = g.lead().mono;
            if (m.degree() == m[i] && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
        }
        if (bound[i] == 0) return std::nullopt;
    }
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    for (;;) {
        Monomial m = Monomial::from_exponents(e);
        bool standard = std::none_of(gb_.begin(), gb_.end(), [&](const Poly& g) { return g.lead().mono.divides(m); });
        if (standard) out.push_back(m);
        std::size_t i = 0;
        while (i < n && ++e[i] == bound[i]) e[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return R_.cmp(a, b) > 0; });
    return out;
}

Poly normal_form(const Poly& f, const QuotientRing& R) { return R.normal_form(f); }

std::vector<std::vector<Poly>> kernel(const QuotientRing& R, const Matrix<Poly>& A) {
    const PolyRing& P = R.poly();
    const std::size_t m = A.rows, n = A.cols;
    std::vector<int> blocks(m + n, 0);
    for (std::size_t j = 0; j < n; ++j) blocks[m + j] = 1;
    ModuleArith M = module_arith(P, blocks);

    std::vector<TrackedVec> gens;
    for (std::size_t j = 0; j < n; ++j) {
        ModVec v = M.embed(P.one(), static_cast<std::uint32_t>(m + j));
        for (std::size_t i = 0; i < m; ++i) v = M.add(v, M.embed(R.normal_form(A(i, j)), static_cast<std::uint32_t>(i)));
        gens.push_back(TrackedVec{std::move(v), {}});
    }
    for (const auto& h : R.groebner_basis())
        for (std::size_t i = 0; i < m; ++i) gens.push_back(TrackedVec{M.embed(h, static_cast<std::uint32_t>(i)), {}});

    std::vector<std::vector<Poly>> out;
    for (const auto& g : groebner_basis(M, std::move(gens))) {
        if (g.vec.lead().comp < m) continue;
        std::vector<Poly> s(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            s[j] = R.normal_form(M.component(g.vec, static_cast<std::uint32_t>(m + j)));
            nonzero = nonzero || !s[j].is_zero();
        }
        if (nonzero) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Poly> colon_ideal(const QuotientRing& R, const Poly& g) {
    if (R.is_zero(g)) throw std::invalid_argument("colon ideal by an element that is zero in the ring");
    Matrix<Poly> A(1, 1, g);
    std::vector<Poly> gens = R.groebner_basis();
    for (auto& s : kernel(R, A)) gens.push_back(s[0]);
    return groebner(R.poly(), gens);
}

bool is_regular(const QuotientRing& R, const Poly& f) {
    if (R.is_zero(f)) throw std::invalid_argument("regularity test of an element that is zero in the ring");
    return kernel(R, Matrix<Poly>(1, 1, f)).empty();
}

LinearSolveResult solve_linear(const QuotientRing& R, const Matrix<Poly>& A, const std::vector<Poly>& b) {
    if (b.size() != A.rows) throw std::invalid_argument("solve_linear: right-hand side length differs from row count");
    const PolyRing& P = R.poly();
    const std::size_t m = A.rows, n = A.cols;
    ModuleArith M = module_arith(P);
    ModuleArith L = lift_arith(P);

    std::vector<TrackedVec> gens;
    for (std::size_t j = 0; j < n; ++j) {
        ModVec v;
        for (std::size_t i = 0; i < m; ++i) v = M.add(v, M.embed(R.normal_form(A(i, j)), static_cast<std::uint32_t>(i)));
        gens.push_back(TrackedVec{std::move(v), L.embed(P.one(), static_cast<std::uint32_t>(j))});
    }
    for (const auto& h : R.groebner_basis())
        for (std::size_t i = 0; i < m; ++i) gens.push_back(TrackedVec{M.embed(h, static_cast<std::uint32_t>(i)), {}});

    GroebnerOptions opts;
    opts.track = true;
    std::vector<TrackedVec> G = groebner_basis(M, std::move(gens), opts);

    ModVec bv;
    for (std::size_t i = 0; i < m; ++i) bv = M.add(bv, M.embed(R.normal_form(b[i]), static_cast<std::uint32_t>(i)));
    Reduction red = reduce(M, bv, G, true);

    LinearSolveResult out;
    if (!red.remainder.is_zero()) {
        out.remainder = std::move(red.remainder);
        for (auto& g : G) out.module_basis.push_back(std::move(g.vec));
        return out;
    }
    out.solvable = true;
    out.solution.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.solution[j] = R.normal_form(L.component(red.lift, static_cast<std::uint32_t>(j)));
    for (std::size_t i = 0; i < m; ++i) {
        Poly acc;
        for (std::size_t j = 0; j < n; ++j) acc = P.add(acc, P.mul(A(i, j), out.solution[j]));
        if (!R.equal(acc, b[i])) throw std::logic_error("solve_linear: lifted solution failed verification");
    }
    return out;
}

std::string to_string(const PolyRing& R, const ModVec& v, std::size_t ncomp) {
    ModuleArith M = module_arith(R);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < ncomp; ++i) {
        if (i) os << ", ";
        os << R.to_string(M.component(v, static_cast<std::uint32_t>(i)));
    }
    os << ")";
    return os.str();
}

}  // namespace mfact
