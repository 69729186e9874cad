#include "mfact/functors.hpp"

namespace mfact {

EndRingPresentation end_ring_cyclic(std::shared_ptr<const QuotientRing> R, const Poly& g) {
    EndRingPresentation p;
    p.g = R->normal_form(g);
    p.colon = colon_ideal(*R, p.g);  // throws for g = 0
    p.gamma = std::make_shared<const QuotientRing>(R->poly(), p.colon);
    p.ambient = std::move(R);
    return p;
}

std::pair<int, int> default_window(int d) { return {-2 * d, 2 * d}; }

std::optional<int> check_window(const ComplexWindow& C) {
    if (C.hi < C.lo) throw std::invalid_argument("window has hi < lo");
    if (C.ranks.size() != static_cast<std::size_t>(C.hi - C.lo + 1) || C.maps.size() != static_cast<std::size_t>(C.hi - C.lo))
        throw std::invalid_argument("window has the wrong number of ranks or maps");
    for (int q = C.lo; q < C.hi; ++q) {
        const EMatrix& m = C.map(q);
        if (m.rows != C.rank(q + 1) || m.cols != C.rank(q))
            throw std::invalid_argument("window map at position " + std::to_string(q) + " has the wrong shape");
    }
    if (!C.nilpotency) return std::nullopt;
    const int t = *C.nilpotency;
    const Backend& B = *C.ring;
    for (int q = C.lo; q + t <= C.hi; ++q) {
        EMatrix P = C.map(q);
        for (int k = 1; k < t; ++k) P = compose(B, C.map(q + k), P);
        if (!is_zero(B, P)) return q;
    }
    return std::nullopt;
}

namespace {

ComplexWindow unroll(const Factorization& X, std::shared_ptr<const Backend> ring, const std::vector<EMatrix>& grids,
                     int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("window has hi < lo");
    ComplexWindow C;
    C.ring = std::move(ring);
    C.lo = lo;
    C.hi = hi;
    C.period = X.d;
    for (int q = lo; q <= hi; ++q) C.ranks.push_back(X.rank(q));
    for (int q = lo; q < hi; ++q) C.maps.push_back(grids[static_cast<std::size_t>(wrap_index(q, X.d) - 1)]);
    return C;
}

FactOptions inherit(const Factorization& X) {
    FactOptions o;
    o.allow_odd_d = X.d % 2 != 0;
    return o;
}

}  // namespace

ComplexWindow to_sequence(const Factorization& X, int lo, int hi) {
    if (!dynamic_cast<const RingBackend*>(&X.backend()))
        throw Unsupported("to_sequence needs a commutative polynomial-quotient backend");
    std::vector<EMatrix> grids;
    for (const auto& m : X.maps) grids.push_back(m.grid);
    return unroll(X, X.ctx->backend_ptr(), grids, lo, hi);
}

ModReduction::ModReduction(std::shared_ptr<const Context> ctx, Elem f) : ctx_(std::move(ctx)) {
    const Backend& B = ctx_->backend();
    f_ = B.normalize(f);
    LinearSystem sys;
    sys.unknowns = {Shape{1, 1}};
    sys.apply = [&](const EMatrices& x) { return EMatrices{EMatrix(1, 1, B.mul(x[0](0, 0), f_))}; };
    sys.rhs = {EMatrix(1, 1, ctx_->eta())};
    SystemSolution sol = solve_system(B, sys);
    if (!sol.solvable) throw HypothesisError("eta does not factor through f");
    h_ = sol.x[0](0, 0);

    if (auto* rb = dynamic_cast<const RingBackend*>(&B)) {
        auto bar_ring = std::make_shared<const QuotientRing>(rb->ring().extend({std::get<Poly>(f_)}));
        bar_ = std::make_shared<const RingBackend>(bar_ring);
    } else {
        auto& ab = dynamic_cast<const AlgebraBackend&>(B);
        const AlgebraMap* nu = ctx_->twist() ? &*ctx_->twist() : nullptr;
        alg_quot_ = quotient_by_central(ab.algebra_ptr(), std::get<Coords>(f_), nu);
        bar_ = std::make_shared<const AlgebraBackend>(alg_quot_->algebra);
    }
    bar_ctx_ = Context::make(bar_, std::nullopt, bar_->zero());
}

Elem ModReduction::project(const Elem& a) const {
    if (alg_quot_) return alg_quot_->project(std::get<Coords>(a));
    return bar_->normalize(a);
}

EMatrix ModReduction::project(const EMatrix& a) const {
    EMatrix out = a;
    for (auto& e : out.data) e = project(e);
    return out;
}

Elem ModReduction::lift(const Elem& a) const {
    if (!alg_quot_) return ctx_->backend().normalize(a);
    const Coords& c = std::get<Coords>(a);
    const Backend& B = ctx_->backend();
    Coords out = std::get<Coords>(B.zero());
    for (std::size_t i = 0; i < alg_quot_->kept.size(); ++i) out[alg_quot_->kept[i]] = c[i];
    return out;
}

FactPtr ModReduction::reduce(const Factorization& X) const {
    if (X.ctx != ctx_) throw std::invalid_argument("factorization lives over a different context");
    std::vector<EMatrix> grids;
    for (const auto& m : X.maps) grids.push_back(project(m.grid));
    return make_factorization(bar_ctx_, X.d, X.objects, std::move(grids), inherit(X));
}

FactMorphism ModReduction::reduce(const FactMorphism& phi, const FactPtr& Xbar, const FactPtr& Ybar) const {
    FactMorphism m{Xbar, Ybar, {}};
    for (const auto& c : phi.comps) m.comps.push_back(project(c));
    return m;
}

ComplexWindow ModReduction::window(const Factorization& X, int lo, int hi) const {
    FactPtr Xbar = reduce(X);
    std::vector<EMatrix> grids;
    for (const auto& m : Xbar->maps) grids.push_back(m.grid);
    ComplexWindow C = unroll(*Xbar, bar_, grids, lo, hi);
    C.nilpotency = X.d;
    if (auto q = check_window(C))
        throw std::logic_error("reduced window fails the zero-composition law at position " + std::to_string(*q));
    return C;
}

ComplexWindow reduce_mod_f(const Factorization& X, const Elem& f, int lo, int hi) {
    return ModReduction(X.ctx, f).window(X, lo, hi);
}

ExactnessResult window_exact(const ComplexWindow& C) {
    if (C.nilpotency != 2) throw std::invalid_argument("exactness is only defined for windows of nilpotency degree 2");
    if (auto q = check_window(C)) return ExactnessResult{false, *q + 1, "consecutive maps do not compose to zero"};
    const Backend& B = *C.ring;
    const bool ring = dynamic_cast<const RingBackend*>(&B) != nullptr;
    for (int q = C.lo + 1; q < C.hi; ++q) {
        const EMatrix& A = C.map(q);
        const EMatrix& P = C.map(q - 1);
        std::vector<Shape> vshape{Shape{C.rank(q), 1}};
        std::vector<Shape> ushape{Shape{C.rank(q - 1), 1}};
        LinearMap applyA = [&](const EMatrices& v) { return EMatrices{compose(B, A, v[0])}; };
        LinearMap applyP = [&](const EMatrices& u) { return EMatrices{compose(B, P, u[0])}; };
        if (ring) {
            for (const auto& v : kernel_system(B, vshape, applyA)) {
                SystemSolution s = solve_system(B, LinearSystem{ushape, applyP, v});
                if (!s.solvable) return ExactnessResult{false, q, "a kernel generator is not in the image"};
            }
        } else {
            const Field& k = B.field();
            Matrix<Scalar> MA = field_matrix(B, vshape, applyA);
            Matrix<Scalar> MP = field_matrix(B, ushape, applyP);
            const std::size_t ker = MA.cols - rank(k, MA);
            const std::size_t img = rank(k, MP);
            if (ker != img)
                return ExactnessResult{false, q,
                                       "kernel dimension " + std::to_string(ker) + " exceeds image dimension " +
                                           std::to_string(img)};
        }
    }
    return ExactnessResult{};
}

ComplexWindow dual_window(const ComplexWindow& C) {
    if (!C.ring->is_commutative()) throw Unsupported("dual_window needs a commutative backend");
    check_window(C);
    ComplexWindow D;
    D.ring = C.ring;
    D.lo = -C.hi;
    D.hi = -C.lo;
    D.period = C.period;
    D.twist_per_period = -C.twist_per_period;
    D.nilpotency = C.nilpotency;
    for (int p = D.lo; p <= D.hi; ++p) D.ranks.push_back(C.rank(-p));
    for (int p = D.lo; p < D.hi; ++p) D.maps.push_back(transpose(C.map(-p - 1)));
    return D;
}

std::string to_string(TacVerdict v) {
    switch (v) {
        case TacVerdict::TotallyAcyclic:
            return "totally_acyclic";
        case TacVerdict::NotExact:
            return "not_exact";
        case TacVerdict::HypothesesUnmet:
            return "hypotheses_unmet";
    }
    return "?";
}

namespace {

const RingBackend& require_ring(const Backend& B, const char* what) {
    auto* rb = dynamic_cast<const RingBackend*>(&B);
    if (!rb) throw HypothesisError(std::string(what) + " needs a commutative polynomial-quotient backend");
    return *rb;
}

void require_regular(const RingBackend& rb, const Elem& f) {
    const Poly& p = std::get<Poly>(f);
    if (rb.ring().is_zero(p)) throw HypothesisError("f is zero in the base ring");
    if (!is_regular(rb.ring(), p)) throw HypothesisError("f is not a regular element: (0 : f) is nonzero");
}

}  // namespace

TacResult is_totally_acyclic(const Factorization& X, const Elem& f, int lo, int hi) {
    TacResult out;
    try {
        const RingBackend& rb = require_ring(X.backend(), "total acyclicity");
        if (X.d != 2) throw HypothesisError("total acyclicity is only defined for d = 2");
        require_regular(rb, f);
        ModReduction red(X.ctx, f);
        out.window = red.window(X, lo, hi);
    } catch (const HypothesisError& e) {
        out.verdict = TacVerdict::HypothesesUnmet;
        out.detail = e.what();
        return out;
    }
    ExactnessResult ex = window_exact(*out.window);
    if (!ex.exact) {
        out.verdict = TacVerdict::NotExact;
        out.position = ex.position;
        out.detail = ex.reason;
        return out;
    }
    ExactnessResult dex = window_exact(dual_window(*out.window));
    if (!dex.exact) {
        out.verdict = TacVerdict::NotExact;
        out.position = dex.position;
        out.dual_side = true;
        out.detail = dex.reason;
        return out;
    }
    out.verdict = TacVerdict::TotallyAcyclic;
    return out;
}

DualQuotientResult dual_quotient_check(std::size_t n, const Poly& x, std::shared_ptr<const QuotientRing> gamma,
                                       const Matrix<Poly>& h, const std::vector<std::vector<Poly>>& samples) {
    const QuotientRing& G = *gamma;
    const PolyRing& P = G.poly();
    const QuotientRing Gbar = G.extend({x});
    if (h.cols != n) throw std::invalid_argument("sampled map must have n columns");
    using Row = std::vector<Poly>;
    auto alpha = [&](const Row& psi) {
        Row out;
        for (const auto& e : psi) out.push_back(Gbar.normal_form(e));
        return out;
    };
    auto beta = [&](const Row& chi) {
        Row out;
        for (const auto& e : chi) out.push_back(G.normal_form(e));
        return out;
    };
    // psi - psi2 lies in Hom(P, Gamma) x.
    auto congruent = [&](const Row& a, const Row& b) {
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!solve_linear(G, Matrix<Poly>(1, 1, x), {P.sub(a[j], b[j])}).solvable) return false;
        return true;
    };
    std::vector<Row> tests;
    for (std::size_t j = 0; j < n; ++j) {
        Row e(n);
        e[j] = P.one();
        tests.push_back(e);
    }
    for (const auto& s : samples) {
        if (s.size() != n) throw std::invalid_argument("sample row has the wrong length");
        tests.push_back(s);
    }

    DualQuotientResult out;
    out.well_defined = true;
    out.round_trip = true;
    for (const auto& psi : tests) {
        Row px;
        for (const auto& e : psi) px.push_back(G.mul(e, x));
        for (const auto& e : alpha(px)) out.well_defined = out.well_defined && e.is_zero();
        Row a = alpha(psi);
        out.round_trip = out.round_trip && alpha(beta(a)) == a && congruent(beta(a), psi);
    }

    // Naturality: alpha_P(psi' h) == alpha_P'(psi') hbar for psi' in Hom(P', Gamma),
    // tested on the canonical basis of Hom(P', Gamma) and one mixed row.
    const std::size_t n2 = h.rows;
    std::vector<Row> tests2;
    for (std::size_t j = 0; j < n2; ++j) {
        Row e(n2);
        e[j] = P.one();
        tests2.push_back(e);
    }
    if (P.nvars() > 0) {
        Row mixed(n2);
        for (std::size_t t = 0; t < n2; ++t) mixed[t] = G.normal_form(P.variable(t % P.nvars()));
        tests2.push_back(mixed);
    }
    out.naturality = true;
    for (const auto& psi2 : tests2) {
        Row pulled(n);
        for (std::size_t c = 0; c < n; ++c) {
            Poly acc;
            for (std::size_t r = 0; r < n2; ++r) acc = P.add(acc, P.mul(psi2[r], h(r, c)));
            pulled[c] = G.normal_form(acc);
        }
        Row lhs = alpha(pulled);
        Row a2 = alpha(psi2);
        Row rhs(n);
        for (std::size_t c = 0; c < n; ++c) {
            Poly acc;
            for (std::size_t r = 0; r < n2; ++r) acc = P.add(acc, P.mul(a2[r], Gbar.normal_form(h(r, c))));
            rhs[c] = Gbar.normal_form(acc);
        }
        out.naturality = out.naturality && lhs == rhs;
    }
    return out;
}

FaithfulResult faithful_check(const FactMorphism& theta, const Elem& f) {
    const Factorization& X = *theta.source;
    const RingBackend& rb = require_ring(X.backend(), "faithful_check");
    if (X.d != 2) throw HypothesisError("faithful_check needs d = 2");
    require_regular(rb, f);
    SquareCheck sq = is_morphism(theta);
    if (!sq.ok) throw std::invalid_argument("theta is not a morphism (square " + std::to_string(sq.index) + ")");
    ModReduction red(X.ctx, f);
    FactPtr Xbar = red.reduce(X);
    FactPtr Ubar = red.reduce(*theta.target);
    FactMorphism tbar = red.reduce(theta, Xbar, Ubar);

    FaithfulResult out;
    HomotopyResult down = homotopy_decide(tbar, zero_morphism(Xbar, Ubar));
    HomotopyResult up = homotopy_decide(theta, zero_morphism(theta.source, theta.target));
    out.down_null = down.homotopic;
    out.up_null = up.homotopic;
    out.down_witness = std::move(down.s);
    out.up_witness = std::move(up.s);
    out.down_certificate = std::move(down.certificate);
    out.consistent = !out.down_null || out.up_null;
    return out;
}

LiftResult full_lift(const FactPtr& X, const FactPtr& U, const std::vector<EMatrix>& phibar, const Elem& f) {
    const RingBackend& rb = require_ring(X->backend(), "full_lift");
    if (X->d != 2) throw HypothesisError("full_lift needs d = 2");
    require_regular(rb, f);
    ModReduction red(X->ctx, f);
    FactPtr Xbar = red.reduce(*X);
    FactPtr Ubar = red.reduce(*U);
    FactMorphism target{Xbar, Ubar, {}};
    for (const auto& c : phibar) target.comps.push_back(red.project(c));
    SquareCheck sq = is_morphism(target);
    if (!sq.ok) throw std::invalid_argument("phibar is not a chain map (square " + std::to_string(sq.index) + ")");

    const Backend& B = X->backend();
    const Elem fe = B.normalize(f);
    const int d = X->d;
    std::vector<Shape> mshape, hshape = homotopy_shapes(*X, *U);
    for (int i = 1; i <= d; ++i) mshape.push_back(Shape{U->rank(i), X->rank(i)});

    LinearSystem sys;
    for (const auto& s : mshape) sys.unknowns.push_back(s);  // theta
    for (const auto& s : hshape) sys.unknowns.push_back(s);  // homotopy
    for (const auto& s : mshape) sys.unknowns.push_back(s);  // multiples of f
    auto split = [d](const EMatrices& x, int block) {
        return EMatrices(x.begin() + block * d, x.begin() + (block + 1) * d);
    };
    sys.apply = [&](const EMatrices& x) {
        EMatrices th = split(x, 0), s = split(x, 1), t = split(x, 2);
        EMatrices out;
        for (int i = 1; i <= d; ++i) {
            const EMatrix& a = th[static_cast<std::size_t>(i - 1)];
            const EMatrix& an = th[static_cast<std::size_t>(wrap_index(i + 1, d) - 1)];
            out.push_back(sub(B, compose(B, U->f(i), a), compose(B, an, X->f(i))));
        }
        EMatrices bd = homotopy_boundary(*X, *U, s);
        for (int i = 0; i < d; ++i) {
            EMatrix ft = t[static_cast<std::size_t>(i)];
            for (auto& e : ft.data) e = B.mul(fe, e);
            out.push_back(sub(B, sub(B, th[static_cast<std::size_t>(i)], bd[static_cast<std::size_t>(i)]), ft));
        }
        return out;
    };
    for (const auto& s : mshape) sys.rhs.push_back(zero_matrix(B, s.rows, s.cols));
    for (const auto& c : target.comps) {
        EMatrix l = c;
        for (auto& e : l.data) e = red.lift(e);
        sys.rhs.push_back(l);
    }

    LiftResult out;
    SystemSolution sol = solve_system(B, sys);
    if (!sol.solvable) {
        out.certificate = std::move(sol.certificate);
        return out;
    }
    out.theta = FactMorphism{X, U, split(sol.x, 0)};
    for (const auto& s : split(sol.x, 1)) out.s.push_back(red.project(s));
    if (!is_morphism(out.theta).ok) throw std::logic_error("full_lift: lifted theta is not a morphism");
    FactMorphism tb = red.reduce(out.theta, Xbar, Ubar);
    if (!check_homotopy(tb, target, out.s)) throw std::logic_error("full_lift: downstairs homotopy failed verification");
    out.lifted = true;
    return out;
}

}  // namespace mfact
