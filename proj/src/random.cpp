#include "mfact/random.hpp"

#include <algorithm>

namespace mfact {

Scalar random_scalar(Rng& rng, const Field& k, bool nonzero) {
    if (k.is_rational()) {
        long long v = rng.range(-5, 5);
        if (nonzero && v == 0) v = 1;
        return Scalar(k, v);
    }
    const std::uint64_t p = k.characteristic();
    std::uint64_t r = nonzero ? 1 + rng.below(p - 1) : rng.below(p);
    return Scalar(k, mpq_class(mpz_class(std::to_string(r))));
}

Poly random_poly(Rng& rng, const QuotientRing& R, const RandomOptions& opts) {
    const PolyRing& P = R.poly();
    const unsigned nterms = static_cast<unsigned>(rng.below(opts.max_terms + 1));
    std::vector<Term> terms;
    for (unsigned t = 0; t < nterms; ++t) {
        const unsigned deg = static_cast<unsigned>(rng.below(opts.max_degree + 1));
        std::vector<unsigned> e(P.nvars(), 0);
        for (unsigned u = 0; u < deg && !e.empty(); ++u) ++e[rng.below(e.size())];
        terms.push_back(Term{Monomial::from_exponents(e), random_scalar(rng, P.field(), true)});
    }
    return R.normal_form(P.from_terms(std::move(terms)));
}

Elem random_elem(Rng& rng, const Backend& B, const RandomOptions& opts) {
    if (auto* rb = dynamic_cast<const RingBackend*>(&B)) return random_poly(rng, rb->ring(), opts);
    auto& ab = dynamic_cast<const AlgebraBackend&>(B);
    const FDAlgebra& A = ab.algebra();
    Coords c = A.zero();
    const unsigned nterms = static_cast<unsigned>(rng.below(opts.max_terms + 1));
    for (unsigned t = 0; t < nterms; ++t) c[rng.below(A.dim())] += random_scalar(rng, A.field(), true);
    return c;
}

EMatrix random_matrix(Rng& rng, const Backend& B, std::size_t rows, std::size_t cols, const RandomOptions& opts) {
    EMatrix m(rows, cols);
    for (auto& e : m.data) e = random_elem(rng, B, opts);
    return m;
}

std::vector<FactPtr> basic_pieces(Rng& rng, const std::shared_ptr<const Context>& ctx, int d) {
    std::vector<FactPtr> out;
    for (int k = 1; k <= d; ++k) out.push_back(trivial_factorization(ctx, d, 1, k));
    const Backend& B = ctx->backend();
    auto* rb = dynamic_cast<const RingBackend*>(&B);
    const Elem& w = ctx->eta();
    if (!rb || std::get<Poly>(w).terms.size() != 1) return out;
    const Term& t = std::get<Poly>(w).terms[0];
    const PolyRing& P = rb->ring().poly();
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<std::vector<unsigned>> parts(static_cast<std::size_t>(d), std::vector<unsigned>(P.nvars(), 0));
        for (std::size_t v = 0; v < P.nvars(); ++v)
            for (unsigned u = 0; u < t.mono[v]; ++u) ++parts[rng.below(static_cast<std::uint64_t>(d))][v];
        std::vector<EMatrix> grids;
        for (int i = 0; i < d; ++i) {
            Scalar c = i == 0 ? t.coef : P.scalar(1);
            grids.push_back(EMatrix(1, 1, B.normalize(P.term(Monomial::from_exponents(parts[static_cast<std::size_t>(i)]), c))));
        }
        FactOptions o;
        o.allow_odd_d = d % 2 != 0;
        out.push_back(make_factorization(ctx, d, std::vector<std::size_t>(static_cast<std::size_t>(d), 1), grids, o));
    }
    return out;
}

FactPtr random_conjugate(Rng& rng, const Factorization& X, const RandomOptions& opts) {
    const Backend& B = X.backend();
    const Elem& w = X.ctx->eta();
    std::vector<EMatrix> P, Pinv;
    for (int i = 1; i <= X.d; ++i) {
        const std::size_t n = X.rank(i);
        EMatrix p = identity_matrix(B, n), q = identity_matrix(B, n);
        if (n >= 2) {
            for (int rep = 0; rep < 2; ++rep) {
                std::size_t a = rng.below(n), b = rng.below(n - 1);
                if (b >= a) ++b;
                Elem c = random_elem(rng, B, opts);
                if (!B.equal(B.mul(c, w), B.mul(w, c))) continue;
                EMatrix e = identity_matrix(B, n), einv = identity_matrix(B, n);
                e(a, b) = c;
                einv(a, b) = B.neg(c);
                p = compose(B, e, p);
                q = compose(B, q, einv);
            }
        }
        P.push_back(std::move(p));
        Pinv.push_back(std::move(q));
    }
    std::vector<EMatrix> grids;
    for (int i = 1; i <= X.d; ++i) {
        const EMatrix& next = P[static_cast<std::size_t>(wrap_index(i + 1, X.d) - 1)];
        grids.push_back(compose(B, next, compose(B, X.f(i), Pinv[static_cast<std::size_t>(i - 1)])));
    }
    FactOptions o;
    o.allow_odd_d = X.d % 2 != 0;
    return make_factorization(X.ctx, X.d, X.objects, std::move(grids), o);
}

FactPtr random_factorization(Rng& rng, const std::vector<FactPtr>& pieces, std::size_t max_pieces,
                             const RandomOptions& opts) {
    const std::size_t count = 1 + rng.below(max_pieces);
    FactPtr X = pieces[rng.below(pieces.size())];
    for (std::size_t k = 1; k < count; ++k) X = direct_sum(*X, *pieces[rng.below(pieces.size())]);
    return random_conjugate(rng, *X, opts);
}

std::vector<EMatrix> random_combination(Rng& rng, const Backend& B, const std::vector<std::vector<EMatrix>>& gens,
                                        const std::vector<Shape>& shapes, const RandomOptions& opts) {
    std::vector<EMatrix> out;
    for (const auto& s : shapes) out.push_back(zero_matrix(B, s.rows, s.cols));
    const bool ring = dynamic_cast<const RingBackend*>(&B) != nullptr;
    for (const auto& g : gens) {
        Elem c = ring ? random_elem(rng, B, opts) : B.scale(B.one(), random_scalar(rng, B.field()));
        if (B.is_zero(c)) continue;
        for (std::size_t k = 0; k < out.size(); ++k) {
            EMatrix term = g[k];
            for (auto& e : term.data) e = B.mul(c, e);
            out[k] = add(B, out[k], term);
        }
    }
    return out;
}

FactMorphism random_morphism(Rng& rng, const FactPtr& X, const FactPtr& Y, const RandomOptions& opts) {
    std::vector<Shape> shapes;
    for (int i = 1; i <= X->d; ++i) shapes.push_back(Shape{Y->rank(i), X->rank(i)});
    return FactMorphism{X, Y, random_combination(rng, X->backend(), morphism_generators(X, Y), shapes, opts)};
}

GradedHom random_graded(Rng& rng, const FactPtr& X, const FactPtr& Y, int n, const RandomOptions& opts) {
    return GradedHom{X, Y, n,
                     random_combination(rng, X->backend(), graded_generators(X, Y, n), graded_shapes(*X, *Y, n), opts)};
}

std::vector<EMatrix> random_homotopy(Rng& rng, const FactPtr& X, const FactPtr& Y, const RandomOptions& opts) {
    const Backend& B = X->backend();
    if (X->d == 2 && B.is_commutative()) {
        std::vector<EMatrix> s;
        for (const auto& sh : homotopy_shapes(*X, *Y)) s.push_back(random_matrix(rng, B, sh.rows, sh.cols, opts));
        return s;
    }
    GradedHom sigma = random_graded(rng, X, Y, -1, opts);
    std::vector<EMatrix> s;
    for (int i = 1; i <= X->d; ++i) s.push_back(sigma.comps[static_cast<std::size_t>(wrap_index(i + 1, X->d) - 1)]);
    return s;
}

}  // namespace mfact
