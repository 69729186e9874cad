#include <doctest.h>

#include "mfact/functors.hpp"
#include "oracle.hpp"

using namespace mfact;

namespace {

const Field F7 = Field::prime(7);

std::shared_ptr<const QuotientRing> qring(std::vector<std::string> vars, std::vector<std::string> ideal) {
    PolyRing R(F7, vars);
    std::vector<Poly> I;
    for (const auto& g : ideal) I.push_back(R.parse(g));
    return std::make_shared<const QuotientRing>(R, I);
}

std::shared_ptr<const Backend> backend(std::vector<std::string> ideal = {}) {
    return std::make_shared<RingBackend>(qring({"x", "y"}, std::move(ideal)));
}

EMatrix mat(const Backend& B, std::vector<std::vector<std::string>> rows) {
    return parse_matrix(B, rows, rows.size(), rows.empty() ? 0 : rows[0].size());
}

FactPtr fact(const std::shared_ptr<const Context>& ctx, std::vector<EMatrix> grids) {
    std::vector<std::size_t> ranks;
    for (const auto& g : grids) ranks.push_back(g.cols);
    const int d = static_cast<int>(grids.size());
    return make_factorization(ctx, d, ranks, std::move(grids));
}

struct Fixtures {
    std::shared_ptr<const Backend> B = backend();
    std::shared_ptr<const Context> xy = Context::make(B, std::nullopt, B->parse("x*y"));
    std::shared_ptr<const Context> x2y2 = Context::make(B, std::nullopt, B->parse("x^2 + y^2"));
    FactPtr classical = fact(xy, {mat(*B, {{"x"}}), mat(*B, {{"y"}})});
    FactPtr pair = fact(x2y2, {mat(*B, {{"x", "y"}, {"-y", "x"}}), mat(*B, {{"x", "-y"}, {"y", "x"}})});
};

std::vector<std::vector<oracle::TPoly>> tmat(const EMatrix& m, std::size_t nvars) {
    std::vector<std::vector<oracle::TPoly>> out(m.rows, std::vector<oracle::TPoly>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out[r][c] = oracle::from_poly(std::get<Poly>(m(r, c)), nvars);
    return out;
}

std::vector<oracle::TPoly> tideal(const QuotientRing& R) {
    std::vector<oracle::TPoly> out;
    for (const auto& g : R.ideal_generators()) out.push_back(oracle::from_poly(g, R.poly().nvars()));
    return out;
}

/// Graded oracle over degrees 0..tmax at every interior position of a
/// homogeneous window; returns the first position where dimensions differ.
std::optional<int> oracle_first_inexact(const ComplexWindow& C, int tmax) {
    const auto& R = dynamic_cast<const RingBackend&>(*C.ring).ring();
    const std::size_t n = R.poly().nvars();
    auto degree = [&](const EMatrix& m) {
        int d = 0;
        for (const auto& e : m.data) d = std::max(d, oracle::tdeg(oracle::from_poly(std::get<Poly>(e), n)));
        return d;
    };
    for (int q = C.lo + 1; q < C.hi; ++q)
        for (int t = 0; t <= tmax; ++t) {
            auto [k, i] = oracle::graded_exactness(tmat(C.map(q), n), degree(C.map(q)), tmat(C.map(q - 1), n),
                                                   degree(C.map(q - 1)), tideal(R), n, t, 7);
            if (k != i) return q;
        }
    return std::nullopt;
}

}  // namespace

TEST_CASE("End ring of x over k[x,y]/(xy)") {
    auto R = qring({"x", "y"}, {"x*y"});
    EndRingPresentation E = end_ring_cyclic(R, R->parse("x"));
    REQUIRE(E.colon.size() == 1);
    CHECK(R->to_string(E.colon[0]) == "y");
    CHECK(E.gamma->to_string(E.image(R->parse("x^2 + y"))) == "x^2");
    // colon oracle: a monomial m lies in (0 : x) iff m x lies in (xy)
    const auto I = tideal(*R);
    for (const auto& e : oracle::monomials(2, 0, 3)) {
        oracle::TPoly m = oracle::tmono(e);
        const bool in_colon = oracle::member_bounded(oracle::tmul(m, oracle::tmono({1, 0}), 7), I, 2, 6, 7);
        Poly mp = R->poly().term(Monomial::from_exponents(std::vector<unsigned>{static_cast<unsigned>(e[0]), static_cast<unsigned>(e[1])}), Scalar(F7, 1));
        CHECK(E.gamma->is_zero(mp) == in_colon);
    }
    EndRingPresentation one = end_ring_cyclic(R, R->parse("1"));
    CHECK(one.gamma->groebner_basis() == R->groebner_basis());
    CHECK_THROWS(end_ring_cyclic(R, R->parse("x*y")));
}

TEST_CASE("End ring of x over k[x,y,z]/(xz,yz)") {
    auto R = qring({"x", "y", "z"}, {"x*z", "y*z"});
    EndRingPresentation E = end_ring_cyclic(R, R->parse("x"));
    REQUIRE(E.colon.size() == 1);
    CHECK(R->to_string(E.colon[0]) == "z");
    const auto I = tideal(*R);
    for (const auto& e : oracle::monomials(3, 0, 3)) {
        const bool in_colon = oracle::member_bounded(oracle::tmul(oracle::tmono(e), oracle::tmono({1, 0, 0}), 7), I, 3, 6, 7);
        std::vector<unsigned> u(e.begin(), e.end());
        CHECK(E.gamma->is_zero(R->poly().term(Monomial::from_exponents(u), Scalar(F7, 1))) == in_colon);
    }
}

TEST_CASE("unrolling into sequences") {
    Fixtures f;
    ComplexWindow C = to_sequence(*f.classical, -2, 2);
    CHECK_FALSE(C.nilpotency);
    CHECK(C.period == 2);
    CHECK(f.B->to_string(C.map(-2)(0, 0)) == "y");
    CHECK(f.B->to_string(C.map(1)(0, 0)) == "x");
    CHECK(f.B->to_string(C.map(0)(0, 0)) == "y");
    ComplexWindow Z = to_sequence(*zero_factorization(f.xy, 2), -4, 4);
    for (int q = -4; q <= 4; ++q) CHECK(Z.rank(q) == 0);
    auto ctx4 = Context::make(f.B, std::nullopt, f.B->parse("x^4"));
    FactPtr X4 = fact(ctx4, {mat(*f.B, {{"x"}}), mat(*f.B, {{"x"}}), mat(*f.B, {{"x"}}), mat(*f.B, {{"x"}})});
    CHECK(to_sequence(*X4, -8, 8).period == 4);
    // additivity
    ComplexWindow S = to_sequence(*direct_sum(*f.classical, *f.classical), -2, 2);
    for (int q = -2; q < 2; ++q) CHECK(equal(*f.B, S.map(q), block_diag(*f.B, C.map(q), C.map(q))));
}

TEST_CASE("reduction modulo f") {
    Fixtures f;
    ComplexWindow C = reduce_mod_f(*f.classical, f.B->parse("x*y"), -4, 4);
    CHECK(C.nilpotency == 2);
    CHECK_FALSE(check_window(C));
    ComplexWindow P = reduce_mod_f(*f.pair, f.B->parse("x^2 + y^2"), -4, 4);
    // oracle: every entry of a two-fold composite lies in (x^2 + y^2)
    PolyRing R(F7, {"x", "y"});
    for (int q = -4; q + 1 < 4; ++q) {
        EMatrix comp = compose(*f.B, P.map(q + 1), P.map(q));
        for (const auto& e : comp.data)
            CHECK(oracle::member_bounded(oracle::from_poly(std::get<Poly>(e), 2), {oracle::from_poly(R.parse("x^2 + y^2"), 2)}, 2, 4, 7));
    }
    auto ctx4 = Context::make(f.B, std::nullopt, f.B->parse("x^4"));
    FactPtr X4 = fact(ctx4, {mat(*f.B, {{"x"}}), mat(*f.B, {{"x"}}), mat(*f.B, {{"x"}}), mat(*f.B, {{"x"}})});
    ModReduction red(ctx4, f.B->parse("x^2"));
    CHECK(f.B->to_string(red.cofactor()) == "x^2");
    ComplexWindow W = red.window(*X4, -8, 8);
    CHECK(W.nilpotency == 4);
    CHECK_FALSE(check_window(W));
    ComplexWindow W2 = W;
    W2.nilpotency = 2;
    CHECK_FALSE(check_window(W2));  // x^2 = 0 already
    CHECK_THROWS_AS(ModReduction(f.xy, f.B->parse("x^2")), HypothesisError);
    // additivity
    ComplexWindow S = reduce_mod_f(*direct_sum(*f.classical, *f.classical), f.B->parse("x*y"), -4, 4);
    for (int q = -4; q < 4; ++q) CHECK(equal(*C.ring, S.map(q), block_diag(*C.ring, C.map(q), C.map(q))));
}

TEST_CASE("exactness agrees with the graded oracle") {
    Fixtures f;
    ComplexWindow C = reduce_mod_f(*f.classical, f.B->parse("x*y"), -4, 4);
    CHECK(window_exact(C).exact);
    CHECK_FALSE(oracle_first_inexact(C, 4));
    CHECK(window_exact(dual_window(C)).exact);
    CHECK_FALSE(oracle_first_inexact(dual_window(C), 4));
    ComplexWindow P = reduce_mod_f(*f.pair, f.B->parse("x^2 + y^2"), -4, 4);
    CHECK(window_exact(P).exact);
    CHECK_FALSE(oracle_first_inexact(P, 3));
    CHECK(window_exact(dual_window(P)).exact);
    CHECK_FALSE(oracle_first_inexact(dual_window(P), 3));

    // (x^2, y) over k[x,y]/(xy): ker y = (x) is larger than im x^2
    auto Rb = backend({"x*y"});
    ComplexWindow N;
    N.ring = Rb;
    N.lo = -2;
    N.hi = 2;
    N.ranks.assign(5, 1);
    N.maps = {mat(*Rb, {{"x^2"}}), mat(*Rb, {{"y"}}), mat(*Rb, {{"x^2"}}), mat(*Rb, {{"y"}})};
    N.period = 2;
    N.nilpotency = 2;
    ExactnessResult ex = window_exact(N);
    CHECK_FALSE(ex.exact);
    REQUIRE(ex.position);
    CHECK(oracle_first_inexact(N, 3) == ex.position);

    ComplexWindow T = to_sequence(*f.classical, -2, 2);
    CHECK_THROWS(window_exact(T));  // no nilpotency
}

TEST_CASE("dualizing twice returns the window") {
    Fixtures f;
    ComplexWindow P = reduce_mod_f(*f.pair, f.B->parse("x^2 + y^2"), -4, 4);
    ComplexWindow D = dual_window(P);
    CHECK(D.lo == -4);
    CHECK(equal(*P.ring, D.map(-4), transpose(P.map(3))));
    ComplexWindow DD = dual_window(D);
    CHECK(DD.lo == P.lo);
    CHECK(DD.hi == P.hi);
    for (int q = P.lo; q < P.hi; ++q) CHECK(equal(*P.ring, DD.map(q), P.map(q)));
}

TEST_CASE("total acyclicity") {
    Fixtures f;
    CHECK(is_totally_acyclic(*f.classical, f.B->parse("x*y"), -4, 4).verdict == TacVerdict::TotallyAcyclic);
    CHECK(is_totally_acyclic(*f.pair, f.B->parse("x^2 + y^2"), -4, 4).verdict == TacVerdict::TotallyAcyclic);
    auto Rb = backend({"x*y"});
    auto ctx = Context::make(Rb, std::nullopt, Rb->parse("x^2"));
    FactPtr X = fact(ctx, {mat(*Rb, {{"x"}}), mat(*Rb, {{"x"}})});
    TacResult r = is_totally_acyclic(*X, Rb->parse("x^2"), -4, 4);
    CHECK(r.verdict == TacVerdict::HypothesesUnmet);
    CHECK(to_string(r.verdict) == "hypotheses_unmet");
}

TEST_CASE("factorizations over the End ring are totally acyclic") {
    auto R = qring({"x", "y"}, {"x*y"});
    EndRingPresentation E = end_ring_cyclic(R, R->parse("x"));
    auto G = std::make_shared<RingBackend>(E.gamma);
    for (int n = 2; n <= 3; ++n) {
        const std::string xn = "x^" + std::to_string(n);
        auto ctx = Context::make(G, std::nullopt, G->parse(xn));
        for (int a = 1; a < n; ++a) {
            FactPtr X = fact(ctx, {mat(*G, {{"x^" + std::to_string(a)}}), mat(*G, {{"x^" + std::to_string(n - a)}})});
            TacResult r = is_totally_acyclic(*X, G->parse(xn), -4, 4);
            CHECK(r.verdict == TacVerdict::TotallyAcyclic);
            CHECK_FALSE(oracle_first_inexact(*r.window, 4));
        }
    }
}

TEST_CASE("dual quotient identity on free modules") {
    auto poly = qring({"x", "y"}, {});
    PolyRing P = poly->poly();
    for (std::size_t n = 1; n <= 3; ++n) {
        Matrix<Poly> h(2, n);
        for (std::size_t c = 0; c < n; ++c) {
            h(0, c) = P.parse(c % 2 ? "x + 1" : "y^2");
            h(1, c) = P.parse("3*x*y - " + std::to_string(c));
        }
        std::vector<std::vector<Poly>> samples{std::vector<Poly>(n, P.parse("x^2 + y"))};
        DualQuotientResult r = dual_quotient_check(n, P.parse("x*y"), poly, h, samples);
        CHECK(r.ok());
        auto gamma = qring({"x", "y"}, {"y"});
        CHECK(dual_quotient_check(n, P.parse("x^2"), gamma, h, samples).ok());
    }
}

TEST_CASE("faithfulness instances") {
    Fixtures f;
    const Elem w = f.B->parse("x*y");
    FactMorphism yy{f.classical, f.classical, {mat(*f.B, {{"y"}}), mat(*f.B, {{"y"}})}};
    FaithfulResult r = faithful_check(yy, w);
    CHECK(r.down_null);
    CHECK(r.up_null);
    CHECK(r.consistent);
    FaithfulResult id = faithful_check(identity_morphism(f.classical), w);
    CHECK_FALSE(id.down_null);
    CHECK_FALSE(id.up_null);
    CHECK(id.consistent);
    CHECK(faithful_check(zero_morphism(f.classical, f.classical), w).consistent);
    auto Rb = backend({"x*y"});
    auto ctx = Context::make(Rb, std::nullopt, Rb->parse("x^2"));
    FactPtr X = fact(ctx, {mat(*Rb, {{"x"}}), mat(*Rb, {{"x"}})});
    CHECK_THROWS_AS(faithful_check(identity_morphism(X), Rb->parse("x^2")), HypothesisError);
}

TEST_CASE("lifting chain maps") {
    Fixtures f;
    const Elem w = f.B->parse("x*y");
    LiftResult r = full_lift(f.classical, f.classical, {mat(*f.B, {{"y"}}), mat(*f.B, {{"y"}})}, w);
    REQUIRE(r.lifted);
    CHECK(is_morphism(r.theta).ok);
    FactMorphism yy{f.classical, f.classical, {mat(*f.B, {{"y"}}), mat(*f.B, {{"y"}})}};
    CHECK(homotopy_decide(r.theta, yy).homotopic);

    // perturb by the boundary of a periodic homotopy downstairs
    ModReduction red(f.xy, w);
    FactPtr Xb = red.reduce(*f.classical);
    std::vector<EMatrix> sbar{mat(*red.quotient(), {{"x + 1"}}), mat(*red.quotient(), {{"y^2"}})};
    auto bd = homotopy_boundary(*Xb, *Xb, sbar);
    std::vector<EMatrix> phibar;
    for (int i = 0; i < 2; ++i) phibar.push_back(add(*red.quotient(), red.project(yy.comps[static_cast<std::size_t>(i)]), bd[static_cast<std::size_t>(i)]));
    LiftResult r2 = full_lift(f.classical, f.classical, phibar, w);
    REQUIRE(r2.lifted);
    FaithfulResult diff = faithful_check(sub(r2.theta, r.theta), w);
    CHECK(diff.down_null);
    CHECK(diff.up_null);
    CHECK_THROWS(full_lift(f.classical, f.classical, {mat(*f.B, {{"x"}}), mat(*f.B, {{"y"}})}, w));
}

TEST_CASE("twisted reduction gives an acyclic window over A") {
    auto ab = std::make_shared<AlgebraBackend>(monomial_algebra(F7, {"x", "y"}, {"xx", "yy", "xyx", "yxy"}));
    const auto& B = ab->algebra();
    AlgebraMap nu = AlgebraMap::from_generator_images(ab->algebra_ptr(), ab->algebra_ptr(),
                                                      {{"x", B.parse("-4*x")}, {"y", B.parse("-2*y")}});
    const Elem w = B.parse("x*y - 2*y*x");
    auto ctx = Context::make(ab, nu, w);
    for (int k = 1; k <= 2; ++k) {
        FactPtr T = trivial_factorization(ctx, 2, 1, k);
        ModReduction red(ctx, w);
        CHECK(red.quotient()->k_dimension() == std::optional<std::size_t>(4));
        ComplexWindow C = red.window(*T, -4, 4);
        CHECK(window_exact(C).exact);
        CHECK_THROWS_AS(dual_window(C), Unsupported);
    }
}
