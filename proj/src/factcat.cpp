#include "mfact/factcat.hpp"

#include <sstream>

namespace mfact {

int wrap_index(int i, int d) { return ((i - 1) % d + d) % d + 1; }

const EMatrix& Factorization::f(int i) const { return maps[static_cast<std::size_t>(wrap_index(i, d) - 1)].grid; }

std::size_t Factorization::rank(int i) const { return objects[static_cast<std::size_t>(wrap_index(i, d) - 1)].rank(); }

namespace {

std::string composition_message(int rotation) {
    return "composition mismatch: the d-fold composite starting at object " + std::to_string(rotation) +
           " differs from eta";
}

// Object at position i in 1..d+1, with M_{d+1} = S M_1.
FreeObj object_at(const Factorization& X, int i) {
    if (i == X.d + 1) return X.objects[0].twisted(1);
    return X.objects[static_cast<std::size_t>(i - 1)];
}

FactOptions inherit(const Factorization& X) {
    FactOptions o;
    o.allow_odd_d = X.d % 2 != 0;
    return o;
}

void same_category(const Factorization& X, const Factorization& Y) {
    if (X.ctx != Y.ctx) throw std::invalid_argument("factorizations live over different contexts");
    if (X.d != Y.d) throw std::invalid_argument("factorizations have different d");
}

}  // namespace

CompositionMismatch::CompositionMismatch(int rot, EMatrix res)
    : std::invalid_argument(composition_message(rot)), rotation(rot), residual(std::move(res)) {}

CompositionCheck check_compositions(const Context& ctx, int d, const std::vector<EMatrix>& grids) {
    const Backend& B = ctx.backend();
    CompositionCheck out;
    for (int r = 1; r <= d; ++r) {
        EMatrix P = grids[static_cast<std::size_t>(r - 1)];
        for (int k = r + 1; k <= r + d - 1; ++k) P = compose(B, grids[static_cast<std::size_t>(wrap_index(k, d) - 1)], P);
        EMatrix residual = sub(B, P, scalar_matrix(B, P.cols, ctx.eta()));
        if (!is_zero(B, residual)) {
            out.ok = false;
            out.rotation = r;
            out.residual = normalize(B, residual);
            return out;
        }
    }
    return out;
}

FactPtr make_factorization(std::shared_ptr<const Context> ctx, int d, std::vector<FreeObj> objects,
                           std::vector<EMatrix> grids, const FactOptions& opts) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (d % 2 != 0 && !opts.allow_odd_d) throw std::invalid_argument("d must be even");
    if (objects.size() != static_cast<std::size_t>(d) || grids.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("expected " + std::to_string(d) + " objects and maps");
    const Backend& B = ctx->backend();
    auto X = std::make_shared<Factorization>();
    X->ctx = ctx;
    X->d = d;
    X->objects = std::move(objects);
    for (int i = 1; i <= d; ++i) {
        EMatrix& g = grids[static_cast<std::size_t>(i - 1)];
        FreeObj src = X->objects[static_cast<std::size_t>(i - 1)];
        FreeObj tgt = object_at(*X, i + 1);
        if (g.rows != tgt.rank() || g.cols != src.rank())
            throw std::invalid_argument("map " + std::to_string(i) + " has shape " + std::to_string(g.rows) + "x" +
                                        std::to_string(g.cols) + ", expected " + std::to_string(tgt.rank()) + "x" +
                                        std::to_string(src.rank()));
        X->maps.push_back(MatrixMap{std::move(src), std::move(tgt), normalize(B, g)});
    }
    std::vector<EMatrix> gs;
    for (const auto& m : X->maps) gs.push_back(m.grid);
    CompositionCheck c = check_compositions(*ctx, d, gs);
    if (!c.ok) throw CompositionMismatch(c.rotation, std::move(c.residual));
    return X;
}

FactPtr make_factorization(std::shared_ptr<const Context> ctx, int d, const std::vector<std::size_t>& ranks,
                           std::vector<EMatrix> grids, const FactOptions& opts) {
    std::vector<FreeObj> objects;
    for (auto r : ranks) objects.push_back(FreeObj::plain(r));
    return make_factorization(std::move(ctx), d, std::move(objects), std::move(grids), opts);
}

FactPtr zero_factorization(std::shared_ptr<const Context> ctx, int d) {
    const Backend& B = ctx->backend();
    FactOptions o;
    o.allow_odd_d = d % 2 != 0;
    return make_factorization(ctx, d, std::vector<std::size_t>(static_cast<std::size_t>(d), 0),
                              std::vector<EMatrix>(static_cast<std::size_t>(d), zero_matrix(B, 0, 0)), o);
}

FactPtr trivial_factorization(std::shared_ptr<const Context> ctx, int d, std::size_t n, int k) {
    const Backend& B = ctx->backend();
    std::vector<EMatrix> grids;
    for (int i = 1; i <= d; ++i) grids.push_back(i == k ? scalar_matrix(B, n, ctx->eta()) : identity_matrix(B, n));
    FactOptions o;
    o.allow_odd_d = d % 2 != 0;
    return make_factorization(ctx, d, std::vector<std::size_t>(static_cast<std::size_t>(d), n), std::move(grids), o);
}

FactPtr direct_sum(const Factorization& X, const Factorization& Y) {
    same_category(X, Y);
    const Backend& B = X.backend();
    std::vector<FreeObj> objects;
    std::vector<EMatrix> grids;
    for (int i = 1; i <= X.d; ++i) {
        objects.push_back(X.objects[static_cast<std::size_t>(i - 1)] + Y.objects[static_cast<std::size_t>(i - 1)]);
        grids.push_back(block_diag(B, X.f(i), Y.f(i)));
    }
    return make_factorization(X.ctx, X.d, std::move(objects), std::move(grids), inherit(X));
}

FactPtr suspend(const Factorization& X) {
    const Backend& B = X.backend();
    std::vector<FreeObj> objects;
    std::vector<EMatrix> grids;
    for (int i = 2; i <= X.d + 1; ++i) {
        objects.push_back(object_at(X, i));
        grids.push_back(neg(B, X.f(i)));
    }
    return make_factorization(X.ctx, X.d, std::move(objects), std::move(grids), inherit(X));
}

FactPtr unsuspend(const Factorization& X) {
    const Backend& B = X.backend();
    std::vector<FreeObj> objects{X.objects.back().twisted(-1)};
    std::vector<EMatrix> grids{neg(B, X.f(X.d))};
    for (int i = 1; i < X.d; ++i) {
        objects.push_back(X.objects[static_cast<std::size_t>(i - 1)]);
        grids.push_back(neg(B, X.f(i)));
    }
    return make_factorization(X.ctx, X.d, std::move(objects), std::move(grids), inherit(X));
}

bool same_representation(const Factorization& X, const Factorization& Y) {
    if (X.ctx != Y.ctx || X.d != Y.d || X.objects != Y.objects) return false;
    for (int i = 1; i <= X.d; ++i)
        if (!(X.f(i) == Y.f(i))) return false;
    return true;
}

void check_morphism_shapes(const FactMorphism& phi) {
    const Factorization& X = *phi.source;
    const Factorization& Y = *phi.target;
    same_category(X, Y);
    if (phi.comps.size() != static_cast<std::size_t>(X.d)) throw std::invalid_argument("morphism needs d components");
    for (int i = 1; i <= X.d; ++i) {
        const EMatrix& c = phi.comps[static_cast<std::size_t>(i - 1)];
        if (c.rows != Y.rank(i) || c.cols != X.rank(i))
            throw std::invalid_argument("component " + std::to_string(i) + " has shape " + std::to_string(c.rows) + "x" +
                                        std::to_string(c.cols) + ", expected " + std::to_string(Y.rank(i)) + "x" +
                                        std::to_string(X.rank(i)));
    }
}

namespace {

const EMatrix& comp(const std::vector<EMatrix>& c, int i) {
    return c[static_cast<std::size_t>(wrap_index(i, static_cast<int>(c.size())) - 1)];
}

std::vector<EMatrix> square_residuals(const Factorization& X, const Factorization& Y, const std::vector<EMatrix>& phi) {
    const Backend& B = X.backend();
    std::vector<EMatrix> out;
    for (int i = 1; i <= X.d; ++i)
        out.push_back(sub(B, compose(B, Y.f(i), comp(phi, i)), compose(B, comp(phi, i + 1), X.f(i))));
    return out;
}

std::vector<Shape> morphism_shapes(const Factorization& X, const Factorization& Y) {
    std::vector<Shape> s;
    for (int i = 1; i <= X.d; ++i) s.push_back(Shape{Y.rank(i), X.rank(i)});
    return s;
}

}  // namespace

SquareCheck is_morphism(const FactMorphism& phi) {
    check_morphism_shapes(phi);
    const Backend& B = phi.source->backend();
    SquareCheck out;
    auto res = square_residuals(*phi.source, *phi.target, phi.comps);
    for (std::size_t i = 0; i < res.size(); ++i) {
        if (!is_zero(B, res[i])) {
            out.ok = false;
            out.index = static_cast<int>(i + 1);
            out.residual = normalize(B, res[i]);
            return out;
        }
    }
    return out;
}

FactMorphism identity_morphism(const FactPtr& X) {
    FactMorphism m{X, X, {}};
    for (int i = 1; i <= X->d; ++i) m.comps.push_back(identity_matrix(X->backend(), X->rank(i)));
    return m;
}

FactMorphism zero_morphism(const FactPtr& X, const FactPtr& Y) {
    FactMorphism m{X, Y, {}};
    for (int i = 1; i <= X->d; ++i) m.comps.push_back(zero_matrix(X->backend(), Y->rank(i), X->rank(i)));
    return m;
}

FactMorphism add(const FactMorphism& a, const FactMorphism& b) {
    if (a.source != b.source || a.target != b.target) throw std::invalid_argument("adding non-parallel morphisms");
    FactMorphism m{a.source, a.target, {}};
    for (std::size_t i = 0; i < a.comps.size(); ++i) m.comps.push_back(add(a.source->backend(), a.comps[i], b.comps[i]));
    return m;
}

FactMorphism sub(const FactMorphism& a, const FactMorphism& b) {
    if (a.source != b.source || a.target != b.target) throw std::invalid_argument("subtracting non-parallel morphisms");
    FactMorphism m{a.source, a.target, {}};
    for (std::size_t i = 0; i < a.comps.size(); ++i) m.comps.push_back(sub(a.source->backend(), a.comps[i], b.comps[i]));
    return m;
}

FactMorphism compose(const FactMorphism& psi, const FactMorphism& phi) {
    if (phi.target != psi.source && !same_representation(*phi.target, *psi.source))
        throw std::invalid_argument("composing morphisms that do not chain");
    FactMorphism m{phi.source, psi.target, {}};
    for (std::size_t i = 0; i < phi.comps.size(); ++i)
        m.comps.push_back(compose(phi.source->backend(), psi.comps[i], phi.comps[i]));
    return m;
}

bool equal(const FactMorphism& a, const FactMorphism& b) {
    if (a.comps.size() != b.comps.size()) return false;
    for (std::size_t i = 0; i < a.comps.size(); ++i)
        if (!equal(a.source->backend(), a.comps[i], b.comps[i])) return false;
    return true;
}

std::vector<Shape> homotopy_shapes(const Factorization& X, const Factorization& Y) {
    std::vector<Shape> s;
    for (int i = 1; i <= X.d; ++i) s.push_back(Shape{Y.rank(i), X.rank(i + 1)});
    return s;
}

std::vector<EMatrix> homotopy_boundary(const Factorization& X, const Factorization& Y, const std::vector<EMatrix>& s) {
    const Backend& B = X.backend();
    std::vector<EMatrix> out;
    for (int i = 1; i <= X.d; ++i)
        out.push_back(add(B, compose(B, comp(s, i), X.f(i)), compose(B, Y.f(i - 1), comp(s, i - 1))));
    return out;
}

bool check_homotopy(const FactMorphism& phi, const FactMorphism& phi2, const std::vector<EMatrix>& s) {
    const Backend& B = phi.source->backend();
    auto bd = homotopy_boundary(*phi.source, *phi.target, s);
    for (std::size_t i = 0; i < bd.size(); ++i)
        if (!equal(B, sub(B, phi.comps[i], phi2.comps[i]), bd[i])) return false;
    return true;
}

HomotopyResult homotopy_decide(const FactMorphism& phi, const FactMorphism& phi2) {
    check_morphism_shapes(phi);
    check_morphism_shapes(phi2);
    if (phi.source != phi2.source && !same_representation(*phi.source, *phi2.source))
        throw std::invalid_argument("homotopy_decide: morphisms have different sources");
    if (phi.target != phi2.target && !same_representation(*phi.target, *phi2.target))
        throw std::invalid_argument("homotopy_decide: morphisms have different targets");
    const Factorization& X = *phi.source;
    const Factorization& Y = *phi.target;
    const Backend& B = X.backend();
    LinearSystem sys;
    sys.unknowns = homotopy_shapes(X, Y);
    sys.apply = [&](const EMatrices& s) { return homotopy_boundary(X, Y, s); };
    for (std::size_t i = 0; i < phi.comps.size(); ++i) sys.rhs.push_back(sub(B, phi.comps[i], phi2.comps[i]));
    SystemSolution sol = solve_system(B, sys);
    HomotopyResult out;
    if (!sol.solvable) {
        out.certificate = std::move(sol.certificate);
        return out;
    }
    if (!check_homotopy(phi, phi2, sol.x)) throw std::logic_error("homotopy witness failed verification");
    out.homotopic = true;
    out.s = std::move(sol.x);
    return out;
}

std::vector<EMatrix> cone_grids(const FactMorphism& phi) {
    check_morphism_shapes(phi);
    const Factorization& X = *phi.source;
    const Factorization& Y = *phi.target;
    const Backend& B = X.backend();
    std::vector<EMatrix> grids;
    for (int i = 1; i <= X.d; ++i) {
        grids.push_back(block(neg(B, X.f(i + 1)), zero_matrix(B, X.rank(i + 2), Y.rank(i)), comp(phi.comps, i + 1),
                              Y.f(i)));
    }
    return grids;
}

Cone cone(const FactMorphism& phi, const FactOptions& opts) {
    SquareCheck sq = is_morphism(phi);
    if (!sq.ok) throw std::invalid_argument("cone: input is not a morphism (square " + std::to_string(sq.index) + ")");
    const FactPtr& X = phi.source;
    const FactPtr& Y = phi.target;
    const Backend& B = X->backend();
    std::vector<FreeObj> objects;
    for (int i = 1; i <= X->d; ++i) objects.push_back(object_at(*X, i + 1) + Y->objects[static_cast<std::size_t>(i - 1)]);
    Cone out;
    out.cone = make_factorization(X->ctx, X->d, std::move(objects), cone_grids(phi), opts);
    FactPtr SX = suspend(*X);
    out.incl = FactMorphism{Y, out.cone, {}};
    out.proj = FactMorphism{out.cone, SX, {}};
    for (int i = 1; i <= X->d; ++i) {
        const std::size_t m = X->rank(i + 1), n = Y->rank(i);
        out.incl.comps.push_back(block(zero_matrix(B, m, 0), zero_matrix(B, m, n), zero_matrix(B, n, 0), identity_matrix(B, n)));
        out.proj.comps.push_back(block(identity_matrix(B, m), zero_matrix(B, m, n), zero_matrix(B, 0, m), zero_matrix(B, 0, n)));
    }
    return out;
}

ConeComparison cone_comparison(const FactMorphism& phi, const FactMorphism& phi2, const std::vector<EMatrix>& s) {
    if (!check_homotopy(phi, phi2, s)) throw std::invalid_argument("cone_comparison: s does not witness phi ~ phi2");
    const Backend& B = phi.source->backend();
    const Factorization& X = *phi.source;
    const Factorization& Y = *phi.target;
    Cone c1 = cone(phi);
    Cone c2 = cone(phi2);
    ConeComparison out;
    out.lambda = FactMorphism{c1.cone, c2.cone, {}};
    out.lambda_inv = FactMorphism{c2.cone, c1.cone, {}};
    for (int i = 1; i <= X.d; ++i) {
        const std::size_t m = X.rank(i + 1), n = Y.rank(i);
        const EMatrix& si = comp(s, i);
        out.lambda.comps.push_back(block(identity_matrix(B, m), zero_matrix(B, m, n), si, identity_matrix(B, n)));
        out.lambda_inv.comps.push_back(block(identity_matrix(B, m), zero_matrix(B, m, n), neg(B, si), identity_matrix(B, n)));
    }
    out.is_morphism = is_morphism(out.lambda).ok && is_morphism(out.lambda_inv).ok;
    out.inverse_left = equal(compose(out.lambda_inv, out.lambda), identity_morphism(c1.cone));
    out.inverse_right = equal(compose(out.lambda, out.lambda_inv), identity_morphism(c2.cone));
    out.incl_identity = equal(c2.incl, compose(out.lambda, c1.incl));
    out.proj_identity = equal(compose(c2.proj, out.lambda), c1.proj);
    return out;
}

Triangle standard_triangle(const FactMorphism& phi) {
    Cone c = cone(phi);
    return Triangle{phi.source, phi.target, c.cone, c.proj.target, phi, c.incl, c.proj};
}

std::vector<Shape> graded_shapes(const Factorization& X, const Factorization& Y, int n) {
    std::vector<Shape> s;
    for (int i = 1; i <= X.d; ++i) s.push_back(Shape{Y.rank(i + n), X.rank(i)});
    return s;
}

void check_graded_shapes(const GradedHom& phi) {
    same_category(*phi.source, *phi.target);
    auto shapes = graded_shapes(*phi.source, *phi.target, phi.degree);
    if (phi.comps.size() != shapes.size()) throw std::invalid_argument("graded element needs d components");
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (phi.comps[i].rows != shapes[i].rows || phi.comps[i].cols != shapes[i].cols)
            throw std::invalid_argument("graded component " + std::to_string(i + 1) + " has shape " +
                                        std::to_string(phi.comps[i].rows) + "x" + std::to_string(phi.comps[i].cols) +
                                        ", expected " + std::to_string(shapes[i].rows) + "x" +
                                        std::to_string(shapes[i].cols));
}

namespace {

std::vector<EMatrix> double_square_residuals(const Factorization& X, const Factorization& Y, int n,
                                             const std::vector<EMatrix>& phi) {
    const Backend& B = X.backend();
    std::vector<EMatrix> out;
    for (int i = 1; i <= X.d; ++i) {
        EMatrix lhs = compose(B, comp(phi, i + 2), compose(B, X.f(i + 1), X.f(i)));
        EMatrix rhs = compose(B, Y.f(i + 1 + n), compose(B, Y.f(i + n), comp(phi, i)));
        out.push_back(sub(B, lhs, rhs));
    }
    return out;
}

std::vector<EMatrix> differential(const Factorization& X, const Factorization& Y, int n, const std::vector<EMatrix>& phi) {
    const Backend& B = X.backend();
    const bool minus = (n + 1) % 2 != 0;
    std::vector<EMatrix> out;
    for (int i = 1; i <= X.d; ++i) {
        EMatrix a = compose(B, Y.f(i + n), comp(phi, i));
        EMatrix b = compose(B, comp(phi, i + 1), X.f(i));
        out.push_back(minus ? sub(B, a, b) : add(B, a, b));
    }
    return out;
}

}  // namespace

SquareCheck dg_check(const GradedHom& phi) {
    check_graded_shapes(phi);
    const Backend& B = phi.source->backend();
    SquareCheck out;
    auto res = double_square_residuals(*phi.source, *phi.target, phi.degree, phi.comps);
    for (std::size_t i = 0; i < res.size(); ++i) {
        if (!is_zero(B, res[i])) {
            out.ok = false;
            out.index = static_cast<int>(i + 1);
            out.residual = normalize(B, res[i]);
            return out;
        }
    }
    return out;
}

GradedHom dg_differential(const GradedHom& phi) {
    check_graded_shapes(phi);
    return GradedHom{phi.source, phi.target, phi.degree + 1,
                     differential(*phi.source, *phi.target, phi.degree, phi.comps)};
}

std::vector<std::vector<EMatrix>> graded_generators(const FactPtr& X, const FactPtr& Y, int n) {
    same_category(*X, *Y);
    return kernel_system(X->backend(), graded_shapes(*X, *Y, n),
                         [&](const EMatrices& phi) { return double_square_residuals(*X, *Y, n, phi); });
}

std::vector<std::vector<EMatrix>> morphism_generators(const FactPtr& X, const FactPtr& Y) {
    same_category(*X, *Y);
    return kernel_system(X->backend(), morphism_shapes(*X, *Y),
                         [&](const EMatrices& phi) { return square_residuals(*X, *Y, phi); });
}

GradedHom homotopy_as_graded(const FactPtr& X, const FactPtr& Y, const std::vector<EMatrix>& s) {
    GradedHom g{X, Y, -1, {}};
    for (int j = 1; j <= X->d; ++j) g.comps.push_back(comp(s, j - 1));
    return g;
}

std::optional<std::size_t> h0_dimension(const FactPtr& X, const FactPtr& Y) {
    same_category(*X, *Y);
    const Backend& B = X->backend();
    if (!B.k_dimension()) return std::nullopt;
    const Field& k = B.field();
    auto shapes0 = graded_shapes(*X, *Y, 0);
    auto shapes1 = graded_shapes(*X, *Y, -1);
    LinearMap d0 = [&](const EMatrices& phi) { return differential(*X, *Y, 0, phi); };
    LinearMap d1 = [&](const EMatrices& phi) { return differential(*X, *Y, -1, phi); };
    LinearMap ds1 = [&](const EMatrices& phi) { return double_square_residuals(*X, *Y, -1, phi); };
    Matrix<Scalar> D0 = field_matrix(B, shapes0, d0);
    const std::size_t z0 = D0.cols - rank(k, D0);
    Matrix<Scalar> D1 = field_matrix(B, shapes1, d1);
    auto V = nullspace(k, field_matrix(B, shapes1, ds1));
    Matrix<Scalar> image(D1.rows, V.size(), Scalar::zero(k));
    for (std::size_t j = 0; j < V.size(); ++j) {
        Coords c = mat_vec(k, D1, V[j]);
        for (std::size_t i = 0; i < c.size(); ++i) image(i, j) = c[i];
    }
    return z0 - rank(k, image);
}

}  // namespace mfact
