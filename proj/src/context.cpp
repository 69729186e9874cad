#include "mfact/context.hpp"

#include <sstream>

namespace mfact {

FreeObj FreeObj::twisted(int q) const {
    FreeObj o = *this;
    for (auto& t : o.twists) t += q;
    return o;
}

FreeObj operator+(const FreeObj& a, const FreeObj& b) {
    FreeObj o = a;
    o.twists.insert(o.twists.end(), b.twists.begin(), b.twists.end());
    return o;
}

std::string FreeObj::to_string() const {
    std::ostringstream os;
    os << "rank " << rank();
    bool uniform = true;
    for (auto t : twists) uniform = uniform && t == twists.front();
    if (!twists.empty() && uniform) {
        if (twists.front() != 0) os << " twist " << twists.front();
    } else if (!twists.empty()) {
        os << " twists [";
        for (std::size_t i = 0; i < twists.size(); ++i) os << (i ? "," : "") << twists[i];
        os << "]";
    }
    return os.str();
}

std::shared_ptr<const Context> Context::make(std::shared_ptr<const Backend> backend, std::optional<AlgebraMap> twist,
                                             Elem eta) {
    eta = backend->normalize(eta);
    auto ctx = std::shared_ptr<Context>(new Context(backend, std::move(twist), std::move(eta)));
    const Backend& B = *ctx->backend_;
    if (auto* alg = dynamic_cast<const AlgebraBackend*>(&B)) {
        const Coords& w = std::get<Coords>(ctx->eta_);
        if (ctx->twist_) {
            if (&ctx->twist_->source() != &alg->algebra() || &ctx->twist_->target() != &alg->algebra())
                throw ContextError("twist is not an endomorphism of the context algebra");
            TwistCompatibility rep = check_twist_compatibility(*ctx->twist_, w);
            ctx->report_ = rep;
            const FDAlgebra& A = alg->algebra();
            if (!rep.twisted_central)
                throw ContextError("eta is not twisted central: w*b != nu(b)*w at b = " + A.label(*rep.central_witness));
            if (!rep.fixes_wr)
                throw ContextError("twist does not fix w*r at r = " + A.label(*rep.fixes_witness));
        } else {
            const FDAlgebra& A = alg->algebra();
            for (std::size_t i = 0; i < A.dim(); ++i)
                if (A.mul(w, A.basis(i)) != A.mul(A.basis(i), w))
                    throw ContextError("eta is not central: fails at " + A.label(i));
        }
    } else if (ctx->twist_) {
        throw ContextError("polynomial-ring contexts only support the identity twist");
    }
    return ctx;
}

std::shared_ptr<const Context> Context::unchecked(std::shared_ptr<const Backend> backend,
                                                  std::optional<AlgebraMap> twist, Elem eta) {
    eta = backend->normalize(eta);
    return std::shared_ptr<Context>(new Context(std::move(backend), std::move(twist), std::move(eta)));
}

MatrixMap compose(const Context& ctx, const MatrixMap& g, const MatrixMap& f) {
    if (g.source != f.target)
        throw std::invalid_argument("compose: source " + g.source.to_string() + " does not match target " +
                                    f.target.to_string());
    return MatrixMap{f.source, g.target, compose(ctx.backend(), g.grid, f.grid)};
}

MatrixMap eta_map(const FreeObj& M, const Context& ctx) {
    return MatrixMap{M, M.twisted(1), scalar_matrix(ctx.backend(), M.rank(), ctx.eta())};
}

MatrixMap apply_twist(const MatrixMap& f, int q) { return MatrixMap{f.source.twisted(q), f.target.twisted(q), f.grid}; }

bool naturality_check(const MatrixMap& f, const Context& ctx) {
    MatrixMap lhs = compose(ctx, eta_map(f.target, ctx), f);
    MatrixMap rhs = compose(ctx, apply_twist(f), eta_map(f.source, ctx));
    return equal(ctx.backend(), lhs.grid, rhs.grid);
}

}  // namespace mfact
