#include "mfact/axioms.hpp"

#include <functional>
#include <map>

namespace mfact {

bool AxiomReport::ok() const {
    for (const auto& p : properties)
        if (p.failed) return false;
    return true;
}

namespace {

class Tallies {
public:
    // Runs one check; exceptions count as failures with their message.
    void check(const std::string& name, std::size_t trial, const std::function<bool()>& body) {
        PropertyTally& t = slot(name);
        std::string detail;
        bool ok = false;
        try {
            ok = body();
            if (!ok) detail = "property violated";
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            ++t.passed;
        } else {
            if (!t.first_trial) {
                t.first_trial = trial;
                t.first_detail = detail;
            }
            ++t.failed;
        }
    }

    std::vector<PropertyTally> take() { return std::move(order_); }

private:
    PropertyTally& slot(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return order_[it->second];
        index_[name] = order_.size();
        PropertyTally fresh;
        fresh.name = name;
        order_.push_back(std::move(fresh));
        return order_.back();
    }

    std::vector<PropertyTally> order_;
    std::map<std::string, std::size_t> index_;
};

bool reverifies(const Factorization& X) {
    std::vector<EMatrix> grids;
    for (const auto& m : X.maps) grids.push_back(m.grid);
    return check_compositions(*X.ctx, X.d, grids).ok;
}

}  // namespace

AxiomReport run_axioms(const std::shared_ptr<const Context>& ctx, const AxiomOptions& opts) {
    Rng rng(opts.seed);
    std::vector<FactPtr> pool = basic_pieces(rng, ctx, opts.d);
    for (const auto& p : opts.pieces)
        if (p->d == opts.d) pool.push_back(p);
    const Backend& B = ctx->backend();
    Tallies tally;

    for (std::size_t t = 0; t < opts.trials; ++t) {
        FactPtr X, Y;
        tally.check("make_factorization", t, [&] {
            X = random_factorization(rng, pool, 2, opts.random);
            Y = random_factorization(rng, pool, 2, opts.random);
            return reverifies(*X) && reverifies(*Y);
        });
        if (!X || !Y) continue;
        tally.check("suspend", t, [&] { return reverifies(*suspend(*X)); });
        tally.check("unsuspend", t, [&] { return reverifies(*unsuspend(*X)); });
        tally.check("suspend_unsuspend_identity", t, [&] {
            return same_representation(*suspend(*unsuspend(*X)), *X) && same_representation(*unsuspend(*suspend(*X)), *X);
        });
        tally.check("direct_sum", t, [&] { return reverifies(*direct_sum(*X, *Y)); });
        tally.check("cone_identity", t, [&] { return reverifies(*cone(identity_morphism(X)).cone); });

        FactMorphism phi;
        tally.check("random_morphism", t, [&] {
            phi = random_morphism(rng, X, Y, opts.random);
            return is_morphism(phi).ok;
        });
        if (!phi.source) continue;
        tally.check("cone_morphism", t, [&] {
            Cone c = cone(phi);
            return reverifies(*c.cone) && is_morphism(c.incl).ok && is_morphism(c.proj).ok;
        });
        std::vector<EMatrix> s;
        FactMorphism phi2;
        tally.check("homotopy_round_trip", t, [&] {
            s = random_homotopy(rng, X, Y, opts.random);
            phi2 = add(phi, FactMorphism{X, Y, homotopy_boundary(*X, *Y, s)});
            if (!is_morphism(phi2).ok) return false;
            HomotopyResult h = homotopy_decide(phi2, phi);
            return h.homotopic && check_homotopy(phi2, phi, h.s);
        });
        if (phi2.source) {
            tally.check("cone_comparison", t, [&] { return cone_comparison(phi2, phi, s).ok(); });
        }
        if (opts.dg) {
            tally.check("dg_square_zero", t, [&] {
                const int n = static_cast<int>(rng.range(-2, 2));
                GradedHom g = random_graded(rng, X, Y, n, opts.random);
                if (!dg_check(g).ok) return false;
                GradedHom dd = dg_differential(dg_differential(g));
                for (const auto& c : dd.comps)
                    if (!is_zero(B, c)) return false;
                return true;
            });
            tally.check("dg_homotopy_boundary", t, [&] {
                GradedHom sigma = homotopy_as_graded(X, Y, s);
                GradedHom ds = dg_differential(sigma);
                std::vector<EMatrix> bd = homotopy_boundary(*X, *Y, s);
                for (std::size_t i = 0; i < bd.size(); ++i)
                    if (!equal(B, ds.comps[i], bd[i])) return false;
                return true;
            });
        }
    }
    return AxiomReport{tally.take()};
}

}  // namespace mfact
