#include "mfact/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mfact/deadline.hpp"

namespace mfact {

ModVec ModuleArith::from_terms(std::vector<ModTerm> terms) const {
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) { return cmp(a, b) > 0; });
    ModVec out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().mono == t.mono && out.terms.back().comp == t.comp) {
            out.terms.back().coef += t.coef;
            if (out.terms.back().coef.is_zero()) out.terms.pop_back();
        } else if (!t.coef.is_zero()) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

ModVec ModuleArith::embed(const Poly& p, std::uint32_t comp) const {
    ModVec v;
    v.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) v.terms.push_back(ModTerm{t.mono, comp, t.coef});
    return v;  // a single component inherits the polynomial order
}

Poly ModuleArith::component(const ModVec& v, std::uint32_t comp) const {
    Poly p;
    for (const auto& t : v.terms)
        if (t.comp == comp) p.terms.push_back(Term{t.mono, t.coef});
    return p;
}

ModVec ModuleArith::add(const ModVec& a, const ModVec& b) const {
    ModVec out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = cmp(a.terms[i], b.terms[j]);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Scalar s = a.terms[i].coef + b.terms[j].coef;
            if (!s.is_zero()) out.terms.push_back(ModTerm{a.terms[i].mono, a.terms[i].comp, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

ModVec ModuleArith::sub(const ModVec& a, const ModVec& b) const { return add(a, scale(b, -R_.scalar(1))); }

ModVec ModuleArith::scale(const ModVec& a, const Scalar& c) const {
    if (c.is_zero()) return {};
    ModVec out = a;
    for (auto& t : out.terms) t.coef *= c;
    return out;
}

ModVec ModuleArith::mul_term(const ModVec& a, const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return {};
    ModVec out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) out.terms.push_back(ModTerm{t.mono * m, t.comp, t.coef * c});
    return out;
}

ModVec ModuleArith::mul_poly(const ModVec& a, const Poly& p) const {
    ModVec acc;
    for (const auto& t : p.terms) acc = add(acc, mul_term(a, t.mono, t.coef));
    return acc;
}

ModuleArith lift_arith(const PolyRing& R) { return ModuleArith(R, ModuleOrder(R.order())); }

namespace {

const TrackedVec* find_reducer(const ModTerm& t, const std::vector<TrackedVec>& basis,
                               const std::vector<bool>* active) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (active && !(*active)[k]) continue;
        const auto& lt = basis[k].vec.lead();
        if (lt.comp == t.comp && lt.mono.divides(t.mono)) return &basis[k];
    }
    return nullptr;
}

Reduction reduce_impl(const ModuleArith& M, const ModuleArith& L, ModVec cur, const std::vector<TrackedVec>& basis,
                      const std::vector<bool>* active, bool track) {
    Reduction out;
    while (!cur.is_zero()) {
        check_deadline();
        const ModTerm lt = cur.lead();
        if (const TrackedVec* g = find_reducer(lt, basis, active)) {
            const ModTerm& glt = g->vec.lead();
            Scalar q = lt.coef / glt.coef;
            Monomial m = lt.mono / glt.mono;
            cur = M.sub(cur, M.mul_term(g->vec, m, q));
            if (track) out.lift = L.add(out.lift, L.mul_term(g->lift, m, q));
        } else {
            out.remainder.terms.push_back(lt);
            cur.terms.erase(cur.terms.begin());
        }
    }
    return out;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    unsigned key;  // lcm degree or sugar
};

}  // namespace

Reduction reduce(const ModuleArith& M, const ModVec& v, const std::vector<TrackedVec>& basis, bool track) {
    ModuleArith L = lift_arith(M.ring());
    return reduce_impl(M, L, v, basis, nullptr, track);
}

std::vector<TrackedVec> groebner_basis(const ModuleArith& M, std::vector<TrackedVec> gens,
                                       const GroebnerOptions& opts) {
    const PolyRing& R = M.ring();
    ModuleArith L = lift_arith(R);
    const bool track = opts.track;

    std::set<std::uint32_t> comps;
    for (const auto& g : gens)
        for (const auto& t : g.vec.terms) comps.insert(t.comp);
    const bool ideal_case = comps.size() <= 1;

    std::vector<TrackedVec> G;
    std::vector<bool> active;
    std::vector<unsigned> sugar;
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto vec_degree = [](const ModVec& v) {
        unsigned d = 0;
        for (const auto& t : v.terms) d = std::max(d, t.mono.degree());
        return d;
    };

    auto normalize = [&](TrackedVec& h) {
        Scalar inv = h.vec.lead().coef.inverse();
        h.vec = M.scale(h.vec, inv);
        if (track) h.lift = L.scale(h.lift, inv);
    };

    auto insert = [&](TrackedVec h, unsigned s) {
        normalize(h);
        const std::size_t k = G.size();
        const ModTerm& hl = h.vec.lead();
        for (std::size_t i = 0; i < k; ++i) {
            if (!active[i]) continue;
            const ModTerm& gl = G[i].vec.lead();
            if (gl.comp != hl.comp) continue;
            if (ideal_case && gl.mono.coprime(hl.mono)) continue;  // product criterion
            Monomial l = Monomial::lcm(gl.mono, hl.mono);
            unsigned key = opts.sugar ? std::max(sugar[i] + (l / gl.mono).degree(), s + (l / hl.mono).degree())
                                      : l.degree();
            pairs.push_back(Pair{i, k, l, hl.comp, key});
            pending.insert({i, k});
        }
        G.push_back(std::move(h));
        active.push_back(true);
        sugar.push_back(s);
    };

    for (auto& g : gens) {
        if (g.vec.is_zero()) continue;
        unsigned s = vec_degree(g.vec);
        Reduction r = reduce_impl(M, L, g.vec, G, &active, track);
        if (r.remainder.is_zero()) continue;
        TrackedVec h{std::move(r.remainder), track ? L.sub(g.lift, r.lift) : ModVec{}};
        insert(std::move(h), s);
    }

    while (!pairs.empty()) {
        check_deadline();
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.key != b.key) return a.key < b.key;
            int c = M.order().cmp(a.lcm, a.comp, b.lcm, b.comp);
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        Pair p = *best;
        pairs.erase(best);
        pending.erase({p.i, p.j});

        // Buchberger's chain criterion.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            const ModTerm& kl = G[k].vec.lead();
            if (kl.comp != p.comp || !kl.mono.divides(p.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        const TrackedVec& gi = G[p.i];
        const TrackedVec& gj = G[p.j];
        Monomial mi = p.lcm / gi.vec.lead().mono;
        Monomial mj = p.lcm / gj.vec.lead().mono;
        Scalar one = R.scalar(1);
        ModVec s = M.sub(M.mul_term(gi.vec, mi, one), M.mul_term(gj.vec, mj, one));
        ModVec slift;
        if (track) slift = L.sub(L.mul_term(gi.lift, mi, one), L.mul_term(gj.lift, mj, one));
        unsigned ssugar = std::max(sugar[p.i] + mi.degree(), sugar[p.j] + mj.degree());

        Reduction r = reduce_impl(M, L, std::move(s), G, &active, track);
        if (r.remainder.is_zero()) continue;
        TrackedVec h{std::move(r.remainder), track ? L.sub(slift, r.lift) : ModVec{}};
        insert(std::move(h), ssugar);
    }

    // Minimize: drop elements whose leading term is divisible by another's.
    std::vector<TrackedVec> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const ModTerm& li = G[i].vec.lead();
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const ModTerm& lj = G[j].vec.lead();
            if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
            // equal leading terms: keep the earliest
            if (lj.mono == li.mono && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Interreduce tails.
    std::vector<TrackedVec> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<TrackedVec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Reduction r = reduce_impl(M, L, minimal[i].vec, others, nullptr, track);
        TrackedVec h{std::move(r.remainder), track ? L.sub(minimal[i].lift, r.lift) : ModVec{}};
        normalize(h);
        reduced.push_back(std::move(h));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const TrackedVec& a, const TrackedVec& b) { return M.cmp(a.vec.lead(), b.vec.lead()) > 0; });
    return reduced;
}

}  // namespace mfact
