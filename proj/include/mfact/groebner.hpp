#pragma once

// Buchberger's algorithm for submodules of free modules R^m over a polynomial
// ring, with optional lift tracking: every basis element remembers how it is
// expressed in the tracked input generators. Ideals are the case m = 1.

#include <cstdint>
#include <vector>

#include "mfact/poly.hpp"

namespace mfact {

struct ModTerm {
    Monomial mono;
    std::uint32_t comp = 0;
    Scalar coef;

    friend bool operator==(const ModTerm& a, const ModTerm& b) {
        return a.comp == b.comp && a.mono == b.mono && a.coef == b.coef;
    }
};

/// Sparse vector of R^m; terms strictly descending in a ModuleOrder.
struct ModVec {
    std::vector<ModTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead() const { return terms.front(); }

    friend bool operator==(const ModVec& a, const ModVec& b) { return a.terms == b.terms; }
};

/// Term-over-position order refined by blocks: a term in a lower-numbered
/// block beats any term in a higher-numbered block. Inside a block the
/// monomial decides first, then the lower component index wins.
class ModuleOrder {
public:
    explicit ModuleOrder(MonomialOrder mono, std::vector<int> blocks = {})
        : mono_(mono), blocks_(std::move(blocks)) {}

    MonomialOrder monomial_order() const { return mono_; }
    int block(std::uint32_t comp) const { return comp < blocks_.size() ? blocks_[comp] : 0; }

    int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
        int ba = block(ca), bb = block(cb);
        if (ba != bb) return ba < bb ? 1 : -1;
        int c = compare(a, b, mono_);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }

private:
    MonomialOrder mono_;
    std::vector<int> blocks_;
};

/// Arithmetic on ModVec for a fixed ring and order.
class ModuleArith {
public:
    ModuleArith(const PolyRing& R, ModuleOrder ord) : R_(R), ord_(std::move(ord)) {}

    const PolyRing& ring() const { return R_; }
    const ModuleOrder& order() const { return ord_; }

    int cmp(const ModTerm& a, const ModTerm& b) const { return ord_.cmp(a.mono, a.comp, b.mono, b.comp); }

    ModVec from_terms(std::vector<ModTerm> terms) const;
    /// Embeds polynomial p into component comp.
    ModVec embed(const Poly& p, std::uint32_t comp) const;
    /// Extracts component comp as a polynomial.
    Poly component(const ModVec& v, std::uint32_t comp) const;

    ModVec add(const ModVec& a, const ModVec& b) const;
    ModVec sub(const ModVec& a, const ModVec& b) const;
    ModVec scale(const ModVec& a, const Scalar& c) const;
    /// c * m * a
    ModVec mul_term(const ModVec& a, const Monomial& m, const Scalar& c) const;
    ModVec mul_poly(const ModVec& a, const Poly& p) const;

private:
    const PolyRing& R_;
    ModuleOrder ord_;
};

/// A module element together with its expression in the tracked generators
/// (lift[k] is the coefficient of tracked generator k, stored as component k).
struct TrackedVec {
    ModVec vec;
    ModVec lift;
};

struct GroebnerOptions {
    /// Select pairs by sugar degree instead of lcm degree (normal strategy).
    bool sugar = false;
    /// Maintain lift vectors through the computation.
    bool track = false;
};

struct Reduction {
    ModVec remainder;
    /// Sum of q_k * lift_k over the reducers used; v - remainder equals the
    /// corresponding combination of basis vectors.
    ModVec lift;
};

/// Full reduction of v by basis (remainder has no term divisible by a leading term).
Reduction reduce(const ModuleArith& M, const ModVec& v, const std::vector<TrackedVec>& basis, bool track);

/// Reduced Gröbner basis (monic, interreduced, sorted by descending leading
/// term). Zero generators are ignored.
std::vector<TrackedVec> groebner_basis(const ModuleArith& M, std::vector<TrackedVec> gens,
                                       const GroebnerOptions& opts = {});

/// Lift-order arithmetic for tracked coefficients (plain term-over-position).
ModuleArith lift_arith(const PolyRing& R);

}  // namespace mfact
