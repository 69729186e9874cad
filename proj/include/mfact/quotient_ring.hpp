#pragma once

// Quotients k[x_1..x_n]/I with Groebner normal forms, and the module
// computations built on them: colon ideals, linear systems and syzygies.

#include <optional>
#include <string>
#include <vector>

#include "mfact/groebner.hpp"
#include "mfact/matrix.hpp"

namespace mfact {

/// Reduced Groebner basis of the ideal generated by gens (zero generators ignored).
std::vector<Poly> groebner(const PolyRing& R, const std::vector<Poly>& gens, const GroebnerOptions& opts = {});

/// Remainder of f modulo a Groebner basis.
Poly reduce_poly(const PolyRing& R, const Poly& f, const std::vector<Poly>& basis);

class QuotientRing {
public:
    /// The Groebner basis is computed eagerly so instances are immutable.
    QuotientRing(PolyRing R, std::vector<Poly> ideal, const GroebnerOptions& opts = {});

    const PolyRing& poly() const { return R_; }
    const Field& field() const { return R_.field(); }
    const std::vector<Poly>& ideal_generators() const { return ideal_; }
    const std::vector<Poly>& groebner_basis() const { return gb_; }

    Poly normal_form(const Poly& f) const;
    bool is_zero(const Poly& f) const { return normal_form(f).is_zero(); }
    bool equal(const Poly& a, const Poly& b) const { return is_zero(R_.sub(a, b)); }

    Poly add(const Poly& a, const Poly& b) const { return normal_form(R_.add(a, b)); }
    Poly sub(const Poly& a, const Poly& b) const { return normal_form(R_.sub(a, b)); }
    Poly neg(const Poly& a) const { return normal_form(R_.neg(a)); }
    Poly mul(const Poly& a, const Poly& b) const { return normal_form(R_.mul(a, b)); }

    /// Parses and reduces to normal form.
    Poly parse(const std::string& src) const { return normal_form(R_.parse(src)); }
    std::string to_string(const Poly& f) const { return R_.to_string(f); }

    /// Monomials outside the leading ideal, if there are finitely many.
    std::optional<std::vector<Monomial>> standard_monomials() const;

    /// Same polynomial ring modulo I + (extra).
    QuotientRing extend(const std::vector<Poly>& extra) const;

private:
    PolyRing R_;
    std::vector<Poly> ideal_;
    std::vector<Poly> gb_;
};

Poly normal_form(const Poly& f, const QuotientRing& R);

/// Reduced Groebner basis of (I : g) in the ambient polynomial ring, where I
/// is the defining ideal of R. Throws std::invalid_argument if g is zero in R.
std::vector<Poly> colon_ideal(const QuotientRing& R, const Poly& g);

struct LinearSolveResult {
    bool solvable = false;
    std::vector<Poly> solution;
    /// Certificate for unsolvable systems: b reduces to a nonzero remainder
    /// modulo this Groebner basis of (column module + I * R^m).
    ModVec remainder;
    std::vector<ModVec> module_basis;
};

/// Solves A s = b over R. Throws std::invalid_argument on a shape mismatch.
LinearSolveResult solve_linear(const QuotientRing& R, const Matrix<Poly>& A, const std::vector<Poly>& b);

/// Generators of {s in R^n : A s = 0 in R^m}, entries in normal form.
std::vector<std::vector<Poly>> kernel(const QuotientRing& R, const Matrix<Poly>& A);

/// True iff multiplication by f is injective on R. Throws if f is zero in R.
bool is_regular(const QuotientRing& R, const Poly& f);

/// Human-readable rendering of a module element, e.g. "(x, 0, y^2)".
std::string to_string(const PolyRing& R, const ModVec& v, std::size_t ncomp);

}  // namespace mfact
