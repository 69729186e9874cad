#pragma once

#include <string>
#include <vector>

#include "mfact/monomial.hpp"
#include "mfact/scalar.hpp"

namespace mfact {

struct Term {
    Monomial mono;
    Scalar coef;

    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coef == b.coef; }
};

/// Sparse polynomial: terms strictly descending in the ambient order, no zero
/// coefficients. The zero polynomial has no terms. A Poly does not know its
/// ring; arithmetic goes through PolyRing.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
};

/// Multivariate polynomial ring k[x_1..x_n] with a fixed monomial order.
class PolyRing {
public:
    PolyRing(Field k, std::vector<std::string> vars, MonomialOrder ord = MonomialOrder::GRevLex);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    MonomialOrder order() const { return order_; }

    int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }

    Scalar scalar(long long n) const { return Scalar(field_, n); }
    Monomial one_monomial() const { return Monomial(nvars()); }

    Poly zero() const { return {}; }
    Poly one() const { return constant(scalar(1)); }
    Poly constant(const Scalar& c) const;
    Poly variable(std::size_t i) const;
    Poly term(const Monomial& m, const Scalar& c) const;
    /// Sorts and merges arbitrary terms into canonical form.
    Poly from_terms(std::vector<Term> terms) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, const Scalar& c) const;
    /// a * c * m
    Poly mul_term(const Poly& a, const Monomial& m, const Scalar& c) const;
    Poly pow(const Poly& a, unsigned e) const;
    /// Divides by the leading coefficient.
    Poly monic(const Poly& a) const;

    unsigned total_degree(const Poly& a) const;
    /// Throws std::invalid_argument if a is not a valid element of this ring.
    void check(const Poly& a) const;

    Poly parse(const std::string& src) const;
    std::string to_string(const Poly& a) const;
    std::string to_string(const Monomial& m) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
    }

private:
    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

}  // namespace mfact
