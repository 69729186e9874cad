#pragma once

// Uniform element interface over the two kinds of base ring: commutative
// quotients of polynomial rings and finite-dimensional algebras.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mfact/fd_algebra.hpp"
#include "mfact/quotient_ring.hpp"

namespace mfact {

using Elem = std::variant<Poly, Coords>;

class Backend {
public:
    virtual ~Backend() = default;

    virtual const Field& field() const = 0;
    virtual bool is_commutative() const = 0;

    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    virtual Elem sub(const Elem& a, const Elem& b) const = 0;
    virtual Elem neg(const Elem& a) const = 0;
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual Elem scale(const Elem& a, const Scalar& c) const = 0;
    Elem scalar(long long n) const { return scale(one(), Scalar(field(), n)); }

    /// Canonical representative; equality of normalized elements is ==.
    virtual Elem normalize(const Elem& a) const = 0;
    virtual bool is_zero(const Elem& a) const = 0;
    bool equal(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }

    virtual Elem parse(const std::string& src) const = 0;
    virtual std::string to_string(const Elem& a) const = 0;

    /// Dimension over the coefficient field, if finite.
    virtual std::optional<std::size_t> k_dimension() const = 0;
    /// Field basis and coordinates; only valid when k_dimension() is set.
    virtual std::vector<Elem> k_basis() const = 0;
    virtual Coords coordinates(const Elem& a) const = 0;
};

class RingBackend : public Backend {
public:
    explicit RingBackend(std::shared_ptr<const QuotientRing> R);

    const QuotientRing& ring() const { return *R_; }
    std::shared_ptr<const QuotientRing> ring_ptr() const { return R_; }
    static const Poly& poly(const Elem& a) { return std::get<Poly>(a); }

    const Field& field() const override { return R_->field(); }
    bool is_commutative() const override { return true; }
    Elem zero() const override { return Poly{}; }
    Elem one() const override { return R_->normal_form(R_->poly().one()); }
    Elem add(const Elem& a, const Elem& b) const override { return R_->poly().add(poly(a), poly(b)); }
    Elem sub(const Elem& a, const Elem& b) const override { return R_->poly().sub(poly(a), poly(b)); }
    Elem neg(const Elem& a) const override { return R_->poly().neg(poly(a)); }
    Elem mul(const Elem& a, const Elem& b) const override { return R_->mul(poly(a), poly(b)); }
    Elem scale(const Elem& a, const Scalar& c) const override { return R_->poly().scale(poly(a), c); }
    Elem normalize(const Elem& a) const override { return R_->normal_form(poly(a)); }
    bool is_zero(const Elem& a) const override { return R_->is_zero(poly(a)); }
    Elem parse(const std::string& src) const override { return R_->parse(src); }
    std::string to_string(const Elem& a) const override { return R_->to_string(R_->normal_form(poly(a))); }
    std::optional<std::size_t> k_dimension() const override;
    std::vector<Elem> k_basis() const override;
    Coords coordinates(const Elem& a) const override;

private:
    std::shared_ptr<const QuotientRing> R_;
    std::optional<std::vector<Monomial>> standard_;
};

class AlgebraBackend : public Backend {
public:
    explicit AlgebraBackend(std::shared_ptr<const FDAlgebra> A);

    const FDAlgebra& algebra() const { return *A_; }
    std::shared_ptr<const FDAlgebra> algebra_ptr() const { return A_; }
    static const Coords& coords(const Elem& a) { return std::get<Coords>(a); }

    const Field& field() const override { return A_->field(); }
    bool is_commutative() const override { return commutative_; }
    Elem zero() const override { return A_->zero(); }
    Elem one() const override { return A_->one(); }
    Elem add(const Elem& a, const Elem& b) const override { return A_->add(coords(a), coords(b)); }
    Elem sub(const Elem& a, const Elem& b) const override { return A_->sub(coords(a), coords(b)); }
    Elem neg(const Elem& a) const override { return A_->neg(coords(a)); }
    Elem mul(const Elem& a, const Elem& b) const override { return A_->mul(coords(a), coords(b)); }
    Elem scale(const Elem& a, const Scalar& c) const override { return A_->scale(coords(a), c); }
    Elem normalize(const Elem& a) const override { return a; }
    bool is_zero(const Elem& a) const override { return A_->is_zero(coords(a)); }
    Elem parse(const std::string& src) const override { return A_->parse(src); }
    std::string to_string(const Elem& a) const override { return A_->to_string(coords(a)); }
    std::optional<std::size_t> k_dimension() const override { return A_->dim(); }
    std::vector<Elem> k_basis() const override;
    Coords coordinates(const Elem& a) const override { return coords(a); }

private:
    std::shared_ptr<const FDAlgebra> A_;
    bool commutative_;
};

}  // namespace mfact
