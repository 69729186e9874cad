#include "mfact/backend.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfact {

RingBackend::RingBackend(std::shared_ptr<const QuotientRing> R) : R_(std::move(R)), standard_(R_->standard_monomials()) {}

std::optional<std::size_t> RingBackend::k_dimension() const {
    if (!standard_) return std::nullopt;
    return standard_->size();
}

std::vector<Elem> RingBackend::k_basis() const {
    if (!standard_) throw std::logic_error("ring is not finite-dimensional over its field");
    std::vector<Elem> out;
    for (const auto& m : *standard_) out.push_back(R_->poly().term(m, R_->poly().scalar(1)));
    return out;
}

Coords RingBackend::coordinates(const Elem& a) const {
    if (!standard_) throw std::logic_error("ring is not finite-dimensional over its field");
    Poly p = R_->normal_form(poly(a));
    Coords c(standard_->size(), Scalar::zero(field()));
    for (const auto& t : p.terms) {
        auto it = std::find(standard_->begin(), standard_->end(), t.mono);
        c[static_cast<std::size_t>(it - standard_->begin())] = t.coef;
    }
    return c;
}

AlgebraBackend::AlgebraBackend(std::shared_ptr<const FDAlgebra> A) : A_(std::move(A)), commutative_(A_->is_commutative()) {}

std::vector<Elem> AlgebraBackend::k_basis() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < A_->dim(); ++i) out.push_back(A_->basis(i));
    return out;
}

}  // namespace mfact
