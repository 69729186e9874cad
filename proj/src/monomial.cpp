#include "mfact/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace mfact {

std::string to_string(MonomialOrder ord) { return ord == MonomialOrder::Lex ? "lex" : "grevlex"; }

MonomialOrder parse_monomial_order(const std::string& s) {
    if (s == "lex") return MonomialOrder::Lex;
    if (s == "grevlex") return MonomialOrder::GRevLex;
    throw std::invalid_argument("unknown monomial order '" + s + "'");
}

Monomial::Monomial(std::size_t nvars) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables (max 8)");
    n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    deg_ = deg_ - e_[i] + e;
    e_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("monomial variable-count mismatch");
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(e_[i]) + o.e_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (n_ != o.n_ || !o.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(e_[i]) - o.e_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("monomial variable-count mismatch");
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    const std::size_t n = a.nvars();
    if (ord == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

}  // namespace mfact
