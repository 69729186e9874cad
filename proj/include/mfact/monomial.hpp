#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mfact {

enum class MonomialOrder { Lex, GRevLex };

std::string to_string(MonomialOrder ord);
/// Accepts "lex" and "grevlex"; throws std::invalid_argument otherwise.
MonomialOrder parse_monomial_order(const std::string& s);

/// Exponent vector with inline storage. The number of variables is fixed per
/// ring and capped at kMaxVars.
class Monomial {
public:
    static constexpr std::size_t kMaxVars = 8;

    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::initializer_list<unsigned> exps);
    static Monomial from_exponents(std::span<const unsigned> exps);

    std::size_t nvars() const { return n_; }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, unsigned e);
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    std::vector<unsigned> exponents() const { return {e_.begin(), e_.begin() + n_}; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
    std::uint32_t deg_ = 0;
};

/// Three-way comparison under a monomial order: negative if a < b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder ord);

}  // namespace mfact
