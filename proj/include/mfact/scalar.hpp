#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <variant>

namespace mfact {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws std::invalid_argument unless p is a prime below 2^62.
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    friend bool operator==(const Field&, const Field&) = default;

    std::string to_string() const;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field values are canonical residues in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() : p_(0), v_(mpq_class(0)) {}
    Scalar(const Field& k, long long n);
    Scalar(const Field& k, const mpq_class& q);

    static Scalar zero(const Field& k) { return Scalar(k, 0); }
    static Scalar one(const Field& k) { return Scalar(k, 1); }

    Field field() const { return Field(p_); }
    std::uint64_t characteristic() const { return p_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Residue for prime fields (undefined for rationals).
    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }

    /// Canonical text: "3", "-2/5" for Q; residue in [0,p) for F_p.
    std::string to_string() const;

private:
    Scalar(std::uint64_t p, std::uint64_t r) : p_(p), v_(r) {}
    void check_same(const Scalar& o) const;

    std::uint64_t p_;
    std::variant<std::uint64_t, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mfact
