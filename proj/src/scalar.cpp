#include "mfact/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace mfact {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t reduce_signed(long long n, std::uint64_t p) {
    if (n >= 0) return static_cast<std::uint64_t>(n) % p;
    std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1;  // |n| without overflow
    m %= p;
    return m == 0 ? 0 : p - m;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 62) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

std::string Field::to_string() const { return p_ == 0 ? "QQ" : "F_" + std::to_string(p_); }

Scalar::Scalar(const Field& k, long long n) : p_(k.characteristic()) {
    if (p_ == 0)
        v_ = mpq_class(static_cast<long>(n));
    else
        v_ = reduce_signed(n, p_);
}

Scalar::Scalar(const Field& k, const mpq_class& q) : p_(k.characteristic()) {
    if (p_ == 0) {
        mpq_class c = q;
        c.canonicalize();
        v_ = c;
        return;
    }
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
    if (num < 0) num += static_cast<unsigned long>(p_);
    if (den == 0) throw std::domain_error("denominator vanishes in " + k.to_string());
    Scalar n(p_, num.get_ui());
    Scalar d(p_, den.get_ui());
    *this = n / d;
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

bool Scalar::is_zero() const {
    if (p_ == 0) return std::get<mpq_class>(v_) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (p_ == 0) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (p_ == 0) {
        Scalar r;
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
        return r;
    }
    std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
    if (s >= p_) s -= p_;
    return Scalar(p_, s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (p_ == 0) {
        Scalar r;
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
        return r;
    }
    std::uint64_t a = std::get<std::uint64_t>(v_);
    return Scalar(p_, a == 0 ? 0 : p_ - a);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (p_ == 0) {
        Scalar r;
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
        return r;
    }
    return Scalar(p_, mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), p_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (p_ == 0) {
        Scalar r;
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
        return r;
    }
    return Scalar(p_, powmod(std::get<std::uint64_t>(v_), p_ - 2, p_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }

std::string Scalar::to_string() const {
    if (p_ == 0) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace mfact
