#pragma once

// Brute-force reference computations over F_p, independent of the library's
// Groebner and elimination code: dense linear algebra on truncated monomial
// spaces (Macaulay matrices). Results are exact up to the degree bound.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mfact/poly.hpp"

namespace oracle {

using Exps = std::vector<int>;

/// Sparse polynomial with coefficients in [0, p).
struct TPoly {
    std::map<Exps, std::int64_t> c;
};

TPoly from_poly(const mfact::Poly& f, std::size_t nvars);
TPoly tmul(const TPoly& a, const TPoly& b, std::int64_t p);
TPoly tadd(const TPoly& a, const TPoly& b, std::int64_t p);
TPoly tscale(const TPoly& a, std::int64_t s, std::int64_t p);
TPoly tmono(const Exps& e);
int tdeg(const TPoly& a);
bool tzero(const TPoly& a);

/// All exponent vectors of total degree in [lo, hi].
std::vector<Exps> monomials(std::size_t nvars, int lo, int hi);

/// Row space over F_p with incremental insertion.
class Span {
public:
    Span(std::size_t dim, std::int64_t p) : dim_(dim), p_(p) {}
    /// Returns true if v was independent of the current span.
    bool insert(std::vector<std::int64_t> v);
    bool contains(std::vector<std::int64_t> v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;
    std::size_t dim_;
    std::int64_t p_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::int64_t inv_mod(std::int64_t a, std::int64_t p);
std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// Coordinates of module elements in (k[x]_{<=D})^m.
class Coordinates {
public:
    Coordinates(std::size_t nvars, int max_degree, std::size_t components);
    std::size_t dim() const { return index_.size() * comps_; }
    /// Nullopt if some term exceeds the degree bound.
    std::optional<std::vector<std::int64_t>> vec(const std::vector<TPoly>& v) const;

private:
    std::map<Exps, std::size_t> index_;
    std::size_t comps_;
};

/// f in (gens) as witnessed by multiples of degree <= D.
bool member_bounded(const TPoly& f, const std::vector<TPoly>& gens, std::size_t nvars, int D, std::int64_t p);

/// Existence of s with A s = b modulo ideal, entries of s of degree <= s_deg,
/// ideal multipliers of degree <= D - deg(g). A is rows x cols.
bool solvable_bounded(const std::vector<std::vector<TPoly>>& A, const std::vector<TPoly>& b,
                      const std::vector<TPoly>& ideal, std::size_t nvars, int D, std::int64_t p);

/// For homogeneous data: dim of {u in R_t^n : A u = 0} and dim of P(R_{t-deg}^{n'})
/// in R = k[x]/I, where A: R^n -> R^m and P: R^{n'} -> R^n are homogeneous
/// of degrees degA, degP. Returns {kernel_dim, image_dim}.
std::pair<std::size_t, std::size_t> graded_exactness(const std::vector<std::vector<TPoly>>& A, int degA,
                                                     const std::vector<std::vector<TPoly>>& P, int degP,
                                                     const std::vector<TPoly>& ideal, std::size_t nvars, int t,
                                                     std::int64_t p);

}  // namespace oracle
