#pragma once

// Seeded sampling of ring elements, matrices, factorizations and morphisms.
// The generator is std::mt19937_64; integers in [0, n) are taken as
// engine() % n so streams agree across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "mfact/factcat.hpp"

namespace mfact {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
    /// Uniform in [lo, hi].
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return (eng_() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

struct RandomOptions {
    unsigned max_degree = 2;
    unsigned max_terms = 3;
};

/// Nonzero for prime fields when nonzero is set; rationals are small integers.
Scalar random_scalar(Rng& rng, const Field& k, bool nonzero = false);
Poly random_poly(Rng& rng, const QuotientRing& R, const RandomOptions& opts = {});
/// Random polynomial (ring backends) or sparse basis combination (algebras).
Elem random_elem(Rng& rng, const Backend& B, const RandomOptions& opts = {});
EMatrix random_matrix(Rng& rng, const Backend& B, std::size_t rows, std::size_t cols, const RandomOptions& opts = {});

/// Basic factorizations of eta over the context: trivial objects and, when
/// eta is a single term over a polynomial ring, splittings into monomials.
std::vector<FactPtr> basic_pieces(Rng& rng, const std::shared_ptr<const Context>& ctx, int d);

/// Unipotent base change X_i' = P_{i+1} f_i P_i^{-1} with random elementary
/// P_i whose entries commute with eta.
FactPtr random_conjugate(Rng& rng, const Factorization& X, const RandomOptions& opts = {});

/// Direct sum of one to max_pieces pieces chosen from `pieces`, then conjugated.
FactPtr random_factorization(Rng& rng, const std::vector<FactPtr>& pieces, std::size_t max_pieces = 2,
                             const RandomOptions& opts = {});

/// Random combination of kernel generators (ring coefficients over
/// polynomial quotients, field scalars over algebras).
std::vector<EMatrix> random_combination(Rng& rng, const Backend& B, const std::vector<std::vector<EMatrix>>& gens,
                                        const std::vector<Shape>& shapes, const RandomOptions& opts = {});

FactMorphism random_morphism(Rng& rng, const FactPtr& X, const FactPtr& Y, const RandomOptions& opts = {});
GradedHom random_graded(Rng& rng, const FactPtr& X, const FactPtr& Y, int n, const RandomOptions& opts = {});
/// Random homotopy s whose boundary is a morphism (any s for d = 2).
std::vector<EMatrix> random_homotopy(Rng& rng, const FactPtr& X, const FactPtr& Y, const RandomOptions& opts = {});

}  // namespace mfact
