#pragma once

// Randomized invariant suite over a context: factorization constructions,
// morphisms, homotopies, cones and the hom complex on seeded samples.

#include <cstdint>
#include <string>
#include <vector>

#include "mfact/random.hpp"

namespace mfact {

struct AxiomOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 10;
    int d = 2;
    RandomOptions random;
    /// Extra factorizations mixed into the random pool.
    std::vector<FactPtr> pieces;
    /// Skip the hom-complex properties (they need kernel computations).
    bool dg = true;
};

struct PropertyTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Trial index and message of the first failure.
    std::optional<std::size_t> first_trial;
    std::string first_detail;
};

struct AxiomReport {
    std::vector<PropertyTally> properties;
    bool ok() const;
};

AxiomReport run_axioms(const std::shared_ptr<const Context>& ctx, const AxiomOptions& opts);

}  // namespace mfact
