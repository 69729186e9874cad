#pragma once

// d-fold factorizations over a context, their morphisms and homotopies,
// suspension, mapping cones, and the graded hom complex.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfact/context.hpp"
#include "mfact/linsys.hpp"

namespace mfact {

struct FactOptions {
    /// Permit odd d. Only the test suite and the --allow-odd-d flag set this.
    bool allow_odd_d = false;
};

/// Objects M_1..M_d and maps f_i : M_i -> M_{i+1}, with f_d : M_d -> S M_1.
struct Factorization {
    std::shared_ptr<const Context> ctx;
    int d = 0;
    std::vector<FreeObj> objects;
    std::vector<MatrixMap> maps;

    const Backend& backend() const { return ctx->backend(); }
    /// Grid of f_i for any integer i (indices taken mod d).
    const EMatrix& f(int i) const;
    /// Rank of M_i for any integer i (indices taken mod d).
    std::size_t rank(int i) const;
};

using FactPtr = std::shared_ptr<const Factorization>;

/// Reduces i to 1..d.
int wrap_index(int i, int d);

class CompositionMismatch : public std::invalid_argument {
public:
    CompositionMismatch(int rotation, EMatrix residual);
    int rotation;       // 1-based: the composite starting at M_rotation failed
    EMatrix residual;   // composite minus eta
};

struct CompositionCheck {
    bool ok = true;
    int rotation = 0;
    EMatrix residual;
};

/// Checks the d cyclic composites against eta without constructing anything.
CompositionCheck check_compositions(const Context& ctx, int d, const std::vector<EMatrix>& grids);

/// Validates shapes, parity of d and the composition law. Throws
/// std::invalid_argument on bad shapes or odd d, CompositionMismatch on a
/// failing composite. Objects may be given with twists; f_d must end in S M_1.
FactPtr make_factorization(std::shared_ptr<const Context> ctx, int d, std::vector<FreeObj> objects,
                           std::vector<EMatrix> grids, const FactOptions& opts = {});
FactPtr make_factorization(std::shared_ptr<const Context> ctx, int d, const std::vector<std::size_t>& ranks,
                           std::vector<EMatrix> grids, const FactOptions& opts = {});

/// Rank-zero factorization.
FactPtr zero_factorization(std::shared_ptr<const Context> ctx, int d);
/// (1, eta, ..) style trivial object: f_k = eta on rank n, all other maps identities.
FactPtr trivial_factorization(std::shared_ptr<const Context> ctx, int d, std::size_t n, int k);

FactPtr direct_sum(const Factorization& X, const Factorization& Y);
/// Left rotation with negated maps: (M_2..M_d, S M_1; -f_2..-f_d, -S f_1).
FactPtr suspend(const Factorization& X);
/// Right rotation with negated maps.
FactPtr unsuspend(const Factorization& X);
/// Bit-exact equality of representations.
bool same_representation(const Factorization& X, const Factorization& Y);

struct FactMorphism {
    FactPtr source;
    FactPtr target;
    std::vector<EMatrix> comps;  // phi_i : M_i -> N_i
};

struct SquareCheck {
    bool ok = true;
    int index = 0;  // 1-based failing square
    EMatrix residual;
};

/// Shapes only; throws std::invalid_argument.
void check_morphism_shapes(const FactMorphism& phi);
/// g_i o phi_i == phi_{i+1} o f_i for all i (phi_{d+1} = S phi_1).
SquareCheck is_morphism(const FactMorphism& phi);

FactMorphism identity_morphism(const FactPtr& X);
FactMorphism zero_morphism(const FactPtr& X, const FactPtr& Y);
FactMorphism add(const FactMorphism& a, const FactMorphism& b);
FactMorphism sub(const FactMorphism& a, const FactMorphism& b);
/// psi o phi
FactMorphism compose(const FactMorphism& psi, const FactMorphism& phi);
bool equal(const FactMorphism& a, const FactMorphism& b);

/// Shapes of homotopy components s_i : M_{i+1} -> N_i.
std::vector<Shape> homotopy_shapes(const Factorization& X, const Factorization& Y);
/// The tuple s_i f_i + g_{i-1} s_{i-1} (with g_0 s_0 = g_d s_d).
std::vector<EMatrix> homotopy_boundary(const Factorization& X, const Factorization& Y, const std::vector<EMatrix>& s);

struct HomotopyResult {
    bool homotopic = false;
    std::vector<EMatrix> s;
    NoSolutionCertificate certificate;
};

/// Decides phi ~ phi2 with one linear system in all entries of all s_i.
/// Throws std::invalid_argument for non-parallel inputs.
HomotopyResult homotopy_decide(const FactMorphism& phi, const FactMorphism& phi2);
/// phi - phi2 == boundary(s).
bool check_homotopy(const FactMorphism& phi, const FactMorphism& phi2, const std::vector<EMatrix>& s);

struct Cone {
    FactPtr cone;
    FactMorphism incl;  // i_phi : Y -> C_phi
    FactMorphism proj;  // pi_phi : C_phi -> Sigma X
};

/// Mapping cone with maps [[-f_{i+1}, 0], [phi_{i+1}, g_i]].
Cone cone(const FactMorphism& phi, const FactOptions& opts = {});
/// The raw cone grids, without verification.
std::vector<EMatrix> cone_grids(const FactMorphism& phi);

struct ConeComparison {
    FactMorphism lambda;
    FactMorphism lambda_inv;
    bool is_morphism = false;
    bool inverse_left = false;    // lambda_inv o lambda == id
    bool inverse_right = false;   // lambda o lambda_inv == id
    bool incl_identity = false;   // i_phi2 == lambda o i_phi
    bool proj_identity = false;   // pi_phi2 o lambda == pi_phi
    bool ok() const { return is_morphism && inverse_left && inverse_right && incl_identity && proj_identity; }
};

/// lambda_i = [[1, 0], [s_i, 1]] : C_phi -> C_phi2. Throws if s is not a witness.
ConeComparison cone_comparison(const FactMorphism& phi, const FactMorphism& phi2, const std::vector<EMatrix>& s);

struct Triangle {
    FactPtr X, Y, C, SX;
    FactMorphism u, v, w;
};

Triangle standard_triangle(const FactMorphism& phi);

/// Degree-n element of the hom complex: phi_i : M_i -> N_{i+n}, where
/// N_m = S^q N_r for m = qd + r with 1 <= r <= d.
struct GradedHom {
    FactPtr source;
    FactPtr target;
    int degree = 0;
    std::vector<EMatrix> comps;
};

std::vector<Shape> graded_shapes(const Factorization& X, const Factorization& Y, int n);
void check_graded_shapes(const GradedHom& phi);
/// phi_{i+2} f_{i+1} f_i == g_{i+1+n} g_{i+n} phi_i for all i.
SquareCheck dg_check(const GradedHom& phi);
/// d(phi)_i = g_{i+n} phi_i + (-1)^{n+1} phi_{i+1} f_i, of degree n + 1.
GradedHom dg_differential(const GradedHom& phi);
/// Generators of the degree-n elements satisfying the double-square condition.
std::vector<std::vector<EMatrix>> graded_generators(const FactPtr& X, const FactPtr& Y, int n);
/// Generators of the morphism module X -> Y.
std::vector<std::vector<EMatrix>> morphism_generators(const FactPtr& X, const FactPtr& Y);
/// The degree -1 element with sigma_{i+1} = s_i.
GradedHom homotopy_as_graded(const FactPtr& X, const FactPtr& Y, const std::vector<EMatrix>& s);
/// Field dimension of H^0 of the hom complex; nullopt unless the backend
/// is finite-dimensional over its field.
std::optional<std::size_t> h0_dimension(const FactPtr& X, const FactPtr& Y);

}  // namespace mfact
