#pragma once

// Unrolling factorizations into periodic sequences, reduction modulo a
// central element f, exactness of windows, End rings of cyclic modules, and
// instance-level checks that reduction is full and faithful.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfact/factcat.hpp"

namespace mfact {

/// A required hypothesis is not met; distinct from a
/// negative verdict.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EndRingPresentation {
    std::shared_ptr<const QuotientRing> ambient;
    Poly g;
    /// Reduced Groebner basis of (I : g), which contains I.
    std::vector<Poly> colon;
    std::shared_ptr<const QuotientRing> gamma;
    /// Image of r under R -> Gamma.
    Poly image(const Poly& r) const { return gamma->normal_form(r); }
};

/// Gamma = R/(0 : g), the endomorphism ring of the cyclic module R g.
EndRingPresentation end_ring_cyclic(std::shared_ptr<const QuotientRing> R, const Poly& g);

/// Finite slice C_lo -> ... -> C_hi of a periodic sequence; maps[q - lo] is
/// the map C_q -> C_{q+1}.
struct ComplexWindow {
    std::shared_ptr<const Backend> ring;
    int lo = 0;
    int hi = 0;
    std::vector<std::size_t> ranks;  // ranks[q - lo]
    std::vector<EMatrix> maps;
    int period = 0;
    int twist_per_period = 1;
    std::optional<int> nilpotency;

    const EMatrix& map(int q) const { return maps[static_cast<std::size_t>(q - lo)]; }
    std::size_t rank(int q) const { return ranks[static_cast<std::size_t>(q - lo)]; }
};

/// Checks shape consistency and, if a nilpotency degree t is present, that
/// every t consecutive maps compose to zero. Returns the first failing start
/// position.
std::optional<int> check_window(const ComplexWindow& C);

/// Default window [-2d, 2d].
std::pair<int, int> default_window(int d);

/// Unrolls X: C_q = M_r and d_q = f_r where r = q mod d in 1..d.
ComplexWindow to_sequence(const Factorization& X, int lo, int hi);

/// Reduction modulo a central f through which eta factors.
class ModReduction {
public:
    /// Certifies eta = h f and builds Gamma/(f). Throws HypothesisError if no
    /// such h exists, std::invalid_argument if f is not (twisted) central.
    ModReduction(std::shared_ptr<const Context> ctx, Elem f);

    const Context& context() const { return *ctx_; }
    const Elem& f() const { return f_; }
    /// The certified cofactor h with eta = h f.
    const Elem& cofactor() const { return h_; }
    std::shared_ptr<const Backend> quotient() const { return bar_; }
    /// (Gamma/(f), identity, 0).
    std::shared_ptr<const Context> quotient_context() const { return bar_ctx_; }

    Elem project(const Elem& a) const;
    EMatrix project(const EMatrix& a) const;
    /// Lift of a quotient element back to the base (canonical representative).
    Elem lift(const Elem& a) const;

    FactPtr reduce(const Factorization& X) const;
    FactMorphism reduce(const FactMorphism& phi, const FactPtr& Xbar, const FactPtr& Ybar) const;
    /// Window over Gamma/(f) with nilpotency d; the d-fold zero composition is verified.
    ComplexWindow window(const Factorization& X, int lo, int hi) const;

private:
    std::shared_ptr<const Context> ctx_;
    Elem f_;
    Elem h_;
    std::shared_ptr<const Backend> bar_;
    std::shared_ptr<const Context> bar_ctx_;
    std::optional<AlgebraQuotient> alg_quot_;
};

ComplexWindow reduce_mod_f(const Factorization& X, const Elem& f, int lo, int hi);

struct ExactnessResult {
    bool exact = true;
    std::optional<int> position;
    std::string reason;
};

/// Kernel equals image at every interior position. Requires nilpotency 2.
ExactnessResult window_exact(const ComplexWindow& C);

/// Hom(-, Gamma) applied to the window: D_p = (C_{-p})^*, maps transposed.
ComplexWindow dual_window(const ComplexWindow& C);

enum class TacVerdict { TotallyAcyclic, NotExact, HypothesesUnmet };
std::string to_string(TacVerdict v);

struct TacResult {
    TacVerdict verdict = TacVerdict::HypothesesUnmet;
    std::optional<int> position;
    bool dual_side = false;
    std::string detail;
    std::optional<ComplexWindow> window;
};

TacResult is_totally_acyclic(const Factorization& X, const Elem& f, int lo, int hi);

struct DualQuotientResult {
    bool well_defined = false;  // alpha kills Hom(P, Gamma) x
    bool round_trip = false;    // alpha and beta are mutually inverse on bases and samples
    bool naturality = false;    // square for the sampled map commutes
    bool ok() const { return well_defined && round_trip && naturality; }
};

/// Hom(P,Gamma)/Hom(P,Gamma)x vs Hom_{Gamma/(x)}(P/Px, Gamma/(x)) for P free
/// of rank n; h is a sampled map P -> P' (rows = rank P'), samples are extra
/// row vectors of length n checked on top of the canonical basis.
DualQuotientResult dual_quotient_check(std::size_t n, const Poly& x, std::shared_ptr<const QuotientRing> gamma,
                                       const Matrix<Poly>& h, const std::vector<std::vector<Poly>>& samples);

struct FaithfulResult {
    bool down_null = false;
    bool up_null = false;
    bool consistent = false;  // down_null implies up_null
    std::vector<EMatrix> down_witness;
    std::vector<EMatrix> up_witness;
    NoSolutionCertificate down_certificate;
};

/// Decides whether F(theta) is null-homotopic downstairs and compares with
/// homotopy_decide(theta, 0) upstairs. Throws HypothesisError unless d = 2,
/// the backend is a polynomial quotient and f is regular.
FaithfulResult faithful_check(const FactMorphism& theta, const Elem& f);

struct LiftResult {
    bool lifted = false;
    FactMorphism theta;
    /// Downstairs homotopy with F(theta) - phibar = boundary(s).
    std::vector<EMatrix> s;
    NoSolutionCertificate certificate;
};

/// Searches theta : X -> U over Gamma with F(theta) homotopic to phibar, a
/// chain map between the reductions given by its components over Gamma/(f).
LiftResult full_lift(const FactPtr& X, const FactPtr& U, const std::vector<EMatrix>& phibar, const Elem& f);

}  // namespace mfact
