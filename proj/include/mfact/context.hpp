#pragma once

// The suspended category (C, S, eta) realized on free modules over a backend.
// S acts on objects by shifting twist offsets and is the identity on matrices.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfact/ematrix.hpp"

namespace mfact {

/// Free module of finite rank. Each basis vector carries its own power of S,
/// so sums such as S M (+) N stay representable.
struct FreeObj {
    std::vector<int> twists;

    static FreeObj plain(std::size_t rank, int twist = 0) { return FreeObj{std::vector<int>(rank, twist)}; }
    std::size_t rank() const { return twists.size(); }
    FreeObj twisted(int q = 1) const;
    friend FreeObj operator+(const FreeObj& a, const FreeObj& b);  // direct sum
    friend bool operator==(const FreeObj&, const FreeObj&) = default;
    std::string to_string() const;
};

struct MatrixMap {
    FreeObj source;
    FreeObj target;
    EMatrix grid;
};

class ContextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Context {
public:
    /// Validates the twist and eta: over rings the twist must be the
    /// identity; over algebras eta must be central (identity twist) or pass
    /// check_twist_compatibility. Throws ContextError otherwise.
    static std::shared_ptr<const Context> make(std::shared_ptr<const Backend> backend, std::optional<AlgebraMap> twist,
                                               Elem eta);
    /// No validation; used to build deliberately broken contexts in tests.
    static std::shared_ptr<const Context> unchecked(std::shared_ptr<const Backend> backend,
                                                    std::optional<AlgebraMap> twist, Elem eta);

    const Backend& backend() const { return *backend_; }
    std::shared_ptr<const Backend> backend_ptr() const { return backend_; }
    /// nullopt means S is the identity functor.
    const std::optional<AlgebraMap>& twist() const { return twist_; }
    const Elem& eta() const { return eta_; }
    bool eta_is_zero() const { return backend_->is_zero(eta_); }
    /// The twist compatibility report for algebra contexts with a twist.
    const std::optional<TwistCompatibility>& twist_report() const { return report_; }

private:
    Context(std::shared_ptr<const Backend> b, std::optional<AlgebraMap> t, Elem e)
        : backend_(std::move(b)), twist_(std::move(t)), eta_(std::move(e)) {}
    std::shared_ptr<const Backend> backend_;
    std::optional<AlgebraMap> twist_;
    Elem eta_;
    std::optional<TwistCompatibility> report_;
};

/// g o f; throws std::invalid_argument if source(g) != target(f) (twists included).
MatrixMap compose(const Context& ctx, const MatrixMap& g, const MatrixMap& f);

/// eta_M : M -> S M, the diagonal matrix w * 1.
MatrixMap eta_map(const FreeObj& M, const Context& ctx);

/// S^q f: same grid, twists shifted by q.
MatrixMap apply_twist(const MatrixMap& f, int q = 1);

/// eta_target o f == S f o eta_source.
bool naturality_check(const MatrixMap& f, const Context& ctx);

}  // namespace mfact
