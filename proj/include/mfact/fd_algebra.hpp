#pragma once

// Finite-dimensional associative algebras given by structure constants. Basis
// elements are words in single-letter generators, which lets algebra maps be
// specified by generator images.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfact/linalg.hpp"

namespace mfact {

class FDAlgebra {
public:
    static constexpr std::size_t kMaxDim = 64;

    /// table[i][j] holds the coordinates of basis_i * basis_j. words[i] lists
    /// generator indices spelling basis_i. Unit and associativity laws are
    /// checked; throws std::invalid_argument on failure.
    FDAlgebra(Field k, std::vector<std::string> gens, std::vector<std::vector<std::size_t>> words,
              std::vector<std::vector<Coords>> table, std::size_t unit);

    const Field& field() const { return k_; }
    std::size_t dim() const { return words_.size(); }
    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<std::size_t>& word(std::size_t i) const { return words_[i]; }
    std::size_t unit_index() const { return unit_; }
    /// "1", "x", "xy", ...
    std::string label(std::size_t i) const;

    Coords zero() const { return Coords(dim(), Scalar::zero(k_)); }
    Coords one() const { return basis(unit_); }
    Coords basis(std::size_t i) const;
    /// Throws std::out_of_range for an unknown generator name.
    Coords generator(const std::string& name) const;

    Coords add(const Coords& a, const Coords& b) const;
    Coords sub(const Coords& a, const Coords& b) const;
    Coords neg(const Coords& a) const;
    Coords scale(const Coords& a, const Scalar& c) const;
    Coords mul(const Coords& a, const Coords& b) const;
    bool is_zero(const Coords& a) const;
    bool is_commutative() const;

    /// Matrix of b -> a*b (left) or b -> b*a (right) in the basis.
    Matrix<Scalar> left_mult(const Coords& a) const;
    Matrix<Scalar> right_mult(const Coords& a) const;

    Coords parse(const std::string& src) const;
    std::string to_string(const Coords& a) const;
    void check(const Coords& a) const;

private:
    Field k_;
    std::vector<std::string> gens_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<std::vector<Coords>> table_;
    std::size_t unit_;
};

/// k<gens>/(relation words): basis = words avoiding every relation as a
/// subword, ordered by length then lexicographically in generator order.
/// Generators are single characters; relations are strings over them.
/// Throws if words of length cap + 1 survive.
std::shared_ptr<const FDAlgebra> monomial_algebra(const Field& k, const std::vector<std::string>& gens,
                                                  const std::vector<std::string>& relations, std::size_t cap = 16);

/// Linear map between algebras, columns are images of source basis elements.
class AlgebraMap {
public:
    /// Extends generator images multiplicatively along basis words, then
    /// checks that the result is unital and multiplicative.
    static AlgebraMap from_generator_images(std::shared_ptr<const FDAlgebra> src, std::shared_ptr<const FDAlgebra> tgt,
                                            const std::map<std::string, Coords>& images);
    static AlgebraMap identity(std::shared_ptr<const FDAlgebra> A);

    const FDAlgebra& source() const { return *src_; }
    const FDAlgebra& target() const { return *tgt_; }
    const Matrix<Scalar>& matrix() const { return m_; }
    Coords apply(const Coords& a) const { return mat_vec(src_->field(), m_, a); }
    bool is_automorphism() const;
    bool is_identity() const;

private:
    AlgebraMap(std::shared_ptr<const FDAlgebra> s, std::shared_ptr<const FDAlgebra> t, Matrix<Scalar> m)
        : src_(std::move(s)), tgt_(std::move(t)), m_(std::move(m)) {}
    std::shared_ptr<const FDAlgebra> src_, tgt_;
    Matrix<Scalar> m_;
};

struct AlgebraQuotient {
    std::shared_ptr<const FDAlgebra> algebra;
    /// dim A x dim B matrix of the projection B -> A.
    Matrix<Scalar> projection;
    /// Source basis indices kept as the basis of A.
    std::vector<std::size_t> kept;
    Coords project(const Coords& b) const { return mat_vec(algebra->field(), projection, b); }
};

/// A = B/(BwB). Requires w central, or twisted central (w b = nu(b) w) when
/// nu is given. Pivots of the ideal are placed on the highest basis indices.
AlgebraQuotient quotient_by_central(std::shared_ptr<const FDAlgebra> B, const Coords& w, const AlgebraMap* nu = nullptr);

struct TwistCompatibility {
    bool twisted_central = true;                // w b = nu(b) w for every basis b
    std::optional<std::size_t> central_witness;
    bool fixes_wr = true;                       // nu(w r) = w r for every basis r
    std::optional<std::size_t> fixes_witness;
    bool ok() const { return twisted_central && fixes_wr; }
};

TwistCompatibility check_twist_compatibility(const AlgebraMap& nu, const Coords& w);

/// True iff b -> w b is injective.
bool is_left_regular(const FDAlgebra& A, const Coords& w);

}  // namespace mfact
