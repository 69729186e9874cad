#include "mfact/fd_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mfact/expr.hpp"

namespace mfact {

FDAlgebra::FDAlgebra(Field k, std::vector<std::string> gens, std::vector<std::vector<std::size_t>> words,
                     std::vector<std::vector<Coords>> table, std::size_t unit)
    : k_(k), gens_(std::move(gens)), words_(std::move(words)), table_(std::move(table)), unit_(unit) {
    const std::size_t n = dim();
    if (n == 0) throw std::invalid_argument("algebra must have positive dimension");
    if (n > kMaxDim) throw std::invalid_argument("algebra dimension exceeds 64");
    if (unit_ >= n) throw std::invalid_argument("unit index out of range");
    if (table_.size() != n) throw std::invalid_argument("structure constant table has wrong size");
    for (const auto& row : table_) {
        if (row.size() != n) throw std::invalid_argument("structure constant table has wrong size");
        for (const auto& c : row) check(c);
    }
    for (const auto& w : words_)
        for (auto g : w)
            if (g >= gens_.size()) throw std::invalid_argument("basis word uses an unknown generator");
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[unit_][i] != basis(i) || table_[i][unit_] != basis(i))
            throw std::invalid_argument("unit law fails at basis element " + label(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (mul(table_[i][j], basis(l)) != mul(basis(i), table_[j][l]))
                    throw std::invalid_argument("associativity fails at (" + label(i) + ", " + label(j) + ", " +
                                                label(l) + ")");
}

std::string FDAlgebra::label(std::size_t i) const {
    if (words_[i].empty()) return "1";
    std::string s;
    for (auto g : words_[i]) s += gens_[g];
    return s;
}

Coords FDAlgebra::basis(std::size_t i) const {
    Coords c = zero();
    c[i] = Scalar::one(k_);
    return c;
}

Coords FDAlgebra::generator(const std::string& name) const {
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) throw std::out_of_range(name);
    const std::size_t g = static_cast<std::size_t>(it - gens_.begin());
    for (std::size_t i = 0; i < dim(); ++i)
        if (words_[i].size() == 1 && words_[i][0] == g) return basis(i);
    return zero();  // the generator vanishes in this algebra
}

void FDAlgebra::check(const Coords& a) const {
    if (a.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
    for (const auto& c : a)
        if (c.characteristic() != k_.characteristic()) throw std::invalid_argument("coordinate field mismatch");
}

Coords FDAlgebra::add(const Coords& a, const Coords& b) const {
    Coords c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Coords FDAlgebra::sub(const Coords& a, const Coords& b) const {
    Coords c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Coords FDAlgebra::neg(const Coords& a) const {
    Coords c = a;
    for (auto& x : c) x = -x;
    return c;
}

Coords FDAlgebra::scale(const Coords& a, const Scalar& s) const {
    Coords c = a;
    for (auto& x : c) x *= s;
    return c;
}

Coords FDAlgebra::mul(const Coords& a, const Coords& b) const {
    Coords c = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            const Coords& t = table_[i][j];
            for (std::size_t l = 0; l < t.size(); ++l)
                if (!t[l].is_zero()) c[l] += ab * t[l];
        }
    }
    return c;
}

bool FDAlgebra::is_zero(const Coords& a) const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool FDAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

Matrix<Scalar> FDAlgebra::left_mult(const Coords& a) const {
    Matrix<Scalar> M(dim(), dim(), Scalar::zero(k_));
    for (std::size_t j = 0; j < dim(); ++j) {
        Coords c = mul(a, basis(j));
        for (std::size_t i = 0; i < dim(); ++i) M(i, j) = c[i];
    }
    return M;
}

Matrix<Scalar> FDAlgebra::right_mult(const Coords& a) const {
    Matrix<Scalar> M(dim(), dim(), Scalar::zero(k_));
    for (std::size_t j = 0; j < dim(); ++j) {
        Coords c = mul(basis(j), a);
        for (std::size_t i = 0; i < dim(); ++i) M(i, j) = c[i];
    }
    return M;
}

namespace {

struct AlgebraOps {
    using value_type = Coords;
    const FDAlgebra& A;

    Coords integer(const mpz_class& n) const { return A.scale(A.one(), Scalar(A.field(), mpq_class(n))); }
    Coords variable(const std::string& name) const { return A.generator(name); }
    Coords add(const Coords& a, const Coords& b) const { return A.add(a, b); }
    Coords sub(const Coords& a, const Coords& b) const { return A.sub(a, b); }
    Coords mul(const Coords& a, const Coords& b) const { return A.mul(a, b); }
    Coords neg(const Coords& a) const { return A.neg(a); }
    Coords pow(const Coords& a, unsigned e) const {
        Coords r = A.one();
        for (unsigned i = 0; i < e; ++i) r = A.mul(r, a);
        return r;
    }
};

}  // namespace

Coords FDAlgebra::parse(const std::string& src) const { return parse_expression(src, AlgebraOps{*this}); }

std::string FDAlgebra::to_string(const Coords& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        Scalar c = a[i];
        bool negative = k_.is_rational() && c.rational() < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string word;
        for (auto g : words_[i]) word += (word.empty() ? "" : "*") + gens_[g];
        if (word.empty())
            os << c;
        else if (c.is_one())
            os << word;
        else
            os << c << "*" << word;
    }
    return first ? "0" : os.str();
}

std::shared_ptr<const FDAlgebra> monomial_algebra(const Field& k, const std::vector<std::string>& gens,
                                                  const std::vector<std::string>& relations, std::size_t cap) {
    for (const auto& g : gens)
        if (g.size() != 1) throw std::invalid_argument("monomial algebra generators must be single characters");
    auto index_of = [&](char c) -> std::size_t {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i][0] == c) return i;
        throw std::invalid_argument(std::string("relation uses unknown generator '") + c + "'");
    };
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& r : relations) {
        if (r.empty()) throw std::invalid_argument("empty relation word");
        std::vector<std::size_t> w;
        for (char c : r) w.push_back(index_of(c));
        rels.push_back(std::move(w));
    }
    auto contains_relation = [&](const std::vector<std::size_t>& w) {
        for (const auto& r : rels)
            if (std::search(w.begin(), w.end(), r.begin(), r.end()) != w.end()) return true;
        return false;
    };

    std::vector<std::vector<std::size_t>> words{{}};
    std::vector<std::vector<std::size_t>> layer{{}};
    for (std::size_t len = 1; !layer.empty(); ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& w : layer) {
            for (std::size_t g = 0; g < gens.size(); ++g) {
                auto v = w;
                v.push_back(g);
                if (!contains_relation(v)) next.push_back(std::move(v));
            }
        }
        if (!next.empty() && len > cap) throw std::invalid_argument("monomial algebra basis not closed within degree cap");
        for (const auto& w : next) words.push_back(w);
        if (words.size() > FDAlgebra::kMaxDim) throw std::invalid_argument("algebra dimension exceeds 64");
        layer = std::move(next);
    }

    const std::size_t n = words.size();
    std::vector<std::vector<Coords>> table(n, std::vector<Coords>(n, Coords(n, Scalar::zero(k))));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto w = words[i];
            w.insert(w.end(), words[j].begin(), words[j].end());
            if (contains_relation(w)) continue;
            auto it = std::find(words.begin(), words.end(), w);
            table[i][j][static_cast<std::size_t>(it - words.begin())] = Scalar::one(k);
        }
    }
    return std::make_shared<const FDAlgebra>(k, gens, words, std::move(table), 0);
}

AlgebraMap AlgebraMap::from_generator_images(std::shared_ptr<const FDAlgebra> src, std::shared_ptr<const FDAlgebra> tgt,
                                             const std::map<std::string, Coords>& images) {
    const FDAlgebra& S = *src;
    const FDAlgebra& T = *tgt;
    if (S.field() != T.field()) throw std::invalid_argument("algebra map between different fields");
    std::vector<Coords> gen_images;
    for (const auto& g : S.generators()) {
        auto it = images.find(g);
        if (it == images.end()) throw std::invalid_argument("no image given for generator " + g);
        T.check(it->second);
        gen_images.push_back(it->second);
    }
    for (const auto& [name, img] : images)
        if (std::find(S.generators().begin(), S.generators().end(), name) == S.generators().end())
            throw std::invalid_argument("image given for unknown generator " + name);

    Matrix<Scalar> m(T.dim(), S.dim(), Scalar::zero(S.field()));
    std::vector<Coords> cols;
    for (std::size_t i = 0; i < S.dim(); ++i) {
        Coords c = T.one();
        for (auto g : S.word(i)) c = T.mul(c, gen_images[g]);
        for (std::size_t r = 0; r < T.dim(); ++r) m(r, i) = c[r];
        cols.push_back(std::move(c));
    }
    AlgebraMap f(src, tgt, std::move(m));
    if (f.apply(S.one()) != T.one()) throw std::invalid_argument("algebra map is not unital");
    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j)
            if (f.apply(S.mul(S.basis(i), S.basis(j))) != T.mul(cols[i], cols[j]))
                throw std::invalid_argument("algebra map is not multiplicative at (" + S.label(i) + ", " + S.label(j) +
                                            ")");
    return f;
}

AlgebraMap AlgebraMap::identity(std::shared_ptr<const FDAlgebra> A) {
    Matrix<Scalar> I = identity_matrix(A->field(), A->dim());
    return AlgebraMap(A, A, std::move(I));
}

bool AlgebraMap::is_automorphism() const {
    return src_.get() == tgt_.get() && rank(src_->field(), m_) == src_->dim();
}

bool AlgebraMap::is_identity() const { return src_.get() == tgt_.get() && m_ == identity_matrix(src_->field(), src_->dim()); }

AlgebraQuotient quotient_by_central(std::shared_ptr<const FDAlgebra> Bp, const Coords& w, const AlgebraMap* nu) {
    const FDAlgebra& B = *Bp;
    const Field& k = B.field();
    B.check(w);
    const std::size_t n = B.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Coords b = B.basis(i);
        Coords rhs = nu ? B.mul(nu->apply(b), w) : B.mul(b, w);
        if (B.mul(w, b) != rhs)
            throw std::invalid_argument("element is not " + std::string(nu ? "twisted " : "") + "central: fails at " +
                                        B.label(i));
    }

    // The two-sided ideal BwB is spanned by b_i w b_j.
    Matrix<Scalar> span(n * n, n, Scalar::zero(k));
    for (std::size_t i = 0; i < n; ++i) {
        Coords bw = B.mul(B.basis(i), w);
        for (std::size_t j = 0; j < n; ++j) {
            Coords v = B.mul(bw, B.basis(j));
            for (std::size_t l = 0; l < n; ++l) span(i * n + j, l) = v[l];
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t l = 0; l < n; ++l) order[l] = n - 1 - l;
    Echelon e = rref(k, span, order);
    std::vector<bool> pivot(n, false);
    for (auto p : e.pivots) pivot[p] = true;
    if (pivot[B.unit_index()]) throw std::invalid_argument("quotient is the zero algebra");

    AlgebraQuotient q;
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t l = 0; l < n; ++l) {
        if (pivot[l]) continue;
        pos[l] = q.kept.size();
        q.kept.push_back(l);
    }
    const std::size_t m = q.kept.size();
    q.projection = Matrix<Scalar>(m, n, Scalar::zero(k));
    for (std::size_t l = 0; l < n; ++l)
        if (!pivot[l]) q.projection(pos[l], l) = Scalar::one(k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t p = e.pivots[r];
        for (std::size_t l = 0; l < n; ++l)
            if (!pivot[l] && !e.rows(r, l).is_zero()) q.projection(pos[l], p) = -e.rows(r, l);
    }

    std::vector<std::vector<std::size_t>> words;
    for (auto l : q.kept) words.push_back(B.word(l));
    std::vector<std::vector<Coords>> table(m, std::vector<Coords>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            table[a][b] = mat_vec(k, q.projection, B.mul(B.basis(q.kept[a]), B.basis(q.kept[b])));
    q.algebra = std::make_shared<const FDAlgebra>(k, B.generators(), std::move(words), std::move(table),
                                                  pos[B.unit_index()]);
    return q;
}

TwistCompatibility check_twist_compatibility(const AlgebraMap& nu, const Coords& w) {
    const FDAlgebra& B = nu.source();
    if (!nu.is_automorphism()) throw std::invalid_argument("twist is not an automorphism");
    B.check(w);
    TwistCompatibility out;
    for (std::size_t i = 0; i < B.dim(); ++i) {
        Coords b = B.basis(i);
        if (out.twisted_central && B.mul(w, b) != B.mul(nu.apply(b), w)) {
            out.twisted_central = false;
            out.central_witness = i;
        }
        Coords wr = B.mul(w, b);
        if (out.fixes_wr && nu.apply(wr) != wr) {
            out.fixes_wr = false;
            out.fixes_witness = i;
        }
    }
    return out;
}

bool is_left_regular(const FDAlgebra& A, const Coords& w) {
    A.check(w);
    return rank(A.field(), A.left_mult(w)) == A.dim();
}

}  // namespace mfact
