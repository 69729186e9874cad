#include "mfact/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mfact/expr.hpp"

namespace mfact {

PolyRing::PolyRing(Field k, std::vector<std::string> vars, MonomialOrder ord)
    : field_(k), vars_(std::move(vars)), order_(ord) {
    if (vars_.size() > Monomial::kMaxVars) throw std::invalid_argument("at most 8 ring variables are supported");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty() || !seen.insert(v).second) throw std::invalid_argument("variable names must be distinct and nonempty");
    }
}

Poly PolyRing::constant(const Scalar& c) const { return term(one_monomial(), c); }

Poly PolyRing::variable(std::size_t i) const {
    Monomial m(nvars());
    m.set(i, 1);
    return term(m, scalar(1));
}

Poly PolyRing::term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return {};
    return Poly{{Term{m, c}}};
}

Poly PolyRing::from_terms(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return cmp(a.mono, b.mono) > 0; });
    Poly out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().mono == t.mono) {
            out.terms.back().coef += t.coef;
            if (out.terms.back().coef.is_zero()) out.terms.pop_back();
        } else if (!t.coef.is_zero()) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = cmp(a.terms[i].mono, b.terms[j].mono);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Scalar s = a.terms[i].coef + b.terms[j].coef;
            if (!s.is_zero()) out.terms.push_back(Term{a.terms[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

Poly PolyRing::neg(const Poly& a) const {
    Poly out = a;
    for (auto& t : out.terms) t.coef = -t.coef;
    return out;
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::scale(const Poly& a, const Scalar& c) const {
    if (c.is_zero()) return {};
    Poly out = a;
    for (auto& t : out.terms) t.coef *= c;
    return out;
}

Poly PolyRing::mul_term(const Poly& a, const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return {};
    Poly out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) out.terms.push_back(Term{t.mono * m, t.coef * c});
    return out;  // multiplication by a monomial preserves the order
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    const Poly& small = a.terms.size() <= b.terms.size() ? a : b;
    const Poly& big = &small == &a ? b : a;
    Poly acc;
    for (const auto& t : small.terms) acc = add(acc, mul_term(big, t.mono, t.coef));
    return acc;
}

Poly PolyRing::pow(const Poly& a, unsigned e) const {
    Poly result = one();
    Poly base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Poly PolyRing::monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, a.lead().coef.inverse());
}

unsigned PolyRing::total_degree(const Poly& a) const {
    unsigned d = 0;
    for (const auto& t : a.terms) d = std::max(d, t.mono.degree());
    return d;
}

void PolyRing::check(const Poly& a) const {
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& t = a.terms[i];
        if (t.mono.nvars() != nvars()) throw std::invalid_argument("polynomial variable-count mismatch");
        if (t.coef.characteristic() != field_.characteristic()) throw std::invalid_argument("polynomial field mismatch");
        if (t.coef.is_zero()) throw std::invalid_argument("polynomial has a zero coefficient");
        if (i > 0 && cmp(a.terms[i - 1].mono, t.mono) <= 0) throw std::invalid_argument("polynomial terms out of order");
    }
}

namespace {

struct PolyOps {
    using value_type = Poly;
    const PolyRing& R;

    Poly integer(const mpz_class& n) const { return R.constant(Scalar(R.field(), mpq_class(n))); }
    Poly variable(const std::string& name) const {
        const auto& vs = R.vars();
        auto it = std::find(vs.begin(), vs.end(), name);
        if (it == vs.end()) throw std::out_of_range(name);
        return R.variable(static_cast<std::size_t>(it - vs.begin()));
    }
    Poly add(const Poly& a, const Poly& b) const { return R.add(a, b); }
    Poly sub(const Poly& a, const Poly& b) const { return R.sub(a, b); }
    Poly mul(const Poly& a, const Poly& b) const { return R.mul(a, b); }
    Poly neg(const Poly& a) const { return R.neg(a); }
    Poly pow(const Poly& a, unsigned e) const { return R.pow(a, e); }
};

}  // namespace

Poly PolyRing::parse(const std::string& src) const { return parse_expression(src, PolyOps{*this}); }

std::string PolyRing::to_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars_[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string PolyRing::to_string(const Poly& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms) {
        Scalar c = t.coef;
        bool negative = field_.is_rational() && c.rational() < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string mono = to_string(t.mono);
        if (mono.empty())
            os << c;
        else if (c.is_one())
            os << mono;
        else
            os << c << "*" << mono;
    }
    return os.str();
}

}  // namespace mfact
