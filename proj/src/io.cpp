#include "mfact/io.hpp"

#include <fstream>
#include <map>

namespace mfact {

namespace {

const json& require(const json& j, const char* key, const Where& at) {
    if (!j.is_object()) throw InputError(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(at / key, "missing field");
    return *it;
}

template <class T>
T get_as(const json& j, const Where& at, const char* what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw InputError(at, std::string("expected ") + what);
    }
}

/// Resolves a path reference relative to the referring file.
std::pair<json, Where> deref(const json& j, const Where& at) {
    if (!j.is_string()) return {j, at};
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = at.file.parent_path() / p;
    try {
        return {read_json_file(p), Where{p, ""}};
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(at, e.what());
    }
}

Field parse_field(const json& j, const Where& at) {
    if (!j.is_object()) throw InputError(at, "expected {\"rationals\": true} or {\"char\": p}");
    if (j.contains("rationals")) {
        if (j.at("rationals") != true) throw InputError(at / "rationals", "must be true");
        return Field::rationals();
    }
    auto p = get_as<std::uint64_t>(require(j, "char", at), at / "char", "a prime");
    try {
        return Field::prime(p);
    } catch (const std::exception& e) {
        throw InputError(at / "char", e.what());
    }
}

json field_json(const Field& k) {
    if (k.is_rational()) return json{{"rationals", true}};
    return json{{"char", k.characteristic()}};
}

std::vector<std::string> string_list(const json& j, const Where& at) {
    if (!j.is_array()) throw InputError(at, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_as<std::string>(j[i], at / i, "a string"));
    return out;
}

template <class F>
auto guarded(const Where& at, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const CompositionMismatch&) {
        throw;  // a verdict, not a malformed input
    } catch (const ContextError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(at, e.what());
    }
}

std::shared_ptr<const FDAlgebra> algebra_from_table(const json& j, const Where& at) {
    Field k = parse_field(require(j, "field", at), at / "field");
    auto gens = string_list(require(j, "gens", at), at / "gens");
    auto labels = string_list(require(j, "basis", at), at / "basis");
    std::map<char, std::size_t> gidx;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].size() != 1) throw InputError(at / "gens" / g, "generators are single characters");
        gidx[gens[g][0]] = g;
    }
    std::vector<std::vector<std::size_t>> words;
    std::size_t unit = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<std::size_t> w;
        if (labels[i] == "1") {
            unit = i;
        } else {
            for (char c : labels[i]) {
                auto it = gidx.find(c);
                if (it == gidx.end()) throw InputError(at / "basis" / i, "unknown generator");
                w.push_back(it->second);
            }
        }
        words.push_back(std::move(w));
    }
    if (unit == labels.size()) throw InputError(at / "basis", "basis must contain \"1\"");
    const json& tj = require(j, "table", at);
    const std::size_t n = labels.size();
    if (!tj.is_array() || tj.size() != n) throw InputError(at / "table", "expected dim x dim products");
    std::vector<std::vector<Coords>> table(n, std::vector<Coords>(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (!tj[a].is_array() || tj[a].size() != n) throw InputError(at / "table" / a, "expected dim products");
        for (std::size_t b = 0; b < n; ++b) {
            auto entries = string_list(tj[a][b], at / "table" / a / b);
            if (entries.size() != n) throw InputError(at / "table" / a / b, "expected dim coordinates");
            for (std::size_t c = 0; c < n; ++c)
                table[a][b].push_back(
                    guarded(at / "table" / a / b / c, [&] { return Scalar(k, mpq_class(entries[c])); }));
        }
    }
    return guarded(at, [&] {
        return std::make_shared<const FDAlgebra>(k, gens, std::move(words), std::move(table), unit);
    });
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(Where{path, ""}, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(Where{path, ""}, std::string("malformed JSON: ") + e.what());
    }
}

std::shared_ptr<const QuotientRing> parse_ring(const json& j0, const Where& at0) {
    auto [j, at] = deref(j0, at0);
    Field k = parse_field(require(j, "field", at), at / "field");
    auto vars = string_list(require(j, "vars", at), at / "vars");
    MonomialOrder ord = MonomialOrder::GRevLex;
    if (j.contains("order"))
        ord = guarded(at / "order", [&] { return parse_monomial_order(get_as<std::string>(j.at("order"), at / "order", "a string")); });
    PolyRing R = guarded(at / "vars", [&] { return PolyRing(k, vars, ord); });
    std::vector<Poly> ideal;
    if (j.contains("ideal")) {
        auto gens = string_list(j.at("ideal"), at / "ideal");
        for (std::size_t i = 0; i < gens.size(); ++i)
            ideal.push_back(guarded(at / "ideal" / i, [&] { return R.parse(gens[i]); }));
    }
    return std::make_shared<const QuotientRing>(std::move(R), std::move(ideal));
}

std::shared_ptr<const FDAlgebra> parse_algebra(const json& j0, const Where& at0) {
    auto [j, at] = deref(j0, at0);
    if (j.contains("table")) return algebra_from_table(j, at);
    Field k = parse_field(require(j, "field", at), at / "field");
    auto gens = string_list(require(j, "gens", at), at / "gens");
    std::vector<std::string> rels;
    if (j.contains("monomial_rels")) rels = string_list(j.at("monomial_rels"), at / "monomial_rels");
    return guarded(at, [&] { return monomial_algebra(k, gens, rels); });
}

std::shared_ptr<const Backend> parse_backend(const json& j0, const Where& at0) {
    auto [j, at] = deref(j0, at0);
    if (j.is_object() && j.contains("vars")) return std::make_shared<RingBackend>(parse_ring(j, at));
    if (j.is_object() && j.contains("gens")) return std::make_shared<AlgebraBackend>(parse_algebra(j, at));
    throw InputError(at, "expected a ring (\"vars\") or algebra (\"gens\") description");
}

Elem parse_elem(const Backend& B, const json& j, const Where& at) {
    if (j.is_number_integer()) return B.scalar(j.get<long long>());
    auto s = get_as<std::string>(j, at, "an expression string");
    return guarded(at, [&] { return B.normalize(B.parse(s)); });
}

namespace {

std::shared_ptr<const Context> context_from(const json& j, const Where& at);

}  // namespace

std::shared_ptr<const Context> parse_context(const json& j0, const Where& at0) {
    // Contexts named by path are shared, so objects from different files
    // that cite the same context file can be combined.
    static std::map<std::string, std::shared_ptr<const Context>> cache;
    if (!j0.is_string()) return context_from(j0, at0);
    auto [j, at] = deref(j0, at0);
    const std::string key = std::filesystem::weakly_canonical(at.file).string();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = context_from(j, at);
    cache.emplace(key, ctx);
    return ctx;
}

namespace {

std::shared_ptr<const Context> context_from(const json& j0, const Where& at0) {
    auto [j, at] = deref(j0, at0);
    const char* rkey = j.is_object() && !j.contains("ring") && j.contains("algebra") ? "algebra" : "ring";
    auto [rj, rat] = deref(require(j, rkey, at), at / rkey);
    auto backend = parse_backend(rj, rat);

    std::optional<AlgebraMap> twist;
    const json* nu = nullptr;
    Where nu_at = at;
    if (j.contains("twist")) {
        const json& t = j.at("twist");
        if (t.is_string()) {
            if (t.get<std::string>() != "identity") throw InputError(at / "twist", "expected \"identity\" or {\"nu\": ...}");
        } else {
            nu = &require(t, "nu", at / "twist");
            nu_at = at / "twist" / "nu";
        }
    } else if (rj.is_object() && rj.contains("nu")) {
        nu = &rj.at("nu");
        nu_at = rat / "nu";
    }
    if (nu) {
        auto* ab = dynamic_cast<const AlgebraBackend*>(backend.get());
        if (!ab) throw InputError(nu_at, "a nontrivial twist needs an algebra");
        if (!nu->is_object()) throw InputError(nu_at, "expected {generator: expression}");
        std::map<std::string, Coords> images;
        for (auto it = nu->begin(); it != nu->end(); ++it)
            images[it.key()] = std::get<Coords>(parse_elem(*backend, it.value(), nu_at / it.key()));
        twist = guarded(nu_at, [&] { return AlgebraMap::from_generator_images(ab->algebra_ptr(), ab->algebra_ptr(), images); });
    }

    Elem eta;
    if (j.contains("eta"))
        eta = parse_elem(*backend, j.at("eta"), at / "eta");
    else if (rj.is_object() && rj.contains("w"))
        eta = parse_elem(*backend, rj.at("w"), rat / "w");
    else
        throw InputError(at / "eta", "missing field");
    return guarded(at, [&] { return Context::make(backend, std::move(twist), std::move(eta)); });
}

}  // namespace

EMatrix parse_ematrix(const Backend& B, const json& j, std::size_t rows, std::size_t cols, const Where& at) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(at, "expected " + std::to_string(rows) + " rows");
    EMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError(at / r, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_elem(B, j[r][c], at / r / c);
    }
    return m;
}

FactPtr parse_factorization(const json& j0, const Where& at0, const FactOptions& opts) {
    auto [j, at] = deref(j0, at0);
    auto ctx = parse_context(require(j, "context", at), at / "context");
    int d = get_as<int>(require(j, "d", at), at / "d", "an integer");
    if (d < 1) throw InputError(at / "d", "must be positive");
    std::vector<FreeObj> objects;
    if (j.contains("twists")) {
        const json& tw = j.at("twists");
        if (!tw.is_array() || tw.size() != static_cast<std::size_t>(d)) throw InputError(at / "twists", "expected d lists");
        for (std::size_t i = 0; i < tw.size(); ++i)
            objects.push_back(FreeObj{get_as<std::vector<int>>(tw[i], at / "twists" / i, "a list of integers")});
        if (j.contains("ranks")) {
            auto ranks = get_as<std::vector<std::size_t>>(j.at("ranks"), at / "ranks", "a list of ranks");
            for (std::size_t i = 0; i < objects.size(); ++i)
                if (i >= ranks.size() || ranks[i] != objects[i].rank()) throw InputError(at / "ranks", "disagrees with twists");
        }
    } else {
        auto ranks = get_as<std::vector<std::size_t>>(require(j, "ranks", at), at / "ranks", "a list of ranks");
        if (ranks.size() != static_cast<std::size_t>(d)) throw InputError(at / "ranks", "expected d ranks");
        for (auto r : ranks) objects.push_back(FreeObj::plain(r));
    }
    const json& mj = require(j, "maps", at);
    if (!mj.is_array() || mj.size() != static_cast<std::size_t>(d)) throw InputError(at / "maps", "expected d matrices");
    std::vector<EMatrix> grids;
    for (int i = 0; i < d; ++i) {
        const std::size_t rows = objects[static_cast<std::size_t>((i + 1) % d)].rank();
        const std::size_t cols = objects[static_cast<std::size_t>(i)].rank();
        grids.push_back(parse_ematrix(ctx->backend(), mj[static_cast<std::size_t>(i)], rows, cols, at / "maps" / static_cast<std::size_t>(i)));
    }
    return guarded(at, [&] { return make_factorization(ctx, d, objects, grids, opts); });
}

namespace {

std::vector<EMatrix> parse_components(const Backend& B, const json& cj, const std::vector<Shape>& shapes, const Where& at) {
    if (!cj.is_array() || cj.size() != shapes.size())
        throw InputError(at, "expected " + std::to_string(shapes.size()) + " components");
    std::vector<EMatrix> out;
    for (std::size_t i = 0; i < shapes.size(); ++i) out.push_back(parse_ematrix(B, cj[i], shapes[i].rows, shapes[i].cols, at / i));
    return out;
}

}  // namespace

FactMorphism parse_morphism(const json& j0, const Where& at0, const FactOptions& opts) {
    auto [j, at] = deref(j0, at0);
    FactPtr X = parse_factorization(require(j, "source", at), at / "source", opts);
    FactPtr Y = j.contains("target") ? parse_factorization(j.at("target"), at / "target", opts) : X;
    if (X->d != Y->d) throw InputError(at, "source and target have different d");
    std::vector<Shape> shapes;
    for (int i = 1; i <= X->d; ++i) shapes.push_back(Shape{Y->rank(i), X->rank(i)});
    FactMorphism phi{X, Y, parse_components(X->backend(), require(j, "components", at), shapes, at / "components")};
    return phi;
}

GradedHom parse_graded(const json& j0, const Where& at0, const FactOptions& opts) {
    auto [j, at] = deref(j0, at0);
    FactPtr X = parse_factorization(require(j, "source", at), at / "source", opts);
    FactPtr Y = j.contains("target") ? parse_factorization(j.at("target"), at / "target", opts) : X;
    if (X->d != Y->d) throw InputError(at, "source and target have different d");
    int n = get_as<int>(require(j, "degree", at), at / "degree", "an integer");
    return GradedHom{X, Y, n,
                     parse_components(X->backend(), require(j, "components", at), graded_shapes(*X, *Y, n), at / "components")};
}

ComplexWindow parse_window(const json& j0, const Where& at0) {
    auto [j, at] = deref(j0, at0);
    ComplexWindow C;
    C.ring = parse_backend(require(j, "ring", at), at / "ring");
    C.lo = get_as<int>(require(j, "lo", at), at / "lo", "an integer");
    C.hi = get_as<int>(require(j, "hi", at), at / "hi", "an integer");
    if (C.hi < C.lo) throw InputError(at / "hi", "must be at least lo");
    const std::size_t npos = static_cast<std::size_t>(C.hi - C.lo + 1);
    const json& mj = require(j, "maps", at);
    if (!mj.is_array() || mj.size() != npos - 1) throw InputError(at / "maps", "expected hi - lo matrices");
    if (j.contains("ranks")) {
        C.ranks = get_as<std::vector<std::size_t>>(j.at("ranks"), at / "ranks", "a list of ranks");
        if (C.ranks.size() != npos) throw InputError(at / "ranks", "expected hi - lo + 1 ranks");
    } else {
        C.ranks.assign(npos, 0);
        for (std::size_t q = 0; q + 1 < npos; ++q) {
            const json& m = mj[q];
            if (!m.is_array() || m.empty() || !m[0].is_array())
                throw InputError(at / "maps" / q, "empty matrix; give \"ranks\" explicitly");
            C.ranks[q + 1] = m.size();
            C.ranks[q] = m[0].size();
        }
    }
    for (std::size_t q = 0; q + 1 < npos; ++q)
        C.maps.push_back(parse_ematrix(*C.ring, mj[q], C.ranks[q + 1], C.ranks[q], at / "maps" / q));
    C.period = j.contains("period") ? get_as<int>(j.at("period"), at / "period", "an integer") : 0;
    if (j.contains("twist_per_period")) C.twist_per_period = get_as<int>(j.at("twist_per_period"), at / "twist_per_period", "an integer");
    if (j.contains("nilpotency") && !j.at("nilpotency").is_null())
        C.nilpotency = get_as<int>(j.at("nilpotency"), at / "nilpotency", "an integer");
    return C;
}

json to_json(const QuotientRing& R) {
    json ideal = json::array();
    for (const auto& g : R.ideal_generators()) ideal.push_back(R.poly().to_string(g));
    return json{{"field", field_json(R.field())},
                {"vars", R.poly().vars()},
                {"order", to_string(R.poly().order())},
                {"ideal", ideal}};
}

json to_json(const FDAlgebra& A) {
    json basis = json::array(), table = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) basis.push_back(A.label(i));
    for (std::size_t a = 0; a < A.dim(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < A.dim(); ++b) {
            json c = json::array();
            for (const auto& s : A.mul(A.basis(a), A.basis(b))) c.push_back(s.to_string());
            row.push_back(c);
        }
        table.push_back(row);
    }
    return json{{"field", field_json(A.field())}, {"gens", A.generators()}, {"basis", basis}, {"table", table}};
}

json to_json(const Backend& B) {
    if (auto* rb = dynamic_cast<const RingBackend*>(&B)) return to_json(rb->ring());
    return to_json(dynamic_cast<const AlgebraBackend&>(B).algebra());
}

json to_json(const Context& ctx) {
    const Backend& B = ctx.backend();
    json twist = "identity";
    if (ctx.twist() && !ctx.twist()->is_identity()) {
        const auto& A = dynamic_cast<const AlgebraBackend&>(B).algebra();
        json nu = json::object();
        for (const auto& g : A.generators()) nu[g] = A.to_string(ctx.twist()->apply(A.generator(g)));
        twist = json{{"nu", nu}};
    }
    return json{{"ring", to_json(B)}, {"twist", twist}, {"eta", B.to_string(ctx.eta())}};
}

json to_json(const Backend& B, const EMatrix& m) { return json(render(B, m)); }

json to_json(const Backend& B, const EMatrices& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(B, m));
    return out;
}

json to_json(const Factorization& X) {
    json ranks = json::array(), maps = json::array(), twists = json::array();
    bool twisted = false;
    for (int i = 1; i <= X.d; ++i) {
        const FreeObj& o = X.objects[static_cast<std::size_t>(i - 1)];
        ranks.push_back(o.rank());
        twists.push_back(o.twists);
        for (int t : o.twists) twisted = twisted || t != 0;
        maps.push_back(to_json(X.backend(), X.f(i)));
    }
    json out{{"context", to_json(*X.ctx)}, {"d", X.d}, {"ranks", ranks}, {"maps", maps}};
    if (twisted) out["twists"] = twists;
    return out;
}

json to_json(const FactMorphism& phi) { return json{{"components", to_json(phi.source->backend(), phi.comps)}}; }

json to_json(const GradedHom& phi) {
    return json{{"degree", phi.degree}, {"components", to_json(phi.source->backend(), phi.comps)}};
}

json to_json(const ComplexWindow& C) {
    json out{{"ring", to_json(*C.ring)},
             {"lo", C.lo},
             {"hi", C.hi},
             {"ranks", C.ranks},
             {"maps", to_json(*C.ring, C.maps)},
             {"period", C.period}};
    if (C.twist_per_period != 1) out["twist_per_period"] = C.twist_per_period;
    out["nilpotency"] = C.nilpotency ? json(*C.nilpotency) : json(nullptr);
    return out;
}

json to_json(const NoSolutionCertificate& c) {
    json out{{"method", c.method}};
    if (!c.basis.empty()) out["basis"] = c.basis;
    if (!c.remainder.empty()) out["remainder"] = c.remainder;
    if (!c.functional.empty()) out["functional"] = c.functional;
    return out;
}

}  // namespace mfact
