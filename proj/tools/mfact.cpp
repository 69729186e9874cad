// Batch front end: one verb per invocation, JSON report on stdout or --out.
// Exit status: 0 verified/true, 2 verified-false with certificate, 1 error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "mfact/axioms.hpp"
#include "mfact/deadline.hpp"
#include "mfact/io.hpp"

using namespace mfact;

namespace {

struct Flags {
    std::vector<std::string> inputs;
    std::optional<int> window;
    std::uint64_t seed = 0;
    std::size_t trials = 10;
    double deadline = 60.0;
    std::string out;
    int d = 2;
    bool allow_odd_d = false;
    std::string f, g, u, x, ctx;
    std::vector<std::string> pieces;
    int n = 0;
    bool timing = false;
};

struct Outcome {
    bool verdict = false;
    json certificate = nullptr;
    json result = json::object();
};

/// The error report carries the offending file and JSON pointer when known.
struct Failure {
    std::string kind;
    std::string message;
    std::optional<Where> where;
};

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(Where{path, ""}, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

json load(const std::string& path) { return read_json_file(path); }
Where at(const std::string& path) { return Where{path, ""}; }

FactOptions fact_options(const Flags& fl) {
    FactOptions o;
    o.allow_odd_d = fl.allow_odd_d;
    return o;
}

const std::string& input(const Flags& fl, std::size_t k, const char* what) {
    if (fl.inputs.size() <= k) throw std::invalid_argument(std::string("missing input: ") + what);
    return fl.inputs[k];
}

const std::string& required_flag(const std::string& v, const char* name) {
    if (v.empty()) throw std::invalid_argument(std::string("missing flag --") + name);
    return v;
}

std::pair<int, int> window_bounds(const Flags& fl, int d) {
    if (!fl.window) return default_window(d);
    if (*fl.window < 1) throw std::invalid_argument("--window must be positive");
    const int lo = -(*fl.window / 2);
    return {lo, lo + *fl.window};
}

Elem flag_elem(const Backend& B, const std::string& src, const char* name) {
    try {
        return B.normalize(B.parse(required_flag(src, name)));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("--") + name + ": " + e.what());
    }
}

json mismatch_certificate(const Backend& B, const CompositionMismatch& m) {
    return json{{"rotation", m.rotation}, {"residual", to_json(B, m.residual)}};
}

json square_certificate(const Backend& B, const SquareCheck& sq) {
    return json{{"square", sq.index}, {"residual", to_json(B, sq.residual)}};
}

json window_summary(const ComplexWindow& C) { return to_json(C); }

// ---- verbs ----

Outcome verb_verify(const Flags& fl) {
    const std::string& path = input(fl, 0, "file to verify");
    json j = load(path);
    Outcome o;
    if (j.contains("lo")) {
        ComplexWindow C = parse_window(j, at(path));
        auto bad = check_window(C);
        o.verdict = !bad;
        o.result = json{{"kind", "window"}, {"lo", C.lo}, {"hi", C.hi}};
        if (bad) o.certificate = json{{"position", *bad}};
        return o;
    }
    if (j.contains("components") && j.contains("degree")) {
        GradedHom g = parse_graded(j, at(path), fact_options(fl));
        SquareCheck sq = dg_check(g);
        o.verdict = sq.ok;
        o.result = json{{"kind", "graded"}, {"degree", g.degree}};
        if (!sq.ok) o.certificate = square_certificate(g.source->backend(), sq);
        return o;
    }
    if (j.contains("components")) {
        FactMorphism phi = parse_morphism(j, at(path), fact_options(fl));
        SquareCheck sq = is_morphism(phi);
        o.verdict = sq.ok;
        o.result = json{{"kind", "morphism"}};
        if (!sq.ok) o.certificate = square_certificate(phi.source->backend(), sq);
        return o;
    }
    if (j.contains("maps")) {
        o.result = json{{"kind", "factorization"}};
        try {
            FactPtr X = parse_factorization(j, at(path), fact_options(fl));
            o.verdict = true;
            o.result["d"] = X->d;
            json ranks = json::array();
            for (int i = 1; i <= X->d; ++i) ranks.push_back(X->rank(i));
            o.result["ranks"] = ranks;
        } catch (const CompositionMismatch& m) {
            auto ctx = parse_context(j.at("context"), at(path) / "context");
            o.certificate = mismatch_certificate(ctx->backend(), m);
        }
        return o;
    }
    o.result = json{{"kind", "context"}};
    try {
        auto ctx = parse_context(j, at(path));
        o.verdict = true;
        if (const auto& rep = ctx->twist_report())
            o.result["twist"] = json{{"twisted_central", rep->twisted_central}, {"fixes_wr", rep->fixes_wr}};
    } catch (const ContextError& e) {
        o.certificate = json{{"reason", e.what()}};
    }
    return o;
}

Outcome verb_sum(const Flags& fl) {
    FactPtr X = parse_factorization(load(input(fl, 0, "first factorization")), at(fl.inputs[0]), fact_options(fl));
    FactPtr Y = parse_factorization(load(input(fl, 1, "second factorization")), at(fl.inputs[1]), fact_options(fl));
    Outcome o;
    o.verdict = true;
    o.result = to_json(*direct_sum(*X, *Y));
    return o;
}

Outcome verb_rotate(const Flags& fl, bool up) {
    FactPtr X = parse_factorization(load(input(fl, 0, "factorization")), at(fl.inputs[0]), fact_options(fl));
    FactPtr R = up ? suspend(*X) : unsuspend(*X);
    FactPtr back = up ? unsuspend(*R) : suspend(*R);
    Outcome o;
    o.verdict = same_representation(*back, *X);
    o.result = to_json(*R);
    if (!o.verdict) o.certificate = json{{"round_trip", to_json(*back)}};
    return o;
}

Outcome verb_cone(const Flags& fl) {
    FactMorphism phi = parse_morphism(load(input(fl, 0, "morphism")), at(fl.inputs[0]), fact_options(fl));
    const Backend& B = phi.source->backend();
    Outcome o;
    try {
        Cone c = cone(phi, fact_options(fl));
        o.verdict = true;
        o.result = json{{"cone", to_json(*c.cone)}, {"incl", to_json(c.incl)}, {"proj", to_json(c.proj)}};
    } catch (const CompositionMismatch& m) {
        o.certificate = mismatch_certificate(B, m);
        const int r = m.rotation;
        const std::size_t top = phi.source->rank(r + 1);
        o.certificate["lower_left"] =
            to_json(B, sub_block(m.residual, top, 0, m.residual.rows - top, top));
    }
    return o;
}

Outcome verb_triangle(const Flags& fl) {
    FactMorphism phi = parse_morphism(load(input(fl, 0, "morphism")), at(fl.inputs[0]), fact_options(fl));
    Triangle t = standard_triangle(phi);
    Outcome o;
    o.verdict = is_morphism(t.u).ok && is_morphism(t.v).ok && is_morphism(t.w).ok;
    o.result = json{{"cone", to_json(*t.C)}, {"suspension", to_json(*t.SX)},
                    {"u", to_json(t.u)}, {"v", to_json(t.v)}, {"w", to_json(t.w)}};
    return o;
}

Outcome verb_homotopic(const Flags& fl) {
    FactMorphism a = parse_morphism(load(input(fl, 0, "first morphism")), at(fl.inputs[0]), fact_options(fl));
    FactMorphism b = parse_morphism(load(input(fl, 1, "second morphism")), at(fl.inputs[1]), fact_options(fl));
    if (!same_representation(*a.source, *b.source) || !same_representation(*a.target, *b.target))
        throw std::invalid_argument("morphisms are not parallel (cite the same context file in both)");
    HomotopyResult h = homotopy_decide(a, b);
    Outcome o;
    o.verdict = h.homotopic;
    if (h.homotopic)
        o.result = json{{"witness", to_json(a.source->backend(), h.s)}};
    else
        o.certificate = to_json(h.certificate);
    return o;
}

Outcome verb_dg(const Flags& fl) {
    json j = load(input(fl, 0, "graded element"));
    Outcome o;
    if (!j.contains("components")) {
        FactPtr X = parse_factorization(j, at(fl.inputs[0]), fact_options(fl));
        FactPtr Y = X;
        if (fl.inputs.size() > 1) Y = parse_factorization(load(fl.inputs[1]), at(fl.inputs[1]), fact_options(fl));
        auto h0 = h0_dimension(X, Y);
        if (!h0) throw Unsupported("H^0 needs a backend of finite dimension over its field");
        o.verdict = true;
        o.result = json{{"h0_dimension", *h0}};
        return o;
    }
    GradedHom g = parse_graded(j, at(fl.inputs[0]), fact_options(fl));
    const Backend& B = g.source->backend();
    SquareCheck sq = dg_check(g);
    if (!sq.ok) {
        o.certificate = square_certificate(B, sq);
        return o;
    }
    GradedHom dg = dg_differential(g);
    GradedHom ddg = dg_differential(dg);
    o.verdict = true;
    for (const auto& c : ddg.comps) o.verdict = o.verdict && is_zero(B, c);
    o.result = json{{"differential", to_json(dg)}, {"second_differential", to_json(ddg)}};
    return o;
}

Outcome verb_reduce(const Flags& fl) {
    FactPtr X = parse_factorization(load(input(fl, 0, "factorization")), at(fl.inputs[0]), fact_options(fl));
    Elem f = flag_elem(X->backend(), fl.f, "f");
    ModReduction red(X->ctx, f);
    auto [lo, hi] = window_bounds(fl, X->d);
    ComplexWindow C = red.window(*X, lo, hi);
    Outcome o;
    o.verdict = !check_window(C);
    o.result = json{{"cofactor", X->backend().to_string(red.cofactor())}, {"window", window_summary(C)}};
    return o;
}

Outcome verb_exact(const Flags& fl) {
    ComplexWindow C = parse_window(load(input(fl, 0, "window")), at(fl.inputs[0]));
    ExactnessResult ex = window_exact(C);
    Outcome o;
    o.verdict = ex.exact;
    if (!ex.exact) o.certificate = json{{"position", ex.position ? json(*ex.position) : json(nullptr)}, {"reason", ex.reason}};
    return o;
}

Outcome verb_checktac(const Flags& fl) {
    FactPtr X = parse_factorization(load(input(fl, 0, "factorization")), at(fl.inputs[0]), fact_options(fl));
    Elem f = flag_elem(X->backend(), fl.f, "f");
    auto [lo, hi] = window_bounds(fl, X->d);
    TacResult r = is_totally_acyclic(*X, f, lo, hi);
    if (r.verdict == TacVerdict::HypothesesUnmet) throw HypothesisError(r.detail);
    Outcome o;
    o.verdict = r.verdict == TacVerdict::TotallyAcyclic;
    o.result = json{{"status", to_string(r.verdict)}, {"lo", lo}, {"hi", hi}};
    if (!o.verdict)
        o.certificate = json{{"position", r.position ? json(*r.position) : json(nullptr)},
                             {"dual_side", r.dual_side},
                             {"reason", r.detail}};
    return o;
}

Outcome verb_endring(const Flags& fl) {
    auto R = parse_ring(load(input(fl, 0, "ring")), at(fl.inputs[0]));
    RingBackend rb(R);
    Poly g = std::get<Poly>(flag_elem(rb, fl.g, "g"));
    EndRingPresentation E = end_ring_cyclic(R, g);
    json colon = json::array();
    for (const auto& p : E.colon) colon.push_back(R->to_string(p));
    Outcome o;
    o.verdict = true;
    o.result = json{{"g", R->to_string(E.g)}, {"colon", colon}, {"gamma", to_json(*E.gamma)}};
    if (!fl.u.empty()) o.result["eta"] = E.gamma->to_string(E.image(std::get<Poly>(flag_elem(rb, fl.u, "u"))));
    return o;
}

Outcome verb_dualq(const Flags& fl) {
    auto R = parse_ring(load(input(fl, 0, "ring")), at(fl.inputs[0]));
    RingBackend rb(R);
    Poly x = std::get<Poly>(flag_elem(rb, fl.x, "x"));
    if (fl.n < 1) throw std::invalid_argument("--n must be a positive rank");
    const std::size_t n = static_cast<std::size_t>(fl.n);
    Rng rng(fl.seed);
    Matrix<Poly> h(2, n);
    for (auto& e : h.data) e = random_poly(rng, *R);
    std::vector<std::vector<Poly>> samples(2, std::vector<Poly>(n));
    for (auto& row : samples)
        for (auto& e : row) e = random_poly(rng, *R);
    DualQuotientResult r = dual_quotient_check(n, x, R, h, samples);
    Outcome o;
    o.verdict = r.ok();
    o.result = json{{"well_defined", r.well_defined}, {"round_trip", r.round_trip}, {"naturality", r.naturality}};
    if (!o.verdict) o.certificate = o.result;
    return o;
}

Outcome verb_faithful(const Flags& fl) {
    FactMorphism theta = parse_morphism(load(input(fl, 0, "morphism")), at(fl.inputs[0]), fact_options(fl));
    const Backend& B = theta.source->backend();
    FaithfulResult r = faithful_check(theta, flag_elem(B, fl.f, "f"));
    Outcome o;
    o.verdict = r.consistent;
    o.result = json{{"down_null", r.down_null}, {"up_null", r.up_null}};
    if (r.down_null) o.result["down_witness"] = to_json(B, r.down_witness);
    else o.result["down_certificate"] = to_json(r.down_certificate);
    if (r.up_null) o.result["up_witness"] = to_json(B, r.up_witness);
    if (!r.consistent) o.certificate = o.result;
    return o;
}

Outcome verb_lift(const Flags& fl) {
    FactMorphism phi = parse_morphism(load(input(fl, 0, "chain map")), at(fl.inputs[0]), fact_options(fl));
    const Backend& B = phi.source->backend();
    LiftResult r = full_lift(phi.source, phi.target, phi.comps, flag_elem(B, fl.f, "f"));
    Outcome o;
    o.verdict = r.lifted;
    if (r.lifted)
        o.result = json{{"theta", to_json(r.theta)}, {"homotopy", to_json(B, r.s)}};
    else
        o.certificate = to_json(r.certificate);
    return o;
}

Outcome verb_axioms(const Flags& fl) {
    const std::string& cpath = required_flag(fl.ctx, "ctx");
    auto ctx = parse_context(json(cpath), Where{});  // by path, so pieces citing it share it
    AxiomOptions opts;
    opts.seed = fl.seed;
    opts.trials = fl.trials;
    opts.d = fl.d;
    for (const auto& p : fl.pieces) {
        FactPtr X = parse_factorization(load(p), at(p), fact_options(fl));
        if (X->ctx != ctx) throw InputError(at(p) / "context", "must cite the --ctx file");
        opts.pieces.push_back(X);
    }
    AxiomReport rep = run_axioms(ctx, opts);
    Outcome o;
    o.verdict = rep.ok();
    json props = json::array(), failures = json::array();
    for (const auto& p : rep.properties) {
        props.push_back(json{{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}});
        if (p.first_trial) failures.push_back(json{{"name", p.name}, {"trial", *p.first_trial}, {"detail", p.first_detail}});
    }
    o.result = json{{"seed", fl.seed}, {"trials", fl.trials}, {"d", fl.d}, {"properties", props}};
    if (!o.verdict) o.certificate = json{{"failures", failures}};
    return o;
}

using Verb = std::function<Outcome(const Flags&)>;

const std::vector<std::pair<std::string, Verb>>& verbs() {
    static const std::vector<std::pair<std::string, Verb>> table = {
        {"verify", verb_verify},
        {"sum", verb_sum},
        {"suspend", [](const Flags& f) { return verb_rotate(f, true); }},
        {"unsuspend", [](const Flags& f) { return verb_rotate(f, false); }},
        {"cone", verb_cone},
        {"triangle", verb_triangle},
        {"homotopic", verb_homotopic},
        {"dg", verb_dg},
        {"reduce", verb_reduce},
        {"exact", verb_exact},
        {"checktac", verb_checktac},
        {"endring", verb_endring},
        {"dualq", verb_dualq},
        {"faithful", verb_faithful},
        {"lift", verb_lift},
        {"axioms", verb_axioms},
    };
    return table;
}

std::string blurb(const std::string& verb) {
    static const std::map<std::string, std::string> text = {
        {"verify", "check a factorization, morphism, graded map, window or context"},
        {"sum", "direct sum of two factorizations"},
        {"suspend", "left rotation with negation"},
        {"unsuspend", "right rotation with negation"},
        {"cone", "mapping cone of a morphism"},
        {"triangle", "standard triangle X -> Y -> C -> SX"},
        {"homotopic", "decide whether two parallel morphisms are homotopic"},
        {"dg", "hom-complex differential, or H0 dimension for factorizations"},
        {"reduce", "reduce modulo a central element --f"},
        {"exact", "exactness of a window"},
        {"checktac", "total acyclicity of the reduction modulo --f"},
        {"endring", "End ring R/(I : g) of the cyclic module generated by --g"},
        {"dualq", "dual quotient identity on random free data"},
        {"faithful", "compare null-homotopy before and after reduction"},
        {"lift", "lift the reduction of a morphism back over the ring"},
        {"axioms", "seeded random axiom checks over --ctx"},
    };
    return text.at(verb);
}

void add_flags(CLI::App* sub, Flags& fl) {
    sub->add_option("inputs", fl.inputs, "input JSON files");
    sub->add_option("--window", fl.window, "window length (number of maps)");
    sub->add_option("--seed", fl.seed, "PRNG seed (mt19937_64)");
    sub->add_option("--trials", fl.trials, "number of random trials");
    sub->add_option("--deadline", fl.deadline, "seconds before giving up");
    sub->add_option("--out", fl.out, "write the report here instead of stdout");
    sub->add_option("--d", fl.d, "d for randomly generated factorizations");
    sub->add_flag("--allow-odd-d", fl.allow_odd_d, "accept odd d (test use only)");
    sub->add_option("--f", fl.f, "central element to reduce by");
    sub->add_option("--g", fl.g, "generator of the cyclic module");
    sub->add_option("--u", fl.u, "element whose image in the End ring is reported");
    sub->add_option("--x", fl.x, "element for the dual quotient check");
    sub->add_option("--n", fl.n, "free rank for the dual quotient check");
    sub->add_option("--ctx", fl.ctx, "context JSON for axioms");
    sub->add_option("--piece", fl.pieces, "extra factorization for the axioms pool");
    sub->add_flag("--timing", fl.timing, "include elapsed time (makes reports non-reproducible)");
}

int emit(const Flags& fl, const json& report) {
    const std::string text = report.dump(2) + "\n";
    if (fl.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(fl.out);
    if (!out) {
        std::cerr << "cannot write " << fl.out << "\n";
        return 1;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix factorization toolkit"};
    app.require_subcommand(1);
    if (argc > 1 && argv[1][0] != '-') {
        bool known = false;
        for (const auto& v : verbs()) known = known || v.first == argv[1];
        if (!known) {
            std::cerr << "unknown verb '" << argv[1] << "'\n";
            return 1;
        }
    }
    Flags fl;
    std::map<CLI::App*, std::string> names;
    for (const auto& [name, fn] : verbs()) names[app.add_subcommand(name, blurb(name))] = name;
    for (auto& [sub, name] : names) add_flags(sub, fl);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::string verb;
    for (auto& [sub, name] : names)
        if (sub->parsed()) verb = name;

    json report{{"verb", verb}, {"inputs", json::array()}};
    std::vector<std::string> digested = fl.inputs;
    if (!fl.ctx.empty()) digested.push_back(fl.ctx);
    for (const auto& p : fl.pieces) digested.push_back(p);

    const auto start = std::chrono::steady_clock::now();
    int code = 1;
    std::optional<Failure> failure;
    try {
        for (const auto& p : digested) report["inputs"].push_back(json{{"path", p}, {"sha256", sha256_file(p)}});
        Outcome o;
        {
            ScopedDeadline guard{std::chrono::duration<double>(fl.deadline)};
            for (const auto& [name, fn] : verbs())
                if (name == verb) o = fn(fl);
        }
        report["verdict"] = o.verdict;
        report["certificate"] = o.certificate;
        report["result"] = o.result;
        code = o.verdict ? 0 : 2;
    } catch (const InputError& e) {
        failure = Failure{"input", e.what(), e.where};
    } catch (const HypothesisError& e) {
        failure = Failure{"hypotheses_unmet", e.what(), std::nullopt};
    } catch (const Unsupported& e) {
        failure = Failure{"unsupported", e.what(), std::nullopt};
    } catch (const DeadlineExceeded& e) {
        failure = Failure{"deadline", e.what(), std::nullopt};
    } catch (const std::exception& e) {
        failure = Failure{"error", e.what(), std::nullopt};
    }
    if (failure) {
        report["verdict"] = "error";
        json err{{"kind", failure->kind}, {"message", failure->message}};
        if (failure->where) {
            err["file"] = failure->where->file.string();
            err["pointer"] = failure->where->pointer.empty() ? "/" : failure->where->pointer;
        }
        report["error"] = err;
        std::cerr << "mfact " << verb << ": " << failure->message << "\n";
    }
    if (fl.timing)
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (emit(fl, report) != 0) return 1;
    return code;
}
