#include <doctest.h>

#include "mfact/io.hpp"

using namespace mfact;

namespace {

const std::filesystem::path kDir = FIXTURES;

json load(const std::string& name) { return read_json_file(kDir / name); }
Where at(const std::string& name) { return Where{kDir / name, ""}; }

FactPtr fact(const std::string& name, FactOptions opts = {}) {
    return parse_factorization(load(name), at(name), opts);
}

}  // namespace

TEST_CASE("errors name the file and the pointer") {
    try {
        fact("malformed.json");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(e.where.file.filename() == "malformed.json");
        CHECK(e.where.pointer == "/maps/1/0/0");
    }
    CHECK_THROWS_AS(read_json_file(kDir / "no_such_file.json"), InputError);
    json bad = load("classical_xy.json");
    bad["ranks"] = {1};
    CHECK_THROWS_AS(parse_factorization(bad, at("classical_xy.json")), InputError);
    bad = load("classical_xy.json");
    bad["maps"][0] = {{"x", "y"}};
    try {
        parse_factorization(bad, at("classical_xy.json"));
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(e.where.pointer.rfind("/maps/0", 0) == 0);
    }
}

TEST_CASE("verdict exceptions pass through") {
    CHECK_THROWS_AS(fact("not_factorization.json"), CompositionMismatch);
    CHECK_THROWS_AS(fact("odd_d3.json"), std::exception);
}

TEST_CASE("contexts cited by path are shared") {
    FactPtr a = fact("classical_xy.json");
    FactMorphism id = parse_morphism(load("id.json"), at("id.json"));
    CHECK(a->ctx == id.source->ctx);
    CHECK(id.source->ctx == id.target->ctx);
}

TEST_CASE("factorizations round trip") {
    for (const char* name : {"classical_xy.json", "pair_x2y2.json", "d4_x4.json", "twisted_id_eta.json"}) {
        FactPtr X = fact(name);
        json j = to_json(*X);
        FactPtr Y = parse_factorization(j, Where{"<memory>", ""});
        REQUIRE(Y->d == X->d);
        for (int i = 1; i <= X->d; ++i) CHECK(equal(X->backend(), X->f(i), Y->f(i)));
        CHECK(to_json(*Y) == j);
    }
}

TEST_CASE("morphisms, graded elements and windows round trip") {
    FactMorphism th = parse_morphism(load("theta_yy.json"), at("theta_yy.json"));
    json j = to_json(th);
    REQUIRE(j.contains("components"));
    CHECK(j["components"].size() == 2);

    GradedHom g = parse_graded(load("graded_deg1.json"), at("graded_deg1.json"));
    CHECK(g.degree == 1);
    CHECK(to_json(g)["degree"] == 1);

    ComplexWindow C = parse_window(load("window_xy.json"), at("window_xy.json"));
    CHECK(C.lo == -2);
    CHECK(C.hi == 2);
    CHECK(C.nilpotency == 2);
    ComplexWindow D = parse_window(to_json(C), Where{"<memory>", ""});
    CHECK(D.ranks == C.ranks);
    for (int q = C.lo; q < C.hi; ++q) CHECK(equal(*C.ring, C.map(q), D.map(q)));
}

TEST_CASE("algebras round trip through the table form") {
    auto A = parse_algebra(load("algebra_B.json"), at("algebra_B.json"));
    CHECK(A->dim() == 5);
    auto B = parse_algebra(to_json(*A), Where{"<memory>", ""});
    CHECK(B->dim() == 5);
    CHECK(to_json(*B) == to_json(*A));
    auto ctx = parse_context(load("twisted_B.json"), at("twisted_B.json"));
    CHECK(ctx->backend().k_dimension() == std::optional<std::size_t>(5));
}
