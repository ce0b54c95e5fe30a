#include <random>

#include <doctest.h>

#include "qdeform/catalog.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/structmaps.hpp"

using namespace qdeform;

namespace {

bool pass(const std::vector<CheckItem>& items) {
    bool ok = true;
    for (const auto& c : items)
        if (!c.info && !c.ok) {
            MESSAGE(c.id << ": " << c.residual);
            ok = false;
        }
    return ok;
}

}  // namespace

TEST_SUITE("structmaps") {
    TEST_CASE("Gauss factorization") {
        CHECK(pass(verify_gauss()));
        auto g = gauss_maps();
        const PresPtr& gl = g.forward.source();
        const PresPtr& gs = g.forward.target();
        auto E = [](const std::string& s, const PresPtr& p) { return parse_expression(s, p.get()); };
        // b -> u B, d -> B
        CHECK(gs->normalize(g.forward.apply(E("b", gl))) == gs->normalize(E("u*B", gs)));
        CHECK(gs->normalize(g.forward.apply(E("d", gl))) == E("B", gs));
        CHECK(gs->normalize(g.forward.apply(gl->aliases().at("Dq"))) == gs->normalize(E("A*B", gs)));
        // forward then backward lands back on the generators; random words too
        const PresPtr& inv = g.backward.target();
        std::mt19937 rng(1);
        std::uniform_int_distribution<int> gen(0, 3);
        for (int it = 0; it < 20; ++it) {
            Element w(1);
            for (int k = 0; k < 3; ++k) w = w * Element::gen(gen(rng));
            Element there = gs->normalize(g.forward.apply(w));
            Element back = inv->normalize(g.backward.apply(there));
            CHECK(back == inv->normalize(embedding(gl, inv).apply(w)));
        }
    }

    TEST_CASE("bosonization catalog validates") {
        auto entries = bosonization_catalog();
        REQUIRE(entries.size() >= 10);
        for (const auto& e : entries) {
            auto v = validate_entry(e, 0.7, 12);
            CHECK_MESSAGE(v.ok, e.name << " symbolic " << v.symbolic_residual << " numeric " << v.numeric_residual);
            if (v.numeric_residual >= 0) CHECK(v.numeric_residual < 1e-10);
        }
    }

    TEST_CASE("catalog entries at another deformation parameter") {
        for (const auto& e : bosonization_catalog()) {
            if (e.mode == VerifyMode::symbolic) continue;
            auto v = validate_entry(e, 0.55, 10);
            CHECK_MESSAGE(v.ok, e.name);
        }
    }

    TEST_CASE("reflection algebra transport") {
        for (const char* w : {"identity", "eps_q", "K1", "K1_generic"}) CHECK_MESSAGE(pass(rea_transport(w)), w);
        EMatrix k = transported_k(QMatrix::identity(2));
        PresPtr gl = build_presentation("glq2");
        // alpha = a^2 + b^2 for K = 1
        CHECK(k.at(0, 0) == gl->normalize(parse_expression("a^2 + b^2", gl.get())));
    }

    TEST_CASE("quotient by c1") {
        auto q = quotient_c1_check();
        REQUIRE(q.found);
        bool b_ok = false;
        for (const auto& [g, x] : q.assignment)
            if (g == "b") b_ok = x == "q*gamma";
        CHECK(b_ok);
    }

    TEST_CASE("real forms") {
        for (const char* f : {"Uq2", "Uq11"}) CHECK_MESSAGE(pass(check_star(star_map(f))), f);
        CHECK_THROWS(star_map("nosuch"));
    }

    TEST_CASE("catalog JSON lists every entry") {
        auto entries = bosonization_catalog();
        std::vector<EntryValidation> res;
        for (const auto& e : entries) res.push_back(validate_entry(e, 0.7, 8));
        std::string js = catalog_json(entries, res);
        for (const auto& e : entries) CHECK(js.find("\"" + e.name + "\"") != std::string::npos);
    }
}
