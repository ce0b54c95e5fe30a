#include <random>

#include <doctest.h>

#include "qdeform/catalog.hpp"
#include "qdeform/parse.hpp"

using namespace qdeform;

namespace {

Element E(const std::string& s, const PresPtr& p) { return parse_expression(s, p.get()); }

// random combination of words of length <= 3 in the free algebra of p
Element random_element(const Presentation& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> g(0, p.ngens() - 1), len(0, 3), coef(-2, 2), terms(1, 3);
    Element e;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        Word w;
        int l = len(rng);
        for (int k = 0; k < l; ++k) w += letter(g(rng));
        e.add(w, QScalar(coef(rng)) * QScalar::qpow(coef(rng)));
    }
    return e;
}

}  // namespace

TEST_SUITE("freealg") {
    TEST_CASE("glq2 normal forms") {
        PresPtr p = build_presentation("glq2");
        CHECK(element_str(p->normalize(E("b*a", p)), *p) == "(q^-1)*a*b");
        CHECK(element_str(p->normalize(E("d*a", p)), *p) == "a*d - (q - q^-1)*b*c");
        CHECK(element_str(p->normalize(E("c*b", p)), *p) == "b*c");
        // a*d - q*b*c is the determinant alias
        CHECK(p->normalize(E("a*d - (q)*b*c", p)) == p->normalize(p->aliases().at("Dq")));
        CHECK(p->is_central(p->aliases().at("Dq")));
        CHECK_FALSE(p->is_central(E("a", p)));
    }

    TEST_CASE("qplane powers and words") {
        PresPtr p = build_presentation("qplane");
        Element x2 = E("x^2", p);
        CHECK(x2 == Element::word(letter(0) + letter(0)));
        // y^2 x = q^-2 x y^2
        CHECK(p->normalize(E("y^2*x", p)) == p->normalize(QScalar::qpow(-2) * E("x*y^2", p)));
    }

    TEST_CASE("normalize is idempotent and compatible with products") {
        std::mt19937 rng(42);
        for (const auto& name : audited_catalog_names()) {
            PresPtr p = build_presentation(name);
            for (int it = 0; it < 20; ++it) {
                Element a = random_element(*p, rng), b = random_element(*p, rng);
                Element na = p->normalize(a), nb = p->normalize(b);
                CHECK_MESSAGE(p->normalize(na) == na, name);
                CHECK_MESSAGE(p->normalize(a * b) == p->normalize(na * nb), name);
                for (const auto& [w, c] : na.terms()) CHECK_MESSAGE(p->is_normal(w), name);
            }
        }
    }

    TEST_CASE("parse and print round trip on normal forms up to degree 4") {
        std::mt19937 rng(5);
        for (const auto& name : catalog_names()) {
            PresPtr p = build_presentation(name);
            auto words = p->normal_words(4);
            REQUIRE_FALSE(words.empty());
            std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
            std::uniform_int_distribution<int> coef(-3, 3);
            for (int it = 0; it < 30; ++it) {
                Element e;
                for (int k = 0; k < 3; ++k) e.add(words[pick(rng)], QScalar(coef(rng)) * QScalar::spow(coef(rng)) + coef(rng));
                std::string s = element_str(e, *p);
                CHECK_MESSAGE(parse_expression(s, p.get()) == e, name << ": " << s);
            }
        }
    }

    TEST_CASE("parser errors and extras") {
        PresPtr p = build_presentation("glq2");
        CHECK_THROWS_AS(E("a*zz", p), ParseError);
        try {
            E("a + *b", p);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.position > 0);
        }
        CHECK(E("a/[2]", p) == qnum(2).inverse() * E("a", p));
        CHECK(E("(a + b)*c", p) == E("a*c + b*c", p));
        CHECK(E("2*(q)*a", p) == 2 * QScalar::q() * E("a", p));
    }

    TEST_CASE("unicode printing only touches names") {
        PresPtr p = build_presentation("osc_q");
        std::string u = element_str(E("adag*a", p), *p, true);
        CHECK(u.find("a†") != std::string::npos);
        CHECK(pretty_name("alpha") == "α");
    }

    TEST_CASE("confluence audit flags a broken system") {
        PresentationBuilder b("broken");
        b.gen("x").gen("y").gen("z").rule("y*x", "(q)*x*y").rule("z*y", "(q)*y*z").rule("z*x", "x*z + x");
        PresPtr p = b.build();
        // zyx reduces two ways
        CHECK_FALSE(check_overlaps(*p, 3).empty());
        CHECK(check_overlaps(*build_presentation("glq2"), 4).empty());
    }

    TEST_CASE("rules must decrease") {
        PresentationBuilder b("bad");
        b.gen("x").gen("y").rule("x*y", "y*x");
        CHECK_THROWS_AS(b.build(), AlgebraError);
    }

    TEST_CASE("presentation JSON round trip") {
        for (const auto& name : catalog_names()) {
            PresPtr p = build_presentation(name);
            PresPtr r = load_presentation_json(presentation_to_json(*p));
            REQUIRE(r->ngens() == p->ngens());
            CHECK(r->rules().size() == p->rules().size());
            for (const auto& rule : p->rules()) CHECK_MESSAGE(r->normal_form(rule.lhs) == p->normal_form(rule.lhs), name);
        }
    }

    TEST_CASE("element span") {
        PresPtr p = build_presentation("glq2");
        ElementSpan s;
        CHECK(s.add(E("a*b + b*c", p)));
        CHECK(s.add(E("a*b - b*c", p)));
        CHECK_FALSE(s.add(E("a*b", p)));
        CHECK(s.rank() == 2);
        CHECK(s.contains(E("b*c", p)));
        CHECK_FALSE(s.contains(E("a*d", p)));
    }

    TEST_CASE("morphisms") {
        PresPtr gl = build_presentation("glq2");
        // transpose a, c, b, d is an automorphism of glq2
        MorphismMap t("transpose", gl, gl, {E("a", gl), E("c", gl), E("b", gl), E("d", gl)});
        for (const auto& r : verify_morphism(t)) CHECK_MESSAGE(r.ok(), r.relation);
        CHECK(gl->normalize(t.apply(E("a*b", gl))) == gl->normalize(E("a*c", gl)));
        // swapping a and b is not
        MorphismMap bad("swap", gl, gl, {E("b", gl), E("a", gl), E("c", gl), E("d", gl)});
        bool any_fail = false;
        for (const auto& r : verify_morphism(bad)) any_fail = any_fail || !r.ok();
        CHECK(any_fail);
        // embedding of glq2 into glq2_det keeps the relations
        for (const auto& r : verify_morphism(embedding(gl, build_presentation("glq2_det")))) CHECK(r.ok());
    }
}
