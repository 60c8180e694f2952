#include <doctest.h>

#include <set>

#include "fibercert/mapping_torus.hpp"
#include "fibercert/pd.hpp"
#include "test_helpers.hpp"

using namespace fibercert;

TEST_SUITE_BEGIN("wirtinger");

TEST_CASE("0-crossing unknot diagram") {
    WirtingerResult w = wirtinger(parse_pd_json("[]"));
    CHECK(w.pres.num_generators == 1);
    CHECK(w.pres.relators.empty());
    CHECK(w.phi.values() == std::vector<long>{1});
    CHECK(w.phi.primitive());
}

TEST_CASE("trefoil structure") {
    WirtingerResult w = wirtinger(parse_pd_json("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"));
    CHECK(w.num_arcs == 3);
    CHECK(w.pres.num_generators == 3);
    CHECK(w.pres.relators.size() == 2); // one crossing relator dropped
    CHECK(w.pres.deficiency() == 1);
    for (const Word& r : w.pres.relators) {
        CHECK(r.length() == 4); // conjugation relator x_k x_i x_k^-1 x_j^-1
        CHECK(w.phi(r) == 0);
    }
    CHECK(w.phi.values() == std::vector<long>(3, 1));
}

TEST_CASE("figure-eight structure") {
    WirtingerResult w = wirtinger(parse_pd_json("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"));
    CHECK(w.num_arcs == 4);
    CHECK(w.pres.num_generators == 4);
    CHECK(w.pres.relators.size() == 3);
    for (const Word& r : w.pres.relators)
        CHECK(w.phi(r) == 0);
}

TEST_CASE("malformed PD codes are rejected with the offending edge named") {
    CHECK_THROWS_AS(parse_pd_json("[[1,4,2,5]]"), InputError);
    try {
        parse_pd_json("[[1,1,2,2],[3,4,4,3],[1,2,3,4]]");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("edge") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_pd_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_pd_json("[[1,2,3]]"), InputError);
}

TEST_CASE("mirror flips every crossing but keeps the shadow") {
    PDCode pd = parse_pd_json("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
    PDCode m = mirror(pd);
    CHECK(m.crossings.size() == pd.crossings.size());
    CHECK_NOTHROW(validate_pd(m));
    WirtingerResult w = wirtinger(m);
    CHECK(w.num_arcs == 3);
    CHECK(w.pres.deficiency() == 1);
    // double mirror restores the original crossing set
    PDCode mm = mirror(m);
    std::multiset<std::array<int, 4>> a(pd.crossings.begin(), pd.crossings.end()),
        b(mm.crossings.begin(), mm.crossings.end());
    CHECK(a == b);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("mapping_torus");

TEST_CASE("identity automorphism, rank 1") {
    MappingTorusResult mt = mapping_torus(FreeAutomorphism::identity(1));
    CHECK(mt.pres.num_generators == 2);
    REQUIRE(mt.pres.relators.size() == 1);
    CHECK(mt.pres.relators[0] == Word::parse("yxYX")); // t x t^-1 x^-1
    CHECK(mt.phi.values() == std::vector<long>{0, 1});
    CHECK(mt.phi.primitive());
}

TEST_CASE("phi kills every relator for random monodromies") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 60; ++i) {
        int rank = 1 + static_cast<int>(rng() % 3);
        FreeAutomorphism h = random_free_automorphism(rank, 10, 6, rng);
        MappingTorusResult mt = mapping_torus(h);
        CHECK(mt.pres.deficiency() == 1);
        for (const Word& r : mt.pres.relators)
            CHECK(mt.phi(r) == 0);
    }
}

TEST_CASE("invalid inverse rejected at construction") {
    // claim x -> xy has inverse x -> xy (it does not)
    std::vector<Word> images = {Word::parse("xy"), Word::parse("y")};
    CHECK_THROWS_AS(FreeAutomorphism(2, images, images), InputError);
    // the genuine inverse works
    std::vector<Word> inverse = {Word::parse("xY"), Word::parse("y")};
    CHECK_NOTHROW(FreeAutomorphism(2, images, inverse));
}

TEST_CASE("abelianized matrix of the rank-2 example") {
    // x -> y, y -> x^-1 y abelianizes to [[0, -1], [1, 1]]
    FreeAutomorphism h(2, {Word::parse("y"), Word::parse("Xy")},
                       {Word::parse("xY") /* x -> x y^-1 */, Word::parse("x")});
    auto m = h.abelianized();
    CHECK(m[0][0] == 0);
    CHECK(m[0][1] == -1);
    CHECK(m[1][0] == 1);
    CHECK(m[1][1] == 1);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("presentation");

TEST_CASE("file format round trip") {
    std::string text = "gens: 3\nrel: zxZY\n# comment\nrel: xyXZ\nphi: 1 1 1\nlabel: trefoil\n";
    PresentationFile pf = parse_presentation(text);
    CHECK(pf.pres.num_generators == 3);
    CHECK(pf.pres.relators.size() == 2);
    REQUIRE(pf.phi.has_value());
    CHECK(pf.pres.label == "trefoil");
    PresentationFile again = parse_presentation(presentation_to_text(pf.pres, *pf.phi));
    CHECK(again.pres.relators == pf.pres.relators);
    CHECK(*again.phi == *pf.phi);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_presentation("rel: xy\n"), ParseError); // missing gens
    try {
        parse_presentation("gens: 2\nrel: x!\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    // relator referencing a missing generator
    CHECK_THROWS_AS(parse_presentation("gens: 1\nrel: xy\n"), InputError);
    // phi that does not kill a relator
    CHECK_THROWS_AS(parse_presentation("gens: 2\nrel: xy\nphi: 1 1\n"), InputError);
}

TEST_CASE("infer_phi recovers the fibered class") {
    // x -> y, y -> x^-1 y: Ab(h) - I is invertible, so H_1 = Z + torsion
    FreeAutomorphism h(2, {Word::parse("y"), Word::parse("Xy")},
                       {Word::parse("xY"), Word::parse("x")});
    MappingTorusResult mt = mapping_torus(h);
    PhiClass phi = infer_phi(mt.pres);
    // H_1 = Z here and phi is the stable-letter class
    CHECK(phi == mt.phi);
    // a free group of rank 2 has H_1 of rank 2: no unique phi
    Presentation free2;
    free2.num_generators = 2;
    CHECK_THROWS_AS(infer_phi(free2), InputError);
}

TEST_SUITE_END();
