#include <doctest.h>

#include <set>

#include "fibercert/hom.hpp"
#include "fibercert/mapping_torus.hpp"
#include "fibercert/pd.hpp"

using namespace fibercert;

namespace {

Presentation trefoil_2gen() {
    Presentation p;
    p.num_generators = 2;
    p.relators = {Word::parse("xyx") * Word::parse("yxy").inverse()};
    p.label = "trefoil-2gen";
    return p;
}

// Odometer enumeration of relator-respecting tuples, independent of the
// backtracking search.
long brute_force_hom_count(const Presentation& pres, const FiniteGroup& g, bool surjective_only) {
    const int k = pres.num_generators;
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    long count = 0;
    for (;;) {
        bool ok = true;
        for (const Word& r : pres.relators) {
            int acc = 0;
            for (const Letter& l : r.letters()) {
                int x = tuple[static_cast<std::size_t>(l.gen)];
                acc = g.mul(acc, l.sign > 0 ? x : g.inv(x));
            }
            if (acc != 0) {
                ok = false;
                break;
            }
        }
        if (ok && surjective_only)
            ok = static_cast<int>(subgroup_closure(g, tuple).size()) == g.order;
        if (ok)
            ++count;
        int pos = 0;
        while (pos < k && ++tuple[static_cast<std::size_t>(pos)] == g.order) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
    return count;
}

} // namespace

TEST_SUITE_BEGIN("homs");

TEST_CASE("trefoil onto S3: the surjections are pairs of distinct transpositions") {
    Presentation pres = trefoil_2gen();
    auto s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
    auto raw = enumerate_homs(pres, s3, true, /*dedupe=*/false);
    CHECK(raw.size() == 6); // ordered pairs of distinct transpositions
    for (const Hom& h : raw)
        for (int img : h.images)
            CHECK(s3->mul(img, img) == 0); // image elements are involutions
    auto deduped = enumerate_homs(pres, s3, true);
    CHECK(deduped.size() == 1); // a single class up to conjugation
}

TEST_CASE("trivial target has exactly one hom") {
    auto triv = std::make_shared<const FiniteGroup>(cyclic_group(1));
    auto homs = enumerate_homs(trefoil_2gen(), triv, false);
    CHECK(homs.size() == 1);
    CHECK(homs[0].surjective);
}

TEST_CASE("2-torsion cannot map onto Z/3") {
    Presentation p;
    p.num_generators = 1;
    p.relators = {Word::parse("xx")};
    auto z3 = std::make_shared<const FiniteGroup>(cyclic_group(3));
    auto all = enumerate_homs(p, z3, false);
    CHECK(all.size() == 1); // only the trivial hom
    CHECK_FALSE(all[0].surjective);
    CHECK(enumerate_homs(p, z3, true).empty());
}

TEST_CASE("hom counts match brute force for |G| <= 12, k <= 3") {
    std::vector<Presentation> presentations;
    presentations.push_back(trefoil_2gen());
    Presentation two_bridge; // x y relator-free, k = 2
    two_bridge.num_generators = 2;
    presentations.push_back(two_bridge);
    Presentation torus; // mapping torus of rank-2 swap: 3 generators
    torus = mapping_torus(FreeAutomorphism::swap_gens(2, 0, 1)).pres;
    presentations.push_back(torus);
    for (const auto& pres : presentations)
        for (const auto& g : catalog(12)) {
            if (g->order > 12)
                continue;
            auto raw = enumerate_homs(pres, g, false, /*dedupe=*/false);
            CHECK(static_cast<long>(raw.size()) == brute_force_hom_count(pres, *g, false));
            for (const Hom& h : raw)
                for (const Word& r : pres.relators)
                    CHECK(h.eval(r) == 0);
        }
}

TEST_CASE("div_phi_alpha examples") {
    WirtingerResult tre = wirtinger(parse_pd_json("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"));
    // trivial alpha, primitive phi -> 1
    CHECK(div_phi_alpha(tre.pres, tre.phi, trivial_hom(tre.pres)) == 1);
    // alpha = phi mod 2 -> div = 2
    auto z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
    Hom mod2(z2, tre.pres, {1, 1, 1});
    CHECK(div_phi_alpha(tre.pres, tre.phi, mod2) == 2);
    // alpha onto S3 via transpositions -> div = 2
    auto s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
    auto surjections = enumerate_homs(tre.pres, s3, true);
    REQUIRE_FALSE(surjections.empty());
    for (const Hom& h : surjections)
        CHECK(div_phi_alpha(tre.pres, tre.phi, h) == 2);
}

TEST_CASE("div divides along quotient refinement (Z/4 -> Z/2)") {
    WirtingerResult tre = wirtinger(parse_pd_json("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"));
    auto z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
    auto z4 = std::make_shared<const FiniteGroup>(cyclic_group(4));
    long d2 = div_phi_alpha(tre.pres, tre.phi, Hom(z2, tre.pres, {1, 1, 1}));
    long d4 = div_phi_alpha(tre.pres, tre.phi, Hom(z4, tre.pres, {1, 1, 1}));
    // ker(mod 4) <= ker(mod 2), so div(mod 2) | div(mod 4)
    CHECK(d4 % d2 == 0);
    CHECK(d4 == 4);
}

TEST_CASE("div is invariant under post-composition with an isomorphism") {
    WirtingerResult tre = wirtinger(parse_pd_json("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"));
    auto z5 = std::make_shared<const FiniteGroup>(cyclic_group(5));
    Hom base(z5, tre.pres, {1, 1, 1});
    long expected = div_phi_alpha(tre.pres, tre.phi, base);
    for (int u = 1; u < 5; ++u) { // automorphisms of Z/5 are unit multiplications
        std::vector<int> images = {u, u, u};
        CHECK(div_phi_alpha(tre.pres, tre.phi, Hom(z5, tre.pres, images)) == expected);
    }
    // and under inner twists on S3
    auto s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
    for (const Hom& h : enumerate_homs(tre.pres, s3, true, false)) {
        long d = div_phi_alpha(tre.pres, tre.phi, h);
        for (int c = 0; c < s3->order; ++c) {
            std::vector<int> twisted;
            for (int img : h.images)
                twisted.push_back(s3->conj(c, img));
            CHECK(div_phi_alpha(tre.pres, tre.phi, Hom(s3, tre.pres, twisted)) == d);
        }
    }
}

TEST_CASE("image_equal") {
    // identity inclusion
    Presentation free2;
    free2.num_generators = 2;
    auto klein = std::make_shared<const FiniteGroup>(dihedral_group(2));
    // find generators a, b of the Klein group with a != b, both order 2
    Hom beta(klein, free2, {1, 2});
    REQUIRE(beta.surjective);
    CHECK(image_equal({Word::gen(0), Word::gen(1)}, beta));
    // A = <x> inside B = <x, y> free, beta onto Z/2 x Z/2: proper image
    CHECK_FALSE(image_equal({Word::gen(0)}, beta));

    // mapping torus of the swap with beta mapping the fiber onto all of S3
    MappingTorusResult mt = mapping_torus(FreeAutomorphism::swap_gens(2, 0, 1));
    auto s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
    // x -> (12), y -> (13), t -> (23): t x t^-1 = y and t y t^-1 = x hold
    int t12 = -1, t13 = -1, t23 = -1;
    for (int x = 1; x < 6; ++x) {
        if (s3->element_names[static_cast<std::size_t>(x)] == "(1 2)")
            t12 = x;
        if (s3->element_names[static_cast<std::size_t>(x)] == "(1 3)")
            t13 = x;
        if (s3->element_names[static_cast<std::size_t>(x)] == "(2 3)")
            t23 = x;
    }
    REQUIRE(t12 >= 0);
    REQUIRE(t13 >= 0);
    REQUIRE(t23 >= 0);
    Hom beta_mt(s3, mt.pres, {t12, t13, t23});
    CHECK(image_equal({Word::gen(0), Word::gen(1)}, beta_mt)); // fiber generators
}

TEST_SUITE_END();
