#include <doctest.h>

#include "fibercert/certify.hpp"
#include "fibercert/mapping_torus.hpp"
#include "fibercert/pd.hpp"
#include "fibercert/report.hpp"

using namespace fibercert;

namespace {

const char* kTrefoilPD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
const char* kFig8PD = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";
const char* k52PD = "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]";
const char* k61PD = "[[1,4,2,5],[7,10,8,11],[3,9,4,8],[9,3,10,2],[5,12,6,1],[11,6,12,7]]";

CertReport certify_pd(const char* pd, int max_order, int jobs = 1) {
    WirtingerResult w = wirtinger(parse_pd_json(pd));
    ManifoldMeta meta;
    meta.label = "knot";
    Budget budget;
    budget.max_order = max_order;
    budget.jobs = jobs;
    return certify(w.pres, w.phi, meta, budget);
}

} // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("check_property_m verdict arithmetic") {
    WirtingerResult w = wirtinger(parse_pd_json(kTrefoilPD));
    ManifoldMeta meta;
    TwistedSetup s{w.pres, w.phi, trivial_hom(w.pres), ring_z(), meta};
    AlexPolys polys = *compute_delta(s).polys;
    PropertyMVerdict v = check_property_m(polys, 1, meta, s.alpha);
    CHECK(v.pass);
    CHECK(v.monic);
    CHECK(*v.degree == 2);
    CHECK(v.expected_degree == 2); // 1*1 + (1+0)*1
    CHECK(v.evidence == Evidence::ZExact);
    // failing norm
    CHECK_FALSE(check_property_m(polys, 2, meta, s.alpha).pass);
    CHECK_THROWS_AS(check_property_m(polys, -1, meta, s.alpha), InputError);

    WirtingerResult w52 = wirtinger(parse_pd_json(k52PD));
    TwistedSetup s52{w52.pres, w52.phi, trivial_hom(w52.pres), ring_z(), meta};
    AlexPolys p52 = *compute_delta(s52).polys;
    for (long norm : {0L, 1L, 2L, 3L})
        CHECK_FALSE(check_property_m(p52, norm, meta, s52.alpha).pass); // never monic
}

TEST_CASE("non-fibered knots are caught at the trivial quotient") {
    for (const char* pd : {k52PD, k61PD}) {
        CertReport r = certify_pd(pd, 12);
        CHECK(r.verdict.type == VerdictType::NotFibered);
        REQUIRE(r.verdict.witness.has_value());
        CHECK(r.verdict.witness->hom.target->order == 1);
        CHECK(r.verdict.witness->evidence == Evidence::ZExact);
        CHECK_FALSE(r.verdict.witness->monic);
    }
}

TEST_CASE("fibered knots are consistent with inferred norm 2g-1 = 1") {
    for (const char* pd : {kTrefoilPD, kFig8PD}) {
        CertReport r = certify_pd(pd, 10);
        CHECK(r.verdict.type == VerdictType::ConsistentUpTo);
        CHECK(r.verdict.max_order == 10);
        REQUIRE(r.inferred_norm.has_value());
        CHECK(*r.inferred_norm == 1);
        for (const auto& v : r.ledger)
            CHECK(v.pass);
    }
}

TEST_CASE("mapping tori never certify NotFibered") {
    OracleConfig config;
    config.count = 6;
    config.seed = 1234;
    config.budget.max_order = 8;
    config.budget.jobs = 2;
    OracleSummary s = run_oracle(config);
    CHECK(s.not_fibered_count == 0);
    CHECK(s.consistent_count == 6);
}

TEST_CASE("mapping tori stay consistent at the full order-24 budget") {
    // rank 1 and a rank-2 monodromy with H_1 = Z: cheap even at order 24
    std::vector<FreeAutomorphism> autos;
    autos.push_back(FreeAutomorphism::invert_gen(1, 0));
    autos.push_back(FreeAutomorphism(2, {Word::parse("y"), Word::parse("Xy")},
                                     {Word::parse("xY"), Word::parse("x")}));
    for (const auto& h : autos) {
        MappingTorusResult mt = mapping_torus(h);
        ManifoldMeta meta;
        Budget budget;
        budget.max_order = 24;
        budget.jobs = 2;
        CertReport r = certify(mt.pres, mt.phi, meta, budget);
        CHECK(r.verdict.type == VerdictType::ConsistentUpTo);
        for (const auto& v : r.ledger)
            CHECK(v.pass);
    }
}

TEST_CASE("monotonicity: the witness persists under a larger budget") {
    CertReport small = certify_pd(k52PD, 4);
    CertReport large = certify_pd(k52PD, 16);
    CHECK(small.verdict.type == VerdictType::NotFibered);
    CHECK(large.verdict.type == VerdictType::NotFibered);
    CHECK(small.verdict.witness->hom.target->name == large.verdict.witness->hom.target->name);
}

TEST_CASE("excluded inputs") {
    Presentation solid_torus;
    solid_torus.num_generators = 1;
    ManifoldMeta meta;
    Budget budget;
    CHECK_THROWS_AS(certify(solid_torus, PhiClass({1}), meta, budget), ExcludedInputError);
}

TEST_CASE("budget validation") {
    Budget b;
    b.max_order = 100;
    CHECK_THROWS_AS(b.validate(), InputError);
    b.max_order = 12;
    b.primes = {4};
    CHECK_THROWS_AS(b.validate(), InputError);
}

TEST_CASE("infer_norm consistency and contradiction witness") {
    CertReport r = certify_pd(kTrefoilPD, 8);
    auto x = infer_norm(r.ledger, 0);
    REQUIRE(x.has_value());
    CHECK(*x == 1);
    // synthetic contradiction: |G|=1 deg 2 div 1 vs |G|=2 deg 5 div 1
    std::vector<PropertyMVerdict> synthetic(2);
    Presentation free1;
    free1.num_generators = 1;
    synthetic[0].hom = trivial_hom(free1);
    synthetic[0].degree = 2;
    synthetic[0].div = 1;
    auto z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
    synthetic[1].hom = Hom(z2, free1, {0});
    synthetic[1].degree = 5;
    synthetic[1].div = 1;
    std::pair<std::size_t, std::size_t> conflict;
    CHECK_FALSE(infer_norm(synthetic, 0, &conflict).has_value());
    CHECK(conflict.first == 0);
    CHECK(conflict.second == 1);
}

TEST_CASE("norm hint overrides inference") {
    WirtingerResult w = wirtinger(parse_pd_json(kTrefoilPD));
    ManifoldMeta meta;
    meta.norm_hint = 3; // wrong norm: the trivial quotient must fail the degree law
    Budget budget;
    budget.max_order = 4;
    CertReport r = certify(w.pres, w.phi, meta, budget);
    CHECK(r.verdict.type == VerdictType::NotFibered);
    CHECK(r.verdict.witness->expected_degree == 4); // 1*3 + 1
}

TEST_CASE("determinism: repeated runs serialize byte-identically") {
    CertReport a = certify_pd(kFig8PD, 8, /*jobs=*/1);
    CertReport b = certify_pd(kFig8PD, 8, /*jobs=*/2);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
}

TEST_SUITE_END();
