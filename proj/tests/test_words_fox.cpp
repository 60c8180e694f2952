#include <doctest.h>

#include "fibercert/fox.hpp"
#include "fibercert/presentation.hpp"
#include "test_helpers.hpp"

using namespace fibercert;

TEST_SUITE_BEGIN("words");

TEST_CASE("free reduction is canonical") {
    CHECK(Word::parse("xX").empty());
    CHECK(Word::parse("xyYX").empty());
    CHECK(Word::parse("xyX").str() == "xyX");
    // reduction cascades through the middle
    CHECK(Word::parse("xyYzZX").empty());
}

TEST_CASE("parse rejects bad characters with a column") {
    CHECK_THROWS_AS(Word::parse("xy3"), ParseError);
    try {
        Word::parse("xy 3z");
    } catch (const ParseError& e) {
        CHECK(e.column == 4);
    }
}

TEST_CASE("inverse reverses and flips; w * w^-1 is empty") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Word w = testing::random_word(rng, 4, 12);
        CHECK((w * w.inverse()).empty());
        CHECK((w.inverse() * w).empty());
        CHECK(w.inverse().inverse() == w);
    }
    CHECK(Word::parse("xyX").inverse().str() == "xYX");
}

TEST_CASE("phi_of_word") {
    PhiClass phi({1, 1, 1});
    CHECK(phi(Word::parse("xyX")) == 1);
    CHECK(phi(Word()) == 0);
    PhiClass phi01({0, 1});
    // mapping-torus relator t x t^-1 h(x)^-1 with phi(x)=0, phi(t)=1
    CHECK(phi01(Word::parse("yxYX")) == 0);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Word u = testing::random_word(rng, 2, 8), v = testing::random_word(rng, 2, 8);
        CHECK(phi01(u * v) == phi01(u) + phi01(v));
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("fox");

TEST_CASE("fox axioms") {
    Word x = Word::parse("x"), y = Word::parse("y");
    CHECK(fox_derivative(x, 0) == FoxElement::one());
    CHECK(fox_derivative(y, 0).is_zero());
    // d(x^-1)/dx = -x^-1
    CHECK(fox_derivative(x.inverse(), 0) == FoxElement::of_word(x.inverse(), -1));
    // d(xy)/dx = 1
    CHECK(fox_derivative(Word::parse("xy"), 0) == FoxElement::one());
    // d(xyx)/dx = 1 + xy
    FoxElement expect = FoxElement::one() + FoxElement::of_word(Word::parse("xy"));
    CHECK(fox_derivative(Word::parse("xyx"), 0) == expect);
}

TEST_CASE("product rule on random words") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Word u = testing::random_word(rng, 3, 6), v = testing::random_word(rng, 3, 6);
        for (int j = 0; j < 3; ++j) {
            FoxElement lhs = fox_derivative(u * v, j);
            FoxElement rhs = fox_derivative(u, j) + FoxElement::of_word(u) * fox_derivative(v, j);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fundamental identity: sum_j dr/dx_j (x_j - 1) = r - 1") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        Word r = testing::random_word(rng, 3, 12);
        FoxElement sum;
        for (int j = 0; j < 3; ++j) {
            FoxElement dj = fox_derivative(r, j);
            FoxElement xj_minus_1 = FoxElement::of_word(Word::gen(j)) - FoxElement::one();
            sum += dj * xj_minus_1;
        }
        FoxElement expect = FoxElement::of_word(r) - FoxElement::one();
        CHECK(sum == expect);
    }
}

TEST_SUITE_END();
