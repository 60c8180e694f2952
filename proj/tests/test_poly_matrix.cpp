#include <doctest.h>

#include <numeric>

#include "test_helpers.hpp"

using namespace fibercert;
using fibercert::testing::det_cofactor;
using fibercert::testing::random_poly;

namespace {

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Ring ring,
                         long max_span, long coeff_bound, long offset_range = 0) {
    PolyMatrix m(rows, cols, ring);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = random_poly(rng, ring, max_span, coeff_bound, offset_range);
    return m;
}

} // namespace

TEST_SUITE_BEGIN("poly_matrix");

TEST_CASE("determinant basics") {
    Ring z = ring_z();
    PolyMatrix m(2, 2, z);
    m.at(0, 0) = LaurentPoly::t(z);
    m.at(0, 1) = LaurentPoly::one(z);
    m.at(1, 0) = LaurentPoly::one(z);
    m.at(1, 1) = LaurentPoly::t(z);
    // [[t,1],[1,t]] -> t^2 - 1
    CHECK(det_fraction_free(m) ==
          LaurentPoly::from_coeffs(z, 0, {mpz_class(-1), mpz_class(0), mpz_class(1)}));
    for (std::size_t n : {0u, 1u, 3u, 5u})
        CHECK(det_fraction_free(PolyMatrix::identity(n, z)) == LaurentPoly::one(z));
    PolyMatrix rect(2, 3, z);
    CHECK_THROWS_AS(det_fraction_free(rect), std::invalid_argument);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(43);
    int cases = 0;
    while (cases < 1000) {
        std::uniform_int_distribution<std::size_t> nd(1, 4);
        std::size_t n = nd(rng);
        PolyMatrix m = random_matrix(rng, n, n, ring_z(), 3, 5, 2);
        CHECK(det_fraction_free(m) == det_cofactor(m));
        ++cases;
    }
    // and over F_p
    for (int i = 0; i < 200; ++i) {
        PolyMatrix m = random_matrix(rng, 3, 3, ring_fp(5), 3, 4, 2);
        CHECK(det_fraction_free(m) == det_cofactor(m));
    }
}

TEST_CASE("reduction mod p commutes with det") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 60; ++i) {
        PolyMatrix m = random_matrix(rng, 3, 3, ring_z(), 2, 6, 1);
        for (long p : {2L, 3L, 5L})
            CHECK(det_fraction_free(m).reduced_mod(p) == det_fraction_free(m.reduced_mod(p)));
    }
}

TEST_CASE("determinant is multiplicative (spot)") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 50; ++i) {
        PolyMatrix a = random_matrix(rng, 3, 3, ring_z(), 2, 3);
        PolyMatrix b = random_matrix(rng, 3, 3, ring_z(), 2, 3);
        CHECK(det_fraction_free(a * b) == det_fraction_free(a) * det_fraction_free(b));
    }
}

TEST_CASE("smith diagonal examples") {
    Ring f5 = ring_fp(5);
    PolyMatrix d(2, 2, f5);
    d.at(0, 0) = LaurentPoly::from_coeffs(f5, 0, {mpz_class(-1), mpz_class(1)});
    d.at(1, 1) = d.at(0, 0);
    auto factors = smith_diagonal(d);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == LaurentPoly::from_coeffs(f5, 0, {mpz_class(4), mpz_class(1)}));
    CHECK(factors[1] == factors[0]);

    // invertible over F_p[t] (unit determinant): all invariant factors 1
    PolyMatrix u(2, 2, f5);
    u.at(0, 0) = LaurentPoly::one(f5);
    u.at(0, 1) = LaurentPoly::t(f5);
    u.at(1, 1) = LaurentPoly::one(f5);
    auto uf = smith_diagonal(u);
    CHECK(uf[0] == LaurentPoly::one(f5));
    CHECK(uf[1] == LaurentPoly::one(f5));

    CHECK_THROWS_AS(smith_diagonal(PolyMatrix(2, 2, ring_z())), InputError);
}

TEST_CASE("smith invariant factors divide in a chain and match the minor gcd") {
    std::mt19937_64 rng(53);
    Ring f5 = ring_fp(5);
    for (int rep = 0; rep < 25; ++rep) {
        PolyMatrix m = random_matrix(rng, 4, 6, f5, 2, 4, 1);
        auto factors = smith_diagonal(m);
        REQUIRE(factors.size() == 4);
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i + 1].is_zero())
                continue;
            REQUIRE_FALSE(factors[i].is_zero());
            CHECK(divmod_fp(factors[i + 1], factors[i]).remainder.is_zero());
        }
        // gcd of all 4x4 minors equals the product of the invariant factors
        LaurentPoly minor_gcd = LaurentPoly::zero(f5);
        for (std::size_t skip1 = 0; skip1 < 6; ++skip1)
            for (std::size_t skip2 = skip1 + 1; skip2 < 6; ++skip2) {
                PolyMatrix sq(4, 4, f5);
                std::size_t jj = 0;
                for (std::size_t j = 0; j < 6; ++j) {
                    if (j == skip1 || j == skip2)
                        continue;
                    for (std::size_t i = 0; i < 4; ++i)
                        sq.at(i, jj) = m.at(i, j);
                    ++jj;
                }
                minor_gcd = gcd_univariate(minor_gcd, det_cofactor(sq));
            }
        LaurentPoly product = LaurentPoly::one(f5);
        for (const auto& f : factors)
            product = product * f;
        CHECK(product.normalized() == minor_gcd.normalized());
    }
}

TEST_SUITE_END();
