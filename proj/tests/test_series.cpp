#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qdissect/product.hpp"
#include "qdissect/series.hpp"
#include "qdissect/theta.hpp"

using namespace qdissect;

namespace {

Series poly(std::vector<long> coeffs, Exponent lo, Exponent order)
{
    std::vector<Coeff> c(coeffs.begin(), coeffs.end());
    return Series(lo, order, std::move(c));
}

} // namespace

TEST_CASE("series_add")
{
    const Series one_minus_q = poly({1, -1}, 0, 5);
    const Series q = Series::monomial(1, 1, 5);
    const Series sum = one_minus_q + q;
    CHECK(sum == Series::one(5));
    CHECK(sum.order() == 5);
    CHECK((one_minus_q + Series::zero(5)) == one_minus_q);

    const Series s = poly({1, 2}, 0, 5) + Series::monomial(3, 2, 3);
    CHECK(s.order() == 3);
    CHECK(s == poly({1, 2, 3}, 0, 3));
    CHECK(to_string(s) == "1 + 2*q + 3*q^2 + O(q^4)");
}

TEST_CASE("series_add takes the least lo")
{
    const Series s = Series::monomial(1, -2, 4) + Series::monomial(1, 1, 4);
    CHECK(s.lo() == -2);
    CHECK(s.coeff(-2) == 1);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(-5) == 0);
}

TEST_CASE("series_mul")
{
    const Series geometric = poly(std::vector<long>(11, 1), 0, 10);
    CHECK((poly({1, -1}, 0, 10) * geometric) == Series::one(10));

    const Series x = poly({3, 0, -7, 5}, -1, 6);
    CHECK((x * Series::one(20)) == x);

    const Series y = poly({1, 1}, -1, 8) * Series::monomial(1, 1, 8);
    CHECK(y.lo() == 0);
    CHECK(oracle::terms_of(y) == oracle::Terms{{0, 1}, {1, 1}});
}

TEST_CASE("series_mul order propagation")
{
    const Series x = poly({1, 1}, -2, 3);
    const Series y = poly({1}, 4, 10);
    const Series z = x * y;
    CHECK(z.lo() == 2);
    CHECK(z.order() == std::min(3 + 4, 10 - 2));
}

TEST_CASE("coeff above the order throws")
{
    CHECK_THROWS_AS(Series::one(3).coeff(4), std::out_of_range);
}

TEST_CASE("series_inverse")
{
    const Series inv = series_inverse(poly({1, -1}, 0, 30), 30);
    CHECK(inv == poly(std::vector<long>(31, 1), 0, 30));
    CHECK(series_inverse(Series::one(10), 10) == Series::one(10));

    const Series euler5 = poch_expand(1, 5, 5, 20);
    const Series p = series_inverse(euler5, 20);
    CHECK(support_modulus_check(p, 5));
    CHECK(oracle::terms_of(p) == oracle::Terms{{0, 1}, {5, 1}, {10, 2}, {15, 3}, {20, 5}});
}

TEST_CASE("series_inverse of a Laurent series")
{
    const Series x = poly({-1, 2, 1}, -2, 20);
    const Series y = series_inverse(x, 15);
    CHECK(y.lo() == 2);
    CHECK((x * y).truncate(15) == Series::one(15));
}

TEST_CASE("series_inverse rejects non-unit leading coefficients")
{
    CHECK_THROWS_WITH_AS(series_inverse(poly({2, 1}, 0, 5), 5), "non-invertible series", std::domain_error);
    CHECK_THROWS_AS(series_inverse(Series::zero(5), 5), std::domain_error);
}

TEST_CASE("poch_expand")
{
    CHECK(oracle::terms_of(poch_expand(1, 1, 1, 12)) ==
          oracle::Terms{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}});
    const Series minus = poch_expand(-1, 1, 1, 5);
    CHECK(minus.coeff(0) == 1);
    CHECK(minus.coeff(1) == 1);
    CHECK(oracle::terms_of(poch_expand(1, 1, 5, 7)) == oracle::Terms{{0, 1}, {1, -1}, {6, -1}, {7, 1}});
    for (int sign : {1, -1}) {
        for (std::int64_t a = 1; a <= 6; ++a) {
            for (std::int64_t m = 1; m <= 7; ++m) {
                CHECK(oracle::terms_of(poch_expand(sign, a, m, 60)) == oracle::poch(sign, a, m, 60));
            }
        }
    }
}

TEST_CASE("poch_expand rejects bad parameters")
{
    CHECK_THROWS_WITH_AS(poch_expand(1, 0, 5, 10), "invalid Pochhammer parameters", std::invalid_argument);
    CHECK_THROWS_WITH_AS(poch_expand(1, 3, 0, 10), "invalid Pochhammer parameters", std::invalid_argument);
    CHECK_THROWS_AS(poch_expand(1, -1, 5, 10), std::invalid_argument);
}

TEST_CASE("product_expand")
{
    const ProductSpec a{{PochFactor::pair(1, 1, 1, 5), PochFactor::pair(1, 1, 6, 15, 2)}};
    const Series s = product_expand(a, 100);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == -1);
    CHECK(s.coeff(3) == 0);

    oracle::Terms expected = oracle::mul(oracle::poch(1, 1, 5, 100), oracle::poch(1, 4, 5, 100), 100);
    for (int k = 0; k < 2; ++k) {
        expected = oracle::mul(expected, oracle::poch(1, 6, 15, 100), 100);
        expected = oracle::mul(expected, oracle::poch(1, 9, 15, 100), 100);
    }
    CHECK(oracle::terms_of(s) == expected);
}

TEST_CASE("product_expand of an Euler factor")
{
    const ProductSpec e{{PochFactor::euler(5, 2)}};
    const auto expected = oracle::mul(oracle::poch(1, 5, 5, 80), oracle::poch(1, 5, 5, 80), 80);
    CHECK(oracle::terms_of(product_expand(e, 80)) == expected);
}

TEST_CASE("dissect")
{
    const Series phi = poly({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}, 0, 9);
    CHECK(dissect(phi, 1, 0) == phi);
    CHECK(oracle::terms_of(dissect(phi, 2, 0)) == oracle::Terms{{0, 1}, {4, 2}});
    CHECK(dissect(phi, 2, 0).order() == 9);

    const Series h = product_expand(ProductSpec{{PochFactor::pair(-1, -1, 2, 7, 3)}}, 200);
    Series acc = Series::zero(200);
    for (int r = 0; r < 5; ++r) {
        acc = acc + dissect(h, 5, r);
    }
    CHECK(acc == h);
}

TEST_CASE("dissect works below zero")
{
    const Series x = poly({1, 1, 1, 1, 1}, -3, 1);
    CHECK(oracle::terms_of(dissect(x, 3, 0)) == oracle::Terms{{-3, 1}, {0, 1}});
    CHECK(oracle::terms_of(dissect(x, 3, 1)) == oracle::Terms{{-2, 1}, {1, 1}});
}

TEST_CASE("dissect rejects bad residues")
{
    const Series x = Series::one(5);
    CHECK_THROWS_AS(dissect(x, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(dissect(x, 5, -1), std::invalid_argument);
    CHECK_THROWS_AS(dissect(x, 0, 0), std::invalid_argument);
}

TEST_CASE("support_modulus_check")
{
    CHECK(support_modulus_check(theta_series(phi(15), 500), 5));
    CHECK(support_modulus_check(theta_series(psi(30), 500), 5));
    CHECK_FALSE(support_modulus_check(poly({1, -1}, 0, 5), 5));
    CHECK(support_modulus_check(Series::zero(5), 7));
}

TEST_CASE("equality ignores representation")
{
    const Series x(-3, 10, {0, 0, 0, 1, 2});
    const Series y(0, 4, {1, 2});
    CHECK(x == y);
    CHECK(x.lo() != y.lo());
    CHECK_FALSE(x == Series(0, 4, {1, 3}));
}

TEST_CASE("series_pow")
{
    const Series x = poly({1, -1}, 0, 10);
    CHECK(series_pow(x, 0) == Series::one(10));
    CHECK(oracle::terms_of(series_pow(x, 3)) == oracle::Terms{{0, 1}, {1, -3}, {2, 3}, {3, -1}});
}
