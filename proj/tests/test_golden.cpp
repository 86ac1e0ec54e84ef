#include <doctest.h>

#include <cmath>
#include <random>

#include "ksroots/golden.hpp"

using namespace ks;

namespace {

GoldenInt random_gi(std::mt19937_64& rng, std::int64_t lo = -20, std::int64_t hi = 20) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return {dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("golden integer multiplication rewrites tau^2 = tau + 1") {
    const GoldenInt tau(0, 1);
    CHECK(tau * tau == GoldenInt(1, 1));
    CHECK(GoldenInt(1, 0) * GoldenInt(7, -3) == GoldenInt(7, -3));
    CHECK(GoldenInt(1, 1) * GoldenInt(1, 1) == GoldenInt(2, 3));
}

TEST_CASE("golden integer ring laws on random triples") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20000; ++iter) {
        const GoldenInt x = random_gi(rng), y = random_gi(rng), z = random_gi(rng);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("exact sign") {
    CHECK(GoldenInt(0, 0).sign() == 0);
    CHECK(GoldenInt(-1, 1).sign() == 1);   // tau - 1 > 0
    CHECK(GoldenInt(2, -1).sign() == 1);   // 2 - tau = (3 - sqrt 5)/2 > 0
    CHECK(GoldenInt(1, -1).sign() == -1);  // 1 - tau < 0
    CHECK(GoldenInt(-5, 3).sign() == -1);  // 3 tau - 5 < 0
    CHECK(GoldenInt(-4, 3).sign() == 1);   // 3 tau - 4 > 0

    const long double tau = (1.0L + std::sqrt(5.0L)) / 2.0L;
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 20000; ++iter) {
        const GoldenInt x = random_gi(rng);
        const long double value = (long double)x.a + (long double)x.b * tau;
        const int expected = value > 0 ? 1 : value < 0 ? -1 : 0;
        CHECK(x.sign() == expected);
    }
}

TEST_CASE("sign is multiplicative") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 20000; ++iter) {
        const GoldenInt x = random_gi(rng), y = random_gi(rng);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(x.sign() * y.sign() == (x * y).sign());
    }
}

TEST_CASE("norm equals product with the conjugate") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 5000; ++iter) {
        const GoldenInt x = random_gi(rng);
        const GoldenInt product = x * x.conj();
        CHECK(product.b == 0);
        CHECK(product.a == x.norm());
        if (!x.is_zero()) CHECK(x.norm() != 0);
    }
}

TEST_CASE("dot product") {
    const GoldenVec u = {{1}, {-1}, {0}, {0}, {0}, {0}, {0}, {0}, {0}};
    const GoldenVec v = {{0}, {0}, {0}, {1}, {-1}, {0}, {0}, {0}, {0}};
    CHECK(dot(u, v).is_zero());
    CHECK(dot(u, u) == GoldenInt(2));

    // (1,0,0) . (1, 1-tau, tau) = 1
    const GoldenVec e1 = {{1}, {0}, {0}};
    const GoldenVec w = {{1}, {1, -1}, {0, 1}};
    CHECK(dot(e1, w) == GoldenInt(1));

    CHECK_THROWS_AS(dot(e1, u), std::invalid_argument);
}

TEST_CASE("dot is symmetric and bilinear") {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 2000; ++iter) {
        GoldenVec u(4), v(4), w(4);
        for (int i = 0; i < 4; ++i) {
            u[i] = random_gi(rng, -5, 5);
            v[i] = random_gi(rng, -5, 5);
            w[i] = random_gi(rng, -5, 5);
        }
        const GoldenInt s = random_gi(rng, -3, 3);
        CHECK(dot(u, v) == dot(v, u));
        GoldenVec sv_plus_w(4);
        for (int i = 0; i < 4; ++i) sv_plus_w[i] = s * v[i] + w[i];
        CHECK(dot(u, sv_plus_w) == s * dot(u, v) + dot(u, w));
    }
}

TEST_CASE("overflow is detected") {
    const std::int64_t big = std::int64_t(1) << 62;
    CHECK_THROWS_AS(GoldenInt(big, 0) + GoldenInt(big, 0), std::overflow_error);
    CHECK_THROWS_AS(GoldenInt(std::int64_t(1) << 40, 0) * GoldenInt(std::int64_t(1) << 40, 0),
                    std::overflow_error);
    CHECK_THROWS_AS(GoldenInt(0, std::int64_t(1) << 40).norm(), std::overflow_error);
}
