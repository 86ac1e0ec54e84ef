#include <doctest.h>

#include <random>

#include "ksroots/config.hpp"
#include "ksroots/roots.hpp"
#include "test_support.hpp"

using namespace ks;

namespace {

GoldenVec iv(std::initializer_list<std::int64_t> xs) {
    GoldenVec v;
    for (auto x : xs) v.emplace_back(x, 0);
    return v;
}

}  // namespace

TEST_CASE("canonical ray basics") {
    CHECK(canonical_ray(iv({2, -2, 0, 0})) == canonical_ray(iv({1, -1, 0, 0})));
    CHECK(canonical_ray(iv({1, -1, 0, 0})).v == iv({1, -1, 0, 0}));
    CHECK(canonical_ray(iv({-1, 1, 0, 0})) == canonical_ray(iv({1, -1, 0, 0})));

    // (tau, 0, 0) ~ (1, 0, 0)
    const GoldenVec tau_e1 = {{0, 1}, {0}, {0}};
    CHECK(canonical_ray(tau_e1).v == iv({1, 0, 0}));

    // proportionality cross-check: u_i v_j == u_j v_i for the pair
    const GoldenVec u = canonical_ray(tau_e1).v;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(u[i] * tau_e1[j] == u[j] * tau_e1[i]);

    CHECK_THROWS_AS(canonical_ray(iv({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("canonical ray is idempotent and invariant under Q(tau) scaling") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> entry(-4, 4);
    std::uniform_int_distribution<std::int64_t> scalar(-3, 3);
    int done = 0;
    while (done < 10000) {
        GoldenVec v(9);
        for (auto& x : v) x = GoldenInt(entry(rng), entry(rng));
        if (is_zero(v)) continue;
        GoldenInt s(scalar(rng), scalar(rng));
        if (s.is_zero()) continue;
        GoldenVec sv(9);
        for (int i = 0; i < 9; ++i) sv[i] = s * v[i];
        const Ray a = canonical_ray(v);
        CHECK(canonical_ray(sv) == a);
        CHECK(canonical_ray(a.v) == a);
        CHECK(a.v[0].is_zero() ? true : a.v[0].sign() == 1);
        ++done;
    }
}

TEST_CASE("orthogonality graphs of the paper configurations") {
    const Configuration e6 = root_configuration(RootSystemId::E6);
    const OrthoGraph g6 = ortho_graph(e6);
    CHECK(g6.edge_count() == 270);
    for (int v = 0; v < g6.n; ++v) CHECK(g6.degree(v) == 15);

    const Configuration e7 = root_configuration(RootSystemId::E7);
    CHECK(ortho_graph(e7).edge_count() == 945);

    Configuration single{"single", 3, {canonical_ray(iv({1, 0, 0}))}};
    CHECK(ortho_graph(single).edge_count() == 0);
}

TEST_CASE("clique counter agrees with the naive combinations filter") {
    for (const auto id : {RootSystemId::G2, RootSystemId::F4, RootSystemId::H3}) {
        const Configuration c = root_configuration(id);
        for (int k = 2; k <= c.d; ++k)
            CHECK(count_orthogonal_cliques(c, k).count == testing::naive_clique_count(c, k));
    }
    const Configuration e6 = root_configuration(RootSystemId::E6);
    const Configuration sub = testing::sample_subconfiguration(e6, 20, 99);
    for (int k = 2; k <= sub.d; ++k)
        CHECK(count_orthogonal_cliques(sub, k).count == testing::naive_clique_count(sub, k));
}

TEST_CASE("clique report validation and materialization") {
    const Configuration h3 = root_configuration(RootSystemId::H3);
    CHECK_THROWS_AS(count_orthogonal_cliques(h3, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_orthogonal_cliques(h3, 4), std::invalid_argument);
    CHECK_THROWS_AS(count_nonorthogonal_cliques(h3, 1), std::invalid_argument);

    const auto rep = count_orthogonal_cliques(h3, 3, true);
    REQUIRE(rep.tuples.has_value());
    CHECK(rep.count == rep.tuples->size());
    CHECK(std::is_sorted(rep.tuples->begin(), rep.tuples->end()));
}

TEST_CASE("E6 triples extend uniquely to 4-tuples (sum rule)") {
    const Configuration e6 = root_configuration(RootSystemId::E6);
    const OrthoGraph g = ortho_graph(e6);
    const auto triples = enumerate_cliques(g, 3);
    const auto quads = enumerate_cliques(g, 4);
    CHECK(triples.size() == 540);
    CHECK(quads.size() == 135);

    std::size_t incidences = 0;
    for (const auto& quad : quads)
        for (const auto& triple : triples) {
            bool contained = true;
            for (int v : triple)
                contained &= std::find(quad.begin(), quad.end(), v) != quad.end();
            incidences += contained;
        }
    CHECK(incidences == 540);  // 135 * 4; every triple lies in exactly one 4-tuple
}

TEST_CASE("saturation verdicts and the extendability ladder") {
    const Configuration h3 = root_configuration(RootSystemId::H3);
    const auto sat_h3 = saturation(h3);
    CHECK(sat_h3.saturated);
    CHECK_FALSE(sat_h3.witness.has_value());

    const Configuration g2 = root_configuration(RootSystemId::G2);
    CHECK(saturation(g2).saturated);

    const Configuration e6 = root_configuration(RootSystemId::E6);
    const auto sat_e6 = saturation(e6);
    CHECK_FALSE(sat_e6.saturated);
    REQUIRE(sat_e6.witness.has_value());
    CHECK(sat_e6.witness->size() == 4);  // a maximal non-extendable 4-tuple
    REQUIRE(sat_e6.ladder.size() == 5);
    CHECK(sat_e6.ladder[0]);
    CHECK(sat_e6.ladder[1]);
    CHECK(sat_e6.ladder[2]);
    CHECK_FALSE(sat_e6.ladder[3]);
    CHECK(sat_e6.ladder[4]);  // vacuous: no 5-tuples

    const Configuration e7 = root_configuration(RootSystemId::E7);
    const auto sat_e7 = saturation(e7);
    CHECK(sat_e7.saturated);
    for (bool level : sat_e7.ladder) CHECK(level);

    // saturated iff ladder all-true, on every base system
    for (const auto id : {RootSystemId::G2, RootSystemId::F4, RootSystemId::E6, RootSystemId::E7,
                          RootSystemId::H3, RootSystemId::H4}) {
        const auto rep = saturation(root_configuration(id));
        bool all = true;
        for (bool level : rep.ladder) all &= level;
        CHECK(rep.saturated == all);
    }
}

TEST_CASE("empty and single-clique configurations are saturated") {
    Configuration empty{"empty", 3, {}};
    CHECK(saturation(empty).saturated);

    const Configuration h3 = root_configuration(RootSystemId::H3);
    const auto triple = enumerate_cliques(ortho_graph(h3), 3).front();
    Configuration one_clique{"triple", 3, {}};
    for (int v : triple) one_clique.rays.push_back(h3.rays[v]);
    std::sort(one_clique.rays.begin(), one_clique.rays.end());
    const auto rep = saturation(one_clique);
    CHECK(rep.saturated);
    for (bool level : rep.ladder) CHECK(level);
}

TEST_CASE("rank computation") {
    CHECK(rank_of_span(std::vector<GoldenVec>{}) == 0);
    CHECK(rank_of_span({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0})}) == 2);
    // tau-dependent rank: (1, tau) and (tau, tau^2) are proportional
    const GoldenVec a = {{1}, {0, 1}};
    const GoldenVec b = {{0, 1}, {1, 1}};
    CHECK(rank_of_span({a, b}) == 1);
    const GoldenVec c = {{1}, {1}};
    CHECK(rank_of_span({a, c}) == 2);
}
