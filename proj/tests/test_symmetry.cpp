#include <doctest.h>

#include <random>
#include <set>

#include "ksroots/e6ext.hpp"
#include "ksroots/roots.hpp"
#include "ksroots/symmetry.hpp"

using namespace ks;

namespace {

GoldenVec iv9(std::initializer_list<std::int64_t> xs) {
    GoldenVec v;
    for (auto x : xs) v.emplace_back(x, 0);
    REQUIRE(v.size() == 9);
    return v;
}

GroupElement9 random_element(std::mt19937_64& rng) {
    GroupElement9 g;
    std::array<int, 3> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    g.outer = perm;
    for (int b = 0; b < 3; ++b) {
        std::shuffle(perm.begin(), perm.end(), rng);
        g.inner[b] = perm;
        g.signs[b] = rng() % 2 ? 1 : -1;
    }
    return g;
}

Ray random_e6_ray(std::mt19937_64& rng, const Configuration& e6) {
    return e6.rays[rng() % e6.rays.size()];
}

}  // namespace

TEST_CASE("group element laws") {
    std::mt19937_64 rng(41);
    const Configuration e6 = root_configuration(RootSystemId::E6);
    const GroupElement9 id = GroupElement9::identity();
    for (int iter = 0; iter < 3000; ++iter) {
        const GroupElement9 g = random_element(rng), h = random_element(rng);
        const Ray r = random_e6_ray(rng, e6);
        CHECK(act(id, r) == r);
        CHECK(act(compose(g, h), r) == act(g, act(h, r)));
        CHECK(act(g.inverse(), act(g, r)) == r);
        CHECK(compose(g, g.inverse()) == id);
    }
}

TEST_CASE("action preserves orthogonality") {
    std::mt19937_64 rng(43);
    const Configuration e6 = root_configuration(RootSystemId::E6);
    for (int iter = 0; iter < 10000; ++iter) {
        const GroupElement9 g = random_element(rng);
        const Ray r = random_e6_ray(rng, e6), s = random_e6_ray(rng, e6);
        const bool before = dot(r.v, s.v).is_zero();
        const bool after = dot(act(g, r).v, act(g, s).v).is_zero();
        CHECK(before == after);
    }
}

TEST_CASE("explicit actions from the block model") {
    const auto seeds = e6_lambda_seeds();

    // cyclic block shift moves the x-block content to the y-block
    GroupElement9 shift;
    shift.outer = {2, 0, 1};  // target block b reads source block outer[b]
    CHECK(act(shift, seeds[0]).v == iv9({0, 0, 0, 1, -1, 0, 0, 0, 0}));

    // x-block sign flip on lambda_4 lands on the canonical form of
    // (-2,1,1; -2,1,1; 0,0,0)
    GroupElement9 flip;
    flip.signs[0] = -1;
    CHECK(act(flip, seeds[3]) == canonical_ray(iv9({-2, 1, 1, -2, 1, 1, 0, 0, 0})));
}

TEST_CASE("group enumeration sizes") {
    CHECK(enumerate_group(wreath_generators()).size() == 1296);         // |S3 wr S3|
    CHECK(enumerate_group(signed_wreath_generators()).size() == 10368);  // with block sign flips
}

TEST_CASE("orbits of the lambda seeds") {
    const auto gens = wreath_generators();
    const auto seeds = e6_lambda_seeds();
    const std::size_t expected[] = {9, 27, 54, 27, 81, 9};
    std::vector<std::set<Ray>> orbits;
    for (int i = 0; i < 6; ++i) {
        const auto orb = orbit(seeds[i], gens);
        CHECK(orb.size() == expected[i]);
        orbits.emplace_back(orb.begin(), orb.end());
    }
    // pairwise disjoint
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::size_t meet = 0;
            for (const auto& r : orbits[i]) meet += orbits[j].count(r);
            CHECK(meet == 0);
        }

    // O(lambda_1) u O(lambda_2) is the E6 configuration
    const Configuration e6 = root_configuration(RootSystemId::E6);
    std::set<Ray> union12 = orbits[0];
    union12.insert(orbits[1].begin(), orbits[1].end());
    CHECK(union12 == std::set<Ray>(e6.rays.begin(), e6.rays.end()));

    // O(lambda_4): 27 rays, each with exactly three zero coordinates
    for (const auto& r : orbits[3]) {
        int zeros = 0;
        for (const auto& x : r.v) zeros += x.is_zero();
        CHECK(zeros == 3);
    }

    // the five-orbit union has 198 rays, the signed six-orbit union 558
    std::set<Ray> tilde;
    for (int i = 0; i < 5; ++i) tilde.insert(orbits[i].begin(), orbits[i].end());
    CHECK(tilde.size() == 198);
    std::set<Ray> hat;
    for (const auto& seed : e6_lambda_seeds())
        for (const auto& r : orbit(seed, signed_wreath_generators())) hat.insert(r);
    CHECK(hat.size() == 558);
}

TEST_CASE("E7 labelled rays") {
    const auto labelled = e7_labelled_rays();
    CHECK(labelled.size() == 63);

    std::set<Ray> image;
    for (const auto& [label, ray] : labelled) image.insert(ray);
    CHECK(image.size() == 63);

    const Configuration e7 = root_configuration(RootSystemId::E7);
    CHECK(image == std::set<Ray>(e7.rays.begin(), e7.rays.end()));

    // lambda(0) = [1,-1,0,...]; mu(0) has +1 at positions oo,0,1,3
    GoldenVec lambda0(8, GoldenInt(0));
    lambda0[0] = GoldenInt(1);
    lambda0[1] = GoldenInt(-1);
    CHECK(labelled[0].second == canonical_ray(lambda0));

    GoldenVec mu0(8, GoldenInt(-1));
    mu0[0] = mu0[1] = mu0[2] = mu0[4] = GoldenInt(1);
    bool found = false;
    for (const auto& [label, ray] : labelled)
        if (label.kind == E7Kind::Mu && label.k == 0) found = ray == canonical_ray(mu0);
    CHECK(found);

    CHECK(labelled[0].first.str() == "lambda(0)");
}

TEST_CASE("E7 blocks partition the configuration into nine 7-tuples") {
    const Configuration e7 = root_configuration(RootSystemId::E7);
    const auto blocks = e7_blocks(e7);
    REQUIRE(blocks.size() == 9);
    const OrthoGraph g = ortho_graph(e7);
    std::set<int> all;
    for (const auto& block : blocks) {
        CHECK(block.size() == 7);
        for (std::size_t i = 0; i < block.size(); ++i) {
            all.insert(block[i]);
            for (std::size_t j = i + 1; j < block.size(); ++j) CHECK(g.adj[block[i]].test(block[j]));
        }
    }
    CHECK(all.size() == 63);
}

TEST_CASE("partition counts by exact cover") {
    const Configuration h3 = root_configuration(RootSystemId::H3);
    CHECK(count_clique_partitions(h3) == 1);

    // a single 7-tuple partitions itself in exactly one way
    const Configuration e7 = root_configuration(RootSystemId::E7);
    const auto block = e7_blocks(e7).front();
    Configuration single{"one-block", 7, {}};
    for (int v : block) single.rays.push_back(e7.rays[v]);
    std::sort(single.rays.begin(), single.rays.end());
    CHECK(count_clique_partitions(single) == 1);

    CHECK(count_clique_partitions(e7) == 960);
}
