#pragma once

#include <array>
#include <utility>

#include "ksroots/config.hpp"

namespace ks {

// Signed block permutation of R^9 = three blocks of three coordinates:
// target block B is source block outer[B] with coordinates rearranged by
// inner[B] (target index i reads source index inner[B][i]) and multiplied
// by signs[B]. These elements generate the wreath product S3 wr S3 and,
// with the per-block sign flips, its signed extension.
struct GroupElement9 {
    std::array<int, 3> outer{0, 1, 2};
    std::array<std::array<int, 3>, 3> inner{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
    std::array<int, 3> signs{1, 1, 1};

    static GroupElement9 identity() { return {}; }
    GroupElement9 inverse() const;
    GoldenVec apply(const GoldenVec& v) const;  // requires v.size() == 9
    // canonical encoding for set membership
    std::array<int, 15> key() const;

    friend bool operator==(const GroupElement9&, const GroupElement9&) = default;
};

// compose(g, h) applies h first, then g: act(compose(g,h), r) == act(g, act(h, r))
GroupElement9 compose(const GroupElement9& g, const GroupElement9& h);

// Canonical ray of the transformed vector. Preserves orthogonality and the
// block-sum-zero subspace.
Ray act(const GroupElement9& g, const Ray& r);

std::vector<GroupElement9> wreath_generators();         // S3 wr S3 (order 1296)
std::vector<GroupElement9> signed_wreath_generators();  // plus block sign flips (order 10368)

// Closure of the generator set under composition (BFS, deterministic order).
std::vector<GroupElement9> enumerate_group(const std::vector<GroupElement9>& gens);

// BFS closure of seed under generator applications, sorted.
std::vector<Ray> orbit(const Ray& seed, const std::vector<GroupElement9>& gens);

// ---- E7 labelling over the projective line F7 u {oo} ----
//
// Coordinates of R^8 are indexed (a_oo, a_0, ..., a_6); all label arithmetic
// on k and i is mod 7.

enum class E7Kind { Lambda, Mu, Nu, Xi, Eta };

struct E7Label {
    E7Kind kind = E7Kind::Lambda;
    int k = 0;  // element of F7
    int i = 0;  // 1..3, used by Xi and Eta only

    std::string str() const;  // "lambda(0)", "xi(2,1)", ...
};

// The 63 labelled rays in a fixed order (lambda, mu, nu, xi, eta); the image
// set is exactly the E7 ray configuration.
std::vector<std::pair<E7Label, Ray>> e7_labelled_rays();

// Blocks Q0..Q6, Q+, Q- as index lists into e7 (nine disjoint 7-cliques
// partitioning the 63 rays).
std::vector<std::vector<int>> e7_blocks(const Configuration& e7);

// Number of ways to partition the ray set into mutually disjoint d-cliques,
// counted by exact-cover search over all d-cliques.
std::uint64_t count_clique_partitions(const Configuration& c);

}  // namespace ks
