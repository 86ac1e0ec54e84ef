#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksroots/bitset.hpp"
#include "ksroots/golden.hpp"

namespace ks {

// Canonical primitive representative of a projective line over Q(tau).
// Two vectors that are proportional over Q(tau) (including negation and
// multiplication by tau) canonicalize to the same Ray, so Ray equality is
// plain component-wise equality.
struct Ray {
    GoldenVec v;

    std::string str() const { return ks::str(v); }

    friend bool operator==(const Ray&, const Ray&) = default;
    friend auto operator<=>(const Ray&, const Ray&) = default;
};

// Divide v by its first nonzero coordinate in Q(tau), then rescale by the
// least positive integer clearing all denominators. The result is the unique
// representative of the ray with positive integral first nonzero coordinate
// and primitive entries. Throws std::invalid_argument on the zero vector.
Ray canonical_ray(const GoldenVec& v);

struct Configuration {
    std::string name;
    int d = 0;               // logical dimension (>= rank of the span)
    std::vector<Ray> rays;   // sorted, distinct

    int size() const { return int(rays.size()); }
    // index of r in rays (binary search), -1 if absent
    int index_of(const Ray& r) const;
};

// Exact rank of the span over Q(tau), by fraction-free elimination.
int rank_of_span(const std::vector<GoldenVec>& vectors);
int rank_of_span(const std::vector<Ray>& rays);

struct OrthoGraph {
    int n = 0;
    std::vector<Bitset> adj;  // adj[i].test(j) iff dot(ray_i, ray_j) == 0, irreflexive

    std::size_t edge_count() const;
    std::size_t degree(int i) const { return adj[i].count(); }
    OrthoGraph complement() const;
};

OrthoGraph ortho_graph(const Configuration& c);

struct CliqueReport {
    int k = 0;
    std::uint64_t count = 0;
    // index tuples in lexicographic order, only when materialized
    std::optional<std::vector<std::vector<int>>> tuples;
};

// counts[s] = number of s-cliques of g for s = 0..max_size (counts[0] = 1)
std::vector<std::uint64_t> clique_profile(const OrthoGraph& g, int max_size);

// all k-cliques of g, in lexicographic order
std::vector<std::vector<int>> enumerate_cliques(const OrthoGraph& g, int k);

// Number of k-subsets of mutually orthogonal rays, 2 <= k <= c.d.
CliqueReport count_orthogonal_cliques(const Configuration& c, int k, bool materialize = false);

// Number of q-subsets of pairwise non-orthogonal rays (cliques of the
// complement graph), q >= 2.
CliqueReport count_nonorthogonal_cliques(const Configuration& c, int q, bool materialize = false);

struct SaturationReport {
    bool saturated = false;
    // ladder[k-1] == true iff every k-clique extends to a (k+1)-clique,
    // for k = 1..d-1. All-true is equivalent to saturation (every clique
    // then extends stepwise to a full d-clique).
    std::vector<bool> ladder;
    // a maximal clique of size < d, present iff not saturated
    std::optional<std::vector<int>> witness;
};

SaturationReport saturation(const Configuration& c);

inline bool is_saturated(const Configuration& c) { return saturation(c).saturated; }
inline std::vector<bool> extendability_ladder(const Configuration& c) { return saturation(c).ladder; }

}  // namespace ks
