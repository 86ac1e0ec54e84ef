#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksroots/config.hpp"

namespace ks {

// A (bi)colouring is identified with its red set; every other ray is blue.
// A good colouring gives every d-clique exactly one red member and never
// makes two orthogonal rays both red.

enum class SolveMode { Decide, Count, Enumerate };

struct ColouringResult {
    bool sat = false;
    std::optional<std::vector<int>> witness;                // sorted red indices (SAT only)
    std::optional<std::uint64_t> count;                     // Count / Enumerate modes
    std::optional<std::vector<std::vector<int>>> models;    // Enumerate mode, lexicographic
};

// Checks the two conditions directly against all d-cliques and all
// orthogonal pairs. Throws std::out_of_range for bad indices.
bool verify_colouring(const Configuration& c, const std::vector<int>& red);

// Complete backtracking search with unit propagation: a red ray forces all
// orthogonal rays blue, a d-clique with d-1 blues and no red forces its last
// ray red, an all-blue d-clique backtracks. Branches on the ray lying in the
// most unresolved d-cliques.
ColouringResult solve(const Configuration& c, SolveMode mode);

// DIMACS CNF with one variable per ray: a binary clause per orthogonal pair
// and a d-ary covering clause per d-clique, plus comment lines mapping
// variables to canonical coordinates.
std::string export_cnf(const Configuration& c);

// Depth-first search for pairwise non-orthogonal representatives, one per
// block, in block order. Returns the largest number of consecutive blocks
// that admit such representatives. The blocks must be disjoint d-cliques
// covering every ray; a full-depth result would contradict non-colourability
// when the blocks partition the configuration.
int blockwise_sdr_search(const Configuration& c, const std::vector<std::vector<int>>& blocks);

}  // namespace ks
