#pragma once

// Independent oracles for the test suites. Everything here deliberately
// avoids the optimized code paths it is checking: cliques are counted by
// filtering raw combinations, colourings by enumerating all 2^n subsets, and
// the DIMACS cross-check is a self-contained clause-level DPLL.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ksroots/colouring.hpp"
#include "ksroots/config.hpp"

namespace ks::testing {

// k-subsets filtered by pairwise orthogonality, straight from the definition
inline std::uint64_t naive_clique_count(const Configuration& c, int k) {
    const int n = c.size();
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) orth[i][j] = dot(c.rays[i].v, c.rays[j].v).is_zero();

    std::vector<int> idx(k);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            ++count;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int j = 0; j < pos && ok; ++j) ok = orth[idx[j]][v];
            if (!ok) continue;
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// all 2^n red sets checked against the two conditions directly
inline std::uint64_t brute_force_colouring_count(const Configuration& c) {
    const int n = c.size();
    const OrthoGraph g = ortho_graph(c);
    const auto cliques = enumerate_cliques(g, c.d);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adj[i].test(j)) pairs.emplace_back(i, j);

    std::uint64_t count = 0;
    for (std::uint64_t red = 0; red < (std::uint64_t(1) << n); ++red) {
        bool ok = true;
        for (const auto& [i, j] : pairs)
            if ((red >> i & 1) && (red >> j & 1)) {
                ok = false;
                break;
            }
        for (std::size_t ci = 0; ci < cliques.size() && ok; ++ci) {
            int reds = 0;
            for (int v : cliques[ci]) reds += red >> v & 1;
            ok = reds == 1;
        }
        count += ok;
    }
    return count;
}

// sub-configuration on a deterministic sample of rays (parent d kept)
inline Configuration sample_subconfiguration(const Configuration& c, std::size_t size, std::uint64_t seed) {
    std::vector<int> idx(c.size());
    for (int i = 0; i < c.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(std::min(size, idx.size()));
    std::sort(idx.begin(), idx.end());
    Configuration sub;
    sub.name = c.name + "-sub";
    sub.d = c.d;
    for (int i : idx) sub.rays.push_back(c.rays[i]);
    return sub;
}

// ---- minimal DIMACS CNF solver (clause-level DPLL, unit propagation) ----

struct MiniCnf {
    int nvars = 0;
    std::vector<std::vector<int>> clauses;
};

inline MiniCnf parse_dimacs(const std::string& text) {
    MiniCnf cnf;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream header(line);
            std::string p, fmt;
            int nclauses;
            header >> p >> fmt >> cnf.nvars >> nclauses;
            continue;
        }
        std::istringstream body(line);
        std::vector<int> clause;
        int lit;
        while (body >> lit && lit != 0) clause.push_back(lit);
        if (!clause.empty()) cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

// assignment: 0 unset, 1 true, -1 false
inline bool mini_dpll(const MiniCnf& cnf, std::vector<int>& assign) {
    while (true) {
        bool changed = false;
        for (const auto& clause : cnf.clauses) {
            int unassigned = 0, last = 0;
            bool satisfied = false;
            for (int lit : clause) {
                const int v = std::abs(lit);
                const int want = lit > 0 ? 1 : -1;
                if (assign[v] == want) {
                    satisfied = true;
                    break;
                }
                if (assign[v] == 0) {
                    ++unassigned;
                    last = lit;
                }
            }
            if (satisfied) continue;
            if (unassigned == 0) return false;
            if (unassigned == 1) {
                assign[std::abs(last)] = last > 0 ? 1 : -1;
                changed = true;
            }
        }
        if (!changed) break;
    }
    int branch = 0;
    std::vector<int> occurrences(cnf.nvars + 1, 0);
    for (const auto& clause : cnf.clauses) {
        bool satisfied = false;
        for (int lit : clause) {
            const int v = std::abs(lit);
            if (assign[v] == (lit > 0 ? 1 : -1)) {
                satisfied = true;
                break;
            }
        }
        if (satisfied) continue;
        for (int lit : clause)
            if (assign[std::abs(lit)] == 0) ++occurrences[std::abs(lit)];
    }
    for (int v = 1; v <= cnf.nvars; ++v)
        if (assign[v] == 0 && (branch == 0 || occurrences[v] > occurrences[branch])) branch = v;
    if (branch == 0) return true;
    for (int value : {1, -1}) {
        std::vector<int> saved = assign;
        assign[branch] = value;
        if (mini_dpll(cnf, assign)) return true;
        assign = saved;
    }
    return false;
}

inline bool dimacs_satisfiable(const std::string& text) {
    const MiniCnf cnf = parse_dimacs(text);
    std::vector<int> assign(cnf.nvars + 1, 0);
    return mini_dpll(cnf, assign);
}

}  // namespace ks::testing
