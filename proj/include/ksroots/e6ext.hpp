#pragma once

#include <string>
#include <vector>

#include "ksroots/config.hpp"
#include "ksroots/symmetry.hpp"

namespace ks {

// The block model of the 36-ray E6 configuration in R^9 (d = 6).
Configuration build_e6();

// Seed rays lambda_1..lambda_6 whose wreath-product orbits build the E6
// configuration and its extensions.
std::vector<Ray> e6_lambda_seeds();

enum class FourCliqueType { Q1, Q2, Q3 };

struct FourCliqueClass {
    FourCliqueType type = FourCliqueType::Q1;
    std::vector<int> clique;  // 4 ray indices into the E6 configuration
};

// Partition of the 135 orthogonal 4-tuples of E6 into the three orbits of
// S3 wr S3, of sizes 27 (Q1), 54 (Q2) and 54 (Q3); identified by the orbit
// of a fixed representative of each type.
std::vector<FourCliqueClass> classify_4cliques(const Configuration& e6);

// The six rays lying in the plane orthogonal to the given 4-clique at the
// positions of the G2 roots: for the Q1 representative these are
// [xi(1,1,-2); eta(1,1,-2); zeta(1,1,-2)] with (xi,eta,zeta) running over
// the G2 rays, for the Q2 representative [0,0,0; xi,eta,zeta; -xi,-eta,-zeta];
// a general clique is handled by transporting its class representative.
// The result does not depend on the transporting group element.
std::vector<Ray> attach_g2(const Configuration& e6, const std::vector<int>& clique);

// 198 rays: E6 with all G2 attachments. Built both as the orbit union
// O(lambda_1) u ... u O(lambda_5) and as E6 plus the 162 attached rays;
// throws std::logic_error if the two constructions disagree.
Configuration build_a_tilde();

// 558 rays: the orbit union of lambda_1..lambda_6 under the signed wreath
// product (block sign flips included).
Configuration build_a_hat();

struct LedgerEntry {
    std::string step;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ProofLedger {
    std::vector<LedgerEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(std::string step, std::string expected, std::string computed) {
        const bool ok = expected == computed;
        entries.push_back({std::move(step), std::move(expected), std::move(computed), ok});
    }
};

struct UniquenessReplay {
    ProofLedger ledger;
    // the unique forced red set (the 27-ray orbit of lambda_4) when every
    // ledger step passes
    std::vector<Ray> forced_red;
};

// Replays the staged elimination that pins down the unique good bicolouring
// of the 198-ray configuration, asserting each intermediate count:
//  (a) each of the 135 (a_i, b) pairs is orthogonal to exactly 3 4-cliques
//  (b) 45 distinct clique triples
//  (c) each triple arises from exactly 3 pairs
//  (d) each s_p is disjoint from exactly 12 others
//  (e) the fixed nine-set partition of the 27 marked rays is valid
//  (f) exactly 6 selector functions with pairwise disjoint 4-cliques
//  (g) 42 compatible local-colouring pairs per slot pair
//  (h) exactly 5 global tuples per selector
//  (i) candidate red sets of sizes 27,27,21,21,21
//  (j) exactly 2 disjoint selector triples
//  (k) blue-closure elimination leaves exactly one candidate
//  (l) the survivor is the lambda_4 orbit and verifies as a good colouring
UniquenessReplay replay_uniqueness_proof(const Configuration& a_tilde);

struct HatCertificate {
    ProofLedger ledger;
    std::vector<Ray> forced_red;      // 54 rays: survivor orbit + its three reflections
    std::vector<int> witness_clique;  // 6-clique of the 558-ray set meeting forced_red != once
};

// Derives non-colourability of the 558-ray configuration from the forced red
// set: its union with the three block-negation reflections has 54 rays, and
// some 6-clique meets it in a number of rays different from one.
HatCertificate replay_a_hat_noncolourability();

}  // namespace ks
