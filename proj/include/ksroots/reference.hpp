#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ks {

// One recomputed quantity checked against its tabulated value.
struct ReferenceCheck {
    std::string name;      // e.g. "E7.n_4"
    std::string expected;
    std::string actual;
    bool pass = false;
    double seconds = 0.0;  // wall clock attributed to this check
};

struct ReferenceReport {
    std::vector<ReferenceCheck> checks;
    // machine-readable per-configuration documents, keyed by name
    std::map<std::string, nlohmann::json> documents;
    nlohmann::json replay_ledger;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Recomputes every tabulated quantity for the seven root-system
// configurations and the two E6 extensions: cardinalities, clique and
// anticlique profiles, saturation verdicts, colourability verdicts and
// counts, the E7 block structure, and the staged uniqueness replay.
// on_check, when given, is invoked after each finished check.
ReferenceReport run_reference_suite(const std::function<void(const ReferenceCheck&)>& on_check = {});

}  // namespace ks
