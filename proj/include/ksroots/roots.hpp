#pragma once

#include <optional>
#include <string_view>

#include "ksroots/config.hpp"

namespace ks {

enum class RootSystemId { G2, F4, E6, E7, E8, H3, H4 };

std::optional<RootSystemId> root_system_from_name(std::string_view name);
std::string_view to_string(RootSystemId id);

// Exact root sets, closed under negation, in a deterministic sorted order.
// Cardinalities: G2 12, F4 48, E6 72, E7 126, E8 240, H3 30, H4 120.
// E6 lives on the block-sum-zero subspace of R^9 and E7 on the sum-zero
// subspace of R^8; the non-crystallographic systems have entries in Z[tau].
// Individual roots are scaled to primitive-friendly integral vectors, which
// leaves every orthogonality relation (and hence every ray) unchanged.
std::vector<GoldenVec> generate(RootSystemId id);

// One canonical ray per antipodal pair; d is set to the exact rank of the
// span. Throws std::invalid_argument if the set is not closed under negation.
Configuration projectivize(std::string name, const std::vector<GoldenVec>& roots);

// generate + projectivize with the conventional name
Configuration root_configuration(RootSystemId id);

}  // namespace ks
