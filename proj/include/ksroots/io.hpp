#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ksroots/config.hpp"

namespace ks {

// Configuration file format: a JSON document
//   { "name": ..., "d": ..., "n": ..., "ring": "Z[tau]",
//     "rays": [ [[a,b], ...], ... ] }
// with one [a,b] pair (the element a + b*tau) per coordinate. Exact,
// human-diffable and language-neutral. Rays are canonicalized and sorted on
// load, so save/load round-trips are identities.

nlohmann::json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

std::string serialize_configuration(const Configuration& c);

// Throws ParseError with a 1-based line number on malformed input.
Configuration parse_configuration(const std::string& text);

void save_configuration(const Configuration& c, const std::filesystem::path& path);
Configuration load_configuration(const std::filesystem::path& path);

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(const std::string& what, int line_) : std::runtime_error(what), line(line_) {}
};

}  // namespace ks
