#include "ksroots/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ks {

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
    int line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

}  // namespace

nlohmann::json configuration_to_json(const Configuration& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["d"] = c.d;
    j["n"] = c.rays.empty() ? 0 : int(c.rays[0].v.size());
    j["ring"] = "Z[tau]";
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& r : c.rays) {
        nlohmann::json ray = nlohmann::json::array();
        for (const auto& x : r.v) ray.push_back({x.a, x.b});
        rays.push_back(std::move(ray));
    }
    j["rays"] = std::move(rays);
    return j;
}

Configuration configuration_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("configuration: expected a JSON object");
    for (const char* key : {"name", "d", "n", "rays"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("configuration: missing key '") + key + "'");

    Configuration c;
    c.name = j.at("name").get<std::string>();
    c.d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    if (c.d < 1) throw std::invalid_argument("configuration: d must be positive");
    if (n < 1) throw std::invalid_argument("configuration: coordinate length must be positive");

    std::set<Ray> rays;
    for (const auto& entry : j.at("rays")) {
        if (!entry.is_array() || int(entry.size()) != n)
            throw std::invalid_argument("configuration: ray record with wrong coordinate count");
        GoldenVec v;
        v.reserve(n);
        for (const auto& pair : entry) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("configuration: coordinate must be an [a,b] pair");
            v.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
        }
        if (!rays.insert(canonical_ray(v)).second)
            throw std::invalid_argument("configuration: duplicate ray");
    }
    c.rays.assign(rays.begin(), rays.end());
    if (rank_of_span(c.rays) > c.d)
        throw std::invalid_argument("configuration: rank of span exceeds declared dimension");
    return c;
}

std::string serialize_configuration(const Configuration& c) {
    return configuration_to_json(c).dump(2) + "\n";
}

Configuration parse_configuration(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), line_of_offset(text, e.byte));
    }
    try {
        return configuration_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

void save_configuration(const Configuration& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << serialize_configuration(c);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Configuration load_configuration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_configuration(buf.str());
}

}  // namespace ks
