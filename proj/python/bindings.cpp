#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ksroots/colouring.hpp"
#include "ksroots/config.hpp"
#include "ksroots/e6ext.hpp"
#include "ksroots/io.hpp"
#include "ksroots/roots.hpp"
#include "ksroots/symmetry.hpp"

namespace py = pybind11;
using namespace ks;

namespace {

Configuration build_named(const std::string& system) {
    if (system == "E6-tilde") return build_a_tilde();
    if (system == "E6-hat") return build_a_hat();
    const auto id = root_system_from_name(system);
    if (!id) throw std::invalid_argument("unknown system '" + system + "'");
    return root_configuration(*id);
}

GoldenVec to_vec(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    GoldenVec v;
    v.reserve(pairs.size());
    for (const auto& [a, b] : pairs) v.emplace_back(a, b);
    return v;
}

std::vector<std::pair<std::int64_t, std::int64_t>> from_vec(const GoldenVec& v) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x.a, x.b);
    return out;
}

SolveMode mode_from_string(const std::string& mode) {
    if (mode == "decide") return SolveMode::Decide;
    if (mode == "count") return SolveMode::Count;
    if (mode == "enumerate") return SolveMode::Enumerate;
    throw std::invalid_argument("mode must be decide, count or enumerate");
}

py::dict result_to_dict(const ColouringResult& res) {
    py::dict d;
    d["status"] = res.sat ? "SAT" : "UNSAT";
    if (res.count) d["count"] = *res.count;
    if (res.witness) d["red"] = *res.witness;
    if (res.models) d["models"] = *res.models;
    return d;
}

py::list ledger_to_list(const ProofLedger& ledger) {
    py::list out;
    for (const auto& e : ledger.entries) {
        py::dict d;
        d["step"] = e.step;
        d["expected"] = e.expected;
        d["computed"] = e.computed;
        d["pass"] = e.pass;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact projective-ray configurations from exceptional and non-crystallographic root systems";

    py::class_<GoldenInt>(m, "GoldenInt")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("a"), py::arg("b") = 0)
        .def_readonly("a", &GoldenInt::a)
        .def_readonly("b", &GoldenInt::b)
        .def("sign", &GoldenInt::sign)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const GoldenInt& x) { return "GoldenInt(" + x.str() + ")"; })
        .def("__str__", &GoldenInt::str);

    py::class_<Ray>(m, "Ray")
        .def_property_readonly("coords", [](const Ray& r) { return from_vec(r.v); })
        .def("__eq__", [](const Ray& a, const Ray& b) { return a == b; })
        .def("__lt__", [](const Ray& a, const Ray& b) { return a < b; })
        .def("__hash__", [](const Ray& r) {
            std::size_t h = 0;
            for (const auto& x : r.v) {
                h = h * 1000003 + std::hash<std::int64_t>{}(x.a);
                h = h * 1000003 + std::hash<std::int64_t>{}(x.b);
            }
            return h;
        })
        .def("__repr__", [](const Ray& r) { return "Ray" + r.str(); });

    py::class_<Configuration>(m, "Configuration")
        .def_readonly("name", &Configuration::name)
        .def_readonly("d", &Configuration::d)
        .def_property_readonly("rays", [](const Configuration& c) { return c.rays; })
        .def("index_of", &Configuration::index_of)
        .def("__len__", &Configuration::size)
        .def("__repr__", [](const Configuration& c) {
            return "Configuration(" + c.name + ", " + std::to_string(c.size()) + " rays, d=" +
                   std::to_string(c.d) + ")";
        });

    m.def("canonical_ray",
          [](const std::vector<std::pair<std::int64_t, std::int64_t>>& coords) {
              return canonical_ray(to_vec(coords));
          },
          py::arg("coords"), "canonical primitive representative of the projective line spanned by coords");

    m.def("generate", &build_named, py::arg("system"),
          "build one of G2, F4, E6, E7, E8, H3, H4, E6-tilde, E6-hat");

    m.def("roots",
          [](const std::string& system) {
              const auto id = root_system_from_name(system);
              if (!id) throw std::invalid_argument("unknown root system '" + system + "'");
              std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
              for (const auto& r : generate(*id)) out.push_back(from_vec(r));
              return out;
          },
          py::arg("system"), "the exact root vectors, closed under negation");

    m.def("orthogonal", [](const Ray& a, const Ray& b) { return dot(a.v, b.v).is_zero(); });

    m.def("clique_count",
          [](const Configuration& c, int k) { return count_orthogonal_cliques(c, k).count; },
          py::arg("config"), py::arg("k"));
    m.def("anticlique_count",
          [](const Configuration& c, int q) { return count_nonorthogonal_cliques(c, q).count; },
          py::arg("config"), py::arg("q"));
    m.def("clique_profile",
          [](const Configuration& c) {
              auto p = clique_profile(ortho_graph(c), c.d);
              return std::vector<std::uint64_t>(p.begin() + (p.size() > 2 ? 2 : p.size()), p.end());
          },
          py::arg("config"), "counts of orthogonal k-tuples for k = 2..d");

    m.def("saturation",
          [](const Configuration& c) {
              const auto rep = saturation(c);
              py::dict d;
              d["saturated"] = rep.saturated;
              d["ladder"] = rep.ladder;
              if (rep.witness) d["witness"] = *rep.witness;
              return d;
          },
          py::arg("config"));

    m.def("verify_colouring", &verify_colouring, py::arg("config"), py::arg("red"));
    m.def("solve",
          [](const Configuration& c, const std::string& mode) { return result_to_dict(solve(c, mode_from_string(mode))); },
          py::arg("config"), py::arg("mode") = "decide");
    m.def("export_cnf", &export_cnf, py::arg("config"));
    m.def("sdr_search_depth", &blockwise_sdr_search, py::arg("config"), py::arg("blocks"));

    m.def("e7_blocks", &e7_blocks, py::arg("config"));
    m.def("partition_count", &count_clique_partitions, py::arg("config"),
          "number of partitions of the ray set into disjoint d-cliques");

    m.def("classify_4cliques",
          [](const Configuration& e6) {
              py::list out;
              for (const auto& cls : classify_4cliques(e6)) {
                  py::dict d;
                  d["type"] = cls.type == FourCliqueType::Q1 ? "Q1" : cls.type == FourCliqueType::Q2 ? "Q2" : "Q3";
                  d["clique"] = cls.clique;
                  out.append(d);
              }
              return out;
          },
          py::arg("e6"));
    m.def("attach_g2", &attach_g2, py::arg("e6"), py::arg("clique"));

    m.def("replay_uniqueness",
          []() {
              const auto rep = replay_uniqueness_proof(build_a_tilde());
              py::dict d;
              d["ledger"] = ledger_to_list(rep.ledger);
              d["all_pass"] = rep.ledger.all_pass();
              d["forced_red"] = rep.forced_red;
              return d;
          },
          "replay the staged uniqueness argument for the 198-ray extension");
    m.def("replay_noncolourability",
          []() {
              const auto cert = replay_a_hat_noncolourability();
              py::dict d;
              d["ledger"] = ledger_to_list(cert.ledger);
              d["all_pass"] = cert.ledger.all_pass();
              d["forced_red"] = cert.forced_red;
              d["witness_clique"] = cert.witness_clique;
              return d;
          },
          "derive non-colourability of the 558-ray extension");

    m.def("dumps", &serialize_configuration, py::arg("config"));
    m.def("loads", &parse_configuration, py::arg("text"));
    m.def("save", [](const Configuration& c, const std::string& path) { save_configuration(c, path); },
          py::arg("config"), py::arg("path"));
    m.def("load", [](const std::string& path) { return load_configuration(path); }, py::arg("path"));
}
