#include "ksroots/reference.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "ksroots/colouring.hpp"
#include "ksroots/e6ext.hpp"
#include "ksroots/io.hpp"
#include "ksroots/roots.hpp"
#include "ksroots/symmetry.hpp"

namespace ks {

namespace {

struct Suite {
    ReferenceReport report;
    const std::function<void(const ReferenceCheck&)>& on_check;
    std::chrono::steady_clock::time_point stamp = std::chrono::steady_clock::now();

    explicit Suite(const std::function<void(const ReferenceCheck&)>& cb) : on_check(cb) {}

    double take_seconds() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - stamp).count();
        stamp = now;
        return s;
    }

    void add(const std::string& name, const std::string& expected, const std::string& actual) {
        ReferenceCheck c{name, expected, actual, expected == actual, take_seconds()};
        report.checks.push_back(c);
        if (on_check) on_check(c);
    }

    void add(const std::string& name, std::uint64_t expected, std::uint64_t actual) {
        add(name, std::to_string(expected), std::to_string(actual));
    }
};

nlohmann::json base_document(const Configuration& c) {
    nlohmann::json doc;
    doc["configuration"] = c.name;
    doc["rays"] = c.size();
    doc["d"] = c.d;
    return doc;
}

nlohmann::json colouring_json(const ColouringResult& res) {
    nlohmann::json j;
    j["status"] = res.sat ? "SAT" : "UNSAT";
    if (res.count) j["count"] = *res.count;
    if (res.witness) j["red"] = *res.witness;
    return j;
}

}  // namespace

ReferenceReport run_reference_suite(const std::function<void(const ReferenceCheck&)>& on_check) {
    Suite suite(on_check);

    const struct {
        RootSystemId id;
        std::uint64_t roots, rays;
        int d;
    } expected_sizes[] = {
        {RootSystemId::G2, 12, 6, 2},   {RootSystemId::F4, 48, 24, 4},  {RootSystemId::E6, 72, 36, 6},
        {RootSystemId::E7, 126, 63, 7}, {RootSystemId::E8, 240, 120, 8}, {RootSystemId::H3, 30, 15, 3},
        {RootSystemId::H4, 120, 60, 4},
    };

    std::map<std::string, Configuration> configs;
    for (const auto& row : expected_sizes) {
        const std::string name{to_string(row.id)};
        const auto roots = generate(row.id);
        Configuration c = projectivize(name, roots);
        suite.add(name + ".roots", row.roots, roots.size());
        suite.add(name + ".rays", row.rays, c.size());
        suite.add(name + ".d", row.d, c.d);
        suite.report.documents[name] = base_document(c);
        configs.emplace(name, std::move(c));
    }

    // ---- E7: clique and anticlique profiles ----
    {
        const Configuration& e7 = configs.at("E7");
        const OrthoGraph g = ortho_graph(e7);
        const auto n = clique_profile(g, 7);
        const std::uint64_t n_expected[] = {945, 4095, 4725, 2835, 945, 135};
        for (int k = 2; k <= 7; ++k) suite.add("E7.n_" + std::to_string(k), n_expected[k - 2], n[k]);
        const auto m = clique_profile(g.complement(), 8);
        const std::uint64_t m_expected[] = {1008, 5376, 10080, 8064, 2016, 288, 0};
        for (int q = 2; q <= 8; ++q) suite.add("E7.m_" + std::to_string(q), m_expected[q - 2], m[q]);

        auto doc = base_document(e7);
        doc["clique_profile"] = std::vector<std::uint64_t>(n.begin() + 2, n.end());
        doc["anticlique_profile"] = std::vector<std::uint64_t>(m.begin() + 2, m.end());
        suite.report.documents["E7"] = std::move(doc);
    }

    // ---- E6: profile, degrees, 4-clique classes ----
    {
        const Configuration& e6 = configs.at("E6");
        const OrthoGraph g = ortho_graph(e6);
        const auto n = clique_profile(g, 6);
        const std::uint64_t n_expected[] = {270, 540, 135, 0, 0};
        for (int k = 2; k <= 6; ++k) suite.add("E6.n_" + std::to_string(k), n_expected[k - 2], n[k]);

        bool degree15 = true;
        for (int v = 0; v < g.n; ++v) degree15 &= g.degree(v) == 15;
        suite.add("E6.orthogonal_degree", "15 for every ray", degree15 ? "15 for every ray" : "mismatch");

        const auto classes = classify_4cliques(e6);
        std::array<int, 3> sizes{0, 0, 0};
        for (const auto& cls : classes) sizes[int(cls.type)]++;
        suite.add("E6.fourclique_classes", "27/54/54",
                  std::to_string(sizes[0]) + "/" + std::to_string(sizes[1]) + "/" + std::to_string(sizes[2]));

        auto doc = base_document(e6);
        doc["clique_profile"] = std::vector<std::uint64_t>(n.begin() + 2, n.end());
        doc["fourclique_classes"] = {{"Q1", sizes[0]}, {"Q2", sizes[1]}, {"Q3", sizes[2]}};
        suite.report.documents["E6"] = std::move(doc);
    }

    // ---- saturation verdicts ----
    for (const char* name : {"F4", "E7", "E8", "H4", "H3"}) {
        const auto rep = saturation(configs.at(name));
        suite.add(std::string("saturated.") + name, "yes", rep.saturated ? "yes" : "no");
        suite.report.documents[name]["saturated"] = rep.saturated;
    }
    {
        const auto rep = saturation(configs.at("E6"));
        suite.add("saturated.E6", "no", rep.saturated ? "yes" : "no");
        std::string lad;
        for (std::size_t idx = 0; idx < rep.ladder.size(); ++idx)
            lad += std::string(idx ? "," : "") + "k" + std::to_string(idx + 1) + "=" + (rep.ladder[idx] ? "T" : "F");
        suite.add("E6.extendability_ladder", "k1=T,k2=T,k3=T,k4=F,k5=T", lad);
        auto& doc = suite.report.documents["E6"];
        doc["saturated"] = rep.saturated;
        if (rep.witness) doc["saturation_witness"] = *rep.witness;
    }

    // ---- colourability of the crystallographic / icosahedral systems ----
    for (const char* name : {"F4", "E7", "E8", "H4"}) {
        const auto res = solve(configs.at(name), SolveMode::Decide);
        suite.add(std::string("colour.") + name, "UNSAT", res.sat ? "SAT" : "UNSAT");
        suite.report.documents[name]["colouring"] = colouring_json(res);
    }
    {
        const auto res = solve(configs.at("H3"), SolveMode::Count);
        suite.add("colour.H3", "SAT", res.sat ? "SAT" : "UNSAT");
        suite.add("H3.goodcolourings", 243, res.count.value_or(0));
        suite.report.documents["H3"]["colouring"] = colouring_json(res);
    }

    // ---- E7 block structure ----
    {
        const Configuration& e7 = configs.at("E7");
        const auto blocks = e7_blocks(e7);
        bool valid = blocks.size() == 9;
        std::set<int> all;
        const OrthoGraph g = ortho_graph(e7);
        for (const auto& b : blocks) {
            valid &= b.size() == 7;
            for (std::size_t i = 0; i < b.size(); ++i) {
                all.insert(b[i]);
                for (std::size_t j = i + 1; j < b.size(); ++j) valid &= g.adj[b[i]].test(b[j]);
            }
        }
        valid &= all.size() == 63;
        suite.add("E7.blocks.partition", "nine disjoint 7-cliques", valid ? "nine disjoint 7-cliques" : "invalid");

        // lambda(0)..lambda(6) are pairwise non-orthogonal, one per Q_0..Q_6
        bool lambdas_ok = true;
        const auto labelled = e7_labelled_rays();
        std::vector<int> lambda_idx;
        for (const auto& [label, ray] : labelled)
            if (label.kind == E7Kind::Lambda) lambda_idx.push_back(e7.index_of(ray));
        for (std::size_t i = 0; i < lambda_idx.size(); ++i)
            for (std::size_t j = i + 1; j < lambda_idx.size(); ++j)
                lambdas_ok &= !g.adj[lambda_idx[i]].test(lambda_idx[j]);
        suite.add("E7.lambda_rays_nonorthogonal", "yes", lambdas_ok ? "yes" : "no");

        const int depth = blockwise_sdr_search(e7, blocks);
        const bool depth_ok = depth >= 7 && depth < 9;
        suite.add("E7.sdr_depth", ">=7 and <9", depth_ok ? ">=7 and <9" : std::to_string(depth));
        suite.report.documents["E7"]["sdr_depth"] = depth;

        const auto partitions = count_clique_partitions(e7);
        suite.add("E7.partition.count", 960, partitions);
        suite.report.documents["E7"]["partitions_into_7cliques"] = partitions;
    }
    {
        const auto partitions = count_clique_partitions(configs.at("H3"));
        suite.add("H3.partition.count", 1, partitions);
        suite.report.documents["H3"]["partitions_into_3cliques"] = partitions;
    }

    // ---- the 198-ray extension ----
    Configuration atilde;
    bool atilde_ok = true;
    try {
        atilde = build_a_tilde();
    } catch (const std::logic_error& e) {
        atilde_ok = false;
    }
    suite.add("Atilde.construction_equality", "orbit union == attachment union",
              atilde_ok ? "orbit union == attachment union" : "mismatch");
    if (atilde_ok) {
        suite.add("Atilde.rays", 198, atilde.size());
        const OrthoGraph g = ortho_graph(atilde);
        const auto n = clique_profile(g, 6);
        const std::uint64_t n_expected[] = {4995, 25920, 32400, 15552, 2592};
        for (int k = 2; k <= 6; ++k) suite.add("Atilde.n_" + std::to_string(k), n_expected[k - 2], n[k]);

        const auto sat = saturation(atilde);
        suite.add("saturated.Atilde", "yes", sat.saturated ? "yes" : "no");

        const auto res = solve(atilde, SolveMode::Count);
        suite.add("Atilde.goodcolourings", 1, res.count.value_or(0));
        std::set<Ray> o4;
        for (const auto& r : orbit(e6_lambda_seeds()[3], wreath_generators())) o4.insert(r);
        std::set<Ray> witness_rays;
        if (res.witness)
            for (int v : *res.witness) witness_rays.insert(atilde.rays[v]);
        suite.add("Atilde.red_set", "orbit of lambda_4 (27 rays)",
                  witness_rays == o4 ? "orbit of lambda_4 (27 rays)" : "different set");

        auto doc = base_document(atilde);
        doc["clique_profile"] = std::vector<std::uint64_t>(n.begin() + 2, n.end());
        doc["saturated"] = sat.saturated;
        doc["colouring"] = colouring_json(res);
        suite.report.documents["E6-tilde"] = std::move(doc);
    }

    // ---- the 558-ray extension ----
    {
        Configuration ahat = build_a_hat();
        suite.add("Ahat.rays", 558, ahat.size());
        const OrthoGraph g = ortho_graph(ahat);
        const auto n = clique_profile(g, 6);
        const std::uint64_t n_expected[] = {18423, 104978, 136620, 66744, 11124};
        for (int k = 2; k <= 6; ++k) suite.add("Ahat.n_" + std::to_string(k), n_expected[k - 2], n[k]);

        const auto sat = saturation(ahat);
        suite.add("saturated.Ahat", "yes", sat.saturated ? "yes" : "no");

        const auto res = solve(ahat, SolveMode::Decide);
        suite.add("colour.Ahat", "UNSAT", res.sat ? "SAT" : "UNSAT");

        auto doc = base_document(ahat);
        doc["clique_profile"] = std::vector<std::uint64_t>(n.begin() + 2, n.end());
        doc["saturated"] = sat.saturated;
        doc["colouring"] = colouring_json(res);
        suite.report.documents["E6-hat"] = std::move(doc);
    }

    // ---- staged uniqueness replay and the derived non-colourability ----
    {
        const HatCertificate cert = replay_a_hat_noncolourability();
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& entry : cert.ledger.entries) {
            suite.add("replay." + entry.step, entry.expected, entry.computed);
            steps.push_back({{"step", entry.step},
                             {"expected", entry.expected},
                             {"computed", entry.computed},
                             {"pass", entry.pass}});
        }
        suite.report.replay_ledger = {{"steps", std::move(steps)}, {"all_pass", cert.ledger.all_pass()}};
        if (!cert.witness_clique.empty())
            suite.report.replay_ledger["violating_6clique"] = cert.witness_clique;
    }

    return suite.report;
}

}  // namespace ks
