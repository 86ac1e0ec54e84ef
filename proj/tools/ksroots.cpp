#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ksroots/colouring.hpp"
#include "ksroots/e6ext.hpp"
#include "ksroots/io.hpp"
#include "ksroots/reference.hpp"
#include "ksroots/roots.hpp"

namespace {

// exit codes: 0 ok, 1 usage, 2 I/O, 3 check mismatch
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitMismatch = 3;

ks::Configuration build_named(const std::string& system) {
    if (system == "E6-tilde") return ks::build_a_tilde();
    if (system == "E6-hat") return ks::build_a_hat();
    const auto id = ks::root_system_from_name(system);
    if (!id) throw CLI::ValidationError("unknown system '" + system + "'");
    return ks::root_configuration(*id);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

int cmd_generate(const std::string& system, const std::string& out_path) {
    const ks::Configuration c = build_named(system);
    write_text(out_path, ks::serialize_configuration(c));
    return kExitOk;
}

int cmd_analyze(const std::string& in_path, std::optional<int> cliques, std::optional<int> anticliques,
                bool do_saturation, const std::string& colour_mode, const std::string& cnf_path,
                const std::string& out_path) {
    const ks::Configuration c = ks::load_configuration(in_path);

    nlohmann::json doc;
    doc["configuration"] = c.name;
    doc["rays"] = c.size();
    doc["d"] = c.d;
    nlohmann::json timings;
    const auto stage = [&](const char* name, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    if (cliques) {
        stage("cliques", [&] {
            const auto rep = ks::count_orthogonal_cliques(c, *cliques);
            doc["cliques"] = {{"k", rep.k}, {"count", rep.count}};
        });
    }
    if (anticliques) {
        stage("anticliques", [&] {
            const auto rep = ks::count_nonorthogonal_cliques(c, *anticliques);
            doc["anticliques"] = {{"q", rep.k}, {"count", rep.count}};
        });
    }
    if (do_saturation) {
        stage("saturation", [&] {
            const auto rep = ks::saturation(c);
            doc["saturated"] = rep.saturated;
            nlohmann::json ladder = nlohmann::json::array();
            for (std::size_t k = 0; k < rep.ladder.size(); ++k)
                ladder.push_back({{"k", k + 1}, {"extends", bool(rep.ladder[k])}});
            doc["extendability_ladder"] = std::move(ladder);
            if (rep.witness) doc["saturation_witness"] = *rep.witness;
        });
    }
    if (!colour_mode.empty()) {
        ks::SolveMode mode;
        if (colour_mode == "decide")
            mode = ks::SolveMode::Decide;
        else if (colour_mode == "count")
            mode = ks::SolveMode::Count;
        else if (colour_mode == "enumerate")
            mode = ks::SolveMode::Enumerate;
        else
            throw CLI::ValidationError("--colour must be decide, count or enumerate");
        stage("colouring", [&] {
            const auto res = ks::solve(c, mode);
            nlohmann::json j;
            j["status"] = res.sat ? "SAT" : "UNSAT";
            if (res.count) j["count"] = *res.count;
            if (res.witness) j["red"] = *res.witness;
            if (res.models) j["models"] = *res.models;
            doc["colouring"] = std::move(j);
        });
    }
    if (!cnf_path.empty()) {
        stage("cnf", [&] { write_text(cnf_path, ks::export_cnf(c)); });
    }
    doc["timings_seconds"] = std::move(timings);
    write_text(out_path, doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_reproduce(const std::string& out_dir) {
    namespace fs = std::filesystem;
    if (!out_dir.empty()) fs::create_directories(out_dir);

    const auto report = ks::run_reference_suite([&](const ks::ReferenceCheck& c) {
        std::cout << c.name << " = " << c.actual << " " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass) std::cout << " (expected " << c.expected << ")";
        std::cout << "\n" << std::flush;
    });

    int failed = 0;
    for (const auto& c : report.checks) failed += !c.pass;
    std::cout << (failed == 0 ? "ALL CHECKS PASS" : "FAILED CHECKS: " + std::to_string(failed)) << " ("
              << report.checks.size() << " total)\n";

    if (!out_dir.empty()) {
        for (const auto& [name, doc] : report.documents) {
            std::ofstream out(fs::path(out_dir) / (name + ".report.json"));
            out << doc.dump(2) << "\n";
        }
        nlohmann::json summary;
        summary["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks)
            summary["checks"].push_back({{"name", c.name},
                                         {"expected", c.expected},
                                         {"actual", c.actual},
                                         {"pass", c.pass},
                                         {"seconds", c.seconds}});
        summary["all_pass"] = report.all_pass();
        std::ofstream out(fs::path(out_dir) / "summary.json");
        out << summary.dump(2) << "\n";
        std::ofstream ledger(fs::path(out_dir) / "replay_ledger.json");
        ledger << report.replay_ledger.dump(2) << "\n";
    }
    return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact projective-ray configurations from exceptional and non-crystallographic root systems"};
    app.require_subcommand(1);

    static const std::vector<std::string> kSystems = {"G2", "F4", "E6", "E7", "E8", "H3", "H4", "E6-tilde", "E6-hat"};

    auto* gen = app.add_subcommand("generate", "generate a configuration and write it as JSON");
    std::string gen_system, gen_out;
    gen->add_option("system", gen_system, "one of G2, F4, E6, E7, E8, H3, H4, E6-tilde, E6-hat")
        ->required()
        ->check(CLI::IsMember(kSystems));
    gen->add_option("-o,--out", gen_out, "output path (default: stdout)");

    auto* ana = app.add_subcommand("analyze", "run analyses on a configuration file");
    std::string ana_in, ana_colour, ana_cnf, ana_out;
    std::optional<int> ana_cliques, ana_anticliques;
    bool ana_saturation = false;
    ana->add_option("file", ana_in, "configuration file")->required();
    ana->add_option("--cliques", ana_cliques, "count orthogonal k-tuples");
    ana->add_option("--anticliques", ana_anticliques, "count pairwise non-orthogonal q-tuples");
    ana->add_flag("--saturation", ana_saturation, "decide saturation and the extendability ladder");
    ana->add_option("--colour", ana_colour, "solve for good bicolourings: decide, count or enumerate");
    ana->add_option("--cnf", ana_cnf, "write the DIMACS reduction to this path");
    ana->add_option("-o,--out", ana_out, "report path (default: stdout)");

    auto* rep = app.add_subcommand("reproduce", "recompute every tabulated result and report pass/fail");
    std::string rep_out = "reproduce-out";
    rep->add_option("-o,--out", rep_out, "directory for report documents (default: reproduce-out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_system, gen_out);
        if (ana->parsed())
            return cmd_analyze(ana_in, ana_cliques, ana_anticliques, ana_saturation, ana_colour, ana_cnf, ana_out);
        if (rep->parsed()) return cmd_reproduce(rep_out);
    } catch (const ks::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
