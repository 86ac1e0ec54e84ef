#include "ksroots/colouring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ks {

bool verify_colouring(const Configuration& c, const std::vector<int>& red) {
    const int n = c.size();
    Bitset red_set(std::size_t(std::max(n, 1)));
    for (int v : red) {
        if (v < 0 || v >= n) throw std::out_of_range("verify_colouring: ray index out of range");
        red_set.set(v);
    }
    const OrthoGraph g = ortho_graph(c);
    for (int v = 0; v < n; ++v)
        if (red_set.test(v) && g.adj[v].intersects(red_set)) return false;
    for (const auto& clique : enumerate_cliques(g, c.d)) {
        int reds = 0;
        for (int v : clique) reds += red_set.test(v);
        if (reds != 1) return false;
    }
    return true;
}

namespace {

enum : signed char { UNSET = 0, RED = 1, BLUE = 2 };

struct Solver {
    const OrthoGraph& g;
    int n, d;
    SolveMode mode;
    std::vector<std::vector<int>> cliques;
    std::vector<std::vector<int>> cliques_of;
    std::vector<signed char> val;
    std::vector<int> nred, nblue;
    std::vector<int> trail;
    std::size_t qhead = 0;

    bool sat = false;
    std::uint64_t models = 0;
    std::vector<int> first_witness;
    std::vector<std::vector<int>> all_models;
    bool done = false;

    Solver(const OrthoGraph& g_, int d_, SolveMode mode_, std::vector<std::vector<int>> cliques_)
        : g(g_), n(g_.n), d(d_), mode(mode_), cliques(std::move(cliques_)) {
        cliques_of.resize(n);
        for (std::size_t ci = 0; ci < cliques.size(); ++ci)
            for (int v : cliques[ci]) cliques_of[v].push_back(int(ci));
        val.assign(n, UNSET);
        nred.assign(cliques.size(), 0);
        nblue.assign(cliques.size(), 0);
    }

    bool enqueue(int v, signed char colour) {
        if (val[v] != UNSET) return val[v] == colour;
        val[v] = colour;
        trail.push_back(v);
        for (int ci : cliques_of[v]) (colour == RED ? nred[ci] : nblue[ci])++;
        return true;
    }

    bool propagate() {
        while (qhead < trail.size()) {
            const int v = trail[qhead++];
            if (val[v] == RED) {
                bool conflict = false;
                g.adj[v].for_each([&](int u) {
                    if (!conflict && !enqueue(u, BLUE)) conflict = true;
                });
                if (conflict) return false;
            } else {
                for (int ci : cliques_of[v]) {
                    if (nred[ci] > 0) continue;
                    const int sz = int(cliques[ci].size());
                    if (nblue[ci] == sz) return false;  // all-blue d-clique
                    if (nblue[ci] == sz - 1) {
                        for (int u : cliques[ci])
                            if (val[u] == UNSET) {
                                if (!enqueue(u, RED)) return false;
                                break;
                            }
                    }
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const int v = trail.back();
            trail.pop_back();
            for (int ci : cliques_of[v]) (val[v] == RED ? nred[ci] : nblue[ci])--;
            val[v] = UNSET;
        }
        qhead = mark;
    }

    std::vector<int> current_reds() const {
        std::vector<int> reds;
        for (int v = 0; v < n; ++v)
            if (val[v] == RED) reds.push_back(v);
        return reds;
    }

    // branch variable: unassigned ray in the most unresolved d-cliques
    int pick_branch() const {
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (val[v] != UNSET) continue;
            int score = 0;
            for (int ci : cliques_of[v]) score += nred[ci] == 0;
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

    bool all_cliques_resolved() const {
        for (std::size_t ci = 0; ci < cliques.size(); ++ci)
            if (nred[ci] == 0) return false;
        return true;
    }

    void record_model() {
        ++models;
        if (!sat) {
            sat = true;
            first_witness = current_reds();
        }
        if (mode == SolveMode::Enumerate) all_models.push_back(current_reds());
        if (mode == SolveMode::Decide) done = true;
    }

    void search() {
        if (done) return;
        const std::size_t mark = trail.size();
        if (!propagate()) {
            undo_to(mark);
            return;
        }
        if (mode == SolveMode::Decide && all_cliques_resolved()) {
            // every remaining unassigned ray can be blue
            record_model();
            undo_to(mark);
            return;
        }
        const int v = pick_branch();
        if (v < 0) {
            record_model();
            undo_to(mark);
            return;
        }
        for (signed char colour : {RED, BLUE}) {
            const std::size_t branch_mark = trail.size();
            if (enqueue(v, colour)) search();
            undo_to(branch_mark);
            if (done) break;
        }
        undo_to(mark);
    }
};

}  // namespace

ColouringResult solve(const Configuration& c, SolveMode mode) {
    const OrthoGraph g = ortho_graph(c);
    Solver solver(g, c.d, mode, enumerate_cliques(g, c.d));
    solver.search();

    ColouringResult res;
    res.sat = solver.sat;
    if (solver.sat) res.witness = solver.first_witness;
    if (mode != SolveMode::Decide) res.count = solver.models;
    if (mode == SolveMode::Enumerate) {
        std::sort(solver.all_models.begin(), solver.all_models.end());
        res.models = std::move(solver.all_models);
    }
    return res;
}

std::string export_cnf(const Configuration& c) {
    const int n = c.size();
    const OrthoGraph g = ortho_graph(c);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        g.adj[i].for_each([&](int j) {
            if (j > i) pairs.emplace_back(i, j);
        });
    const auto cliques = n == 0 ? std::vector<std::vector<int>>{} : enumerate_cliques(g, c.d);

    std::ostringstream out;
    out << "c good bicolouring of configuration " << (c.name.empty() ? "(unnamed)" : c.name) << "\n";
    out << "c variable v <-> ray v is red; d = " << c.d << "\n";
    for (int i = 0; i < n; ++i) {
        out << "c ray " << (i + 1) << " = ";
        const auto& v = c.rays[i].v;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) out << " ";
            out << "[" << v[j].a << "," << v[j].b << "]";
        }
        out << "\n";
    }
    out << "p cnf " << n << " " << (pairs.size() + cliques.size()) << "\n";
    for (const auto& [i, j] : pairs) out << "-" << (i + 1) << " -" << (j + 1) << " 0\n";
    for (const auto& clique : cliques) {
        for (int v : clique) out << (v + 1) << " ";
        out << "0\n";
    }
    return out.str();
}

int blockwise_sdr_search(const Configuration& c, const std::vector<std::vector<int>>& blocks) {
    const int n = c.size();
    const OrthoGraph g = ortho_graph(c);

    std::set<int> seen;
    for (const auto& block : blocks) {
        if (int(block.size()) != c.d) throw std::invalid_argument("blockwise_sdr_search: block is not a d-clique");
        for (int v : block) {
            if (v < 0 || v >= n || !seen.insert(v).second)
                throw std::invalid_argument("blockwise_sdr_search: blocks overlap or index out of range");
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.adj[block[i]].test(block[j]))
                    throw std::invalid_argument("blockwise_sdr_search: block is not a d-clique");
    }
    if (int(seen.size()) != n) throw std::invalid_argument("blockwise_sdr_search: blocks do not cover all rays");

    int best = 0;
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, std::size_t b) -> void {
        best = std::max(best, int(b));
        if (b == blocks.size()) return;
        for (int v : blocks[b]) {
            bool ok = true;
            for (int u : chosen)
                if (g.adj[u].test(v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, b + 1);
            chosen.pop_back();
            if (best == int(blocks.size())) return;
        }
    };
    dfs(dfs, 0);
    return best;
}

}  // namespace ks
