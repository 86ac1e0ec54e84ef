#include "ksroots/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ks {

GroupElement9 GroupElement9::inverse() const {
    GroupElement9 r;
    for (int b = 0; b < 3; ++b) {
        r.outer[outer[b]] = b;
        r.signs[outer[b]] = signs[b];
        for (int i = 0; i < 3; ++i) r.inner[outer[b]][inner[b][i]] = i;
    }
    return r;
}

GoldenVec GroupElement9::apply(const GoldenVec& v) const {
    if (v.size() != 9) throw std::invalid_argument("GroupElement9: vector dimension must be 9");
    GoldenVec w(9);
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 3; ++i) {
            GoldenInt x = v[3 * outer[b] + inner[b][i]];
            w[3 * b + i] = signs[b] < 0 ? -x : x;
        }
    return w;
}

std::array<int, 15> GroupElement9::key() const {
    std::array<int, 15> k{};
    for (int b = 0; b < 3; ++b) {
        k[b] = outer[b];
        k[3 + b] = signs[b];
        for (int i = 0; i < 3; ++i) k[6 + 3 * b + i] = inner[b][i];
    }
    return k;
}

GroupElement9 compose(const GroupElement9& g, const GroupElement9& h) {
    GroupElement9 r;
    for (int b = 0; b < 3; ++b) {
        const int mid = g.outer[b];
        r.outer[b] = h.outer[mid];
        r.signs[b] = g.signs[b] * h.signs[mid];
        for (int i = 0; i < 3; ++i) r.inner[b][i] = h.inner[mid][g.inner[b][i]];
    }
    return r;
}

Ray act(const GroupElement9& g, const Ray& r) { return canonical_ray(g.apply(r.v)); }

namespace {

GroupElement9 outer_perm(std::array<int, 3> outer) {
    GroupElement9 g;
    g.outer = outer;
    return g;
}

GroupElement9 inner_perm(int block, std::array<int, 3> p) {
    GroupElement9 g;
    g.inner[block] = p;
    return g;
}

GroupElement9 block_flip(int block) {
    GroupElement9 g;
    g.signs[block] = -1;
    return g;
}

}  // namespace

std::vector<GroupElement9> wreath_generators() {
    // Outer S3 conjugates the inner generators into every block.
    return {outer_perm({1, 2, 0}), outer_perm({1, 0, 2}), inner_perm(0, {1, 2, 0}), inner_perm(0, {1, 0, 2})};
}

std::vector<GroupElement9> signed_wreath_generators() {
    auto gens = wreath_generators();
    gens.push_back(block_flip(0));
    return gens;
}

std::vector<GroupElement9> enumerate_group(const std::vector<GroupElement9>& gens) {
    std::map<std::array<int, 15>, GroupElement9> seen;
    std::vector<GroupElement9> queue{GroupElement9::identity()};
    seen.emplace(queue[0].key(), queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const GroupElement9 cur = queue[head];
        for (const auto& g : gens) {
            GroupElement9 next = compose(g, cur);
            if (seen.emplace(next.key(), next).second) queue.push_back(next);
        }
    }
    std::vector<GroupElement9> out;
    out.reserve(seen.size());
    for (auto& [k, g] : seen) out.push_back(g);
    return out;
}

std::vector<Ray> orbit(const Ray& seed, const std::vector<GroupElement9>& gens) {
    std::set<Ray> seen{seed};
    std::vector<Ray> queue{seed};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Ray cur = queue[head];
        for (const auto& g : gens) {
            Ray next = act(g, cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

std::string E7Label::str() const {
    switch (kind) {
        case E7Kind::Lambda: return "lambda(" + std::to_string(k) + ")";
        case E7Kind::Mu: return "mu(" + std::to_string(k) + ")";
        case E7Kind::Nu: return "nu(" + std::to_string(k) + ")";
        case E7Kind::Xi: return "xi(" + std::to_string(k) + "," + std::to_string(i) + ")";
        case E7Kind::Eta: return "eta(" + std::to_string(k) + "," + std::to_string(i) + ")";
    }
    return "?";
}

namespace {

constexpr int kInf = 0;  // coordinate position of a_oo

int pos(int k) { return 1 + ((k % 7) + 7) % 7; }  // position of a_k

// vector with +1 on `plus` positions and -1 elsewhere
GoldenVec half_type(const std::vector<int>& plus) {
    GoldenVec v(8, GoldenInt(-1));
    for (int p : plus) v[p] = GoldenInt(1);
    return v;
}

}  // namespace

std::vector<std::pair<E7Label, Ray>> e7_labelled_rays() {
    std::vector<std::pair<E7Label, Ray>> out;
    for (int k = 0; k < 7; ++k) {
        GoldenVec v(8, GoldenInt(0));
        v[kInf] = GoldenInt(1);
        v[pos(k)] = GoldenInt(-1);
        out.push_back({{E7Kind::Lambda, k, 0}, canonical_ray(v)});
    }
    for (int k = 0; k < 7; ++k)
        out.push_back({{E7Kind::Mu, k, 0}, canonical_ray(half_type({kInf, pos(k), pos(k + 1), pos(k + 3)}))});
    for (int k = 0; k < 7; ++k)
        out.push_back({{E7Kind::Nu, k, 0}, canonical_ray(half_type({kInf, pos(k), pos(k - 1), pos(k - 3)}))});
    for (int k = 0; k < 7; ++k)
        for (int i = 1; i <= 3; ++i) {
            GoldenVec v(8, GoldenInt(0));
            v[pos(k + i)] = GoldenInt(1);
            v[pos(k - i)] = GoldenInt(-1);
            out.push_back({{E7Kind::Xi, k, i}, canonical_ray(v)});
        }
    for (int k = 0; k < 7; ++k)
        for (int i = 1; i <= 3; ++i)
            out.push_back({{E7Kind::Eta, k, i}, canonical_ray(half_type({kInf, pos(k), pos(k + i), pos(k - i)}))});
    return out;
}

std::vector<std::vector<int>> e7_blocks(const Configuration& e7) {
    const auto labelled = e7_labelled_rays();
    std::map<std::string, int> index;  // label string -> configuration index
    for (const auto& [label, ray] : labelled) {
        const int idx = e7.index_of(ray);
        if (idx < 0) throw std::invalid_argument("e7_blocks: configuration is not the 63-ray E7 set");
        index[label.str()] = idx;
    }
    std::vector<std::vector<int>> blocks;
    for (int k = 0; k < 7; ++k) {
        std::vector<int> q{index[E7Label{E7Kind::Lambda, k, 0}.str()]};
        for (int i = 1; i <= 3; ++i) q.push_back(index[E7Label{E7Kind::Xi, k, i}.str()]);
        for (int i = 1; i <= 3; ++i) q.push_back(index[E7Label{E7Kind::Eta, k, i}.str()]);
        blocks.push_back(std::move(q));
    }
    std::vector<int> qplus, qminus;
    for (int k = 0; k < 7; ++k) qplus.push_back(index[E7Label{E7Kind::Mu, k, 0}.str()]);
    for (int k = 0; k < 7; ++k) qminus.push_back(index[E7Label{E7Kind::Nu, k, 0}.str()]);
    blocks.push_back(std::move(qplus));
    blocks.push_back(std::move(qminus));
    return blocks;
}

namespace {

// Exact cover: count the ways to cover `uncovered` with disjoint cliques,
// always branching on the uncovered vertex with the fewest available cliques.
std::uint64_t cover_count(const Bitset& uncovered, const std::vector<Bitset>& cliques,
                          const std::vector<std::vector<int>>& cliques_of) {
    if (uncovered.none()) return 1;
    int best = -1;
    std::size_t best_choices = SIZE_MAX;
    uncovered.for_each([&](int v) {
        std::size_t choices = 0;
        for (int ci : cliques_of[v])
            if (cliques[ci].subset_of(uncovered)) ++choices;
        if (choices < best_choices) {
            best_choices = choices;
            best = v;
        }
    });
    if (best_choices == 0) return 0;
    std::uint64_t total = 0;
    for (int ci : cliques_of[best]) {
        if (!cliques[ci].subset_of(uncovered)) continue;
        Bitset rest = uncovered;
        cliques[ci].for_each([&](int v) { rest.reset(v); });
        total += cover_count(rest, cliques, cliques_of);
    }
    return total;
}

}  // namespace

std::uint64_t count_clique_partitions(const Configuration& c) {
    const OrthoGraph g = ortho_graph(c);
    const auto tuples = enumerate_cliques(g, c.d);
    std::vector<Bitset> cliques;
    cliques.reserve(tuples.size());
    std::vector<std::vector<int>> cliques_of(c.size());
    for (std::size_t ci = 0; ci < tuples.size(); ++ci) {
        Bitset b(c.size());
        for (int v : tuples[ci]) {
            b.set(v);
            cliques_of[v].push_back(int(ci));
        }
        cliques.push_back(std::move(b));
    }
    Bitset all(c.size());
    for (int v = 0; v < c.size(); ++v) all.set(v);
    return cover_count(all, cliques, cliques_of);
}

}  // namespace ks
