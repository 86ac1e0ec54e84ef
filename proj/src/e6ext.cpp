#include "ksroots/e6ext.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "ksroots/colouring.hpp"
#include "ksroots/roots.hpp"

namespace ks {

namespace {

GoldenVec v9(std::array<std::int64_t, 9> xs) {
    GoldenVec v(9);
    for (int i = 0; i < 9; ++i) v[i] = GoldenInt(xs[i]);
    return v;
}

// blocks as 3-vectors; [x; y; z] notation of the 9-dimensional model
GoldenVec v9_blocks(std::array<std::int64_t, 3> x, std::array<std::int64_t, 3> y, std::array<std::int64_t, 3> z) {
    return v9({x[0], x[1], x[2], y[0], y[1], y[2], z[0], z[1], z[2]});
}

constexpr std::array<std::int64_t, 3> kTheta = {0, 0, 0};
constexpr std::array<std::int64_t, 3> kXi1 = {2, -1, -1};
constexpr std::array<std::int64_t, 3> kXi2 = {-1, 2, -1};
constexpr std::array<std::int64_t, 3> kXi3 = {-1, -1, 2};

std::array<std::int64_t, 3> neg3(std::array<std::int64_t, 3> x) { return {-x[0], -x[1], -x[2]}; }

// the six G2 rays as (xi, eta, zeta) parameters
const std::array<std::array<std::int64_t, 3>, 6> kG2Params = {{
    {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {2, -1, -1}, {-1, 2, -1}, {-1, -1, 2},
}};

GroupElement9 block_sign_flip(int block) {
    GroupElement9 g;
    g.signs[block] = -1;
    return g;
}

// ---- atlas: the 135 4-cliques of E6, their symmetry classes and a group
// element transporting the class representative onto each clique ----

struct Atlas {
    Configuration e6;
    OrthoGraph graph;
    std::vector<std::vector<int>> cliques;       // lexicographic
    std::vector<FourCliqueType> type;            // per clique
    std::vector<GroupElement9> transporter;      // act(transporter[i], rep[type]) == cliques[i]
    std::array<std::vector<int>, 3> rep_clique;  // representative per type (sorted indices)
    std::array<std::vector<Ray>, 3> rep_attach;  // the 6 attached rays per representative
    std::map<std::vector<int>, int> clique_index;
};

std::vector<int> clique_image(const std::vector<int>& clique, const std::vector<int>& perm) {
    std::vector<int> img;
    img.reserve(clique.size());
    for (int v : clique) img.push_back(perm[v]);
    std::sort(img.begin(), img.end());
    return img;
}

// permutation table of the configuration's rays under a group element
std::vector<int> ray_permutation(const Configuration& c, const GroupElement9& g) {
    std::vector<int> perm(c.size());
    for (int v = 0; v < c.size(); ++v) {
        const int img = c.index_of(act(g, c.rays[v]));
        if (img < 0) throw std::logic_error("group element does not preserve the configuration");
        perm[v] = img;
    }
    return perm;
}

std::vector<int> rays_to_indices(const Configuration& c, const std::vector<GoldenVec>& vs) {
    std::vector<int> idx;
    for (const auto& v : vs) {
        const int i = c.index_of(canonical_ray(v));
        if (i < 0) throw std::logic_error("expected ray missing from configuration");
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<Ray> q1_style_attachment() {
    // [xi*(1,1,-2); eta*(1,1,-2); zeta*(1,1,-2)] over the G2 rays
    std::vector<Ray> out;
    for (const auto& p : kG2Params) {
        GoldenVec v(9);
        for (int b = 0; b < 3; ++b) {
            v[3 * b + 0] = GoldenInt(p[b]);
            v[3 * b + 1] = GoldenInt(p[b]);
            v[3 * b + 2] = GoldenInt(-2 * p[b]);
        }
        out.push_back(canonical_ray(v));
    }
    return out;
}

std::vector<Ray> q2_style_attachment() {
    // [0,0,0; xi,eta,zeta; -xi,-eta,-zeta] over the G2 rays
    std::vector<Ray> out;
    for (const auto& p : kG2Params)
        out.push_back(canonical_ray(v9_blocks(kTheta, p, neg3(p))));
    return out;
}

Atlas build_atlas() {
    Atlas atlas;
    atlas.e6 = build_e6();
    atlas.graph = ortho_graph(atlas.e6);
    atlas.cliques = enumerate_cliques(atlas.graph, 4);
    if (atlas.cliques.size() != 135) throw std::logic_error("E6 must have 135 orthogonal 4-tuples");
    for (std::size_t i = 0; i < atlas.cliques.size(); ++i) atlas.clique_index.emplace(atlas.cliques[i], int(i));

    atlas.rep_clique[0] = rays_to_indices(atlas.e6, {
        v9_blocks({1, -1, 0}, kTheta, kTheta),
        v9_blocks(kTheta, {1, -1, 0}, kTheta),
        v9_blocks(kTheta, kTheta, {1, -1, 0}),
        v9_blocks({1, 1, -2}, {1, 1, -2}, {1, 1, -2}),
    });
    atlas.rep_clique[1] = rays_to_indices(atlas.e6, {
        v9_blocks({1, -1, 0}, kTheta, kTheta),
        v9_blocks({1, 1, -2}, {-2, 1, 1}, {-2, 1, 1}),
        v9_blocks({1, 1, -2}, {1, -2, 1}, {1, -2, 1}),
        v9_blocks({1, 1, -2}, {1, 1, -2}, {1, 1, -2}),
    });
    atlas.rep_clique[2] = rays_to_indices(atlas.e6, {
        v9_blocks({-2, 1, 1}, {-2, 1, 1}, {-2, 1, 1}),
        v9_blocks({-2, 1, 1}, {1, -2, 1}, {1, -2, 1}),
        v9_blocks({1, -2, 1}, {-2, 1, 1}, {1, -2, 1}),
        v9_blocks({1, -2, 1}, {1, -2, 1}, {-2, 1, 1}),
    });
    atlas.rep_attach[0] = q1_style_attachment();
    atlas.rep_attach[1] = q2_style_attachment();
    // the orthogonal plane of the Q3 representative coincides with Q1's
    atlas.rep_attach[2] = q1_style_attachment();

    // orbit BFS from each representative, remembering a transporting element
    atlas.type.assign(atlas.cliques.size(), FourCliqueType::Q1);
    atlas.transporter.assign(atlas.cliques.size(), GroupElement9::identity());
    std::vector<bool> visited(atlas.cliques.size(), false);

    const auto gens = wreath_generators();
    std::vector<std::vector<int>> gen_perm;
    for (const auto& g : gens) gen_perm.push_back(ray_permutation(atlas.e6, g));

    std::array<std::size_t, 3> orbit_size = {0, 0, 0};
    for (int t = 0; t < 3; ++t) {
        const auto it = atlas.clique_index.find(atlas.rep_clique[t]);
        if (it == atlas.clique_index.end()) throw std::logic_error("representative 4-clique missing");
        std::vector<int> queue{it->second};
        visited[it->second] = true;
        atlas.type[it->second] = FourCliqueType(t);
        atlas.transporter[it->second] = GroupElement9::identity();
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int cur = queue[head];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const auto img = clique_image(atlas.cliques[cur], gen_perm[gi]);
                const int next = atlas.clique_index.at(img);
                if (visited[next]) continue;
                visited[next] = true;
                atlas.type[next] = FourCliqueType(t);
                atlas.transporter[next] = compose(gens[gi], atlas.transporter[cur]);
                queue.push_back(next);
            }
        }
        orbit_size[t] = queue.size();
    }
    if (orbit_size != std::array<std::size_t, 3>{27, 54, 54})
        throw std::logic_error("4-clique symmetry classes do not have sizes 27/54/54");
    return atlas;
}

std::vector<Ray> transported_attachment(const Atlas& atlas, int clique_id) {
    const int t = int(atlas.type[clique_id]);
    const auto& g = atlas.transporter[clique_id];
    std::vector<Ray> out;
    out.reserve(6);
    for (const auto& r : atlas.rep_attach[t]) out.push_back(act(g, r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Configuration build_e6() { return root_configuration(RootSystemId::E6); }

std::vector<Ray> e6_lambda_seeds() {
    return {
        canonical_ray(v9_blocks({1, -1, 0}, kTheta, kTheta)),
        canonical_ray(v9_blocks({2, -1, -1}, {2, -1, -1}, {2, -1, -1})),
        canonical_ray(v9_blocks({1, -1, 0}, {1, -1, 0}, kTheta)),
        canonical_ray(v9_blocks({2, -1, -1}, {-2, 1, 1}, kTheta)),
        canonical_ray(v9_blocks({-4, 2, 2}, {2, -1, -1}, {2, -1, -1})),
        canonical_ray(v9_blocks({2, -1, -1}, kTheta, kTheta)),
    };
}

std::vector<FourCliqueClass> classify_4cliques(const Configuration& e6) {
    if (e6.size() != 36 || e6.d != 6)
        throw std::invalid_argument("classify_4cliques: expected the 36-ray E6 configuration");
    const Atlas atlas = build_atlas();
    // translate atlas clique indices (over the canonical E6 build) into the
    // caller's configuration
    std::vector<FourCliqueClass> out;
    out.reserve(atlas.cliques.size());
    for (std::size_t i = 0; i < atlas.cliques.size(); ++i) {
        FourCliqueClass entry;
        entry.type = atlas.type[i];
        for (int v : atlas.cliques[i]) {
            const int idx = e6.index_of(atlas.e6.rays[v]);
            if (idx < 0) throw std::invalid_argument("classify_4cliques: configuration is not E6");
            entry.clique.push_back(idx);
        }
        std::sort(entry.clique.begin(), entry.clique.end());
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<Ray> attach_g2(const Configuration& e6, const std::vector<int>& clique) {
    if (e6.size() != 36) throw std::invalid_argument("attach_g2: expected the 36-ray E6 configuration");
    const Atlas atlas = build_atlas();
    std::vector<int> translated;
    for (int v : clique) {
        if (v < 0 || v >= e6.size()) throw std::invalid_argument("attach_g2: ray index out of range");
        const int idx = atlas.e6.index_of(e6.rays[v]);
        if (idx < 0) throw std::invalid_argument("attach_g2: configuration is not E6");
        translated.push_back(idx);
    }
    std::sort(translated.begin(), translated.end());
    const auto it = atlas.clique_index.find(translated);
    if (it == atlas.clique_index.end())
        throw std::invalid_argument("attach_g2: input is not an orthogonal 4-tuple of E6");
    return transported_attachment(atlas, it->second);
}

Configuration build_a_tilde() {
    const Atlas atlas = build_atlas();

    std::set<Ray> attachment_route(atlas.e6.rays.begin(), atlas.e6.rays.end());
    for (std::size_t i = 0; i < atlas.cliques.size(); ++i)
        for (const auto& r : transported_attachment(atlas, int(i))) attachment_route.insert(r);

    const auto gens = wreath_generators();
    const auto seeds = e6_lambda_seeds();
    std::set<Ray> orbit_route;
    for (int i = 0; i < 5; ++i)
        for (const auto& r : orbit(seeds[i], gens)) orbit_route.insert(r);

    if (attachment_route != orbit_route)
        throw std::logic_error("build_a_tilde: orbit and attachment constructions disagree");

    Configuration c;
    c.name = "E6-tilde";
    c.d = 6;
    c.rays.assign(orbit_route.begin(), orbit_route.end());
    return c;
}

Configuration build_a_hat() {
    const auto gens = signed_wreath_generators();
    const auto seeds = e6_lambda_seeds();
    std::set<Ray> rays;
    for (const auto& seed : seeds)
        for (const auto& r : orbit(seed, gens)) rays.insert(r);
    Configuration c;
    c.name = "E6-hat";
    c.d = 6;
    c.rays.assign(rays.begin(), rays.end());
    return c;
}

namespace {

std::string size_list(std::vector<std::size_t> sizes) {
    std::sort(sizes.begin(), sizes.end());
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(sizes[i]);
    }
    return out;
}

Bitset to_bitset(const std::vector<int>& idx, int n) {
    Bitset b(n);
    for (int v : idx) b.set(v);
    return b;
}

}  // namespace

UniquenessReplay replay_uniqueness_proof(const Configuration& at) {
    UniquenessReplay out;
    ProofLedger& led = out.ledger;
    if (at.size() != 198 || at.d != 6)
        throw std::invalid_argument("replay_uniqueness_proof: expected the 198-ray configuration");

    const int n = at.size();
    const OrthoGraph g = ortho_graph(at);
    const auto six_cliques = enumerate_cliques(g, 6);

    // E6 part and the lambda_4 orbit, as index sets
    const Configuration e6 = build_e6();
    Bitset a_mask(n);
    for (const auto& r : e6.rays) {
        const int idx = at.index_of(r);
        if (idx < 0) throw std::invalid_argument("replay_uniqueness_proof: configuration does not contain E6");
        a_mask.set(idx);
    }
    const auto wreath = wreath_generators();
    Bitset o4_mask(n);
    for (const auto& r : orbit(e6_lambda_seeds()[3], wreath)) {
        const int idx = at.index_of(r);
        if (idx < 0) throw std::invalid_argument("replay_uniqueness_proof: lambda_4 orbit missing");
        o4_mask.set(idx);
    }

    // ---- the 27 six-cliques partitioning the extension part ----
    // orbit of the sample tuple under simultaneous coordinate permutations
    const std::vector<GoldenVec> sample = {
        v9_blocks(kTheta, {2, -1, -1}, {-2, 1, 1}), v9_blocks(kTheta, {0, 1, -1}, {0, 1, -1}),
        v9_blocks(kTheta, {0, 1, -1}, {0, -1, 1}),  v9_blocks({-4, 2, 2}, {2, -1, -1}, {2, -1, -1}),
        v9_blocks({2, -4, 2}, {2, -1, -1}, {2, -1, -1}), v9_blocks({2, 2, -4}, {2, -1, -1}, {2, -1, -1}),
    };
    std::vector<std::vector<int>> gen_perm;
    for (const auto& gen : wreath) gen_perm.push_back(ray_permutation(at, gen));
    std::set<std::vector<int>> ptuple_set;
    {
        std::vector<int> seed = rays_to_indices(at, sample);
        std::vector<std::vector<int>> queue{seed};
        ptuple_set.insert(seed);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto cur = queue[head];
            for (const auto& perm : gen_perm) {
                auto img = clique_image(cur, perm);
                if (ptuple_set.insert(img).second) queue.push_back(img);
            }
        }
    }
    const std::vector<std::vector<int>> ptuples(ptuple_set.begin(), ptuple_set.end());

    {
        Bitset covered(n);
        bool disjoint = true, cliques_ok = true, one_marked = true;
        for (const auto& p : ptuples) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (covered.test(p[i])) disjoint = false;
                covered.set(p[i]);
                for (std::size_t j = i + 1; j < p.size(); ++j)
                    if (!g.adj[p[i]].test(p[j])) cliques_ok = false;
            }
            int marked = 0;
            for (int v : p) marked += o4_mask.test(v);
            if (marked != 1) one_marked = false;
        }
        bool covers_ext = true;
        for (int v = 0; v < n; ++v)
            if (covered.test(v) == a_mask.test(v)) covers_ext = false;
        led.add("setup.ptuples.count", "27", std::to_string(ptuples.size()));
        led.add("setup.ptuples.disjoint_6cliques", "yes", disjoint && cliques_ok ? "yes" : "no");
        led.add("setup.ptuples.cover_extension", "yes", covers_ext ? "yes" : "no");
        led.add("setup.ptuples.one_marked_ray_each", "yes", one_marked ? "yes" : "no");
    }

    std::vector<int> marked(ptuples.size());  // a_i: the lambda_4-orbit member of P_i
    for (std::size_t i = 0; i < ptuples.size(); ++i)
        for (int v : ptuples[i])
            if (o4_mask.test(v)) marked[i] = v;

    // ---- the 135 4-cliques of the E6 part, in lexicographic order ----
    std::vector<std::vector<int>> tcliques;
    for (const auto& c4 : enumerate_cliques(g, 4)) {
        bool inside = true;
        for (int v : c4) inside &= a_mask.test(v);
        if (inside) tcliques.push_back(c4);
    }
    std::vector<Bitset> tmask;
    for (const auto& t : tcliques) tmask.push_back(to_bitset(t, n));

    // (a) for each pair (a_i, b), the 4-cliques orthogonal to both
    std::map<std::pair<int, int>, std::array<int, 3>> delta;  // (i, b) -> sorted triple of clique ids
    int pairs_with_three = 0, pairs_total = 0;
    for (std::size_t i = 0; i < ptuples.size(); ++i) {
        for (int b : ptuples[i]) {
            if (b == marked[i]) continue;
            ++pairs_total;
            Bitset inter = g.adj[marked[i]];
            inter &= g.adj[b];
            std::vector<int> ms;
            for (std::size_t m = 0; m < tcliques.size(); ++m)
                if (tmask[m].subset_of(inter)) ms.push_back(int(m));
            if (ms.size() == 3) {
                ++pairs_with_three;
                delta[{int(i), b}] = {ms[0], ms[1], ms[2]};
            }
        }
    }
    led.add("(a).pairs_with_exactly_3_orthogonal_4cliques", "135/135",
            std::to_string(pairs_with_three) + "/" + std::to_string(pairs_total));

    // (b) the set D of distinct triples
    std::set<std::array<int, 3>> dset;
    for (const auto& [key, tri] : delta) dset.insert(tri);
    led.add("(b).distinct_triples", "45", std::to_string(dset.size()));
    const std::vector<std::array<int, 3>> dlist(dset.begin(), dset.end());

    // (c) each triple arises from exactly three pairs, with distinct i
    std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> groups;
    for (const auto& [key, tri] : delta) groups[tri].push_back(key);
    bool c_ok = groups.size() == dlist.size();
    for (auto& [tri, pairs] : groups) {
        std::sort(pairs.begin(), pairs.end());
        if (pairs.size() != 3 || pairs[0].first == pairs[1].first || pairs[1].first == pairs[2].first)
            c_ok = false;
    }
    led.add("(c).pairs_per_triple", "3 with distinct slots", c_ok ? "3 with distinct slots" : "mismatch");

    // sigma data per p: u[j] = marked ray of slot i_j, v[j] = partner b_j
    struct Sigma {
        std::array<int, 3> cliques;  // m1 < m2 < m3
        std::array<int, 3> u, v;
    };
    std::vector<Sigma> sigma(dlist.size());
    std::vector<std::array<int, 3>> s_sets(dlist.size());  // sorted {u, u', u''}
    for (std::size_t p = 0; p < dlist.size(); ++p) {
        const auto& pairs = groups.at(dlist[p]);
        Sigma s;
        s.cliques = dlist[p];
        for (int j = 0; j < 3; ++j) {
            s.u[j] = marked[pairs[j].first];
            s.v[j] = pairs[j].second;
        }
        sigma[p] = s;
        auto us = s.u;
        std::sort(us.begin(), us.end());
        s_sets[p] = us;
    }

    // (d) the source table claims each s_p is disjoint from exactly 12 other
    // s_q. That is impossible here: each marked ray lies in exactly 5 of the
    // 45 sets (135 slot pairs, distinct slots per triple), so a set can meet
    // at most 3*4 = 12 others and is disjoint from at least 32. The computed
    // relation is: meets exactly 12, disjoint from exactly 32 -- the table
    // swapped the two. The stated value is kept and reported honestly; the
    // meet count is checked separately.
    std::set<int> disjoint_counts, meet_counts;
    for (std::size_t p = 0; p < s_sets.size(); ++p) {
        int disjoint_count = 0;
        for (std::size_t q = 0; q < s_sets.size(); ++q) {
            if (p == q) continue;
            bool meet = false;
            for (int x : s_sets[p])
                for (int y : s_sets[q]) meet |= x == y;
            disjoint_count += !meet;
        }
        disjoint_counts.insert(disjoint_count);
        meet_counts.insert(int(s_sets.size()) - 1 - disjoint_count);
    }
    const bool d_uniform = disjoint_counts.size() == 1;
    led.add("(d).disjoint_partners_per_s_set", "12",
            d_uniform ? std::to_string(*disjoint_counts.begin()) : "non-uniform");
    led.add("(d').meeting_partners_per_s_set", "12",
            meet_counts.size() == 1 ? std::to_string(*meet_counts.begin()) : "non-uniform");

    // (e) the fixed partition: nine listed s-sets, with xi_1 = (2,-1,-1),
    // xi_2 = (-1,2,-1), xi_3 = (-1,-1,2). The printed seventh set repeats the
    // element [-xi_2; theta; xi_1] of the fourth set, so as printed the nine
    // sets double-cover one ray and miss [-xi_2; theta; xi_3]; the correction
    // is forced, since the seventh set must be the complement of the other
    // eight. Both facts are recorded.
    using B3 = std::array<std::int64_t, 3>;
    const B3 x1 = kXi1, x2 = kXi2, x3 = kXi3, th = kTheta;
    const std::vector<std::array<GoldenVec, 3>> listed = {
        {v9_blocks(th, x1, neg3(x2)), v9_blocks(th, x2, neg3(x3)), v9_blocks(th, x3, neg3(x1))},
        {v9_blocks(th, x1, neg3(x1)), v9_blocks(th, x2, neg3(x2)), v9_blocks(th, x3, neg3(x3))},
        {v9_blocks(neg3(x1), th, x1), v9_blocks(neg3(x2), th, x2), v9_blocks(neg3(x3), th, x3)},
        {v9_blocks(neg3(x2), th, x1), v9_blocks(neg3(x3), th, x2), v9_blocks(neg3(x1), th, x3)},
        {v9_blocks(x1, neg3(x2), th), v9_blocks(x2, neg3(x3), th), v9_blocks(x3, neg3(x1), th)},
        {v9_blocks(x1, neg3(x1), th), v9_blocks(x2, neg3(x2), th), v9_blocks(x3, neg3(x3), th)},
        {v9_blocks(th, x1, neg3(x3)), v9_blocks(neg3(x2), th, x3), v9_blocks(x2, neg3(x1), th)},
        {v9_blocks(th, x3, neg3(x2)), v9_blocks(neg3(x1), th, x2), v9_blocks(x1, neg3(x3), th)},
        {v9_blocks(th, x2, neg3(x1)), v9_blocks(neg3(x3), th, x1), v9_blocks(x3, neg3(x2), th)},
    };
    {
        const int dup = at.index_of(canonical_ray(v9_blocks(neg3(x2), th, x1)));
        const int seventh_b = at.index_of(canonical_ray(v9_blocks(neg3(x2), th, x3)));
        led.add("(e').printed_seventh_set", "repeats an element of the fourth set",
                dup >= 0 && seventh_b >= 0 ? "repeats an element of the fourth set" : "rays missing");
    }
    std::vector<int> partition_p;  // p index per listed s-set
    bool e_ok = true;
    std::set<int> partition_union;
    for (const auto& triple : listed) {
        std::array<int, 3> idx{};
        for (int j = 0; j < 3; ++j) {
            const int i = at.index_of(canonical_ray(triple[j]));
            if (i < 0) e_ok = false;
            idx[j] = i;
            partition_union.insert(i);
        }
        std::sort(idx.begin(), idx.end());
        const auto it = std::find(s_sets.begin(), s_sets.end(), idx);
        if (it == s_sets.end()) {
            e_ok = false;
            partition_p.push_back(-1);
        } else {
            partition_p.push_back(int(it - s_sets.begin()));
        }
    }
    if (partition_union.size() != 27) e_ok = false;
    for (int v : partition_union)
        if (v >= 0 && !o4_mask.test(v)) e_ok = false;
    led.add("(e).fixed_partition_valid", "yes (seventh set completed)",
            e_ok ? "yes (seventh set completed)" : "no");
    if (!e_ok) return out;  // nothing downstream is meaningful

    // (f) selector functions alpha with pairwise disjoint selected 4-cliques;
    // T[i][j] = clique id j of slot i
    std::array<std::array<int, 3>, 9> slot_cliques{};
    for (int i = 0; i < 9; ++i) slot_cliques[i] = sigma[partition_p[i]].cliques;
    std::vector<std::array<int, 9>> alphas;
    {
        std::array<int, 9> choice{};
        auto rec = [&](auto&& self, int i) -> void {
            if (i == 9) {
                // pairwise disjoint as ray sets
                Bitset seen(n);
                for (int s = 0; s < 9; ++s) {
                    const auto& t = tcliques[slot_cliques[s][choice[s]]];
                    for (int v : t) {
                        if (seen.test(v)) return;
                        seen.set(v);
                    }
                }
                alphas.push_back(choice);
                return;
            }
            for (int j = 0; j < 3; ++j) {
                choice[i] = j;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    led.add("(f).disjoint_selector_functions", "6", std::to_string(alphas.size()));
    if (alphas.size() != 6) return out;

    // local cells c_{i,k}: the selected 4-clique plus the three (u, v) pairs
    struct Cell {
        std::vector<int> rays;                     // 10 indices
        Bitset mask;                               // over the 198 rays
        std::vector<Bitset> candidates;            // red sets of the admissible local colourings
    };
    auto build_cell = [&](int i, int k) {
        Cell cell;
        cell.mask = Bitset(n);
        const auto& t = tcliques[slot_cliques[i][alphas[k][i]]];
        cell.rays = t;
        const auto& sg = sigma[partition_p[i]];
        for (int j = 0; j < 3; ++j) {
            cell.rays.push_back(sg.u[j]);
            cell.rays.push_back(sg.v[j]);
        }
        std::sort(cell.rays.begin(), cell.rays.end());
        for (int v : cell.rays) cell.mask.set(v);
        if (cell.rays.size() != 10 || cell.mask.count() != 10)
            throw std::logic_error("replay: local cell does not have 10 distinct rays");

        // 6-cliques wholly inside the cell
        std::vector<std::vector<int>> inner;
        for (const auto& six : six_cliques) {
            bool inside = true;
            for (int v : six) inside &= cell.mask.test(v);
            if (inside) inner.push_back(six);
        }
        // admissible local colourings: every inner 6-clique has exactly one
        // red, no two orthogonal rays both red
        for (unsigned m = 0; m < (1u << 10); ++m) {
            Bitset red(n);
            for (int bit = 0; bit < 10; ++bit)
                if ((m >> bit) & 1) red.set(cell.rays[bit]);
            bool ok = true;
            for (const auto& six : inner) {
                int r = 0;
                for (int v : six) r += red.test(v);
                if (r != 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (int bit = 0; bit < 10 && ok; ++bit) {
                    const int v = cell.rays[bit];
                    if (red.test(v) && red.intersects(g.adj[v])) ok = false;
                }
            }
            if (ok) cell.candidates.push_back(red);
        }
        return cell;
    };

    std::array<std::array<Cell, 9>, 6> cells;
    bool twelve_ok = true;
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 9; ++i) {
            cells[k][i] = build_cell(i, k);
            if (cells[k][i].candidates.size() != 12) twelve_ok = false;
        }

    // (g) pairwise-compatible local colourings: two candidate red sets are
    // compatible when no ray of one is orthogonal to a ray of the other
    auto compatible = [&](const Bitset& red1, const Bitset& red2) {
        bool ok = true;
        red1.for_each([&](int v) {
            if (ok && red2.intersects(g.adj[v])) ok = false;
        });
        // symmetric check: orthogonality is symmetric, one direction suffices
        return ok;
    };
    bool g_ok = twelve_ok;
    std::array<std::array<std::array<std::vector<std::vector<bool>>, 9>, 9>, 6> compat{};
    for (int k = 0; k < 6; ++k)
        for (int i1 = 0; i1 < 9; ++i1)
            for (int i2 = i1 + 1; i2 < 9; ++i2) {
                auto& table = compat[k][i1][i2];
                table.assign(cells[k][i1].candidates.size(),
                             std::vector<bool>(cells[k][i2].candidates.size(), false));
                int good = 0;
                for (std::size_t l1 = 0; l1 < cells[k][i1].candidates.size(); ++l1)
                    for (std::size_t l2 = 0; l2 < cells[k][i2].candidates.size(); ++l2) {
                        const bool c12 = compatible(cells[k][i1].candidates[l1], cells[k][i2].candidates[l2]);
                        table[l1][l2] = c12;
                        good += c12;
                    }
                if (good != 42) g_ok = false;
            }
    led.add("(g).compatible_pairs_per_slot_pair", "42 (12 local colourings per cell)",
            g_ok ? "42 (12 local colourings per cell)" : "mismatch");

    // (h) global tuples per selector
    std::array<std::vector<std::array<int, 9>>, 6> tuples_by_k;
    for (int k = 0; k < 6; ++k) {
        std::array<int, 9> pick{};
        auto rec = [&](auto&& self, int i) -> void {
            if (i == 9) {
                tuples_by_k[k].push_back(pick);
                return;
            }
            for (std::size_t l = 0; l < cells[k][i].candidates.size(); ++l) {
                bool ok = true;
                for (int j = 0; j < i && ok; ++j)
                    if (!compat[k][j][i][pick[j]][l]) ok = false;
                if (!ok) continue;
                pick[i] = int(l);
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    bool h_ok = true;
    for (int k = 0; k < 6; ++k)
        if (tuples_by_k[k].size() != 5) h_ok = false;
    led.add("(h).global_tuples_per_selector", "5", h_ok ? "5" : "mismatch");
    if (!h_ok) return out;

    // red/blue masks per (k, tuple) over the selector's cells
    struct PartialColouring {
        Bitset red, domain;
    };
    std::array<std::vector<PartialColouring>, 6> partials;
    for (int k = 0; k < 6; ++k)
        for (const auto& tuple : tuples_by_k[k]) {
            PartialColouring pc{Bitset(n), Bitset(n)};
            for (int i = 0; i < 9; ++i) {
                pc.domain |= cells[k][i].mask;
                pc.red |= cells[k][i].candidates[tuple[i]];
            }
            partials[k].push_back(std::move(pc));
        }

    // (j) selector triples whose selected 4-cliques are pairwise disjoint
    std::vector<std::array<int, 3>> disjoint_triples;
    for (int q1 = 0; q1 < 6; ++q1)
        for (int q2 = q1 + 1; q2 < 6; ++q2)
            for (int q3 = q2 + 1; q3 < 6; ++q3) {
                std::set<int> ids;
                for (int i = 0; i < 9; ++i) {
                    ids.insert(slot_cliques[i][alphas[q1][i]]);
                    ids.insert(slot_cliques[i][alphas[q2][i]]);
                    ids.insert(slot_cliques[i][alphas[q3][i]]);
                }
                if (ids.size() == 27) disjoint_triples.push_back({q1, q2, q3});
            }

    // candidate red sets: consistent combinations of one tuple per member of
    // a disjoint triple (agreeing on shared rays, reds pairwise compatible)
    auto consistent = [&](const PartialColouring& p1, const PartialColouring& p2) {
        // agreement on the shared domain: a ray red in one and in the domain
        // of the other must be red there too
        Bitset shared = p1.domain;
        shared &= p2.domain;
        Bitset r1 = p1.red, r2 = p2.red;
        r1 &= shared;
        r2 &= shared;
        if (!(r1 == r2)) return false;
        bool ok = true;
        p1.red.for_each([&](int v) {
            if (ok && p2.red.intersects(g.adj[v])) ok = false;
        });
        return ok;
    };
    std::vector<std::set<std::vector<int>>> candidate_sets_per_triple;
    for (const auto& triple : disjoint_triples) {
        std::set<std::vector<int>> reds;
        for (const auto& pa : partials[triple[0]])
            for (const auto& pb : partials[triple[1]]) {
                if (!consistent(pa, pb)) continue;
                for (const auto& pc : partials[triple[2]]) {
                    if (!consistent(pa, pc) || !consistent(pb, pc)) continue;
                    Bitset u = pa.red;
                    u |= pb.red;
                    u |= pc.red;
                    std::vector<int> red_list;
                    u.for_each([&](int v) { red_list.push_back(v); });
                    reds.insert(std::move(red_list));
                }
            }
        candidate_sets_per_triple.push_back(std::move(reds));
    }

    bool triples_agree = candidate_sets_per_triple.size() == 2 &&
                         candidate_sets_per_triple[0] == candidate_sets_per_triple[1];
    const auto& candidates =
        candidate_sets_per_triple.empty() ? std::set<std::vector<int>>{} : candidate_sets_per_triple[0];
    std::vector<std::size_t> sizes;
    for (const auto& r : candidates) sizes.push_back(r.size());

    led.add("(i).candidate_red_set_sizes", "21,21,21,27,27", size_list(sizes));
    led.add("(j).disjoint_selector_triples", "2 (same candidates)",
            disjoint_triples.size() == 2 ? (triples_agree ? "2 (same candidates)" : "2 (different candidates)")
                                         : std::to_string(disjoint_triples.size()));

    // (k) blue-closure elimination: a candidate dies when the rays orthogonal
    // to it contain a whole 6-clique (which would be all blue)
    std::vector<std::vector<int>> survivors;
    for (const auto& red_list : candidates) {
        Bitset blue(n);
        for (int v : red_list) blue |= g.adj[v];
        bool dead = false;
        for (const auto& six : six_cliques) {
            bool inside = true;
            for (int v : six) inside &= blue.test(v);
            if (inside) {
                dead = true;
                break;
            }
        }
        if (!dead) survivors.push_back(red_list);
    }
    led.add("(k).survivors_of_blue_closure", "1", std::to_string(survivors.size()));
    if (survivors.size() != 1) return out;

    // (l) the survivor is the lambda_4 orbit and is a good bicolouring
    Bitset survivor_mask = to_bitset(survivors[0], n);
    const bool is_o4 = survivor_mask == o4_mask;
    const bool verifies = verify_colouring(at, survivors[0]);
    led.add("(l).survivor_is_lambda4_orbit_and_verifies", "yes", is_o4 && verifies ? "yes" : "no");

    for (int v : survivors[0]) out.forced_red.push_back(at.rays[v]);
    return out;
}

HatCertificate replay_a_hat_noncolourability() {
    HatCertificate cert;
    const Configuration at = build_a_tilde();
    UniquenessReplay replay = replay_uniqueness_proof(at);
    cert.ledger = replay.ledger;
    if (replay.forced_red.empty()) return cert;

    std::set<Ray> rhat(replay.forced_red.begin(), replay.forced_red.end());
    for (int block = 0; block < 3; ++block) {
        const GroupElement9 refl = block_sign_flip(block);
        for (const auto& r : replay.forced_red) rhat.insert(act(refl, r));
    }
    cert.ledger.add("hat.forced_red_size", "54", std::to_string(rhat.size()));
    cert.forced_red.assign(rhat.begin(), rhat.end());

    const Configuration ah = build_a_hat();
    const OrthoGraph g = ortho_graph(ah);
    Bitset rhat_mask(ah.size());
    for (const auto& r : cert.forced_red) {
        const int idx = ah.index_of(r);
        if (idx < 0) throw std::logic_error("replay: reflected red ray missing from the 558-ray set");
        rhat_mask.set(idx);
    }
    for (const auto& six : enumerate_cliques(g, 6)) {
        int meet = 0;
        for (int v : six) meet += rhat_mask.test(v);
        if (meet != 1) {
            cert.witness_clique = six;
            break;
        }
    }
    cert.ledger.add("hat.violating_6clique", "exists",
                    cert.witness_clique.empty() ? "none found" : "exists");
    return cert;
}

}  // namespace ks
