#include "ksroots/config.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ks {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// gcd of the integer content of a GoldenVec (over both components)
std::int64_t content(const GoldenVec& v) {
    std::int64_t g = 0;
    for (const auto& x : v) {
        g = std::gcd(g, abs64(x.a));
        g = std::gcd(g, abs64(x.b));
    }
    return g;
}

void divide_by_content(GoldenVec& v, std::int64_t g) {
    if (g <= 1) return;
    for (auto& x : v) {
        x.a /= g;
        x.b /= g;
    }
}

}  // namespace

Ray canonical_ray(const GoldenVec& v) {
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first == v.size()) throw std::invalid_argument("canonical_ray: zero vector");

    // v / c = v * conj(c) / N(c): multiply by the conjugate, which keeps the
    // entries in Z[tau]; the common denominator N(c) is then an integer and
    // the primitive part of the numerator is the minimal integral rescale.
    const GoldenInt c = v[first].conj();
    const std::int64_t n = v[first].norm();
    GoldenVec u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] * c;
    if (n < 0)
        for (auto& x : u) x = -x;
    divide_by_content(u, content(u));
    return Ray{std::move(u)};
}

int Configuration::index_of(const Ray& r) const {
    auto it = std::lower_bound(rays.begin(), rays.end(), r);
    if (it != rays.end() && *it == r) return int(it - rays.begin());
    return -1;
}

int rank_of_span(const std::vector<GoldenVec>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<GoldenVec> rows = vectors;
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("rank_of_span: ragged input");

    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < int(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const GoldenInt p = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const GoldenInt f = rows[r][col];
            // fraction-free elimination: row <- p*row - f*pivot_row
            for (std::size_t j = 0; j < ncols; ++j) rows[r][j] = p * rows[r][j] - f * rows[rank][j];
            divide_by_content(rows[r], content(rows[r]));
        }
        ++rank;
    }
    return rank;
}

int rank_of_span(const std::vector<Ray>& rays) {
    std::vector<GoldenVec> vs;
    vs.reserve(rays.size());
    for (const auto& r : rays) vs.push_back(r.v);
    return rank_of_span(vs);
}

std::size_t OrthoGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

OrthoGraph OrthoGraph::complement() const {
    OrthoGraph g;
    g.n = n;
    g.adj.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !adj[i].test(j)) g.adj[i].set(j);
    return g;
}

OrthoGraph ortho_graph(const Configuration& c) {
    const int n = c.size();
    OrthoGraph g;
    g.n = n;
    g.adj.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dot(c.rays[i].v, c.rays[j].v).is_zero()) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
        }
    }
    return g;
}

namespace {

// Ordered DFS over all cliques: each clique is visited exactly once, with
// candidates restricted to indices greater than the last member. No pivoting;
// we need every clique, not just the maximal ones.
struct CliqueSearch {
    const OrthoGraph& g;
    int max_size;
    std::vector<Bitset> later;  // adj[v] restricted to indices > v
    std::vector<Bitset> cand;   // per-depth scratch
    std::vector<std::uint64_t> counts;

    explicit CliqueSearch(const OrthoGraph& g_, int max_size_) : g(g_), max_size(max_size_) {
        later.reserve(g.n);
        for (int v = 0; v < g.n; ++v) {
            Bitset b = g.adj[v];
            for (int u = 0; u <= v; ++u) b.reset(u);
            later.push_back(std::move(b));
        }
        cand.assign(std::size_t(max_size) + 1, Bitset(g.n));
        counts.assign(std::size_t(max_size) + 1, 0);
        counts[0] = 1;
    }

    void count_all() {
        if (max_size == 0) return;
        for (int v = 0; v < g.n; ++v) descend_count(v, 1);
    }

    void descend_count(int v, int depth) {
        ++counts[depth];
        if (depth == max_size) return;
        const Bitset& cur = depth == 1 ? later[v] : cand[depth];
        Bitset& next = cand[depth + 1];
        cur.for_each([&](int u) {
            Bitset::intersect(cur, later[u], next);
            // next is overwritten before each deeper call; safe to reuse
            descend_count_inner(u, depth + 1);
        });
    }

    // split so the lambda above can recurse without capturing itself
    void descend_count_inner(int v, int depth) { descend_count(v, depth); }
};

}  // namespace

std::vector<std::uint64_t> clique_profile(const OrthoGraph& g, int max_size) {
    if (max_size < 0) throw std::invalid_argument("clique_profile: negative size");
    CliqueSearch s(g, max_size);
    s.count_all();
    return s.counts;
}

std::vector<std::vector<int>> enumerate_cliques(const OrthoGraph& g, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<Bitset> later;
    later.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        Bitset b = g.adj[v];
        for (int u = 0; u <= v; ++u) b.reset(u);
        later.push_back(std::move(b));
    }
    std::vector<int> stack;
    std::vector<Bitset> cand(std::size_t(k) + 1, Bitset(g.n));

    auto dfs = [&](auto&& self, int v, int depth) -> void {
        stack.push_back(v);
        if (depth == k) {
            out.push_back(stack);
        } else {
            const Bitset cur = depth == 1 ? later[v] : cand[depth];
            cur.for_each([&](int u) {
                Bitset::intersect(cur, later[u], cand[depth + 1]);
                self(self, u, depth + 1);
            });
        }
        stack.pop_back();
    };
    for (int v = 0; v < g.n; ++v) dfs(dfs, v, 1);
    return out;
}

CliqueReport count_orthogonal_cliques(const Configuration& c, int k, bool materialize) {
    if (k < 2 || k > c.d) throw std::invalid_argument("count_orthogonal_cliques: k out of range");
    const OrthoGraph g = ortho_graph(c);
    CliqueReport rep;
    rep.k = k;
    if (materialize) {
        auto tuples = enumerate_cliques(g, k);
        rep.count = tuples.size();
        rep.tuples = std::move(tuples);
    } else {
        rep.count = clique_profile(g, k)[k];
    }
    return rep;
}

CliqueReport count_nonorthogonal_cliques(const Configuration& c, int q, bool materialize) {
    if (q < 2) throw std::invalid_argument("count_nonorthogonal_cliques: q < 2");
    const OrthoGraph g = ortho_graph(c).complement();
    CliqueReport rep;
    rep.k = q;
    if (materialize) {
        auto tuples = enumerate_cliques(g, q);
        rep.count = tuples.size();
        rep.tuples = std::move(tuples);
    } else {
        rep.count = clique_profile(g, q)[q];
    }
    return rep;
}

namespace {

// DFS over all cliques carrying the full common neighborhood (not just the
// later part). A clique extends to a larger one iff that mask is nonempty,
// and all-true ladder levels compose into extendability up to d-cliques.
struct SaturationSearch {
    const OrthoGraph& g;
    int d;
    std::vector<Bitset> later;
    std::vector<Bitset> cand;  // later candidates per depth
    std::vector<Bitset> ext;   // full common neighborhood per depth
    std::vector<int> stack;
    std::vector<bool> ladder;
    std::optional<std::vector<int>> witness;

    SaturationSearch(const OrthoGraph& g_, int d_) : g(g_), d(d_) {
        later.reserve(g.n);
        for (int v = 0; v < g.n; ++v) {
            Bitset b = g.adj[v];
            for (int u = 0; u <= v; ++u) b.reset(u);
            later.push_back(std::move(b));
        }
        cand.assign(std::size_t(d) + 1, Bitset(g.n));
        ext.assign(std::size_t(d) + 1, Bitset(g.n));
        ladder.assign(d > 1 ? d - 1 : 0, true);
    }

    void run() {
        for (int v = 0; v < g.n; ++v) {
            cand[1] = later[v];
            ext[1] = g.adj[v];
            descend(v, 1);
        }
    }

    void descend(int v, int depth) {
        stack.push_back(v);
        if (depth < d && ext[depth].none()) {
            ladder[depth - 1] = false;
            if (!witness) witness = stack;
        }
        if (depth == d && ext[depth].any())
            throw std::logic_error("saturation: clique larger than d found; configuration rank exceeds d");
        if (depth < d) {
            const Bitset cur = cand[depth];
            cur.for_each([&](int u) {
                Bitset::intersect(cur, later[u], cand[depth + 1]);
                Bitset::intersect(ext[depth], g.adj[u], ext[depth + 1]);
                descend(u, depth + 1);
            });
        }
        stack.pop_back();
    }
};

}  // namespace

SaturationReport saturation(const Configuration& c) {
    SaturationReport rep;
    if (c.rays.empty()) {
        rep.saturated = true;
        return rep;
    }
    const OrthoGraph g = ortho_graph(c);
    SaturationSearch s(g, c.d);
    s.run();
    rep.ladder = s.ladder;
    rep.witness = s.witness;
    rep.saturated = !s.witness.has_value();
    return rep;
}

}  // namespace ks
