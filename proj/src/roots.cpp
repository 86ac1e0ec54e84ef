#include "ksroots/roots.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>

namespace ks {

namespace {

GoldenVec vec(std::initializer_list<std::int64_t> xs) {
    GoldenVec v;
    v.reserve(xs.size());
    for (auto x : xs) v.emplace_back(x, 0);
    return v;
}

void add_with_negation(std::vector<GoldenVec>& out, const GoldenVec& v) {
    out.push_back(v);
    out.push_back(negated(v));
}

const std::array<std::array<std::int64_t, 3>, 6> kG2Roots = {{
    {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {2, -1, -1}, {-1, 2, -1}, {-1, -1, 2},
}};

std::vector<GoldenVec> generate_g2() {
    std::vector<GoldenVec> out;
    for (const auto& r : kG2Roots) add_with_negation(out, vec({r[0], r[1], r[2]}));
    return out;
}

std::vector<GoldenVec> generate_f4() {
    std::vector<GoldenVec> out;
    // 24 long roots +-e_i +- e_j
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    GoldenVec v = vec({0, 0, 0, 0});
                    v[i] = GoldenInt(si);
                    v[j] = GoldenInt(sj);
                    out.push_back(v);
                }
    // 8 short roots +-e_i, doubled for integrality alongside the halves below
    for (int i = 0; i < 4; ++i) {
        GoldenVec v = vec({0, 0, 0, 0});
        v[i] = GoldenInt(2);
        add_with_negation(out, v);
    }
    // 16 short roots (+-1, +-1, +-1, +-1), i.e. the (1/2)(+-1)^4 family doubled
    for (int m = 0; m < 16; ++m) {
        GoldenVec v = vec({0, 0, 0, 0});
        for (int i = 0; i < 4; ++i) v[i] = GoldenInt((m >> i) & 1 ? -1 : 1);
        out.push_back(v);
    }
    return out;
}

std::vector<GoldenVec> generate_e6() {
    // Block model on R^9: nine single-block short roots (xi; 0; 0) with
    // xi in {(1,-1,0),(1,0,-1),(0,1,-1)}, 27 all-long triples (xi; eta; zeta)
    // with entries from 3*{(2,-1,-1)/3,...} = {(2,-1,-1),(-1,2,-1),(-1,-1,2)},
    // plus all negations.
    const std::array<std::array<std::int64_t, 3>, 3> shorts = {{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}};
    const std::array<std::array<std::int64_t, 3>, 3> longs = {{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}};
    std::vector<GoldenVec> out;
    for (int block = 0; block < 3; ++block)
        for (const auto& s : shorts) {
            GoldenVec v(9, GoldenInt(0));
            for (int i = 0; i < 3; ++i) v[3 * block + i] = GoldenInt(s[i]);
            add_with_negation(out, v);
        }
    for (const auto& x : longs)
        for (const auto& y : longs)
            for (const auto& z : longs) {
                GoldenVec v(9, GoldenInt(0));
                for (int i = 0; i < 3; ++i) {
                    v[i] = GoldenInt(x[i]);
                    v[3 + i] = GoldenInt(y[i]);
                    v[6 + i] = GoldenInt(z[i]);
                }
                add_with_negation(out, v);
            }
    return out;
}

std::vector<GoldenVec> generate_e7() {
    // Sum-zero model on R^8: all permutations of (1,-1,0^6) and of
    // (1,1,1,1,-1,-1,-1,-1) (the (1/2)-scaled family doubled).
    std::vector<GoldenVec> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == j) continue;
            GoldenVec v(8, GoldenInt(0));
            v[i] = GoldenInt(1);
            v[j] = GoldenInt(-1);
            out.push_back(v);
        }
    for (int m = 0; m < 256; ++m) {
        if (std::popcount(unsigned(m)) != 4) continue;
        GoldenVec v(8, GoldenInt(0));
        for (int i = 0; i < 8; ++i) v[i] = GoldenInt((m >> i) & 1 ? -1 : 1);
        out.push_back(v);
    }
    return out;
}

std::vector<GoldenVec> generate_e8() {
    // D8 vectors +-e_i +- e_j plus the half-integer family (1/2)(+-1)^8 with
    // an even number of minus signs, doubled to (+-1)^8.
    std::vector<GoldenVec> out;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    GoldenVec v(8, GoldenInt(0));
                    v[i] = GoldenInt(si);
                    v[j] = GoldenInt(sj);
                    out.push_back(v);
                }
    for (int m = 0; m < 256; ++m) {
        if (std::popcount(unsigned(m)) % 2 != 0) continue;
        GoldenVec v(8, GoldenInt(0));
        for (int i = 0; i < 8; ++i) v[i] = GoldenInt((m >> i) & 1 ? -1 : 1);
        out.push_back(v);
    }
    return out;
}

std::vector<GoldenVec> generate_h3() {
    // (+-1, 0, 0) plus cyclic shifts, and the tau-scaled family
    // tau*(+-1, +-1/tau, +-tau) = (+-tau, +-1, +-tau^2) plus cyclic shifts.
    std::vector<GoldenVec> out;
    for (int i = 0; i < 3; ++i) {
        GoldenVec v(3, GoldenInt(0));
        v[i] = GoldenInt(1);
        add_with_negation(out, v);
    }
    const GoldenInt tau(0, 1), one(1, 0), tau2(1, 1);
    for (int shift = 0; shift < 3; ++shift)
        for (int s0 : {1, -1})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    const GoldenInt base[3] = {GoldenInt(s0) * tau, GoldenInt(s1) * one, GoldenInt(s2) * tau2};
                    GoldenVec v(3);
                    for (int i = 0; i < 3; ++i) v[(i + shift) % 3] = base[i];
                    out.push_back(v);
                }
    return out;
}

std::vector<GoldenVec> generate_h4() {
    // 600-cell model doubled to clear halves: permutations of (+-2,0,0,0),
    // the 16 vectors (+-1)^4, and even permutations of (0, +-1, +-1/tau, +-tau)
    // with 1/tau = tau - 1.
    std::vector<GoldenVec> out;
    for (int i = 0; i < 4; ++i) {
        GoldenVec v(4, GoldenInt(0));
        v[i] = GoldenInt(2);
        add_with_negation(out, v);
    }
    for (int m = 0; m < 16; ++m) {
        GoldenVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = GoldenInt((m >> i) & 1 ? -1 : 1);
        out.push_back(v);
    }
    const GoldenInt zero(0), one(1), invtau(-1, 1), tau(0, 1);
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        // parity of the permutation
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inv;
        if (inv % 2 != 0) continue;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) {
                    const GoldenInt base[4] = {zero, GoldenInt(s1) * one, GoldenInt(s2) * invtau,
                                               GoldenInt(s3) * tau};
                    GoldenVec v(4);
                    for (int i = 0; i < 4; ++i) v[perm[i]] = base[i];
                    out.push_back(v);
                }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

std::optional<RootSystemId> root_system_from_name(std::string_view name) {
    if (name == "G2") return RootSystemId::G2;
    if (name == "F4") return RootSystemId::F4;
    if (name == "E6") return RootSystemId::E6;
    if (name == "E7") return RootSystemId::E7;
    if (name == "E8") return RootSystemId::E8;
    if (name == "H3") return RootSystemId::H3;
    if (name == "H4") return RootSystemId::H4;
    return std::nullopt;
}

std::string_view to_string(RootSystemId id) {
    switch (id) {
        case RootSystemId::G2: return "G2";
        case RootSystemId::F4: return "F4";
        case RootSystemId::E6: return "E6";
        case RootSystemId::E7: return "E7";
        case RootSystemId::E8: return "E8";
        case RootSystemId::H3: return "H3";
        case RootSystemId::H4: return "H4";
    }
    return "?";
}

std::vector<GoldenVec> generate(RootSystemId id) {
    std::vector<GoldenVec> out;
    switch (id) {
        case RootSystemId::G2: out = generate_g2(); break;
        case RootSystemId::F4: out = generate_f4(); break;
        case RootSystemId::E6: out = generate_e6(); break;
        case RootSystemId::E7: out = generate_e7(); break;
        case RootSystemId::E8: out = generate_e8(); break;
        case RootSystemId::H3: out = generate_h3(); break;
        case RootSystemId::H4: out = generate_h4(); break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Configuration projectivize(std::string name, const std::vector<GoldenVec>& roots) {
    std::set<GoldenVec> root_set(roots.begin(), roots.end());
    for (const auto& r : roots)
        if (!root_set.count(negated(r)))
            throw std::invalid_argument("projectivize: root set not closed under negation");

    std::set<Ray> rays;
    for (const auto& r : roots) rays.insert(canonical_ray(r));
    if (2 * rays.size() != root_set.size())
        throw std::logic_error("projectivize: proportional roots beyond antipodal pairs");

    Configuration c;
    c.name = std::move(name);
    c.rays.assign(rays.begin(), rays.end());
    c.d = rank_of_span(c.rays);
    return c;
}

Configuration root_configuration(RootSystemId id) {
    return projectivize(std::string(to_string(id)), generate(id));
}

}  // namespace ks
