#pragma once

// Seeded random instances for the splitting checks. Integers are drawn from
// std::mt19937_64 by plain modulo reduction, so a seed produces the same
// corpus on every platform.

#include "toric/binomial.hpp"
#include "toric/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace toric::corpus {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long between(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }
    bool coin() { return engine_() & 1U; }

private:
    std::mt19937_64 engine_;
};

struct GraphShape {
    std::size_t min_vertices = 2;
    std::size_t max_vertices = 6;
    std::size_t max_edges = 8;
    bool bipartite = false;
};

/// Connected graph with labels prefix1, prefix2, ...: a random spanning tree
/// plus random extra edges (only between colour classes when bipartite).
inline Graph random_connected_graph(Rng& rng, const GraphShape& shape, const std::string& prefix) {
    const std::size_t n = static_cast<std::size_t>(rng.between(static_cast<long>(shape.min_vertices),
                                                                static_cast<long>(shape.max_vertices)));
    std::vector<int> colour(n, 0);
    std::vector<Graph::Edge> edges;
    std::set<Graph::Edge> present;
    auto add = [&](std::size_t u, std::size_t v) {
        const Graph::Edge e{std::min(u, v), std::max(u, v)};
        if (u == v || present.count(e)) return false;
        present.insert(e);
        edges.push_back(e);
        return true;
    };
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t u = static_cast<std::size_t>(rng.between(0, static_cast<long>(v) - 1));
        colour[v] = 1 - colour[u];
        add(u, v);
    }
    const std::size_t target = std::min<std::size_t>(shape.max_edges,
                                                     static_cast<std::size_t>(rng.between(static_cast<long>(n) - 1,
                                                                                          static_cast<long>(shape.max_edges))));
    for (std::size_t attempt = 0; edges.size() < target && attempt < 64; ++attempt) {
        const auto u = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
        const auto v = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
        if (shape.bipartite && colour[u] == colour[v]) continue;
        add(u, v);
    }
    return Graph::from_indices(toric::detail::numbered_labels(n, prefix), std::move(edges));
}

/// Gluing along one edge; g1 is bipartite, g2 arbitrary, both connected with
/// at most `max_edges` edges.
inline std::vector<GlueSpec> edge_gluings(std::uint64_t seed, std::size_t count, std::size_t max_edges = 8) {
    Rng rng(seed);
    std::vector<GlueSpec> out;
    while (out.size() < count) {
        const Graph g1 = random_connected_graph(rng, {2, 6, max_edges, true}, "a");
        const Graph g2 = random_connected_graph(rng, {2, 6, max_edges, false}, "b");
        const auto& e1 = g1.edge(static_cast<std::size_t>(rng.between(0, static_cast<long>(g1.num_edges()) - 1)));
        const auto& e2 = g2.edge(static_cast<std::size_t>(rng.between(0, static_cast<long>(g2.num_edges()) - 1)));
        std::vector<std::string> h2{g2.label(e2.first), g2.label(e2.second)};
        if (rng.coin()) std::swap(h2[0], h2[1]);
        out.push_back({g1, g2, {g1.label(e1.first), g1.label(e1.second)}, h2});
    }
    return out;
}

namespace detail {

/// Path p0 - p1 - ... - pl plus a connected graph on {p0, pl, r1..rk}
/// without the edge p0 pl, so the path is induced and its interior vertices
/// have degree 2.
inline Graph path_side(Rng& rng, std::size_t l, bool bipartite, const std::string& prefix, std::size_t max_edges) {
    for (;;) {
        const std::size_t k = static_cast<std::size_t>(rng.between(1, 3));
        const std::size_t n = k + 2; // 0 = p0, 1 = pl, rest = r's
        std::vector<Graph::Edge> edges;
        std::set<Graph::Edge> present;
        const std::size_t budget = max_edges - l;
        const std::size_t target = static_cast<std::size_t>(rng.between(static_cast<long>(n) - 1, static_cast<long>(budget)));
        for (std::size_t attempt = 0; edges.size() < target && attempt < 64; ++attempt) {
            const auto u = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
            const auto v = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
            if (u == v || (std::min(u, v) == 0 && std::max(u, v) == 1)) continue;
            const Graph::Edge e{std::min(u, v), std::max(u, v)};
            if (present.insert(e).second) edges.push_back(e);
        }
        std::vector<std::string> labels;
        labels.push_back("p0");
        labels.push_back("p" + std::to_string(l));
        for (std::size_t r = 1; r <= k; ++r) labels.push_back(prefix + std::to_string(r));
        for (std::size_t i = 1; i < l; ++i) labels.push_back("p" + std::to_string(i));
        auto index_of_path = [&](std::size_t i) -> std::size_t {
            if (i == 0) return 0;
            if (i == l) return 1;
            return n + i - 1;
        };
        for (std::size_t i = 0; i < l; ++i) edges.emplace_back(index_of_path(i), index_of_path(i + 1));
        Graph g = Graph::from_indices(labels, edges);
        if (!is_connected(g) || g.num_edges() > max_edges) continue;
        if (bipartite && !is_bipartite(g).bipartite) continue;
        return g;
    }
}

} // namespace detail

/// Gluing along a path with l edges (1 ≤ l ≤ max_length); g1 is bipartite.
inline std::vector<GlueSpec> path_gluings(std::uint64_t seed, std::size_t count, std::size_t max_length = 3,
                                          std::size_t max_edges = 8) {
    Rng rng(seed);
    std::vector<GlueSpec> out;
    while (out.size() < count) {
        const std::size_t l = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_length)));
        const Graph g1 = detail::path_side(rng, l, true, "a", max_edges);
        const Graph g2 = detail::path_side(rng, l, false, "b", max_edges);
        std::vector<std::string> h;
        for (std::size_t i = 0; i <= l; ++i) h.push_back("p" + std::to_string(i));
        std::vector<std::string> h2 = h;
        if (rng.coin()) std::reverse(h2.begin(), h2.end());
        out.push_back({g1, g2, h, h2});
    }
    return out;
}

struct ExponentPair {
    ExpVec alpha, beta;
};

/// (α, β) in at most `max_vars` variables with entries in [-2, 2] such that
/// α, β and α+β each have a positive and a negative part and α, β are
/// linearly independent.
inline std::vector<ExponentPair> two_binomial_pairs(std::uint64_t seed, std::size_t count, std::size_t max_vars = 6) {
    Rng rng(seed);
    auto mixed = [](const ExpVec& v) { return !is_zero(positive_part(v)) && !is_zero(negative_part(v)); };
    std::vector<ExponentPair> out;
    while (out.size() < count) {
        const std::size_t n = static_cast<std::size_t>(rng.between(2, static_cast<long>(max_vars)));
        ExpVec a(n), b(n);
        for (auto& x : a) x = static_cast<int>(rng.between(-2, 2));
        for (auto& x : b) x = static_cast<int>(rng.between(-2, 2));
        if (!mixed(a) || !mixed(b) || !mixed(a + b)) continue;
        bool dependent = true;
        for (std::size_t i = 0; i < n && dependent; ++i)
            for (std::size_t j = i + 1; j < n && dependent; ++j)
                if (a[i] * b[j] != a[j] * b[i]) dependent = false;
        if (dependent) continue;
        out.push_back({std::move(a), std::move(b)});
    }
    return out;
}

} // namespace toric::corpus
