#pragma once

// Finite simple graphs, walks, and the gluing/splitting constructions.

#include "toric/exactlin.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace toric {

class NotInducedIso : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Labeled simple graph with ordered vertex and edge lists. Edge i becomes
/// variable e_{i+1} in every ideal computed from the graph.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;

    Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
        : vertices_(std::move(vertices)) {
        index_vertices();
        std::vector<Edge> idx;
        idx.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            const auto ia = vertex_index(a), ib = vertex_index(b);
            if (!ia || !ib) throw std::invalid_argument("Graph: edge endpoint '" + (ia ? b : a) + "' is not a vertex");
            idx.emplace_back(*ia, *ib);
        }
        set_edges(std::move(idx));
    }

    static Graph from_indices(std::vector<std::string> vertices, std::vector<Edge> edges) {
        Graph g;
        g.vertices_ = std::move(vertices);
        g.index_vertices();
        g.set_edges(std::move(edges));
        return g;
    }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& label(std::size_t v) const { return vertices_.at(v); }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }

    std::optional<std::size_t> vertex_index(const std::string& label) const {
        auto it = lookup_.find(label);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const {
        for (const auto& [w, e] : adj_.at(u))
            if (w == v) return e;
        return std::nullopt;
    }

    bool adjacent(std::size_t u, std::size_t v) const { return edge_index(u, v).has_value(); }

    /// (neighbour, edge index) pairs in edge order.
    const std::vector<std::pair<std::size_t, std::size_t>>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

    std::size_t other_end(std::size_t e, std::size_t v) const {
        const auto& [a, b] = edges_.at(e);
        return a == v ? b : a;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void index_vertices() {
        lookup_.clear();
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!lookup_.emplace(vertices_[i], i).second)
                throw std::invalid_argument("Graph: duplicate vertex '" + vertices_[i] + "'");
    }

    void set_edges(std::vector<Edge> edges) {
        edges_ = std::move(edges);
        adj_.assign(vertices_.size(), {});
        std::set<Edge> seen;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto [a, b] = edges_[e];
            if (a >= vertices_.size() || b >= vertices_.size()) throw std::invalid_argument("Graph: vertex index out of range");
            if (a == b) throw std::invalid_argument("Graph: loop at '" + vertices_[a] + "'");
            if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
                throw std::invalid_argument("Graph: repeated edge {" + vertices_[a] + "," + vertices_[b] + "}");
            adj_[a].emplace_back(b, e);
            adj_[b].emplace_back(a, e);
        }
    }

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> lookup_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

namespace detail {
inline std::vector<std::string> numbered_labels(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}
} // namespace detail

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<Graph::Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_indices(detail::numbered_labels(n), std::move(e));
}

/// The path P_n with n edges and n+1 vertices.
inline Graph path_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path_graph: need at least one edge");
    std::vector<Graph::Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_indices(detail::numbered_labels(n + 1), std::move(e));
}

inline Graph complete_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need at least one vertex");
    std::vector<Graph::Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_indices(detail::numbered_labels(n), std::move(e));
}

/// Disjoint union; vertex labels of the second graph get `suffix` appended
/// when they clash.
inline Graph disjoint_union(const Graph& a, const Graph& b, const std::string& suffix = "'") {
    std::vector<std::string> labels = a.vertices();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const auto& l : b.vertices()) {
        std::string name = l;
        while (used.count(name)) name += suffix;
        used.insert(name);
        labels.push_back(name);
    }
    std::vector<Graph::Edge> edges = a.edges();
    const std::size_t off = a.num_vertices();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
    return Graph::from_indices(std::move(labels), std::move(edges));
}

struct Bipartition {
    bool bipartite = false;
    std::optional<std::vector<int>> color; // 0/1 per vertex when bipartite
};

inline Bipartition is_bipartite(const Graph& g) {
    std::vector<int> color(g.num_vertices(), -1);
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return {};
                }
            }
        }
    }
    return {true, std::move(color)};
}

/// Connected components of g with the vertices in `removed` deleted. Each
/// component is sorted; components are ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> components(const Graph& g, const std::vector<std::size_t>& removed = {}) {
    std::vector<int> comp(g.num_vertices(), -1);
    for (std::size_t r : removed) comp.at(r) = -2;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (const auto& [w, e] : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// |V| × |E| 0/1 matrix with two ones per column.
inline IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix M(g.num_vertices(), g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        M(g.edge(e).first, e) = 1;
        M(g.edge(e).second, e) = 1;
    }
    return M;
}

/// Induced subgraph together with its embedding into the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<std::size_t> vertex_map; // sub vertex -> parent vertex
    std::vector<std::size_t> edge_map;   // sub edge -> parent edge
};

/// Induced subgraph on `vertex_set`, keeping the parent's vertex and edge order.
inline Subgraph induced_subgraph(const Graph& g, std::vector<std::size_t> vertex_set) {
    std::sort(vertex_set.begin(), vertex_set.end());
    vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());
    std::vector<long> local(g.num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vertex_set.size(); ++i) {
        local.at(vertex_set[i]) = static_cast<long>(i);
        labels.push_back(g.label(vertex_set[i]));
    }
    std::vector<Graph::Edge> edges;
    std::vector<std::size_t> edge_map;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.edge(e);
        if (local[a] < 0 || local[b] < 0) continue;
        edges.emplace_back(static_cast<std::size_t>(local[a]), static_cast<std::size_t>(local[b]));
        edge_map.push_back(e);
    }
    return {Graph::from_indices(std::move(labels), std::move(edges)), std::move(vertex_set), std::move(edge_map)};
}

// ---------------------------------------------------------------- gluing

/// Glue g1 and g2 by identifying h1[i] with h2[i].
struct GlueSpec {
    Graph g1;
    Graph g2;
    std::vector<std::string> h1;
    std::vector<std::string> h2;
};

struct GlueResult {
    Graph graph;
    std::vector<std::size_t> vertex_map1, vertex_map2; // g_k vertex -> glued vertex
    std::vector<std::size_t> edge_map1, edge_map2;     // g_k edge -> glued edge
    std::vector<std::size_t> shared;                   // glued vertices of the identified region, in h1 order
};

inline GlueResult glue(const GlueSpec& spec) {
    const Graph& g1 = spec.g1;
    const Graph& g2 = spec.g2;
    if (spec.h1.empty()) throw NotInducedIso("glue: the identified subgraph must be nonempty");
    if (spec.h1.size() != spec.h2.size()) throw NotInducedIso("glue: h1 and h2 differ in size");

    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < spec.h1.size(); ++i) {
        const auto x = g1.vertex_index(spec.h1[i]);
        const auto y = g2.vertex_index(spec.h2[i]);
        if (!x) throw NotInducedIso("glue: '" + spec.h1[i] + "' is not a vertex of g1");
        if (!y) throw NotInducedIso("glue: '" + spec.h2[i] + "' is not a vertex of g2");
        a.push_back(*x);
        b.push_back(*y);
    }
    if (std::set<std::size_t>(a.begin(), a.end()).size() != a.size() ||
        std::set<std::size_t>(b.begin(), b.end()).size() != b.size())
        throw NotInducedIso("glue: identification is not a bijection");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (g1.adjacent(a[i], a[j]) != g2.adjacent(b[i], b[j]))
                throw NotInducedIso("glue: {" + spec.h1[i] + "," + spec.h1[j] + "} and {" + spec.h2[i] + "," +
                                    spec.h2[j] + "} disagree on adjacency");

    GlueResult r;
    std::vector<std::string> labels = g1.vertices();
    std::set<std::string> used(labels.begin(), labels.end());
    r.vertex_map1.resize(g1.num_vertices());
    for (std::size_t v = 0; v < g1.num_vertices(); ++v) r.vertex_map1[v] = v;

    std::vector<long> identified(g2.num_vertices(), -1);
    for (std::size_t i = 0; i < b.size(); ++i) identified[b[i]] = static_cast<long>(a[i]);
    r.vertex_map2.resize(g2.num_vertices());
    for (std::size_t v = 0; v < g2.num_vertices(); ++v) {
        if (identified[v] >= 0) {
            r.vertex_map2[v] = static_cast<std::size_t>(identified[v]);
            continue;
        }
        std::string name = g2.label(v);
        while (used.count(name)) name += "'";
        used.insert(name);
        r.vertex_map2[v] = labels.size();
        labels.push_back(name);
    }

    std::vector<Graph::Edge> edges = g1.edges();
    r.edge_map1.resize(g1.num_edges());
    for (std::size_t e = 0; e < g1.num_edges(); ++e) r.edge_map1[e] = e;
    const Graph partial = Graph::from_indices(labels, edges);
    r.edge_map2.resize(g2.num_edges());
    for (std::size_t e = 0; e < g2.num_edges(); ++e) {
        const std::size_t u = r.vertex_map2[g2.edge(e).first], v = r.vertex_map2[g2.edge(e).second];
        if (identified[g2.edge(e).first] >= 0 && identified[g2.edge(e).second] >= 0) {
            r.edge_map2[e] = *partial.edge_index(u, v);
            continue;
        }
        r.edge_map2[e] = edges.size();
        edges.emplace_back(u, v);
    }
    r.graph = Graph::from_indices(std::move(labels), std::move(edges));
    r.shared = a;
    return r;
}

// ------------------------------------------------------------- splitting

/// G = side1 ∪ side2 with side1 ∩ side2 the separator (an edge or a path).
struct Splitting {
    std::vector<std::size_t> separator;       // vertices of G, in path order
    std::vector<std::size_t> separator_edges; // edges of G along the path
    Subgraph side1;
    Subgraph side2;
    std::size_t component_count = 0; // pieces left after deleting the separator
};

namespace detail {

inline void append_splittings(const Graph& g, const std::vector<std::size_t>& path, const std::vector<std::size_t>& path_edges,
                              std::vector<Splitting>& out) {
    const auto comps = components(g, path);
    if (comps.size() < 2) return;
    auto with_sep = [&](std::vector<std::size_t> vs) {
        vs.insert(vs.end(), path.begin(), path.end());
        return induced_subgraph(g, std::move(vs));
    };
    const std::size_t count = comps.size();
    const std::size_t jobs = count == 2 ? 1 : count;
    for (std::size_t c = 0; c < jobs; ++c) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < count; ++k)
            if (k != c) rest.insert(rest.end(), comps[k].begin(), comps[k].end());
        out.push_back(Splitting{path, path_edges, with_sep(comps[c]), with_sep(rest), count});
    }
}

} // namespace detail

/// Splittings along induced paths with l edges whose interior vertices have
/// degree 2. When deleting the path leaves more than two pieces, one
/// splitting per piece (piece vs. everything else) is reported.
inline std::vector<Splitting> find_path_splittings(const Graph& g, std::size_t l) {
    if (l < 1) throw std::invalid_argument("find_path_splittings: path length must be at least 1");
    std::vector<Splitting> out;
    std::vector<std::size_t> path, path_edges;
    std::vector<bool> on_path(g.num_vertices(), false);

    auto extend = [&](auto&& self) -> void {
        if (path_edges.size() == l) {
            if (path.front() < path.back()) detail::append_splittings(g, path, path_edges, out);
            return;
        }
        const std::size_t tip = path.back();
        if (path.size() > 1 && g.degree(tip) != 2) return; // tip becomes interior
        for (const auto& [w, e] : g.neighbors(tip)) {
            if (on_path[w]) continue;
            bool induced = true;
            for (std::size_t k = 0; k + 1 < path.size() && induced; ++k)
                if (g.adjacent(path[k], w)) induced = false;
            if (!induced) continue;
            path.push_back(w);
            path_edges.push_back(e);
            on_path[w] = true;
            self(self);
            on_path[w] = false;
            path.pop_back();
            path_edges.pop_back();
        }
    };
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        path = {s};
        on_path[s] = true;
        extend(extend);
        on_path[s] = false;
    }
    std::stable_sort(out.begin(), out.end(), [](const Splitting& x, const Splitting& y) {
        return x.separator_edges < y.separator_edges;
    });
    return out;
}

/// Splittings along single edges {u,v} whose endpoints separate G.
inline std::vector<Splitting> find_edge_splittings(const Graph& g) { return find_path_splittings(g, 1); }

// ----------------------------------------------------------------- walks

struct Walk {
    std::vector<std::size_t> edges;
    std::vector<std::size_t> vertices; // edges.size() + 1 entries

    std::size_t length() const { return edges.size(); }
    bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
    bool is_closed_even() const { return closed() && !edges.empty() && edges.size() % 2 == 0; }
    friend bool operator==(const Walk&, const Walk&) = default;
};

/// Lexicographically least rotation of the edge sequence over both directions.
inline std::vector<std::size_t> canonical_walk_key(const std::vector<std::size_t>& edges) {
    std::vector<std::size_t> best = edges;
    auto consider = [&](const std::vector<std::size_t>& seq) {
        std::vector<std::size_t> rot(seq.size());
        for (std::size_t r = 0; r < seq.size(); ++r) {
            for (std::size_t i = 0; i < seq.size(); ++i) rot[i] = seq[(r + i) % seq.size()];
            if (rot < best) best = rot;
        }
    };
    consider(edges);
    consider(std::vector<std::size_t>(edges.rbegin(), edges.rend()));
    return best;
}

inline Walk walk_from_edges(const Graph& g, std::size_t start, const std::vector<std::size_t>& edges) {
    Walk w{edges, {start}};
    std::size_t v = start;
    for (std::size_t e : edges) {
        const auto [a, b] = g.edge(e);
        if (a != v && b != v) throw std::invalid_argument("walk_from_edges: consecutive edges do not meet");
        v = a == v ? b : a;
        w.vertices.push_back(v);
    }
    return w;
}

namespace detail {

// Closed walks of even length ≤ max_length starting and ending at their
// smallest vertex. With `primitive_only`, a walk is abandoned as soon as a
// vertex would be visited a third time or twice at even distance; such walks
// contain a shorter closed even walk and cannot be primitive.
inline std::vector<Walk> enumerate_closed_even(const Graph& g, std::size_t max_length, bool primitive_only) {
    std::map<std::vector<std::size_t>, Walk> found;
    std::vector<std::size_t> edges;
    std::vector<std::size_t> verts;
    std::vector<std::vector<std::size_t>> visits(g.num_vertices());

    auto dfs = [&](auto&& self, std::size_t s) -> void {
        const std::size_t v = verts.back();
        for (const auto& [w, e] : g.neighbors(v)) {
            if (w < s) continue;
            const std::size_t pos = edges.size() + 1;
            if (w == s && pos % 2 == 0) {
                edges.push_back(e);
                auto key = canonical_walk_key(edges);
                if (!found.count(key)) found.emplace(std::move(key), walk_from_edges(g, s, edges));
                edges.pop_back();
            }
            if (pos >= max_length) continue;
            if (primitive_only) {
                const auto& seen = visits[w];
                if (seen.size() >= 2) continue;
                if (std::any_of(seen.begin(), seen.end(), [&](std::size_t p) { return (pos - p) % 2 == 0; })) continue;
            }
            edges.push_back(e);
            verts.push_back(w);
            visits[w].push_back(pos);
            self(self, s);
            visits[w].pop_back();
            verts.pop_back();
            edges.pop_back();
        }
    };
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        verts = {s};
        visits[s] = {0};
        dfs(dfs, s);
        visits[s].clear();
    }
    std::vector<Walk> out;
    out.reserve(found.size());
    for (auto& [k, w] : found) out.push_back(std::move(w));
    std::stable_sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) { return a.length() < b.length(); });
    return out;
}

} // namespace detail

/// All closed even walks of length ≤ max_length, one per rotation/reflection class.
inline std::vector<Walk> closed_even_walks(const Graph& g, std::size_t max_length) {
    if (max_length % 2 != 0) throw std::invalid_argument("closed_even_walks: max_length must be even");
    return detail::enumerate_closed_even(g, max_length, false);
}

// ------------------------------------------------------------------ export

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::string s = "graph " + name + " {\n";
    for (const auto& v : g.vertices()) s += "  \"" + v + "\";\n";
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        s += "  \"" + g.label(g.edge(e).first) + "\" -- \"" + g.label(g.edge(e).second) + "\" [label=\"e" +
             std::to_string(e + 1) + "\"];\n";
    return s + "}\n";
}

} // namespace toric
