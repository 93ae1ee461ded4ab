#include "domvar/graph.hpp"

#include "domvar/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace domvar {

Graph build_graph(int vertex_count, const std::vector<Edge> &edges) {
    if (vertex_count < 0) throw MalformedInput("negative vertex count");
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") has an endpoint outside [0," << vertex_count << ")";
            throw MalformedInput(os.str());
        }
        if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.rows_.reserve(static_cast<std::size_t>(vertex_count));
    int twice = 0;
    for (auto &row : g.adjacency_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        twice += static_cast<int>(row.size());
        g.rows_.push_back(VertexSet::from(vertex_count, row));
    }
    g.edge_count_ = twice / 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
        throw ContractError("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep) {
    InducedSubgraph out;
    out.original_ids = keep.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.original_ids.size(); ++i)
        local[static_cast<std::size_t>(out.original_ids[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : out.original_ids)
        for (int v : g.neighbors(u))
            if (u < v && keep.contains(v))
                edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    out.graph = build_graph(static_cast<int>(out.original_ids.size()), edges);
    return out;
}

VertexSet closed_neighborhood(const Graph &g, int v) {
    VertexSet s = g.neighbor_set(v);
    s.insert(v);
    return s;
}

VertexSet open_neighborhood(const Graph &g, const VertexSet &s) {
    VertexSet out = g.empty_set();
    for (int v : s) out |= g.neighbor_set(v);
    return out - s;
}

VertexSet closed_neighborhood(const Graph &g, const VertexSet &s) {
    return open_neighborhood(g, s) | s;
}

VertexSet n_equal_2(const Graph &g, const VertexSet &s) {
    VertexSet closed = closed_neighborhood(g, s);
    VertexSet reach = g.empty_set();
    for (int v : closed - s) reach |= g.neighbor_set(v);
    return reach - closed;
}

bool within_distance_two(const Graph &g, int u, int v) {
    if (u == v || g.adjacent(u, v)) return true;
    return g.neighbor_set(u).intersects(g.neighbor_set(v));
}

std::optional<std::vector<int>> find_induced_p3(const Graph &g, const VertexSet &alive) {
    const std::vector<int> verts = alive.to_vector();
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                int a = verts[i], b = verts[j], c = verts[k];
                bool ab = g.adjacent(a, b), bc = g.adjacent(b, c), ac = g.adjacent(a, c);
                if (ab + bc + ac != 2) continue;
                if (!ac) return std::vector<int>{a, b, c};
                if (!bc) return std::vector<int>{b, a, c};
                return std::vector<int>{a, c, b};
            }
    return std::nullopt;
}

ClusterPartition cluster_partition(const Graph &g, const VertexSet &s) {
    VertexSet alive = g.all_vertices() - s;
    ClusterPartition part;
    VertexSet seen = g.empty_set();
    for (int v : alive) {
        if (seen.contains(v)) continue;
        VertexSet comp = closed_neighborhood(g, v) & alive;
        bool ok = true;
        for (int u : comp) {
            if ((closed_neighborhood(g, u) & alive) != comp) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            auto w = find_induced_p3(g, alive);
            std::ostringstream os;
            os << "not a cluster graph: induced P3 (" << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << ")";
            throw NotClusterGraph(*w, os.str());
        }
        seen |= comp;
        part.cliques.push_back(comp.to_vector());
    }
    return part;
}

namespace {

// Hammer-Simeone: vertices sorted by degree (ties by id); returns the clique
// prefix length and whether the degree criterion holds.
std::pair<std::vector<int>, bool> degree_split(const Graph &h) {
    std::vector<int> order(static_cast<std::size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
    int m = 0;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (h.degree(order[static_cast<std::size_t>(i)]) >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < h.vertex_count(); ++i) {
        long long d = h.degree(order[static_cast<std::size_t>(i)]);
        if (i < m) lhs += d;
        else rhs += d;
    }
    order.resize(static_cast<std::size_t>(m));
    return {order, lhs == rhs};
}

} // namespace

bool is_split(const Graph &g, const VertexSet &alive) {
    return degree_split(induced_subgraph(g, alive).graph).second;
}

std::optional<std::vector<int>> find_split_obstruction(const Graph &g, const VertexSet &alive) {
    const std::vector<int> v = alive.to_vector();
    const std::size_t n = v.size();
    auto degree_in = [&](int x, std::initializer_list<int> others) {
        int d = 0;
        for (int y : others) d += (x != y && g.adjacent(x, y));
        return d;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::initializer_list<int> q = {v[a], v[b], v[c], v[d]};
                    int edges = 0;
                    bool all_deg1 = true, all_deg2 = true;
                    for (int x : q) {
                        int dx = degree_in(x, q);
                        edges += dx;
                        all_deg1 &= (dx == 1);
                        all_deg2 &= (dx == 2);
                    }
                    if (all_deg1 || all_deg2) return std::vector<int>(q);
                }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    for (std::size_t e = d + 1; e < n; ++e) {
                        std::initializer_list<int> q = {v[a], v[b], v[c], v[d], v[e]};
                        bool all_deg2 = true;
                        for (int x : q) all_deg2 &= (degree_in(x, q) == 2);
                        if (all_deg2) return std::vector<int>(q);
                    }
    return std::nullopt;
}

SplitPartition split_partition(const Graph &g, const VertexSet &s) {
    const VertexSet alive = g.all_vertices() - s;
    const InducedSubgraph sub = induced_subgraph(g, alive);
    auto [prefix, ok] = degree_split(sub.graph);
    if (!ok) {
        auto w = find_split_obstruction(g, alive);
        std::ostringstream os;
        os << "not a split graph: induced obstruction on {";
        for (std::size_t i = 0; i < w->size(); ++i) os << (i ? "," : "") << (*w)[i];
        os << "}";
        throw NotSplitGraph(*w, os.str());
    }
    VertexSet clique = g.empty_set();
    for (int local : prefix) clique.insert(sub.original_ids[static_cast<std::size_t>(local)]);
    const VertexSet indep = alive - clique;

    // Other maximum clique sides differ from this one by a single swap.
    std::vector<int> best = clique.to_vector();
    for (int c : clique) {
        VertexSet rest = clique;
        rest.erase(c);
        for (int i : indep) {
            if (!rest.is_subset_of(g.neighbor_set(i))) continue;
            VertexSet others = indep;
            others.erase(i);
            if (g.neighbor_set(c).intersects(others)) continue;
            VertexSet cand = rest;
            cand.insert(i);
            auto vec = cand.to_vector();
            if (vec < best) best = std::move(vec);
        }
    }
    SplitPartition out{VertexSet::from(g.vertex_count(), best), g.empty_set()};
    out.independent_side = alive - out.clique_side;
    return out;
}

bool is_clique(const Graph &g, const VertexSet &set) {
    for (int v : set) {
        VertexSet rest = set;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbor_set(v))) return false;
    }
    return true;
}

bool is_independent(const Graph &g, const VertexSet &set) {
    for (int v : set)
        if (g.neighbor_set(v).intersects(set)) return false;
    return true;
}

} // namespace domvar
