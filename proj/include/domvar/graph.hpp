#pragma once

#include "domvar/vertex_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domvar {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph. Neighbor lists are sorted strictly
/// ascending, so two graphs are equal iff their adjacency lists are equal.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int> &neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    /// Open neighborhood as a set.
    const VertexSet &neighbor_set(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string> &labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

    friend bool operator==(const Graph &a, const Graph &b) { return a.adjacency_ == b.adjacency_; }

private:
    friend Graph build_graph(int, const std::vector<Edge> &);
    std::vector<std::vector<int>> adjacency_;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

/// Canonical graph from an edge list; duplicates collapse. Throws MalformedInput
/// on self-loops or out-of-range endpoints.
Graph build_graph(int vertex_count, const std::vector<Edge> &edges);

/// Subgraph induced by `keep`, with vertices renumbered in ascending order.
/// `original_ids[i]` is the id in `g` of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;
};
InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep);

VertexSet closed_neighborhood(const Graph &g, int v);
/// N(S) = union of neighborhoods minus S itself.
VertexSet open_neighborhood(const Graph &g, const VertexSet &s);
/// N[S] = N(S) | S.
VertexSet closed_neighborhood(const Graph &g, const VertexSet &s);
/// Vertices at distance exactly 2 from S.
VertexSet n_equal_2(const Graph &g, const VertexSet &s);

/// True when dist(u, v) <= 2, i.e. N[u] and N[v] meet.
bool within_distance_two(const Graph &g, int u, int v);

/// Disjoint cliques of G - S, ordered by ascending minimum vertex id.
struct ClusterPartition {
    std::vector<std::vector<int>> cliques;
};

/// Throws NotClusterGraph with an induced P3 when G - S is not a cluster graph.
ClusterPartition cluster_partition(const Graph &g, const VertexSet &s);

/// Lexicographically smallest induced P3 of G restricted to `alive`, if any.
/// Reported as (a, b, c) with b the middle vertex.
std::optional<std::vector<int>> find_induced_p3(const Graph &g, const VertexSet &alive);

struct SplitPartition {
    VertexSet clique_side;
    VertexSet independent_side;
};

/// Split partition of G - S with a maximum clique side; among those the
/// lexicographically smallest clique side. Throws NotSplitGraph with an
/// induced 2K2, C4 or C5 otherwise.
SplitPartition split_partition(const Graph &g, const VertexSet &s);

/// An induced 2K2, C4 or C5 of G restricted to `alive`, if any. Four-vertex
/// witnesses are searched first, each in lexicographic order of vertex tuples.
std::optional<std::vector<int>> find_split_obstruction(const Graph &g, const VertexSet &alive);

/// Degree-sequence split test on G restricted to `alive`.
bool is_split(const Graph &g, const VertexSet &alive);

bool is_clique(const Graph &g, const VertexSet &set);
bool is_independent(const Graph &g, const VertexSet &set);

} // namespace domvar
