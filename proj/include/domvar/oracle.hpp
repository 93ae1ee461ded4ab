#pragma once

#include "domvar/cover_dp.hpp"
#include "domvar/problem.hpp"

namespace domvar {

/// Default vertex cap of brute_min.
inline constexpr int kBruteVertexCap = 20;
/// Family cap of brute_cover.
inline constexpr int kBruteFamilyCap = 20;

/// True iff D satisfies the variant's definition on G.
bool check_solution(const Graph &g, const VertexSet &d, const VariantSpec &spec);

/// Minimum solution by enumerating subsets by size, lexicographic within a
/// size. Throws CapExceeded above `cap` vertices.
DomSolution brute_min(const Graph &g, const VariantSpec &spec, int cap = kBruteVertexCap);

/// Optimum over all subfamilies, smallest size first, lexicographic within a
/// size; honours the budget. Throws CapExceeded above kBruteFamilyCap sets.
CoverSolution brute_cover(const CoverInstance &inst);

/// Minimum efficient dominating set by backtracking: the smallest undominated
/// vertex must be hit by exactly one pick from its closed neighborhood.
/// With `target`, stops at the first EDS of exactly that size (or reports
/// infeasible). Exact on any size; used where brute_min's cap is too small.
DomSolution search_eds(const Graph &g, std::optional<int> target = std::nullopt);

/// Moves every independent-side member of D onto a clique neighbor (TDS may
/// gain one extra clique vertex). Requires a connected split graph and a valid D.
VertexSet normalize_split_dominating(const Graph &g, const SplitPartition &p, const VertexSet &d,
                                     const VariantSpec &spec);

enum class ComplementDirection { CoverToIds, IdsToCover };

/// V minus the input. The input must be a minimal vertex cover (CoverToIds)
/// or an independent dominating set (IdsToCover).
VertexSet mmvc_from_ids(const Graph &g, const VertexSet &set, ComplementDirection direction);

bool is_vertex_cover(const Graph &g, const VertexSet &t);
bool is_minimal_vertex_cover(const Graph &g, const VertexSet &t);

/// Size of a largest minimal vertex cover, by enumeration.
int brute_max_minimal_vertex_cover(const Graph &g, int cap = kBruteVertexCap);

} // namespace domvar
