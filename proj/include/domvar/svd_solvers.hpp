#pragma once

#include "domvar/problem.hpp"

namespace domvar {

/// Per-node state of the EDS branch-and-reduce. Residual vertices are the
/// ones not yet dominated; red ones may not be picked.
struct SearchState {
    VertexSet residual;
    VertexSet red;
    VertexSet picked;

    VertexSet blue() const { return residual - red; }
    /// Blue modulator vertices.
    int measure(const VertexSet &s) const { return (blue() & s).size(); }
};

/// 2^k guesses; per independent guess at most |C|+1 candidate sets, each
/// determined by the clique pick.
DomSolution solve_ids_svd(const DomInstance &inst);

/// 2^k guesses; per guess at most |C|+1 clique choices, the remaining
/// independent-side vertices are forced.
DomSolution solve_eds_svd_simple(const DomInstance &inst);

/// Branch and reduce on blue modulator pairs with measure = blue modulator
/// vertices. `counters.branch_nodes` counts search leaves,
/// `fallback_branches` counts nodes where no rule applied,
/// `measure_violations` counts branch children whose measure fell by < 2.
DomSolution solve_eds_svd_branch(const DomInstance &inst);

/// Upper bound 3^{ceil(k/2)} (|C|+1) on search leaves of the branch solver.
std::uint64_t eds_branch_leaf_bound(int k, int clique_side);

} // namespace domvar
