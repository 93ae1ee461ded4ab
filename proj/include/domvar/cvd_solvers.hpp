#pragma once

#include "domvar/cover_dp.hpp"
#include "domvar/problem.hpp"

#include <optional>

namespace domvar {

/// A cover instance built from a guess, with the maps back to vertex ids.
struct GuessReduction {
    CoverInstance cover;
    std::vector<int> family_vertex;   ///< family index -> vertex
    std::vector<int> universe_vertex; ///< element index -> modulator vertex
};

/// Set cover with partition for one DS guess: universe S - N[S'], one set
/// N(v) & U per non-modulator vertex in clique order, a block per clique
/// flagged iff the clique has a vertex outside N[S'].
GuessReduction reduce_ds_to_scp(const Graph &g, const VertexSet &s, const VertexSet &guess);

/// EDS guess preprocessing. Empty when the guess cannot extend to an EDS:
/// two guessed vertices within distance two, or a clique left with no
/// vertex outside N(S') and N^{=2}(S') while still needing domination.
/// Otherwise an exact cover instance over S - N[S'] with one block per
/// undominated clique, candidates outside N[S'] and N^{=2}(S').
std::optional<GuessReduction> eds_guess_preprocess(const Graph &g, const VertexSet &s, const VertexSet &guess);

/// Guesses of a k-vertex modulator in ascending size, then ascending encoding.
std::vector<VertexSet> enumerate_guesses(const VertexSet &s);

DomSolution solve_ds_cvd(const DomInstance &inst);
DomSolution solve_eds_cvd(const DomInstance &inst);
DomSolution solve_ids_cvd(const DomInstance &inst);
DomSolution solve_dc_cvd(const DomInstance &inst);
/// THDS with the instance threshold, or TDS (threshold 1).
DomSolution solve_thds_cvd(const DomInstance &inst);

/// Dispatch on the instance variant.
DomSolution solve_cvd(const DomInstance &inst);

/// Block-weight rule comparison for threshold instances. For every guess the
/// weighted multicover is solved twice: with the plain block weight
/// max w(v), lifting and checking the witness, and with the exact per-block
/// surcharge the solver uses. Counts guesses whose plain-rule optimum is
/// smaller than the exact one or whose plain witness fails the checker.
struct BlockRuleAudit {
    int guesses = 0;
    int plain_invalid = 0;  ///< plain-rule witness rejected by the checker
    int plain_smaller = 0;  ///< plain-rule optimum below the exact optimum
    int plus_one_larger = 0; ///< "max + 1" on every block above the exact optimum
};
BlockRuleAudit audit_threshold_block_rule(const DomInstance &inst);

} // namespace domvar
