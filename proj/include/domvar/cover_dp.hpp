#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace domvar {

/// Bit i set = universe element i.
using ElementMask = std::uint32_t;

/// Largest universe the subset tables accept.
inline constexpr int kMaxUniverse = 24;

/// How many sets each block must contribute.
enum class BlockMode {
    AtLeastFlag,   ///< >= 1 set from every block whose flag is 1
    ExactlyOne,    ///< exactly one set from every block
    AtLeastWeight, ///< >= w_B(block) sets from every block
};

/// How often each universe element must be covered.
enum class CoverMode {
    AtLeastOnce,
    ExactlyOnce,
    Multicover, ///< element u at least w_U(u) times
};

/// Common shape of the four partitioned cover problems. Blocks are
/// contiguous runs of the family given by their sizes, in family order.
struct CoverInstance {
    int universe_size = 0;
    std::vector<ElementMask> family;
    std::vector<int> block_sizes;
    BlockMode block_mode = BlockMode::AtLeastFlag;
    /// Flags (AtLeastFlag) or weights (AtLeastWeight); ignored for ExactlyOne.
    std::vector<int> block_requirement;
    CoverMode cover_mode = CoverMode::AtLeastOnce;
    /// Per-element demand for Multicover.
    std::vector<int> element_weight;
    /// Upper bound on every weight (Multicover / AtLeastWeight).
    int max_weight = 1;
    /// Optional per-set marks for AtLeastWeight: a block from which any
    /// marked set is chosen needs one set more than its weight.
    std::vector<bool> surcharge;
    std::optional<int> budget;

    int family_size() const { return static_cast<int>(family.size()); }
    int block_count() const { return static_cast<int>(block_sizes.size()); }
};

struct CoverSolution {
    bool feasible = false;
    int size = 0;
    /// Chosen family indices, ascending.
    std::vector<int> witness;
};

/// Instrumentation filled by the DP kernels.
struct DpStats {
    std::uint64_t states = 0;
};

/// Throws ContractError when sizes, masks, blocks or weights are inconsistent.
void validate(const CoverInstance &inst);

/// True iff `witness` meets the instance's cover mode on every element and its
/// block mode on every block (budget not considered).
bool satisfies(const CoverInstance &inst, const std::vector<int> &witness);

// Parallel kernels: table layers over the family are filled in order, each
// layer's subset (or weight-vector) entries concurrently. Among equal-size
// optima the lexicographically smallest ascending index list is returned.

/// Plain set cover. Block structure is ignored; every flag must be 0 (or absent).
CoverSolution solve_set_cover(const CoverInstance &inst, DpStats *stats = nullptr);
/// Set cover with partition (at least one set from every flagged block).
CoverSolution solve_scp(const CoverInstance &inst, DpStats *stats = nullptr);
/// Exact set cover with partition: each element once, one set per block.
CoverSolution solve_escp(const CoverInstance &inst, DpStats *stats = nullptr);
/// At-least-once cover with exactly one set per block.
CoverSolution solve_exact_one_scp(const CoverInstance &inst, DpStats *stats = nullptr);
/// Weighted set multicover with partition, table over (r+1)-ary weight vectors.
CoverSolution solve_wsmp(const CoverInstance &inst, DpStats *stats = nullptr);

/// Dispatch on the instance's modes.
CoverSolution solve_cover(const CoverInstance &inst, DpStats *stats = nullptr);

/// Serial reference versions. Subset tables are filled in the textbook order
/// (subset-major, then family index, then flag); weight tables layer by layer,
/// one weight vector at a time. Same results as the kernels.
namespace reference {
CoverSolution solve_set_cover(const CoverInstance &inst, DpStats *stats = nullptr);
CoverSolution solve_scp(const CoverInstance &inst, DpStats *stats = nullptr);
CoverSolution solve_escp(const CoverInstance &inst, DpStats *stats = nullptr);
CoverSolution solve_exact_one_scp(const CoverInstance &inst, DpStats *stats = nullptr);
CoverSolution solve_wsmp(const CoverInstance &inst, DpStats *stats = nullptr);
CoverSolution solve_cover(const CoverInstance &inst, DpStats *stats = nullptr);
} // namespace reference

} // namespace domvar
