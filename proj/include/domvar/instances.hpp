#pragma once

#include "domvar/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domvar {

struct PlantedParams {
    Variant variant = Variant::DS;
    ModulatorKind kind = ModulatorKind::CVD;
    std::vector<int> clique_sizes; ///< CVD base graph
    int clique_side = 0;           ///< SVD base graph
    int independent_side = 0;      ///< SVD base graph; VC base graph size
    int k = 0;
    double density = 0.5;
    int threshold = 0;
    std::optional<int> budget; ///< defaults to the vertex count
};

/// Base cluster / split / edgeless graph plus k modulator vertices joined to
/// everything with probability `density`, vertex ids shuffled. Deterministic in the seed.
DomInstance gen_planted(std::uint64_t seed, const PlantedParams &params);

/// Elements become an independent side joined to a clique of sets by
/// membership; the elements form a cluster modulator. Requires budget >= 2,
/// a non-empty universe and family, and every element in some set.
DomInstance reduce_setcover_to_split(int universe_size, const std::vector<std::vector<int>> &family, int budget);

/// Literals are +i / -i for variable i in 1..variables.
struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
};

/// Uniform random clauses of exactly three literals.
CnfFormula random_3cnf(std::uint64_t seed, int variables, int clauses);

/// assignment[i-1] is the value of variable i.
bool evaluate(const CnfFormula &f, const std::vector<bool> &assignment);

/// First satisfying assignment in binary counting order, by enumeration.
std::optional<std::vector<bool>> brute_satisfy(const CnfFormula &f);

/// Variable edges x_i - ~x_i and a ten-vertex gadget per clause; clauses
/// shorter than three literals are padded by repeating their literals.
/// The variable vertices and d1..d13 of each gadget are recorded as a
/// vertex-cover modulator; the budget is variables + clauses.
DomInstance reduce_3sat_to_eds(const CnfFormula &f);

/// Reads x_i = true iff the literal vertex x_i is in D. D must be an EDS of
/// size variables + clauses of a gadget graph (labels intact).
std::vector<bool> extract_assignment(const DomInstance &reduced, const VertexSet &d);

/// Canonical text: comments, header, edges u < v ascending, modulator ascending.
std::string serialize_instance(const DomInstance &inst);

/// Strict parse; throws ParseError (with line) or ModulatorMismatch.
DomInstance parse_instance(std::string_view text);

std::string serialize_solution(const DomSolution &sol);

struct SolutionLine {
    Status status = Status::Infeasible;
    int size = 0;
    std::vector<int> vertices;
};

SolutionLine parse_solution(std::string_view text);

} // namespace domvar
