#pragma once

#include "domvar/graph.hpp"
#include "domvar/modulator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domvar {

enum class Variant { DS, EDS, IDS, DC, TDS, THDS };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view token);

/// Variant plus its threshold; TDS is THDS with r = 1.
struct VariantSpec {
    Variant variant = Variant::DS;
    int threshold = 0;
};

/// Threshold actually used by the checker: 1 for TDS, `r` for THDS, else 0.
int effective_threshold(Variant v, int r);

struct DomInstance {
    Graph graph;
    Modulator modulator;
    Variant variant = Variant::DS;
    int budget = 0;
    int threshold = 0;
    /// Leading comment lines of the text form, without the '#'.
    std::vector<std::string> comments;

    VariantSpec spec() const { return {variant, effective_threshold(variant, threshold)}; }
};

bool operator==(const DomInstance &a, const DomInstance &b);

enum class Status { Feasible, Infeasible };

std::string_view to_string(Status s);

/// Instrumentation shared by all solvers; zero when an algorithm has no such notion.
struct Counters {
    std::uint64_t dp_states = 0;
    std::uint64_t guesses = 0;
    std::uint64_t branch_nodes = 0;
    std::uint64_t fallback_branches = 0;
    std::uint64_t measure_violations = 0;
};

struct DomSolution {
    Status status = Status::Infeasible;
    VertexSet vertices;
    int size = 0;
    VertexSet guess_used;
    Counters counters;

    bool feasible() const { return status == Status::Feasible; }
};

} // namespace domvar
