#pragma once

#include "domvar/graph.hpp"

#include <optional>
#include <string_view>

namespace domvar {

/// Residual class promised by a modulator: cluster graph, split graph or edgeless.
enum class ModulatorKind { CVD, SVD, VC };

std::string_view to_string(ModulatorKind kind);
std::optional<ModulatorKind> parse_kind(std::string_view token);

struct Modulator {
    ModulatorKind kind = ModulatorKind::CVD;
    VertexSet vertices;
};

/// True iff G - M.vertices is in M.kind's graph class.
bool verify_modulator(const Graph &g, const Modulator &m);

/// Smallest cluster vertex deletion set of size <= k, found by branching on
/// the lexicographically smallest induced P3.
std::optional<Modulator> find_cvd(const Graph &g, int k);

/// Smallest split vertex deletion set of size <= k, found by branching on
/// the first induced 2K2/C4/C5.
std::optional<Modulator> find_svd(const Graph &g, int k);

} // namespace domvar
