#include "domvar/modulator.hpp"

#include <algorithm>

namespace domvar {

std::string_view to_string(ModulatorKind kind) {
    switch (kind) {
    case ModulatorKind::CVD: return "cvd";
    case ModulatorKind::SVD: return "svd";
    case ModulatorKind::VC: return "vc";
    }
    return "?";
}

std::optional<ModulatorKind> parse_kind(std::string_view token) {
    if (token == "cvd") return ModulatorKind::CVD;
    if (token == "svd") return ModulatorKind::SVD;
    if (token == "vc") return ModulatorKind::VC;
    return std::nullopt;
}

bool verify_modulator(const Graph &g, const Modulator &m) {
    const VertexSet alive = g.all_vertices() - m.vertices;
    switch (m.kind) {
    case ModulatorKind::CVD: return !find_induced_p3(g, alive).has_value();
    case ModulatorKind::SVD: return is_split(g, alive);
    case ModulatorKind::VC: return is_independent(g, alive);
    }
    return false;
}

namespace {

template <typename FindObstruction>
bool branch_delete(const Graph &g, VertexSet &deleted, int budget, const FindObstruction &find) {
    auto witness = find(g, g.all_vertices() - deleted);
    if (!witness) return true;
    if (budget == 0) return false;
    std::vector<int> order = *witness;
    std::sort(order.begin(), order.end());
    for (int v : order) {
        deleted.insert(v);
        if (branch_delete(g, deleted, budget - 1, find)) return true;
        deleted.erase(v);
    }
    return false;
}

template <typename FindObstruction>
std::optional<Modulator> iterative_deepening(const Graph &g, int k, ModulatorKind kind,
                                             const FindObstruction &find) {
    for (int budget = 0; budget <= k; ++budget) {
        VertexSet deleted = g.empty_set();
        if (branch_delete(g, deleted, budget, find)) return Modulator{kind, deleted};
    }
    return std::nullopt;
}

} // namespace

std::optional<Modulator> find_cvd(const Graph &g, int k) {
    return iterative_deepening(g, k, ModulatorKind::CVD, find_induced_p3);
}

std::optional<Modulator> find_svd(const Graph &g, int k) {
    return iterative_deepening(g, k, ModulatorKind::SVD, [](const Graph &h, const VertexSet &alive) {
        if (is_split(h, alive)) return std::optional<std::vector<int>>{};
        return find_split_obstruction(h, alive);
    });
}

} // namespace domvar
