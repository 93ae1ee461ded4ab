#pragma once

#include "domvar/cover_dp.hpp"
#include "domvar/instances.hpp"
#include "domvar/oracle.hpp"

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using namespace domvar;

inline int pick(std::mt19937_64 &rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool coin(std::mt19937_64 &rng, double p) { return static_cast<double>(rng() >> 11) * 0x1p-53 < p; }

inline Graph random_graph(std::mt19937_64 &rng, int n, double p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}

inline DomInstance with_modulator(Graph g, ModulatorKind kind, std::vector<int> s, Variant v, int threshold = 0) {
    DomInstance inst;
    inst.modulator = {kind, VertexSet::from(g.vertex_count(), s)};
    inst.budget = g.vertex_count();
    inst.graph = std::move(g);
    inst.variant = v;
    inst.threshold = effective_threshold(v, threshold);
    return inst;
}

enum class Shape { Scp, Escp, ExactOne, Wsmp, WsmpSurcharge };

/// Random cover instance of the given shape; |U| <= max_u, m <= max_m, r <= max_r.
inline CoverInstance random_cover(std::mt19937_64 &rng, Shape shape, int max_u, int max_m, int max_r = 3) {
    CoverInstance inst;
    inst.universe_size = pick(rng, 0, max_u);
    const int m = pick(rng, 0, max_m);
    const ElementMask all = inst.universe_size == 0 ? 0u : (ElementMask{1} << inst.universe_size) - 1;
    const double density = 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    for (int j = 0; j < m; ++j) {
        ElementMask s = 0;
        for (int u = 0; u < inst.universe_size; ++u)
            if (coin(rng, density)) s |= ElementMask{1} << u;
        inst.family.push_back(s & all);
    }
    int left = m;
    while (left > 0) {
        const int len = pick(rng, 1, std::min(left, 4));
        inst.block_sizes.push_back(len);
        left -= len;
    }
    if (coin(rng, 0.1)) inst.block_sizes.push_back(0); // empty block
    switch (shape) {
    case Shape::Scp:
        for (std::size_t b = 0; b < inst.block_sizes.size(); ++b) inst.block_requirement.push_back(coin(rng, 0.5));
        break;
    case Shape::Escp:
        inst.block_mode = BlockMode::ExactlyOne;
        inst.cover_mode = CoverMode::ExactlyOnce;
        break;
    case Shape::ExactOne:
        inst.block_mode = BlockMode::ExactlyOne;
        break;
    case Shape::Wsmp:
    case Shape::WsmpSurcharge: {
        const int r = pick(rng, 1, max_r);
        inst.block_mode = BlockMode::AtLeastWeight;
        inst.cover_mode = CoverMode::Multicover;
        inst.max_weight = r;
        for (std::size_t b = 0; b < inst.block_sizes.size(); ++b) inst.block_requirement.push_back(pick(rng, 0, r));
        for (int u = 0; u < inst.universe_size; ++u) inst.element_weight.push_back(pick(rng, 0, r));
        if (shape == Shape::WsmpSurcharge)
            for (int j = 0; j < m; ++j) inst.surcharge.push_back(coin(rng, 0.4));
        break;
    }
    }
    if (coin(rng, 0.1)) inst.budget = pick(rng, 0, m);
    return inst;
}

/// Independent optimum: every subfamily as a bitmask, constraints counted directly.
inline std::optional<int> enumerate_min_cover(const CoverInstance &inst) {
    const int m = inst.family_size();
    std::vector<int> block_of;
    for (int b = 0; b < inst.block_count(); ++b)
        for (int i = 0; i < inst.block_sizes[static_cast<std::size_t>(b)]; ++i) block_of.push_back(b);
    std::optional<int> best;
    for (std::uint32_t pickmask = 0; pickmask < (1u << m); ++pickmask) {
        const int size = std::popcount(pickmask);
        if (best && size >= *best) continue;
        if (inst.budget && size > *inst.budget) continue;
        std::vector<int> per_block(static_cast<std::size_t>(inst.block_count()), 0);
        std::vector<bool> marked(static_cast<std::size_t>(inst.block_count()), false);
        std::vector<int> hits(static_cast<std::size_t>(inst.universe_size), 0);
        for (int j = 0; j < m; ++j) {
            if (!(pickmask >> j & 1u)) continue;
            ++per_block[static_cast<std::size_t>(block_of[static_cast<std::size_t>(j)])];
            if (!inst.surcharge.empty() && inst.surcharge[static_cast<std::size_t>(j)])
                marked[static_cast<std::size_t>(block_of[static_cast<std::size_t>(j)])] = true;
            for (int u = 0; u < inst.universe_size; ++u)
                hits[static_cast<std::size_t>(u)] += (inst.family[static_cast<std::size_t>(j)] >> u) & 1u;
        }
        bool ok = true;
        for (int u = 0; u < inst.universe_size && ok; ++u) {
            const int h = hits[static_cast<std::size_t>(u)];
            if (inst.cover_mode == CoverMode::AtLeastOnce) ok = h >= 1;
            else if (inst.cover_mode == CoverMode::ExactlyOnce) ok = h == 1;
            else ok = h >= inst.element_weight[static_cast<std::size_t>(u)];
        }
        for (int b = 0; b < inst.block_count() && ok; ++b) {
            const int c = per_block[static_cast<std::size_t>(b)];
            const int need = inst.block_requirement.empty() ? 0 : inst.block_requirement[static_cast<std::size_t>(b)];
            if (inst.block_mode == BlockMode::ExactlyOne) ok = c == 1;
            else if (inst.block_mode == BlockMode::AtLeastFlag) ok = c >= need;
            else ok = c >= need + (marked[static_cast<std::size_t>(b)] ? 1 : 0);
        }
        if (ok) best = size;
    }
    return best;
}

/// Planted instance for a (variant, kind) pair with n <= 14 and the given k.
inline DomInstance random_planted(std::mt19937_64 &rng, Variant v, ModulatorKind kind, int k, int max_n = 14,
                                  int threshold = 0) {
    PlantedParams p;
    p.variant = v;
    p.kind = kind;
    p.k = k;
    p.threshold = threshold;
    p.density = 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const int base_budget = max_n - k;
    if (kind == ModulatorKind::CVD) {
        int left = pick(rng, 1, base_budget);
        while (left > 0) {
            const int size = pick(rng, 1, std::min(left, 4));
            p.clique_sizes.push_back(size);
            left -= size;
        }
    } else if (kind == ModulatorKind::SVD) {
        const int total = pick(rng, 1, base_budget);
        p.clique_side = pick(rng, 0, total);
        p.independent_side = total - p.clique_side;
    } else {
        p.independent_side = pick(rng, 1, base_budget);
    }
    return gen_planted(rng(), p);
}

} // namespace testing_support
