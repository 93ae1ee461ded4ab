#include "domvar/cvd_solvers.hpp"

#include "domvar/errors.hpp"
#include "domvar/oracle.hpp"
#include "guess_loop.hpp"

#include <algorithm>
#include <bit>

namespace domvar {

std::vector<VertexSet> enumerate_guesses(const VertexSet &s) {
    const std::vector<int> members = s.to_vector();
    const int k = static_cast<int>(members.size());
    if (k > 30) throw CapExceeded("modulator too large to enumerate guesses");
    std::vector<std::uint32_t> codes(std::size_t{1} << k);
    for (std::uint32_t c = 0; c < codes.size(); ++c) codes[c] = c;
    std::stable_sort(codes.begin(), codes.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<VertexSet> out;
    out.reserve(codes.size());
    for (std::uint32_t c : codes) {
        VertexSet g(s.capacity());
        for (int i = 0; i < k; ++i)
            if (c >> i & 1u) g.insert(members[static_cast<std::size_t>(i)]);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

using detail::GuessResult;
using detail::guess_loop;

struct Indexer {
    std::vector<int> index; // vertex -> element, or -1
    std::vector<int> vertex;

    Indexer(int n, const VertexSet &universe) : index(static_cast<std::size_t>(n), -1) {
        for (int v : universe) {
            index[static_cast<std::size_t>(v)] = static_cast<int>(vertex.size());
            vertex.push_back(v);
        }
        if (static_cast<int>(vertex.size()) > kMaxUniverse) throw CapExceeded("guess universe too large");
    }

    ElementMask mask(const VertexSet &set) const {
        ElementMask m = 0;
        for (int v : set)
            if (index[static_cast<std::size_t>(v)] >= 0) m |= ElementMask{1} << index[static_cast<std::size_t>(v)];
        return m;
    }
};

const ClusterPartition &require_cluster(const DomInstance &inst, std::optional<ClusterPartition> &cache) {
    if (inst.modulator.kind == ModulatorKind::SVD)
        throw ContractError("cluster solvers need a cluster or vertex-cover modulator");
    if (!cache) cache = cluster_partition(inst.graph, inst.modulator.vertices);
    return *cache;
}

GuessResult lift(const VertexSet &guess, const GuessReduction &red, const CoverSolution &cs, std::uint64_t states) {
    GuessResult r;
    r.states = states;
    if (!cs.feasible) return r;
    r.feasible = true;
    r.vertices = guess;
    for (int j : cs.witness) r.vertices.insert(red.family_vertex[static_cast<std::size_t>(j)]);
    r.size = r.vertices.size();
    return r;
}

GuessReduction ds_reduction(const Graph &g, const VertexSet &s, const ClusterPartition &part, const VertexSet &guess) {
    const VertexSet dominated = closed_neighborhood(g, guess);
    const Indexer ix(g.vertex_count(), s - dominated);
    GuessReduction red;
    red.universe_vertex = ix.vertex;
    red.cover.universe_size = static_cast<int>(ix.vertex.size());
    red.cover.block_mode = BlockMode::AtLeastFlag;
    red.cover.cover_mode = CoverMode::AtLeastOnce;
    for (const auto &clique : part.cliques) {
        int flag = 0;
        for (int v : clique) {
            if (!dominated.contains(v)) flag = 1;
            red.cover.family.push_back(ix.mask(g.neighbor_set(v)));
            red.family_vertex.push_back(v);
        }
        red.cover.block_sizes.push_back(static_cast<int>(clique.size()));
        red.cover.block_requirement.push_back(flag);
    }
    return red;
}

std::optional<GuessReduction> eds_reduction(const Graph &g, const VertexSet &s, const ClusterPartition &part,
                                            const VertexSet &guess) {
    const std::vector<int> picked = guess.to_vector();
    for (std::size_t i = 0; i < picked.size(); ++i)
        for (std::size_t j = i + 1; j < picked.size(); ++j)
            if (within_distance_two(g, picked[i], picked[j])) return std::nullopt;
    const VertexSet near = open_neighborhood(g, guess);
    const VertexSet far = n_equal_2(g, guess);
    const Indexer ix(g.vertex_count(), s - closed_neighborhood(g, guess));
    GuessReduction red;
    red.universe_vertex = ix.vertex;
    red.cover.universe_size = static_cast<int>(ix.vertex.size());
    red.cover.block_mode = BlockMode::ExactlyOne;
    red.cover.cover_mode = CoverMode::ExactlyOnce;
    for (const auto &clique : part.cliques) {
        const VertexSet c = VertexSet::from(g.vertex_count(), clique);
        if (c.is_subset_of(near)) continue; // dominated by the guess, nothing may be picked
        if (c.intersects(near)) return std::nullopt; // the rest lies in N^{=2}(S')
        const VertexSet candidates = c - far;
        if (candidates.empty()) return std::nullopt;
        for (int v : candidates) {
            red.cover.family.push_back(ix.mask(g.neighbor_set(v)));
            red.family_vertex.push_back(v);
        }
        red.cover.block_sizes.push_back(candidates.size());
    }
    return red;
}

} // namespace

GuessReduction reduce_ds_to_scp(const Graph &g, const VertexSet &s, const VertexSet &guess) {
    if (!guess.is_subset_of(s)) throw ContractError("guess must be a subset of the modulator");
    return ds_reduction(g, s, cluster_partition(g, s), guess);
}

std::optional<GuessReduction> eds_guess_preprocess(const Graph &g, const VertexSet &s, const VertexSet &guess) {
    if (!guess.is_subset_of(s)) throw ContractError("guess must be a subset of the modulator");
    return eds_reduction(g, s, cluster_partition(g, s), guess);
}

DomSolution solve_ds_cvd(const DomInstance &inst) {
    std::optional<ClusterPartition> cache;
    const ClusterPartition &part = require_cluster(inst, cache);
    const VertexSet &s = inst.modulator.vertices;
    return guess_loop(inst, [&](const VertexSet &guess) {
        const GuessReduction red = ds_reduction(inst.graph, s, part, guess);
        DpStats stats;
        const CoverSolution cs = solve_scp(red.cover, &stats);
        return lift(guess, red, cs, stats.states);
    });
}

DomSolution solve_eds_cvd(const DomInstance &inst) {
    std::optional<ClusterPartition> cache;
    const ClusterPartition &part = require_cluster(inst, cache);
    const VertexSet &s = inst.modulator.vertices;
    return guess_loop(inst, [&](const VertexSet &guess) {
        const auto red = eds_reduction(inst.graph, s, part, guess);
        if (!red) return GuessResult{};
        DpStats stats;
        const CoverSolution cs = solve_escp(red->cover, &stats);
        return lift(guess, *red, cs, stats.states);
    });
}

DomSolution solve_ids_cvd(const DomInstance &inst) {
    std::optional<ClusterPartition> cache;
    const ClusterPartition &part = require_cluster(inst, cache);
    const Graph &g = inst.graph;
    const VertexSet &s = inst.modulator.vertices;
    return guess_loop(inst, [&](const VertexSet &guess) {
        if (!is_independent(g, guess)) return GuessResult{};
        const VertexSet near = open_neighborhood(g, guess);
        const Indexer ix(g.vertex_count(), s - closed_neighborhood(g, guess));
        GuessReduction red;
        red.universe_vertex = ix.vertex;
        red.cover.universe_size = static_cast<int>(ix.vertex.size());
        red.cover.block_mode = BlockMode::ExactlyOne;
        red.cover.cover_mode = CoverMode::AtLeastOnce;
        for (const auto &clique : part.cliques) {
            const VertexSet candidates = VertexSet::from(g.vertex_count(), clique) - near;
            if (candidates.empty()) continue; // fully dominated and unpickable
            for (int v : candidates) {
                red.cover.family.push_back(ix.mask(g.neighbor_set(v)));
                red.family_vertex.push_back(v);
            }
            red.cover.block_sizes.push_back(candidates.size());
        }
        DpStats stats;
        const CoverSolution cs = solve_exact_one_scp(red.cover, &stats);
        return lift(guess, red, cs, stats.states);
    });
}

DomSolution solve_dc_cvd(const DomInstance &inst) {
    std::optional<ClusterPartition> cache;
    const ClusterPartition &part = require_cluster(inst, cache);
    const Graph &g = inst.graph;
    const VertexSet &s = inst.modulator.vertices;
    return guess_loop(inst, [&](const VertexSet &guess) {
        GuessResult best;
        if (!is_clique(g, guess)) return best;
        const VertexSet dominated = closed_neighborhood(g, guess);
        std::vector<std::size_t> open_cliques;
        for (std::size_t i = 0; i < part.cliques.size(); ++i)
            for (int v : part.cliques[i])
                if (!dominated.contains(v)) {
                    open_cliques.push_back(i);
                    break;
                }
        if (open_cliques.size() >= 2) return best;
        if ((!guess.empty() || g.vertex_count() == 0) && dominated == g.all_vertices()) {
            best.feasible = true;
            best.size = guess.size();
            best.vertices = guess;
            return best; // any clique pick would only add to it
        }
        VertexSet common = g.all_vertices();
        for (int x : guess) common &= g.neighbor_set(x);
        const Indexer ix(g.vertex_count(), s - dominated);
        std::vector<std::size_t> choices = open_cliques;
        if (choices.empty())
            for (std::size_t i = 0; i < part.cliques.size(); ++i) choices.push_back(i);
        for (std::size_t i : choices) {
            GuessReduction red;
            red.cover.universe_size = static_cast<int>(ix.vertex.size());
            red.universe_vertex = ix.vertex;
            red.cover.block_mode = BlockMode::AtLeastFlag;
            red.cover.cover_mode = CoverMode::AtLeastOnce;
            for (int v : part.cliques[i]) {
                if (!common.contains(v)) continue;
                red.cover.family.push_back(ix.mask(g.neighbor_set(v)));
                red.family_vertex.push_back(v);
            }
            red.cover.block_sizes.push_back(red.cover.family_size());
            red.cover.block_requirement.push_back(1); // at least one clique vertex
            DpStats stats;
            const CoverSolution cs = solve_scp(red.cover, &stats);
            const std::uint64_t states = best.states + stats.states;
            GuessResult r = lift(guess, red, cs, 0);
            if (r.feasible && (!best.feasible || r.size < best.size)) best = std::move(r);
            best.states = states;
        }
        return best;
    });
}

namespace {

struct ThresholdSetup {
    GuessReduction red;
    std::vector<int> block_max;
};

ThresholdSetup threshold_reduction(const Graph &g, const VertexSet &s, const ClusterPartition &part,
                                   const VertexSet &guess, int r) {
    const int n = g.vertex_count();
    std::vector<int> demand(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) demand[static_cast<std::size_t>(v)] = std::max(0, r - (g.neighbor_set(v) & guess).size());
    VertexSet open = g.empty_set();
    for (int v : s)
        if (demand[static_cast<std::size_t>(v)] > 0) open.insert(v);
    const Indexer ix(n, open);
    ThresholdSetup out;
    CoverInstance &c = out.red.cover;
    out.red.universe_vertex = ix.vertex;
    c.universe_size = static_cast<int>(ix.vertex.size());
    c.block_mode = BlockMode::AtLeastWeight;
    c.cover_mode = CoverMode::Multicover;
    c.max_weight = r;
    for (int v : ix.vertex) c.element_weight.push_back(demand[static_cast<std::size_t>(v)]);
    for (const auto &clique : part.cliques) {
        int top = 0;
        for (int v : clique) top = std::max(top, demand[static_cast<std::size_t>(v)]);
        for (int v : clique) {
            c.family.push_back(ix.mask(g.neighbor_set(v)));
            out.red.family_vertex.push_back(v);
            // a picked vertex is not its own neighbor
            c.surcharge.push_back(top > 0 && demand[static_cast<std::size_t>(v)] == top);
        }
        c.block_sizes.push_back(static_cast<int>(clique.size()));
        c.block_requirement.push_back(top);
        out.block_max.push_back(top);
    }
    return out;
}

} // namespace

DomSolution solve_thds_cvd(const DomInstance &inst) {
    std::optional<ClusterPartition> cache;
    const ClusterPartition &part = require_cluster(inst, cache);
    const int r = effective_threshold(inst.variant, inst.threshold);
    if (r < 1) throw ContractError("threshold solver needs r >= 1");
    return guess_loop(inst, [&](const VertexSet &guess) {
        const ThresholdSetup setup = threshold_reduction(inst.graph, inst.modulator.vertices, part, guess, r);
        DpStats stats;
        const CoverSolution cs = solve_wsmp(setup.red.cover, &stats);
        return lift(guess, setup.red, cs, stats.states);
    });
}

DomSolution solve_cvd(const DomInstance &inst) {
    switch (inst.variant) {
    case Variant::DS: return solve_ds_cvd(inst);
    case Variant::EDS: return solve_eds_cvd(inst);
    case Variant::IDS: return solve_ids_cvd(inst);
    case Variant::DC: return solve_dc_cvd(inst);
    case Variant::TDS:
    case Variant::THDS: return solve_thds_cvd(inst);
    }
    throw ContractError("unknown variant");
}

BlockRuleAudit audit_threshold_block_rule(const DomInstance &inst) {
    std::optional<ClusterPartition> cache;
    const ClusterPartition &part = require_cluster(inst, cache);
    const int r = effective_threshold(inst.variant, inst.threshold);
    if (r < 1) throw ContractError("threshold audit needs r >= 1");
    BlockRuleAudit audit;
    for (const VertexSet &guess : enumerate_guesses(inst.modulator.vertices)) {
        ++audit.guesses;
        ThresholdSetup setup = threshold_reduction(inst.graph, inst.modulator.vertices, part, guess, r);
        const CoverSolution exact = solve_wsmp(setup.red.cover);

        CoverInstance plain = setup.red.cover;
        plain.surcharge.clear();
        const CoverSolution ps = solve_wsmp(plain);
        if (ps.feasible) {
            VertexSet d = guess;
            for (int j : ps.witness) d.insert(setup.red.family_vertex[static_cast<std::size_t>(j)]);
            if (!check_solution(inst.graph, d, {Variant::THDS, r})) ++audit.plain_invalid;
            if (!exact.feasible || ps.size < exact.size) ++audit.plain_smaller;
        }

        CoverInstance plus = plain;
        plus.max_weight = r + 1;
        for (int &w : plus.block_requirement)
            if (w > 0) ++w;
        const CoverSolution po = solve_wsmp(plus);
        if (exact.feasible && (!po.feasible || po.size > exact.size)) ++audit.plus_one_larger;
    }
    return audit;
}

} // namespace domvar
