#include "domvar/oracle.hpp"

#include "domvar/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace domvar {

bool check_solution(const Graph &g, const VertexSet &d, const VariantSpec &spec) {
    const int n = g.vertex_count();
    if (d.capacity() != n) return false;
    switch (spec.variant) {
    case Variant::DS:
    case Variant::IDS:
    case Variant::DC: {
        if (closed_neighborhood(g, d) != g.all_vertices()) return false;
        if (spec.variant == Variant::IDS) return is_independent(g, d);
        if (spec.variant == Variant::DC) return is_clique(g, d);
        return true;
    }
    case Variant::EDS:
        for (int v = 0; v < n; ++v)
            if ((closed_neighborhood(g, v) & d).size() != 1) return false;
        return true;
    case Variant::TDS:
    case Variant::THDS: {
        const int r = effective_threshold(spec.variant, spec.threshold);
        for (int v = 0; v < n; ++v)
            if ((g.neighbor_set(v) & d).size() < r) return false;
        return true;
    }
    }
    return false;
}

namespace {

// Calls visit(indices) for every size-`size` combination of 0..n-1 in
// lexicographic order; stops when visit returns true.
bool for_each_combination(int n, int size, const std::function<bool(const std::vector<int> &)> &visit) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (size > n) return false;
    while (true) {
        if (visit(idx)) return true;
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

DomSolution brute_min(const Graph &g, const VariantSpec &spec, int cap) {
    const int n = g.vertex_count();
    if (n > cap) throw CapExceeded("brute_min refuses " + std::to_string(n) + " vertices (cap " + std::to_string(cap) + ")");
    DomSolution sol;
    sol.vertices = g.empty_set();
    sol.guess_used = g.empty_set();
    for (int size = 0; size <= n; ++size) {
        bool found = for_each_combination(n, size, [&](const std::vector<int> &idx) {
            VertexSet d = VertexSet::from(n, idx);
            if (!check_solution(g, d, spec)) return false;
            sol.vertices = d;
            return true;
        });
        if (found) {
            sol.status = Status::Feasible;
            sol.size = size;
            return sol;
        }
    }
    return sol;
}

CoverSolution brute_cover(const CoverInstance &inst) {
    validate(inst);
    const int m = inst.family_size();
    if (m > kBruteFamilyCap) throw CapExceeded("brute_cover refuses " + std::to_string(m) + " sets");
    CoverSolution sol;
    const int limit = inst.budget ? std::min(m, *inst.budget) : m;
    for (int size = 0; size <= limit; ++size) {
        bool found = for_each_combination(m, size, [&](const std::vector<int> &idx) {
            if (!satisfies(inst, idx)) return false;
            sol.witness = idx;
            return true;
        });
        if (found) {
            sol.feasible = true;
            sol.size = size;
            return sol;
        }
    }
    return sol;
}

DomSolution search_eds(const Graph &g, std::optional<int> target) {
    const int n = g.vertex_count();
    std::vector<VertexSet> closed;
    for (int v = 0; v < n; ++v) closed.push_back(closed_neighborhood(g, v));

    DomSolution best;
    best.vertices = g.empty_set();
    best.guess_used = g.empty_set();
    int best_size = target ? *target + 1 : n + 1;
    VertexSet picked = g.empty_set();
    VertexSet dominated = g.empty_set();
    bool done = false;

    std::function<void(int)> recurse = [&](int size) {
        if (done) return;
        const int v = (g.all_vertices() - dominated).first();
        if (v < 0) {
            if (target && size != *target) return;
            best.status = Status::Feasible;
            best.vertices = picked;
            best.size = size;
            best_size = size;
            if (target) done = true;
            return;
        }
        if (size + 1 >= best_size) return;
        ++best.counters.branch_nodes;
        for (int u : closed[static_cast<std::size_t>(v)]) {
            if (closed[static_cast<std::size_t>(u)].intersects(dominated)) continue;
            picked.insert(u);
            dominated |= closed[static_cast<std::size_t>(u)];
            recurse(size + 1);
            dominated -= closed[static_cast<std::size_t>(u)];
            picked.erase(u);
            if (done) return;
        }
    };
    recurse(0);
    return best;
}

VertexSet normalize_split_dominating(const Graph &g, const SplitPartition &p, const VertexSet &d,
                                     const VariantSpec &spec) {
    if (spec.variant != Variant::DS && spec.variant != Variant::DC && spec.variant != Variant::TDS)
        throw ContractError("normalization is defined for DS, DC and TDS only");
    if (!check_solution(g, d, spec)) throw ContractError("input set is not a solution");
    if (!(p.clique_side | p.independent_side).is_subset_of(g.all_vertices()) ||
        (p.clique_side | p.independent_side) != g.all_vertices())
        throw ContractError("partition must cover the whole graph");
    if (spec.variant == Variant::TDS && (p.clique_side.size() < 2 || d.size() < 2))
        throw ContractError("TDS normalization needs |C| >= 2 and |D| >= 2");
    VertexSet out = d & p.clique_side;
    for (int u : d & p.independent_side) {
        const VertexSet nbrs = g.neighbor_set(u) & p.clique_side;
        if (nbrs.empty()) throw ContractError("independent vertex without clique neighbor: graph not connected");
        out.insert(nbrs.first());
    }
    if (spec.variant == Variant::TDS && out.size() < 2) out.insert((p.clique_side - out).first());
    return out;
}

bool is_vertex_cover(const Graph &g, const VertexSet &t) {
    for (auto [u, v] : g.edges())
        if (!t.contains(u) && !t.contains(v)) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph &g, const VertexSet &t) {
    if (!is_vertex_cover(g, t)) return false;
    // Dropping v uncovers an edge iff v has a neighbor outside T.
    for (int v : t)
        if (g.neighbor_set(v).is_subset_of(t)) return false;
    return true;
}

VertexSet mmvc_from_ids(const Graph &g, const VertexSet &set, ComplementDirection direction) {
    if (direction == ComplementDirection::CoverToIds && !is_minimal_vertex_cover(g, set))
        throw ContractError("input is not a minimal vertex cover");
    if (direction == ComplementDirection::IdsToCover && !check_solution(g, set, {Variant::IDS, 0}))
        throw ContractError("input is not an independent dominating set");
    return g.all_vertices() - set;
}

int brute_max_minimal_vertex_cover(const Graph &g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) throw CapExceeded("vertex cover enumeration refuses " + std::to_string(n) + " vertices");
    for (int size = n; size >= 0; --size) {
        bool found = for_each_combination(n, size, [&](const std::vector<int> &idx) {
            return is_minimal_vertex_cover(g, VertexSet::from(n, idx));
        });
        if (found) return size;
    }
    return 0;
}

} // namespace domvar
