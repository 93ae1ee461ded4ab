#include "domvar/cover_dp.hpp"

#include "domvar/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace domvar {

void validate(const CoverInstance &inst) {
    if (inst.universe_size < 0 || inst.universe_size > 31)
        throw ContractError("universe size must lie in [0,31]");
    const ElementMask all = inst.universe_size == 0 ? 0u : (~0u >> (32 - inst.universe_size));
    for (ElementMask s : inst.family)
        if (s & ~all) throw ContractError("family set contains an element outside the universe");
    if (std::accumulate(inst.block_sizes.begin(), inst.block_sizes.end(), 0) != inst.family_size())
        throw ContractError("block sizes do not partition the family");
    for (int b : inst.block_sizes)
        if (b < 0) throw ContractError("negative block size");
    if (inst.block_mode != BlockMode::ExactlyOne &&
        static_cast<int>(inst.block_requirement.size()) != inst.block_count())
        throw ContractError("one requirement per block expected");
    if (inst.max_weight < 0) throw ContractError("negative weight bound");
    const int cap = inst.block_mode == BlockMode::AtLeastFlag ? 1 : inst.max_weight;
    if (inst.block_mode != BlockMode::ExactlyOne)
        for (int w : inst.block_requirement)
            if (w < 0 || w > cap) throw ContractError("block requirement out of range");
    if (inst.cover_mode == CoverMode::Multicover) {
        if (static_cast<int>(inst.element_weight.size()) != inst.universe_size)
            throw ContractError("one weight per element expected");
        for (int w : inst.element_weight)
            if (w < 0 || w > inst.max_weight) throw ContractError("element weight out of range");
    }
    if (!inst.surcharge.empty()) {
        if (inst.block_mode != BlockMode::AtLeastWeight)
            throw ContractError("surcharge marks need AtLeastWeight blocks");
        if (static_cast<int>(inst.surcharge.size()) != inst.family_size())
            throw ContractError("one surcharge mark per set expected");
    }
}

bool satisfies(const CoverInstance &inst, const std::vector<int> &witness) {
    std::vector<int> hits(static_cast<std::size_t>(inst.universe_size), 0);
    std::vector<bool> used(inst.family.size(), false);
    for (int j : witness) {
        if (j < 0 || j >= inst.family_size() || used[static_cast<std::size_t>(j)]) return false;
        used[static_cast<std::size_t>(j)] = true;
        for (int u = 0; u < inst.universe_size; ++u)
            if (inst.family[static_cast<std::size_t>(j)] >> u & 1u) ++hits[static_cast<std::size_t>(u)];
    }
    for (int u = 0; u < inst.universe_size; ++u) {
        const int h = hits[static_cast<std::size_t>(u)];
        switch (inst.cover_mode) {
        case CoverMode::AtLeastOnce: if (h < 1) return false; break;
        case CoverMode::ExactlyOnce: if (h != 1) return false; break;
        case CoverMode::Multicover:
            if (h < inst.element_weight[static_cast<std::size_t>(u)]) return false;
            break;
        }
    }
    int start = 0;
    for (int b = 0; b < inst.block_count(); ++b) {
        const int len = inst.block_sizes[static_cast<std::size_t>(b)];
        int picked = 0;
        bool marked = false;
        for (int j = start; j < start + len; ++j) {
            if (!used[static_cast<std::size_t>(j)]) continue;
            ++picked;
            if (!inst.surcharge.empty() && inst.surcharge[static_cast<std::size_t>(j)]) marked = true;
        }
        start += len;
        switch (inst.block_mode) {
        case BlockMode::AtLeastFlag:
            if (picked < inst.block_requirement[static_cast<std::size_t>(b)]) return false;
            break;
        case BlockMode::ExactlyOne:
            if (picked != 1) return false;
            break;
        case BlockMode::AtLeastWeight:
            if (picked < inst.block_requirement[static_cast<std::size_t>(b)] + (marked ? 1 : 0)) return false;
            break;
        }
    }
    return true;
}

namespace {

using Value = std::uint16_t;

enum class Order { Reference, Parallel };

// The family in processing order: reversed, so that walking the table back
// from its last layer decides the smallest original indices first.
struct Prepared {
    int m = 0;
    std::vector<ElementMask> sets;    // by processing position
    std::vector<int> original;        // processing position -> family index
    std::vector<bool> first_in_block; // processing position starts its block
    std::vector<int> requirement;     // requirement of the block of each position
    std::vector<int> handoff;         // requirement of the previous block (0 for none)
    std::vector<bool> marked;         // surcharge per position
    int final_requirement = 0;
    bool trivially_infeasible = false;
    Value inf = 0;
};

Prepared prepare(const CoverInstance &inst) {
    validate(inst);
    Prepared p;
    p.m = inst.family_size();
    p.inf = static_cast<Value>(p.m + 1);
    auto req_of = [&](int block) {
        return inst.block_mode == BlockMode::ExactlyOne ? 1 : inst.block_requirement[static_cast<std::size_t>(block)];
    };
    std::vector<int> block_of(static_cast<std::size_t>(p.m));
    std::vector<bool> starts(static_cast<std::size_t>(p.m), false);
    int pos = 0;
    for (int b = 0; b < inst.block_count(); ++b) {
        const int len = inst.block_sizes[static_cast<std::size_t>(b)];
        if (len == 0 && req_of(b) > 0) p.trivially_infeasible = true;
        for (int j = pos; j < pos + len; ++j) block_of[static_cast<std::size_t>(j)] = b;
        // reversed: the last set of a block comes first in processing order
        if (len > 0) starts[static_cast<std::size_t>(pos + len - 1)] = true;
        pos += len;
    }
    for (int q = 0; q < p.m; ++q) {
        const int j = p.m - 1 - q;
        p.original.push_back(j);
        p.sets.push_back(inst.family[static_cast<std::size_t>(j)]);
        p.first_in_block.push_back(starts[static_cast<std::size_t>(j)]);
        p.requirement.push_back(req_of(block_of[static_cast<std::size_t>(j)]));
        p.marked.push_back(!inst.surcharge.empty() && inst.surcharge[static_cast<std::size_t>(j)]);
    }
    for (int q = 0; q < p.m; ++q)
        p.handoff.push_back(q == 0 ? 0 : p.requirement[static_cast<std::size_t>(q - 1)]);
    p.final_requirement = p.m == 0 ? 0 : p.requirement.back();
    return p;
}

CoverSolution finish(const CoverInstance &inst, int value, int inf, std::vector<int> witness) {
    CoverSolution sol;
    if (value >= inf || (inst.budget && value > *inst.budget)) return sol;
    sol.feasible = true;
    sol.size = value;
    std::sort(witness.begin(), witness.end());
    sol.witness = std::move(witness);
    return sol;
}

void check_table(std::uint64_t entries) {
    if (entries > (std::uint64_t{1} << 30)) throw CapExceeded("DP table too large");
}

// --- subset-indexed tables (SCP, ESCP, exact-one SCP) ---------------------

enum class SubsetProblem { AtLeastFlag, Exact, ExactOne };

struct Step {
    bool ok;
    int next_b;
};

// Recurrence transitions from (position q, flag b) for skipping / picking.
Step skip_step(SubsetProblem prob, const Prepared &p, int q, int b) {
    const bool first = p.first_in_block[static_cast<std::size_t>(q)];
    const int prev = p.handoff[static_cast<std::size_t>(q)];
    switch (prob) {
    case SubsetProblem::AtLeastFlag:
        if (!first) return {true, b};
        return {b == 0, prev};
    case SubsetProblem::Exact:
    case SubsetProblem::ExactOne:
        if (!first) return {true, b};
        return {b == 0, prev};
    }
    return {false, 0};
}

Step pick_step(SubsetProblem prob, const Prepared &p, int q, int b, ElementMask w) {
    const bool first = p.first_in_block[static_cast<std::size_t>(q)];
    const int prev = p.handoff[static_cast<std::size_t>(q)];
    const ElementMask s = p.sets[static_cast<std::size_t>(q)];
    switch (prob) {
    case SubsetProblem::AtLeastFlag:
        return {true, first ? prev : 0};
    case SubsetProblem::Exact:
        if ((s & ~w) != 0) return {false, 0};
        return {b == 1, first ? prev : 0};
    case SubsetProblem::ExactOne:
        return {b == 1, first ? prev : 0};
    }
    return {false, 0};
}

struct SubsetTable {
    int k = 0;
    std::size_t subsets = 0;
    std::vector<Value> value;  // layer 0 is the empty prefix
    std::vector<std::uint8_t> pick;
    std::size_t at(int layer, ElementMask w, int b) const {
        return ((static_cast<std::size_t>(layer) * subsets) + w) * 2 + static_cast<std::size_t>(b);
    }
};

CoverSolution solve_subset(const CoverInstance &inst, SubsetProblem prob, Order order, DpStats *stats) {
    if (inst.universe_size > kMaxUniverse) throw CapExceeded("universe too large for the subset table");
    const Prepared p = prepare(inst);
    if (p.trivially_infeasible) return {};
    const ElementMask full = inst.universe_size == 0 ? 0u : (~0u >> (32 - inst.universe_size));
    if (p.m == 0) return finish(inst, full == 0 ? 0 : 1, 1, {});

    SubsetTable t;
    t.k = inst.universe_size;
    t.subsets = std::size_t{1} << t.k;
    check_table(static_cast<std::uint64_t>(p.m + 1) * t.subsets * 2);
    t.value.assign(static_cast<std::size_t>(p.m + 1) * t.subsets * 2, p.inf);
    t.pick.assign(t.value.size(), 0);
    t.value[t.at(0, 0, 0)] = 0;

    auto cell = [&](ElementMask w, int q) {
        const ElementMask s = p.sets[static_cast<std::size_t>(q)];
        for (int b = 0; b < 2; ++b) {
            Value best = p.inf;
            std::uint8_t chose_pick = 0;
            const Step sk = skip_step(prob, p, q, b);
            if (sk.ok) best = t.value[t.at(q, w, sk.next_b)];
            const Step pk = pick_step(prob, p, q, b, w);
            if (pk.ok) {
                const Value sub = t.value[t.at(q, w & ~s, pk.next_b)];
                const Value v = sub >= p.inf ? p.inf : static_cast<Value>(sub + 1);
                if (v < p.inf && v <= best) {
                    best = v;
                    chose_pick = 1;
                }
            }
            t.value[t.at(q + 1, w, b)] = best;
            t.pick[t.at(q + 1, w, b)] = chose_pick;
        }
    };

    const auto subsets = static_cast<long long>(t.subsets);
    if (order == Order::Reference) {
        for (long long w = 0; w < subsets; ++w)
            for (int q = 0; q < p.m; ++q) cell(static_cast<ElementMask>(w), q);
    } else {
        for (int q = 0; q < p.m; ++q) {
#pragma omp parallel for schedule(static)
            for (long long w = 0; w < subsets; ++w) cell(static_cast<ElementMask>(w), q);
        }
    }
    if (stats) stats->states += static_cast<std::uint64_t>(p.m) * t.subsets * 2;

    const int b0 = prob == SubsetProblem::AtLeastFlag ? p.final_requirement : 1;
    const int value = t.value[t.at(p.m, full, b0)];
    std::vector<int> witness;
    if (value < p.inf) {
        ElementMask w = full;
        int b = b0;
        for (int q = p.m - 1; q >= 0; --q) {
            if (t.pick[t.at(q + 1, w, b)]) {
                witness.push_back(p.original[static_cast<std::size_t>(q)]);
                b = pick_step(prob, p, q, b, w).next_b;
                w &= ~p.sets[static_cast<std::size_t>(q)];
            } else {
                b = skip_step(prob, p, q, b).next_b;
            }
        }
    }
    return finish(inst, value, p.inf, std::move(witness));
}

// --- weight-vector tables (WSMP) ------------------------------------------

struct WeightTable {
    std::size_t vectors = 0;
    int radix = 2; // r + 1
    int flags = 1; // surcharge bit present -> 2
    std::vector<Value> value;
    std::vector<std::uint8_t> pick;
    std::size_t at(int layer, std::size_t w, int b, int s) const {
        return (((static_cast<std::size_t>(layer) * vectors) + w) * static_cast<std::size_t>(radix) +
                static_cast<std::size_t>(b)) * static_cast<std::size_t>(flags) + static_cast<std::size_t>(s);
    }
};

struct WeightStep {
    bool ok;
    int next_b;
    int next_s;
};

WeightStep wsmp_skip(const Prepared &p, int q, int b, int s) {
    if (!p.first_in_block[static_cast<std::size_t>(q)]) return {true, b, s};
    return {b == 0, p.handoff[static_cast<std::size_t>(q)], 0};
}

WeightStep wsmp_pick(const Prepared &p, int q, int b, int s) {
    const bool marked = p.marked[static_cast<std::size_t>(q)];
    // A marked pick raises the block's need by one the first time it happens.
    const int need = (marked && s == 0) ? b : std::max(b - 1, 0);
    const int next_s = marked ? 1 : s;
    if (!p.first_in_block[static_cast<std::size_t>(q)]) return {true, need, next_s};
    const bool ok = (marked && s == 0) ? b == 0 : b <= 1;
    return {ok, p.handoff[static_cast<std::size_t>(q)], 0};
}

CoverSolution solve_weighted(const CoverInstance &inst, Order order, DpStats *stats) {
    const Prepared p = prepare(inst);
    if (p.trivially_infeasible) return {};
    const int k = inst.universe_size;
    const int r = inst.max_weight;
    WeightTable t;
    t.radix = r + 1;
    t.flags = inst.surcharge.empty() ? 1 : 2;
    std::vector<std::size_t> power(static_cast<std::size_t>(k) + 1, 1);
    for (int u = 0; u < k; ++u) {
        power[static_cast<std::size_t>(u) + 1] = power[static_cast<std::size_t>(u)] * static_cast<std::size_t>(t.radix);
        if (power[static_cast<std::size_t>(u) + 1] > (std::size_t{1} << 30)) throw CapExceeded("weight table too large");
    }
    t.vectors = power[static_cast<std::size_t>(k)];
    std::size_t target = 0;
    for (int u = 0; u < k; ++u)
        target += static_cast<std::size_t>(inst.element_weight[static_cast<std::size_t>(u)]) * power[static_cast<std::size_t>(u)];
    if (p.m == 0) return finish(inst, target == 0 ? 0 : 1, 1, {});

    check_table(static_cast<std::uint64_t>(p.m + 1) * t.vectors * static_cast<std::uint64_t>(t.radix * t.flags));
    t.value.assign(static_cast<std::size_t>(p.m + 1) * t.vectors * static_cast<std::size_t>(t.radix * t.flags), p.inf);
    t.pick.assign(t.value.size(), 0);
    t.value[t.at(0, 0, 0, 0)] = 0;

    // Subtract one from every positive digit of w that belongs to the set.
    auto decrement = [&](std::size_t w, ElementMask set) {
        std::size_t out = w;
        for (ElementMask rest = set; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((w / power[static_cast<std::size_t>(u)]) % static_cast<std::size_t>(t.radix) > 0)
                out -= power[static_cast<std::size_t>(u)];
        }
        return out;
    };

    auto cell = [&](std::size_t w, int q) {
        const std::size_t reduced = decrement(w, p.sets[static_cast<std::size_t>(q)]);
        for (int b = 0; b <= r; ++b)
            for (int s = 0; s < t.flags; ++s) {
                Value best = p.inf;
                std::uint8_t chose_pick = 0;
                const WeightStep sk = wsmp_skip(p, q, b, s);
                if (sk.ok) best = t.value[t.at(q, w, sk.next_b, sk.next_s)];
                const WeightStep pk = wsmp_pick(p, q, b, s);
                if (pk.ok) {
                    const Value sub = t.value[t.at(q, reduced, pk.next_b, pk.next_s)];
                    const Value v = sub >= p.inf ? p.inf : static_cast<Value>(sub + 1);
                    if (v < p.inf && v <= best) {
                        best = v;
                        chose_pick = 1;
                    }
                }
                t.value[t.at(q + 1, w, b, s)] = best;
                t.pick[t.at(q + 1, w, b, s)] = chose_pick;
            }
    };

    const auto vectors = static_cast<long long>(t.vectors);
    for (int q = 0; q < p.m; ++q) {
        if (order == Order::Reference) {
            for (long long w = 0; w < vectors; ++w) cell(static_cast<std::size_t>(w), q);
        } else {
#pragma omp parallel for schedule(static)
            for (long long w = 0; w < vectors; ++w) cell(static_cast<std::size_t>(w), q);
        }
    }
    if (stats) stats->states += static_cast<std::uint64_t>(p.m) * t.vectors * static_cast<std::uint64_t>(t.radix * t.flags);

    const int value = t.value[t.at(p.m, target, p.final_requirement, 0)];
    std::vector<int> witness;
    if (value < p.inf) {
        std::size_t w = target;
        int b = p.final_requirement, s = 0;
        for (int q = p.m - 1; q >= 0; --q) {
            if (t.pick[t.at(q + 1, w, b, s)]) {
                witness.push_back(p.original[static_cast<std::size_t>(q)]);
                const WeightStep pk = wsmp_pick(p, q, b, s);
                w = decrement(w, p.sets[static_cast<std::size_t>(q)]);
                b = pk.next_b;
                s = pk.next_s;
            } else {
                const WeightStep sk = wsmp_skip(p, q, b, s);
                b = sk.next_b;
                s = sk.next_s;
            }
        }
    }
    return finish(inst, value, p.inf, std::move(witness));
}

void require(bool cond, const char *what) {
    if (!cond) throw ContractError(std::string("cover instance has the wrong modes for ") + what);
}

CoverSolution set_cover(const CoverInstance &inst, Order order, DpStats *stats) {
    require(inst.cover_mode == CoverMode::AtLeastOnce && inst.block_mode == BlockMode::AtLeastFlag &&
                std::all_of(inst.block_requirement.begin(), inst.block_requirement.end(), [](int f) { return f == 0; }),
            "set cover");
    // Without flags the blocks carry no constraint; solve the flattened family.
    CoverInstance flat = inst;
    flat.block_sizes = {inst.family_size()};
    flat.block_requirement = {0};
    return solve_subset(flat, SubsetProblem::AtLeastFlag, order, stats);
}

CoverSolution scp(const CoverInstance &inst, Order order, DpStats *stats) {
    require(inst.cover_mode == CoverMode::AtLeastOnce && inst.block_mode == BlockMode::AtLeastFlag,
            "set cover with partition");
    return solve_subset(inst, SubsetProblem::AtLeastFlag, order, stats);
}

CoverSolution escp(const CoverInstance &inst, Order order, DpStats *stats) {
    require(inst.cover_mode == CoverMode::ExactlyOnce && inst.block_mode == BlockMode::ExactlyOne,
            "exact set cover with partition");
    return solve_subset(inst, SubsetProblem::Exact, order, stats);
}

CoverSolution exact_one_scp(const CoverInstance &inst, Order order, DpStats *stats) {
    require(inst.cover_mode == CoverMode::AtLeastOnce && inst.block_mode == BlockMode::ExactlyOne,
            "exactly-one-per-block set cover");
    return solve_subset(inst, SubsetProblem::ExactOne, order, stats);
}

CoverSolution wsmp(const CoverInstance &inst, Order order, DpStats *stats) {
    require(inst.cover_mode == CoverMode::Multicover && inst.block_mode == BlockMode::AtLeastWeight,
            "weighted set multicover with partition");
    return solve_weighted(inst, order, stats);
}

CoverSolution dispatch(const CoverInstance &inst, Order order, DpStats *stats) {
    if (inst.cover_mode == CoverMode::Multicover) return wsmp(inst, order, stats);
    if (inst.cover_mode == CoverMode::ExactlyOnce) return escp(inst, order, stats);
    if (inst.block_mode == BlockMode::ExactlyOne) return exact_one_scp(inst, order, stats);
    return scp(inst, order, stats);
}

} // namespace

CoverSolution solve_set_cover(const CoverInstance &inst, DpStats *stats) { return set_cover(inst, Order::Parallel, stats); }
CoverSolution solve_scp(const CoverInstance &inst, DpStats *stats) { return scp(inst, Order::Parallel, stats); }
CoverSolution solve_escp(const CoverInstance &inst, DpStats *stats) { return escp(inst, Order::Parallel, stats); }
CoverSolution solve_exact_one_scp(const CoverInstance &inst, DpStats *stats) { return exact_one_scp(inst, Order::Parallel, stats); }
CoverSolution solve_wsmp(const CoverInstance &inst, DpStats *stats) { return wsmp(inst, Order::Parallel, stats); }
CoverSolution solve_cover(const CoverInstance &inst, DpStats *stats) { return dispatch(inst, Order::Parallel, stats); }

namespace reference {
CoverSolution solve_set_cover(const CoverInstance &inst, DpStats *stats) { return set_cover(inst, Order::Reference, stats); }
CoverSolution solve_scp(const CoverInstance &inst, DpStats *stats) { return scp(inst, Order::Reference, stats); }
CoverSolution solve_escp(const CoverInstance &inst, DpStats *stats) { return escp(inst, Order::Reference, stats); }
CoverSolution solve_exact_one_scp(const CoverInstance &inst, DpStats *stats) { return exact_one_scp(inst, Order::Reference, stats); }
CoverSolution solve_wsmp(const CoverInstance &inst, DpStats *stats) { return wsmp(inst, Order::Reference, stats); }
CoverSolution solve_cover(const CoverInstance &inst, DpStats *stats) { return dispatch(inst, Order::Reference, stats); }
} // namespace reference

} // namespace domvar
