#include "domvar/svd_solvers.hpp"

#include "domvar/errors.hpp"
#include "domvar/oracle.hpp"
#include "guess_loop.hpp"

#include <optional>

namespace domvar {

namespace {

using detail::GuessResult;
using detail::guess_loop;

SplitPartition require_split(const DomInstance &inst) {
    if (inst.modulator.kind != ModulatorKind::SVD) throw ContractError("split solvers need a split modulator");
    return split_partition(inst.graph, inst.modulator.vertices);
}

bool pairwise_far(const Graph &g, const VertexSet &set) {
    const std::vector<int> v = set.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (within_distance_two(g, v[i], v[j])) return false;
    return true;
}

void keep_smaller(GuessResult &best, const Graph &g, const VertexSet &cand, const VariantSpec &spec) {
    if (!check_solution(g, cand, spec)) return;
    if (best.feasible && best.size <= cand.size()) return;
    best.feasible = true;
    best.size = cand.size();
    best.vertices = cand;
}

} // namespace

DomSolution solve_ids_svd(const DomInstance &inst) {
    const SplitPartition part = require_split(inst);
    const Graph &g = inst.graph;
    return guess_loop(inst, [&](const VertexSet &guess) {
        GuessResult best;
        if (!is_independent(g, guess)) return best;
        const VertexSet near = open_neighborhood(g, guess);
        const VertexSet rest = part.independent_side - near;
        for (int v : part.clique_side - near) {
            VertexSet cand = guess | (rest - g.neighbor_set(v));
            cand.insert(v);
            keep_smaller(best, g, cand, {Variant::IDS, 0});
        }
        keep_smaller(best, g, guess | rest, {Variant::IDS, 0});
        return best;
    });
}

DomSolution solve_eds_svd_simple(const DomInstance &inst) {
    const SplitPartition part = require_split(inst);
    const Graph &g = inst.graph;
    return guess_loop(inst, [&](const VertexSet &guess) {
        GuessResult best;
        if (!pairwise_far(g, guess)) return best;
        const VertexSet closed = closed_neighborhood(g, guess);
        const VertexSet red = n_equal_2(g, guess);
        const VertexSet rest = part.independent_side - closed;
        auto attempt = [&](std::optional<int> clique_pick) {
            VertexSet forced = rest;
            VertexSet cand = guess;
            if (clique_pick) {
                forced -= g.neighbor_set(*clique_pick);
                cand.insert(*clique_pick);
            }
            if (forced.intersects(red)) return;
            keep_smaller(best, g, cand | forced, {Variant::EDS, 0});
        };
        for (int v : part.clique_side - closed - red) attempt(v);
        attempt(std::nullopt);
        return best;
    });
}

namespace {

class BranchSearch {
public:
    BranchSearch(const Graph &g, const VertexSet &s, const SplitPartition &part)
        : g_(g), s_(s), clique_(part.clique_side), indep_(part.independent_side) {}

    DomSolution run(int budget) {
        SearchState st{g_.all_vertices(), g_.empty_set(), g_.empty_set()};
        search(std::move(st), false);
        DomSolution sol;
        sol.vertices = g_.empty_set();
        sol.guess_used = g_.empty_set();
        sol.counters = counters_;
        if (best_ && best_->size() <= budget) {
            sol.status = Status::Feasible;
            sol.vertices = *best_;
            sol.size = best_->size();
            sol.guess_used = *best_ & s_;
        }
        return sol;
    }

private:
    const Graph &g_;
    const VertexSet &s_;
    const VertexSet &clique_;
    const VertexSet &indep_;
    Counters counters_;
    std::optional<VertexSet> best_;

    bool close(const SearchState &st, int x, int y) const {
        return g_.adjacent(x, y) || (g_.neighbor_set(x) & g_.neighbor_set(y) & st.residual).size() > 0;
    }

    VertexSet blue_closed(const SearchState &st, int v) const { return closed_neighborhood(g_, v) & st.blue(); }

    // Adds x to D, removes N[x] and reddens the vertices next to it.
    bool pick(SearchState &st, int x) {
        if (!st.blue().contains(x)) return false;
        const VertexSet ball = closed_neighborhood(g_, x);
        if (!ball.is_subset_of(st.residual)) return false; // would dominate something twice
        st.picked.insert(x);
        st.residual -= ball;
        st.red -= ball;
        st.red |= open_neighborhood(g_, ball) & st.residual;
        return true;
    }

    // v must still be dominated: pick its only blue candidate if unique.
    bool force(SearchState &st, int v) {
        if (!st.residual.contains(v)) return true;
        const VertexSet cands = blue_closed(st, v);
        if (cands.empty()) return false;
        if (cands.size() == 1) return pick(st, cands.first());
        return true;
    }

    void leaf(const SearchState &st, bool accept) {
        ++counters_.branch_nodes;
        if (!accept) return;
        if (!check_solution(g_, st.picked, {Variant::EDS, 0})) return;
        if (!best_ || st.picked.size() < best_->size()) best_ = st.picked;
    }

    void search(SearchState st, bool clique_done) {
        // Pair branch: two blue modulator vertices within distance two.
        const std::vector<int> blue_s = (st.blue() & s_).to_vector();
        for (std::size_t i = 0; i < blue_s.size(); ++i)
            for (std::size_t j = i + 1; j < blue_s.size(); ++j) {
                const int x = blue_s[i], y = blue_s[j];
                if (!close(st, x, y)) continue;
                SearchState a = st, b = st, c = st;
                const bool oka = pick(a, x), okb = pick(b, y);
                c.red.insert(x);
                c.red.insert(y);
                branch_children(st, {{std::move(a), oka}, {std::move(b), okb}, {std::move(c), true}}, clique_done);
                return;
            }

        if (!clique_done) {
            for (int c : st.blue() & clique_) {
                SearchState a = st;
                const bool ok = pick(a, c);
                if (!ok) leaf(a, false);
                else search(std::move(a), true);
            }
            SearchState none = st;
            none.red |= clique_ & st.residual;
            search(std::move(none), true);
            return;
        }

        while (true) {
            if (st.residual.empty()) return leaf(st, true);
            const VertexSet blue = st.blue();

            // Undominatable vertex, then a closed neighborhood with a single blue vertex.
            int unique = -1;
            for (int v : st.residual) {
                const VertexSet cands = closed_neighborhood(g_, v) & blue;
                if (cands.empty()) return leaf(st, false);
                if (unique < 0 && cands.size() == 1) unique = cands.first();
            }
            if (unique >= 0) {
                if (!pick(st, unique)) return leaf(st, false);
                continue;
            }

            // A blue modulator vertex with two blue independent neighbors is forced.
            int rr2 = -1;
            for (int x : blue & s_)
                if ((g_.neighbor_set(x) & blue & indep_).size() >= 2) {
                    rr2 = x;
                    break;
                }
            if (rr2 >= 0) {
                if (!pick(st, rr2)) return leaf(st, false);
                continue;
            }

            if (branch_rule_two(st)) return;

            // Equal neighborhoods: u and its only blue neighbor w are interchangeable.
            const int u = blue.first();
            const VertexSet ub = g_.neighbor_set(u) & blue;
            if (ub.size() == 1) {
                const int w = ub.first();
                VertexSet nu = g_.neighbor_set(u) & st.residual, nw = g_.neighbor_set(w) & st.residual;
                nu.erase(w);
                nw.erase(u);
                if (nu == nw) {
                    if (!pick(st, std::min(u, w))) return leaf(st, false);
                    continue;
                }
            }

            // No rule applies: branch on who dominates the first residual vertex.
            ++counters_.fallback_branches;
            const int t = st.residual.first();
            for (int b : closed_neighborhood(g_, t) & blue) {
                SearchState a = st;
                const bool ok = pick(a, b);
                if (!ok) leaf(a, false);
                else search(std::move(a), true);
            }
            return;
        }
    }

    struct Child {
        SearchState state;
        bool ok;
    };

    void branch_children(const SearchState &parent, std::vector<Child> children, bool clique_done) {
        for (Child &c : children) {
            if (!c.ok) {
                leaf(c.state, false);
                continue;
            }
            if (parent.measure(s_) - c.state.measure(s_) < 2) ++counters_.measure_violations;
            search(std::move(c.state), clique_done);
        }
    }

    // Three-way branch on a red modulator vertex x with blue neighbors u, v.
    bool branch_rule_two(const SearchState &st) {
        const VertexSet blue = st.blue();
        for (int x : st.residual & st.red & s_) {
            const std::vector<int> nb = (g_.neighbor_set(x) & blue).to_vector();
            // case 1: u, v on the independent side
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    const int u = nb[i], v = nb[j];
                    if (!indep_.contains(u) || !indep_.contains(v)) continue;
                    branch_three(st, u, v);
                    return true;
                }
            // case 2: u independent, v modulator, not adjacent
            for (int u : nb)
                for (int v : nb) {
                    if (!indep_.contains(u) || !s_.contains(v) || g_.adjacent(u, v)) continue;
                    branch_three(st, u, v);
                    return true;
                }
        }
        return false;
    }

    // Children: pick u, pick v, neither; the partner left undominated is forced.
    void branch_three(const SearchState &st, int u, int v) {
        SearchState a = st, b = st, c = st;
        const bool oka = pick(a, u) && force(a, v);
        const bool okb = pick(b, v) && force(b, u);
        c.red.insert(u);
        c.red.insert(v);
        const bool okc = force(c, u) && force(c, v);
        branch_children(st, {{std::move(a), oka}, {std::move(b), okb}, {std::move(c), okc}}, true);
    }
};

} // namespace

DomSolution solve_eds_svd_branch(const DomInstance &inst) {
    const SplitPartition part = require_split(inst);
    BranchSearch search(inst.graph, inst.modulator.vertices, part);
    return search.run(inst.budget);
}

std::uint64_t eds_branch_leaf_bound(int k, int clique_side) {
    std::uint64_t p = 1;
    for (int i = 0; i < (k + 1) / 2; ++i) p *= 3;
    return p * static_cast<std::uint64_t>(clique_side + 1);
}

} // namespace domvar
