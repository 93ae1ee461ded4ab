#pragma once

#include "domvar/cvd_solvers.hpp"

#include <exception>

namespace domvar::detail {

struct GuessResult {
    bool feasible = false;
    int size = 0;
    VertexSet vertices;
    std::uint64_t states = 0;
};

// Solves every guess (concurrently) and keeps the first optimum in guess
// order; the budget is applied to that optimum.
template <typename PerGuess>
DomSolution guess_loop(const DomInstance &inst, const PerGuess &per_guess) {
    const std::vector<VertexSet> guesses = enumerate_guesses(inst.modulator.vertices);
    std::vector<GuessResult> results(guesses.size());
    std::exception_ptr failure;
    const auto count = static_cast<long long>(guesses.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            results[static_cast<std::size_t>(i)] = per_guess(guesses[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    DomSolution sol;
    sol.vertices = inst.graph.empty_set();
    sol.guess_used = inst.graph.empty_set();
    sol.counters.guesses = guesses.size();
    int best = -1;
    for (std::size_t i = 0; i < results.size(); ++i) {
        sol.counters.dp_states += results[i].states;
        if (results[i].feasible && (best < 0 || results[i].size < results[static_cast<std::size_t>(best)].size))
            best = static_cast<int>(i);
    }
    if (best >= 0 && results[static_cast<std::size_t>(best)].size <= inst.budget) {
        const GuessResult &r = results[static_cast<std::size_t>(best)];
        sol.status = Status::Feasible;
        sol.vertices = r.vertices;
        sol.size = r.size;
        sol.guess_used = guesses[static_cast<std::size_t>(best)];
    }
    return sol;
}

} // namespace domvar::detail
