#include "domvar/cli.hpp"

#include "domvar/cvd_solvers.hpp"
#include "domvar/errors.hpp"
#include "domvar/oracle.hpp"
#include "domvar/svd_solvers.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace domvar {

std::string_view to_string(Algo a) {
    switch (a) {
    case Algo::Dp: return "dp";
    case Algo::Branch: return "branch";
    case Algo::Simple: return "simple";
    case Algo::Oracle: return "oracle";
    }
    return "?";
}

std::optional<Algo> parse_algo(std::string_view token) {
    for (Algo a : {Algo::Dp, Algo::Branch, Algo::Simple, Algo::Oracle})
        if (token == to_string(a)) return a;
    return std::nullopt;
}

std::optional<Algo> default_algo(Variant v, ModulatorKind kind) {
    if (kind != ModulatorKind::SVD) return Algo::Dp;
    if (v == Variant::EDS) return Algo::Branch;
    if (v == Variant::IDS) return Algo::Simple;
    return std::nullopt;
}

namespace {

[[noreturn]] void unsupported(const DomInstance &inst, Algo algo) {
    std::ostringstream os;
    os << to_string(inst.variant) << " with a " << to_string(inst.modulator.kind) << " modulator";
    if (inst.modulator.kind == ModulatorKind::SVD && inst.variant != Variant::EDS && inst.variant != Variant::IDS)
        os << " is para-NP-hard (already NP-hard or W[2]-hard on split graphs); no parameterized algorithm exists";
    else
        os << " has no '" << to_string(algo) << "' algorithm";
    throw UsageError(os.str());
}

} // namespace

DomSolution solve_instance(const DomInstance &inst, Algo algo) {
    const bool split = inst.modulator.kind == ModulatorKind::SVD;
    switch (algo) {
    case Algo::Oracle: {
        DomSolution sol = inst.variant == Variant::EDS && inst.graph.vertex_count() > kBruteVertexCap
                              ? search_eds(inst.graph)
                              : brute_min(inst.graph, inst.spec());
        if (sol.feasible() && sol.size > inst.budget) {
            sol.status = Status::Infeasible;
            sol.size = 0;
            sol.vertices = inst.graph.empty_set();
        }
        sol.guess_used = sol.vertices & inst.modulator.vertices;
        return sol;
    }
    case Algo::Dp:
        if (split) unsupported(inst, algo);
        return solve_cvd(inst);
    case Algo::Simple:
        if (!split) unsupported(inst, algo);
        if (inst.variant == Variant::IDS) return solve_ids_svd(inst);
        if (inst.variant == Variant::EDS) return solve_eds_svd_simple(inst);
        unsupported(inst, algo);
    case Algo::Branch:
        if (!split || inst.variant != Variant::EDS) unsupported(inst, algo);
        return solve_eds_svd_branch(inst);
    }
    unsupported(inst, algo);
}

std::string report_line(std::string_view id, const DomInstance &inst, Algo algo, const DomSolution &sol,
                        long long micros) {
    std::ostringstream os;
    os << "r " << id << ' ' << to_string(inst.variant) << ' ' << to_string(algo) << ' ' << to_string(sol.status)
       << ' ' << (sol.feasible() ? sol.size : 0) << ' ' << micros;
    const Counters &c = sol.counters;
    switch (algo) {
    case Algo::Dp: os << " guesses=" << c.guesses << " dp_states=" << c.dp_states; break;
    case Algo::Simple: os << " guesses=" << c.guesses; break;
    case Algo::Branch: {
        const int clique = split_partition(inst.graph, inst.modulator.vertices).clique_side.size();
        os << " branch_nodes=" << c.branch_nodes << " leaf_bound="
           << eds_branch_leaf_bound(inst.modulator.vertices.size(), clique) << " fallback_branches="
           << c.fallback_branches << " measure_violations=" << c.measure_violations;
        break;
    }
    case Algo::Oracle: break;
    }
    return os.str();
}

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct SolveOptions {
    std::string input;
    std::string problem;
    std::string kind;
    std::string algo;
    std::optional<int> budget;
    std::optional<int> threshold;
    bool machine = false;
    bool timing = false;
    std::string id;
    std::string solution;
};

struct GenOptions {
    std::string kind = "cvd";
    std::string problem = "ds";
    std::uint64_t seed = 1;
    std::string cliques = "3,3,2";
    int clique_side = 4;
    int independent_side = 5;
    int k = 2;
    double density = 0.5;
    int threshold = 0;
    std::optional<int> budget;
    std::string sat;
    std::string output;
    std::string algo;
    std::string k_values = "2,4,6";
    int count = 3;
    bool machine = false;
    bool timing = false;
};

std::vector<int> int_list(const std::string &text, const char *what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception &) {
            throw UsageError(std::string("bad integer list for ") + what + ": '" + text + "'");
        }
    }
    return out;
}

Variant variant_option(const std::string &token) {
    auto v = parse_variant(token);
    if (!v) throw UsageError("unknown problem '" + token + "' (ds|eds|ids|dc|tds|thds)");
    return *v;
}

ModulatorKind kind_option(const std::string &token) {
    auto k = parse_kind(token);
    if (!k) throw UsageError("unknown kind '" + token + "' (cvd|svd|vc)");
    return *k;
}

// Applies the command-line overrides to a loaded instance.
DomInstance load(const SolveOptions &o) {
    DomInstance inst = parse_instance(read_file(o.input));
    if (!o.kind.empty() && kind_option(o.kind) != inst.modulator.kind)
        throw UsageError("--kind " + o.kind + " does not match the instance's " +
                         std::string(to_string(inst.modulator.kind)) + " modulator");
    if (!o.problem.empty()) inst.variant = variant_option(o.problem);
    if (o.threshold) inst.threshold = *o.threshold;
    if (inst.variant == Variant::TDS) inst.threshold = 1;
    else if (inst.variant != Variant::THDS) inst.threshold = 0;
    if (inst.variant == Variant::THDS && inst.threshold < 1) throw UsageError("thds needs --threshold >= 1");
    if (o.budget) inst.budget = *o.budget;
    return inst;
}

Algo algo_for(const DomInstance &inst, const std::string &requested) {
    if (!requested.empty()) {
        auto a = parse_algo(requested);
        if (!a) throw UsageError("unknown algorithm '" + requested + "' (dp|branch|simple|oracle)");
        return *a;
    }
    auto a = default_algo(inst.variant, inst.modulator.kind);
    if (!a) unsupported(inst, Algo::Dp);
    return *a;
}

std::string stem(const std::string &path) {
    if (path == "-") return "stdin";
    const std::size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

// Re-checks a solver result; throws std::logic_error on an invariant failure.
void audit(const DomInstance &inst, const DomSolution &sol) {
    if (sol.feasible() && !check_solution(inst.graph, sol.vertices, inst.spec()))
        throw std::logic_error("solver returned a witness that fails the checker");
    if (sol.counters.measure_violations > 0) throw std::logic_error("branching measure did not drop by two");
}

int run_solve(const SolveOptions &o, bool oracle, std::ostream &out) {
    const DomInstance inst = load(o);
    const Algo algo = oracle ? Algo::Oracle : algo_for(inst, o.algo);
    const auto t0 = std::chrono::steady_clock::now();
    const DomSolution sol = solve_instance(inst, algo);
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    audit(inst, sol);
    out << serialize_solution(sol);
    const std::string id = o.id.empty() ? stem(o.input) : o.id;
    if (o.machine) {
        out << report_line(id, inst, algo, sol, o.timing ? micros : 0) << '\n';
    } else {
        out << "c algorithm " << to_string(algo) << "\nc time_us " << micros << '\n';
        std::istringstream counters(report_line(id, inst, algo, sol, 0));
        std::string tok;
        for (int i = 0; i < 7 && counters >> tok; ++i) {}
        while (counters >> tok) {
            const auto eq = tok.find('=');
            out << "c " << tok.substr(0, eq) << ' ' << tok.substr(eq + 1) << '\n';
        }
    }
    return kExitSolved;
}

int run_verify(const SolveOptions &o, std::ostream &out) {
    const DomInstance inst = load(o);
    const SolutionLine claim = parse_solution(read_file(o.solution));
    for (int v : claim.vertices)
        if (v >= inst.graph.vertex_count()) {
            out << "v INVALID vertex " << v << " outside the graph\n";
            return kExitInput;
        }
    if (claim.status == Status::Feasible) {
        const VertexSet d = VertexSet::from(inst.graph.vertex_count(), claim.vertices);
        if (!check_solution(inst.graph, d, inst.spec())) {
            out << "v INVALID not a " << to_string(inst.variant) << " solution\n";
            return kExitInput;
        }
        if (claim.size > inst.budget) {
            out << "v INVALID size " << claim.size << " exceeds budget " << inst.budget << '\n';
            return kExitInput;
        }
        out << "v VALID\n";
        return kExitSolved;
    }
    // An infeasibility claim is re-derived with the default exact algorithm.
    const auto algo = default_algo(inst.variant, inst.modulator.kind);
    const DomSolution sol = solve_instance(inst, algo ? *algo : Algo::Oracle);
    if (sol.feasible()) {
        out << "v INVALID a solution of size " << sol.size << " exists\n";
        return kExitInput;
    }
    out << "v VALID\n";
    return kExitSolved;
}

PlantedParams planted(const GenOptions &o, int k) {
    PlantedParams p;
    p.kind = kind_option(o.kind);
    p.variant = variant_option(o.problem);
    p.k = k;
    p.density = o.density;
    p.threshold = o.threshold;
    p.budget = o.budget;
    if (p.variant == Variant::THDS && p.threshold < 1) throw UsageError("thds needs --threshold >= 1");
    if (p.kind == ModulatorKind::CVD) p.clique_sizes = int_list(o.cliques, "--cliques");
    p.clique_side = o.clique_side;
    p.independent_side = o.independent_side;
    return p;
}

int run_gen(const GenOptions &o, std::ostream &out) {
    std::string text;
    if (!o.sat.empty()) {
        const auto nm = int_list(o.sat, "--sat");
        if (nm.size() != 2) throw UsageError("--sat expects 'variables,clauses'");
        text = serialize_instance(reduce_3sat_to_eds(random_3cnf(o.seed, nm[0], nm[1])));
    } else {
        text = serialize_instance(gen_planted(o.seed, planted(o, o.k)));
    }
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) throw InputError("cannot write '" + o.output + "'");
        f << text;
    }
    return kExitSolved;
}

int run_bench(const GenOptions &o, std::ostream &out) {
    int status = kExitSolved;
    for (int k : int_list(o.k_values, "--k-values")) {
        for (int i = 0; i < o.count; ++i) {
            const DomInstance inst = gen_planted(o.seed + static_cast<std::uint64_t>(i), planted(o, k));
            const Algo algo = algo_for(inst, o.algo);
            const auto t0 = std::chrono::steady_clock::now();
            const DomSolution sol = solve_instance(inst, algo);
            const auto micros =
                std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
            audit(inst, sol);
            const std::string id = "k" + std::to_string(k) + "-" + std::to_string(i);
            out << report_line(id, inst, algo, sol, (o.machine && !o.timing) ? 0 : micros) << '\n';
            if (algo == Algo::Branch) {
                const int clique = split_partition(inst.graph, inst.modulator.vertices).clique_side.size();
                if (sol.counters.branch_nodes > eds_branch_leaf_bound(k, clique)) status = kExitInvariant;
            }
        }
    }
    return status;
}

void add_instance_options(CLI::App *cmd, SolveOptions &o, bool with_algo) {
    cmd->add_option("--input", o.input, "instance file ('-' for stdin)")->required();
    cmd->add_option("--problem", o.problem, "ds|eds|ids|dc|tds|thds (default: from the instance)");
    cmd->add_option("--kind", o.kind, "cvd|svd|vc (must match the instance)");
    if (with_algo) cmd->add_option("--algo", o.algo, "dp|branch|simple|oracle");
    cmd->add_option("--budget", o.budget, "solution size bound");
    cmd->add_option("--threshold", o.threshold, "threshold r for thds");
}

void add_gen_options(CLI::App *cmd, GenOptions &o) {
    cmd->add_option("--kind", o.kind, "cvd|svd|vc");
    cmd->add_option("--problem", o.problem, "ds|eds|ids|dc|tds|thds");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--cliques", o.cliques, "comma-separated clique sizes (cvd)");
    cmd->add_option("--clique-side", o.clique_side, "clique side size (svd)");
    cmd->add_option("--independent-side", o.independent_side, "independent side size (svd, vc)");
    cmd->add_option("--density", o.density, "edge probability for random edges")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--threshold", o.threshold, "threshold r for thds");
    cmd->add_option("--budget", o.budget, "solution size bound (default: vertex count)");
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact dominating-set variants parameterized by a modulator", "domvar"};
    app.require_subcommand(1);
    SolveOptions solve_o, oracle_o, verify_o;
    GenOptions gen_o, bench_o;

    auto *solve = app.add_subcommand("solve", "solve an instance");
    add_instance_options(solve, solve_o, true);
    solve->add_flag("--machine", solve_o.machine, "single report line output");
    solve->add_flag("--timing", solve_o.timing, "report wall time in --machine output");
    solve->add_option("--id", solve_o.id, "report id (default: input file stem)");

    auto *oracle = app.add_subcommand("oracle", "solve by brute force");
    add_instance_options(oracle, oracle_o, false);
    oracle->add_flag("--machine", oracle_o.machine, "single report line output");
    oracle->add_flag("--timing", oracle_o.timing, "report wall time in --machine output");
    oracle->add_option("--id", oracle_o.id, "report id (default: input file stem)");

    auto *verify = app.add_subcommand("verify", "check a solution line against an instance");
    add_instance_options(verify, verify_o, false);
    verify->add_option("--solution", verify_o.solution, "solution file")->required();

    auto *gen = app.add_subcommand("gen", "generate a planted or 3-SAT gadget instance");
    add_gen_options(gen, gen_o);
    gen->add_option("--k", gen_o.k, "modulator size")->check(CLI::NonNegativeNumber);
    gen->add_option("--sat", gen_o.sat, "emit the gadget graph of a random 3-CNF 'variables,clauses'");
    gen->add_option("--output", gen_o.output, "output file (default: stdout)");

    auto *bench = app.add_subcommand("bench", "solve planted instances over several k and report counters");
    add_gen_options(bench, bench_o);
    bench->add_option("--algo", bench_o.algo, "dp|branch|simple|oracle");
    bench->add_option("--k-values", bench_o.k_values, "comma-separated modulator sizes");
    bench->add_option("--count", bench_o.count, "instances per k")->check(CLI::NonNegativeNumber);
    bench->add_flag("--machine", bench_o.machine, "stable output (wall time 0 unless --timing)");
    bench->add_flag("--timing", bench_o.timing, "report wall time in --machine output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*solve) return run_solve(solve_o, false, out);
        if (*oracle) return run_solve(oracle_o, true, out);
        if (*verify) return run_verify(verify_o, out);
        if (*gen) return run_gen(gen_o, out);
        if (*bench) return run_bench(bench_o, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ModulatorMismatch &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const CapExceeded &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const MalformedInput &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}

} // namespace domvar
