#include "domvar/instances.hpp"

#include "domvar/errors.hpp"
#include "domvar/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace domvar {

namespace {

bool coin(std::mt19937_64 &rng, double p) { return static_cast<double>(rng() >> 11) * 0x1p-53 < p; }

std::vector<int> shuffled_ids(std::mt19937_64 &rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    return perm;
}

} // namespace

DomInstance gen_planted(std::uint64_t seed, const PlantedParams &params) {
    if (params.k < 0 || params.density < 0 || params.density > 1) throw ContractError("bad planted parameters");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    int base = 0;
    switch (params.kind) {
    case ModulatorKind::CVD:
        for (int size : params.clique_sizes) {
            if (size <= 0) throw ContractError("clique sizes must be positive");
            for (int a = base; a < base + size; ++a)
                for (int b = a + 1; b < base + size; ++b) edges.emplace_back(a, b);
            base += size;
        }
        break;
    case ModulatorKind::SVD:
        if (params.clique_side < 0 || params.independent_side < 0) throw ContractError("split sides must be non-negative");
        for (int a = 0; a < params.clique_side; ++a)
            for (int b = a + 1; b < params.clique_side; ++b) edges.emplace_back(a, b);
        for (int i = 0; i < params.independent_side; ++i)
            for (int c = 0; c < params.clique_side; ++c)
                if (coin(rng, params.density)) edges.emplace_back(c, params.clique_side + i);
        base = params.clique_side + params.independent_side;
        break;
    case ModulatorKind::VC:
        if (params.independent_side < 0) throw ContractError("independent side must be non-negative");
        base = params.independent_side;
        break;
    }
    const int n = base + params.k;
    for (int s = base; s < n; ++s)
        for (int v = 0; v < s; ++v)
            if (coin(rng, params.density)) edges.emplace_back(v, s);

    const std::vector<int> perm = shuffled_ids(rng, n);
    for (auto &[u, v] : edges) {
        u = perm[static_cast<std::size_t>(u)];
        v = perm[static_cast<std::size_t>(v)];
    }
    DomInstance inst;
    inst.graph = build_graph(n, edges);
    inst.modulator.kind = params.kind;
    inst.modulator.vertices = inst.graph.empty_set();
    for (int s = base; s < n; ++s) inst.modulator.vertices.insert(perm[static_cast<std::size_t>(s)]);
    inst.variant = params.variant;
    inst.threshold = effective_threshold(params.variant, params.threshold);
    inst.budget = params.budget.value_or(n);
    inst.comments.push_back(" planted " + std::string(to_string(params.kind)) + " seed " + std::to_string(seed));
    return inst;
}

DomInstance reduce_setcover_to_split(int universe_size, const std::vector<std::vector<int>> &family, int budget) {
    if (budget < 2) throw ContractError("set cover reduction needs budget >= 2");
    if (universe_size <= 0 || family.empty()) throw ContractError("degenerate set cover instance");
    const int m = static_cast<int>(family.size());
    std::vector<Edge> edges;
    std::vector<bool> covered(static_cast<std::size_t>(universe_size), false);
    for (int j = 0; j < m; ++j) {
        for (int i = j + 1; i < m; ++i) edges.emplace_back(universe_size + j, universe_size + i);
        for (int u : family[static_cast<std::size_t>(j)]) {
            if (u < 0 || u >= universe_size) throw ContractError("set element outside the universe");
            edges.emplace_back(u, universe_size + j);
            covered[static_cast<std::size_t>(u)] = true;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw ContractError("some element lies in no set");
    std::vector<std::string> labels;
    for (int u = 0; u < universe_size; ++u) labels.push_back("u" + std::to_string(u));
    for (int j = 0; j < m; ++j) labels.push_back("s" + std::to_string(j));
    DomInstance inst;
    inst.graph = build_graph(universe_size + m, edges).with_labels(std::move(labels));
    inst.modulator.kind = ModulatorKind::CVD;
    inst.modulator.vertices = inst.graph.empty_set();
    for (int u = 0; u < universe_size; ++u) inst.modulator.vertices.insert(u);
    inst.variant = Variant::DS;
    inst.budget = budget;
    inst.comments.push_back(" set cover reduction |U|=" + std::to_string(universe_size) + " m=" + std::to_string(m));
    return inst;
}

CnfFormula random_3cnf(std::uint64_t seed, int variables, int clauses) {
    if (variables <= 0 || clauses < 0) throw ContractError("bad formula size");
    std::mt19937_64 rng(seed);
    CnfFormula f;
    f.variables = variables;
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> clause;
        for (int l = 0; l < 3; ++l) {
            const int var = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(variables));
            clause.push_back((rng() & 1u) ? var : -var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

bool evaluate(const CnfFormula &f, const std::vector<bool> &assignment) {
    for (const auto &clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
            if ((lit > 0) == value) sat = true;
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> brute_satisfy(const CnfFormula &f) {
    if (f.variables > 30) throw CapExceeded("too many variables to enumerate");
    std::vector<bool> a(static_cast<std::size_t>(f.variables));
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << f.variables); ++code) {
        for (int i = 0; i < f.variables; ++i) a[static_cast<std::size_t>(i)] = (code >> i) & 1u;
        if (evaluate(f, a)) return a;
    }
    return std::nullopt;
}

DomInstance reduce_3sat_to_eds(const CnfFormula &f) {
    const int n = f.variables;
    const int m = static_cast<int>(f.clauses.size());
    if (n <= 0) throw ContractError("formula needs at least one variable");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back("x" + std::to_string(i));
        labels.push_back("~x" + std::to_string(i));
        edges.emplace_back(2 * (i - 1), 2 * (i - 1) + 1);
    }
    auto literal_vertex = [](int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); };
    // gadget offsets: c1 c2 c3 d0 d1 d2 d3 d12 d23 d13
    static const char *names[] = {"c1", "c2", "c3", "d0", "d1", "d2", "d3", "d12", "d23", "d13"};
    VertexSet cover(2 * n + 10 * m);
    for (int v = 0; v < 2 * n; ++v) cover.insert(v);
    for (int j = 0; j < m; ++j) {
        const auto &clause = f.clauses[static_cast<std::size_t>(j)];
        if (clause.empty() || clause.size() > 3) throw ContractError("clauses need one to three literals");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > n) throw ContractError("literal outside the variable range");
        const int b = 2 * n + 10 * j;
        for (int t = 0; t < 10; ++t) labels.push_back(std::string(names[t]) + "." + std::to_string(j + 1));
        for (int a = 3; a < 10; ++a)
            for (int c = a + 1; c < 10; ++c) edges.emplace_back(b + a, b + c);
        const int attach[3][3] = {{4, 7, 9}, {5, 7, 8}, {6, 8, 9}};
        for (int slot = 0; slot < 3; ++slot) {
            for (int d : attach[slot]) edges.emplace_back(b + slot, b + d);
            const int lit = clause[static_cast<std::size_t>(slot) % clause.size()];
            edges.emplace_back(literal_vertex(lit), b + slot);
        }
        for (int d = 4; d < 10; ++d) cover.insert(b + d);
    }
    DomInstance inst;
    inst.graph = build_graph(2 * n + 10 * m, edges).with_labels(std::move(labels));
    inst.modulator.kind = ModulatorKind::VC;
    inst.modulator.vertices = cover;
    inst.variant = Variant::EDS;
    inst.budget = n + m;
    inst.comments.push_back(" 3sat gadget n=" + std::to_string(n) + " m=" + std::to_string(m));
    return inst;
}

std::vector<bool> extract_assignment(const DomInstance &reduced, const VertexSet &d) {
    const auto &labels = reduced.graph.labels();
    if (labels.empty()) throw ContractError("gadget labels are missing");
    if (d.size() != reduced.budget || !check_solution(reduced.graph, d, {Variant::EDS, 0}))
        throw ContractError("not an efficient dominating set of the gadget size");
    std::vector<bool> a;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v].size() > 1 && labels[v][0] == 'x') {
            const int i = std::stoi(labels[v].substr(1));
            if (static_cast<int>(a.size()) < i) a.resize(static_cast<std::size_t>(i));
            a[static_cast<std::size_t>(i - 1)] = d.contains(static_cast<int>(v));
        }
    return a;
}

std::string serialize_instance(const DomInstance &inst) {
    std::ostringstream os;
    for (const auto &c : inst.comments) os << '#' << c << '\n';
    os << "p domvar " << to_string(inst.variant) << ' ' << to_string(inst.modulator.kind) << ' '
       << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' ' << inst.modulator.vertices.size() << ' '
       << inst.budget << ' ' << inst.threshold << '\n';
    for (auto [u, v] : inst.graph.edges()) os << "e " << u << ' ' << v << '\n';
    for (int v : inst.modulator.vertices) os << "m " << v << '\n';
    return os.str();
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int line, const char *what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

DomInstance parse_instance(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    DomInstance inst;
    std::size_t i = 0;
    for (; i < lines.size() && !lines[i].empty() && lines[i][0] == '#'; ++i)
        inst.comments.emplace_back(lines[i].substr(1));
    if (i == lines.size()) throw ParseError(static_cast<int>(i) + 1, "missing 'p domvar' header");
    const int header_line = static_cast<int>(i) + 1;
    const auto head = split_tokens(lines[i]);
    if (head.size() != 9 || head[0] != "p" || head[1] != "domvar")
        throw ParseError(header_line, "header must read 'p domvar <variant> <kind> <n> <m> <k> <l> <r>'");
    const auto variant = parse_variant(head[2]);
    if (!variant) throw ParseError(header_line, "unknown variant '" + std::string(head[2]) + "'");
    const auto kind = parse_kind(head[3]);
    if (!kind) throw ParseError(header_line, "unknown modulator kind '" + std::string(head[3]) + "'");
    const int n = to_int(head[4], header_line, "n");
    const int m = to_int(head[5], header_line, "m");
    const int k = to_int(head[6], header_line, "k");
    inst.variant = *variant;
    inst.budget = to_int(head[7], header_line, "l");
    inst.threshold = to_int(head[8], header_line, "r");
    if (inst.threshold != effective_threshold(inst.variant, inst.threshold) ||
        (inst.variant == Variant::THDS && inst.threshold < 1))
        throw ParseError(header_line, "threshold must be 1 for tds, >= 1 for thds and 0 otherwise");
    if (k > n) throw ParseError(header_line, "modulator larger than the graph");

    std::vector<Edge> edges;
    std::set<Edge> seen_edges;
    std::vector<int> mod;
    std::vector<bool> in_mod(static_cast<std::size_t>(n), false);
    for (++i; i < lines.size(); ++i) {
        const int ln = static_cast<int>(i) + 1;
        const auto tok = split_tokens(lines[i]);
        if (lines[i].empty() || tok.empty()) throw ParseError(ln, "blank line");
        if (tok[0][0] == '#') continue;
        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(ln, "edge line must read 'e u v'");
            int u = to_int(tok[1], ln, "edge endpoint"), v = to_int(tok[2], ln, "edge endpoint");
            if (u >= n || v >= n) throw ParseError(ln, "edge endpoint outside [0," + std::to_string(n) + ")");
            if (u == v) throw ParseError(ln, "self-loop");
            if (u > v) std::swap(u, v);
            if (!seen_edges.insert({u, v}).second) throw ParseError(ln, "duplicate edge");
            edges.emplace_back(u, v);
        } else if (tok[0] == "m") {
            if (tok.size() != 2) throw ParseError(ln, "modulator line must read 'm v'");
            const int v = to_int(tok[1], ln, "modulator vertex");
            if (v >= n) throw ParseError(ln, "modulator vertex outside [0," + std::to_string(n) + ")");
            if (in_mod[static_cast<std::size_t>(v)]) throw ParseError(ln, "duplicate modulator vertex");
            in_mod[static_cast<std::size_t>(v)] = true;
            mod.push_back(v);
        } else {
            throw ParseError(ln, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    const int end_line = static_cast<int>(lines.size()) + 1;
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(end_line, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    if (static_cast<int>(mod.size()) != k)
        throw ParseError(end_line, "expected " + std::to_string(k) + " modulator vertices, found " + std::to_string(mod.size()));
    inst.graph = build_graph(n, edges);
    inst.modulator = {*kind, VertexSet::from(n, mod)};
    if (!verify_modulator(inst.graph, inst.modulator))
        throw ModulatorMismatch("deleting the modulator does not leave a " + std::string(to_string(*kind)) + " residual graph");
    return inst;
}

std::string serialize_solution(const DomSolution &sol) {
    std::ostringstream os;
    os << "s " << to_string(sol.status) << ' ' << (sol.feasible() ? sol.size : 0) << " :";
    if (sol.feasible())
        for (int v : sol.vertices) os << ' ' << v;
    os << '\n';
    return os.str();
}

SolutionLine parse_solution(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty solution");
    const auto tok = split_tokens(lines[0]);
    if (tok.size() < 4 || tok[0] != "s" || tok[3] != ":") throw ParseError(1, "solution must read 's <status> <size> : v...'");
    SolutionLine out;
    if (tok[1] == "FEASIBLE") out.status = Status::Feasible;
    else if (tok[1] == "INFEASIBLE") out.status = Status::Infeasible;
    else throw ParseError(1, "unknown status '" + std::string(tok[1]) + "'");
    out.size = to_int(tok[2], 1, "size");
    for (std::size_t i = 4; i < tok.size(); ++i) out.vertices.push_back(to_int(tok[i], 1, "vertex"));
    if (static_cast<int>(out.vertices.size()) != out.size) throw ParseError(1, "size does not match the vertex list");
    if (out.status == Status::Infeasible && out.size != 0) throw ParseError(1, "infeasible solutions list no vertices");
    return out;
}

} // namespace domvar
