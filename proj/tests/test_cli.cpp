#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domvar/cli.hpp"
#include "domvar/instances.hpp"
#include "domvar/svd_solvers.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace domvar;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "domvar");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("domvar_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string &name, const std::string &text) {
    auto p = scratch() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string field(const std::string &report, int index) {
    std::istringstream in(report);
    std::string tok;
    for (int i = 0; i <= index; ++i) in >> tok;
    return tok;
}

long counter(const std::string &report, const std::string &name) {
    auto pos = report.find(" " + name + "=");
    REQUIRE(pos != std::string::npos);
    return std::stol(report.substr(pos + name.size() + 2));
}

} // namespace

TEST_CASE("solve a planted two-clique instance") {
    auto gen = run({"gen", "--kind", "cvd", "--problem", "ds", "--cliques", "3,2", "--k", "0", "--seed", "1"});
    REQUIRE(gen.code == kExitSolved);
    auto file = write("two_cliques.dom", gen.out);
    auto solved = run({"solve", "--input", file});
    CHECK(solved.code == kExitSolved);
    CHECK(solved.out.rfind("s FEASIBLE 2 :", 0) == 0);
    auto machine = run({"solve", "--input", file, "--machine", "--id", "t"});
    CHECK(machine.out.find("r t ds dp FEASIBLE 2 0 ") != std::string::npos);
}

TEST_CASE("machine output is byte-identical across runs") {
    std::vector<std::string> args{"bench", "--kind", "cvd", "--problem", "tds", "--cliques", "3,3,2",
                                  "--k-values", "1,2,3", "--count", "3", "--seed", "11", "--machine"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == kExitSolved);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("default algorithms agree with the oracle") {
    struct Case {
        std::string problem, kind;
        std::vector<std::string> shape;
    };
    const std::vector<Case> cases = {
        {"ds", "cvd", {"--cliques", "3,2,2"}},     {"eds", "cvd", {"--cliques", "2,2,1"}},
        {"ids", "cvd", {"--cliques", "3,1,2"}},    {"dc", "cvd", {"--cliques", "3,2"}},
        {"tds", "cvd", {"--cliques", "2,3,2"}},    {"eds", "svd", {"--clique-side", "3", "--independent-side", "4"}},
        {"ids", "svd", {"--clique-side", "3", "--independent-side", "4"}},
    };
    for (const auto &c : cases) {
        for (int seed = 1; seed <= 6; ++seed) {
            std::vector<std::string> args{"gen", "--kind", c.kind, "--problem", c.problem, "--k", "3",
                                          "--density", "0.3", "--seed", std::to_string(seed)};
            args.insert(args.end(), c.shape.begin(), c.shape.end());
            auto gen = run(args);
            REQUIRE(gen.code == kExitSolved);
            auto file = write(c.problem + c.kind + std::to_string(seed) + ".dom", gen.out);
            auto fast = run({"solve", "--input", file, "--machine"});
            auto slow = run({"oracle", "--input", file, "--machine"});
            CAPTURE(gen.out);
            REQUIRE(fast.code == kExitSolved);
            REQUIRE(slow.code == kExitSolved);
            const auto fast_report = fast.out.substr(fast.out.find("\nr ") + 1);
            const auto slow_report = slow.out.substr(slow.out.find("\nr ") + 1);
            CHECK(field(fast_report, 4) == field(slow_report, 4));
            CHECK(field(fast_report, 5) == field(slow_report, 5));
            if (c.kind == "svd" && c.problem == "eds") {
                auto simple = run({"solve", "--input", file, "--algo", "simple", "--machine"});
                const auto simple_report = simple.out.substr(simple.out.find("\nr ") + 1);
                CHECK(field(simple_report, 4) == field(fast_report, 4));
                CHECK(field(simple_report, 5) == field(fast_report, 5));
            }
        }
    }
}

TEST_CASE("branch bench stays within the leaf bound") {
    auto r = run({"bench", "--problem", "eds", "--kind", "svd", "--algo", "branch", "--seed", "7", "--machine"});
    CHECK(r.code == kExitSolved);
    std::istringstream lines(r.out);
    std::string line;
    int reports = 0;
    while (std::getline(lines, line)) {
        ++reports;
        CHECK(counter(line, "branch_nodes") <= counter(line, "leaf_bound"));
        CHECK(counter(line, "measure_violations") == 0);
    }
    CHECK(reports > 0);
}

TEST_CASE("unsupported pairs are usage errors") {
    auto gen = run({"gen", "--kind", "svd", "--problem", "ds", "--clique-side", "2", "--independent-side", "2",
                    "--k", "1", "--seed", "2"});
    REQUIRE(gen.code == kExitSolved);
    auto file = write("ds_svd.dom", gen.out);
    auto r = run({"solve", "--input", file});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("para-NP-hard") != std::string::npos);
    CHECK(run({"solve", "--input", file, "--algo", "oracle"}).code == kExitSolved);
    CHECK(run({"solve", "--input", file, "--problem", "eds", "--algo", "dp"}).code == kExitUsage);
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"solve"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitSolved);
    CHECK(run({"solve", "--input", (scratch() / "missing.dom").string()}).code == kExitInput);
    auto bad = write("bad.dom", "p domvar ds cvd 2 1 0 2 0\ne 0 5\n");
    auto r = run({"solve", "--input", bad});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("line 2") != std::string::npos);
    auto mismatch = write("mismatch.dom", "p domvar ds cvd 3 2 0 3 0\ne 0 1\ne 1 2\n");
    CHECK(run({"solve", "--input", mismatch}).code == kExitInput);
    auto fine = write("fine.dom", "p domvar ds cvd 3 2 1 3 0\ne 0 1\ne 1 2\nm 1\n");
    CHECK(run({"solve", "--input", fine, "--algo", "quantum"}).code == kExitUsage);
    CHECK(run({"solve", "--input", fine, "--problem", "thds"}).code == kExitUsage);
    CHECK(run({"solve", "--input", fine, "--problem", "thds", "--threshold", "1"}).code == kExitSolved);
}

TEST_CASE("verify re-checks solutions") {
    auto inst = write("p3.dom", "p domvar ds cvd 3 2 1 3 0\ne 0 1\ne 1 2\nm 1\n");
    CHECK(run({"verify", "--input", inst, "--solution", write("good.sol", "s FEASIBLE 1 : 1\n")}).code == kExitSolved);
    auto wrong = run({"verify", "--input", inst, "--solution", write("bad.sol", "s FEASIBLE 1 : 0\n")});
    CHECK(wrong.code == kExitInput);
    CHECK(wrong.out.rfind("v INVALID", 0) == 0);
    CHECK(run({"verify", "--input", inst, "--solution", write("none.sol", "s INFEASIBLE 0 :\n")}).code == kExitInput);
    CHECK(run({"verify", "--input", inst, "--budget", "0", "--solution", write("none2.sol", "s INFEASIBLE 0 :\n")})
              .code == kExitSolved);
    CHECK(run({"verify", "--input", inst, "--solution", write("garbled.sol", "hello\n")}).code == kExitInput);
}

TEST_CASE("gen emits 3-SAT gadgets") {
    auto r = run({"gen", "--sat", "3,4", "--seed", "5"});
    REQUIRE(r.code == kExitSolved);
    auto inst = parse_instance(r.out);
    CHECK(inst.graph.vertex_count() == 2 * 3 + 10 * 4);
    CHECK(inst.modulator.vertices.size() == 2 * 3 + 6 * 4);
    CHECK(inst.variant == Variant::EDS);
    CHECK(inst.budget == 7);
}

TEST_CASE("the installed binary reports exit codes") {
    const std::string tool = DOMVAR_TOOL;
    const auto out = (scratch() / "bin.dom").string();
    auto status = [](const std::string &cmd) {
        int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(tool + " gen --kind cvd --problem ids --cliques 2,2 --k 1 --seed 4 --output " + out) == 0);
    CHECK(status(tool + " solve --input " + out + " > /dev/null") == 0);
    CHECK(status(tool + " solve --input " + out + " --kind svd > /dev/null 2>&1") == 1);
    CHECK(status(tool + " solve --input " + out + "x > /dev/null 2>&1") == 2);
    CHECK(status("printf 'p domvar ds cvd 1 0 0 1 0\\n' | " + tool + " solve --input - > /dev/null") == 0);
}
