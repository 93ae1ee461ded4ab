#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domvar/errors.hpp"
#include "domvar/oracle.hpp"
#include "support.hpp"

using namespace domvar;

namespace {

VertexSet subset_of(int n, std::uint32_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.insert(v);
    return s;
}

// Connected split graph: clique 0..c-1, every independent vertex gets >= 1 clique neighbor.
Graph random_connected_split(std::mt19937_64 &rng, int c, int i) {
    std::vector<Edge> e;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) e.emplace_back(a, b);
    for (int v = c; v < c + i; ++v) {
        e.emplace_back(testing_support::pick(rng, 0, c - 1), v);
        for (int a = 0; a < c; ++a)
            if (testing_support::coin(rng, 0.3)) e.emplace_back(a, v);
    }
    return build_graph(c + i, e);
}

int brute_min_size(const Graph &g, Variant v) {
    auto s = brute_min(g, {v, effective_threshold(v, 0)});
    return s.feasible() ? s.size : -1;
}

} // namespace

TEST_CASE("check_solution examples") {
    auto k3 = testing_support::complete_graph(3);
    CHECK(check_solution(k3, VertexSet(3, {0}), {Variant::EDS, 0}));
    auto c4 = testing_support::cycle_graph(4);
    CHECK(check_solution(c4, VertexSet(4, {0, 2}), {Variant::DS, 0}));
    CHECK_FALSE(check_solution(c4, VertexSet(4, {0, 2}), {Variant::EDS, 0}));
    auto k2 = build_graph(2, {{0, 1}});
    CHECK_FALSE(check_solution(k2, VertexSet(2, {0}), {Variant::TDS, 1}));
    CHECK(check_solution(k2, VertexSet(2, {0, 1}), {Variant::TDS, 1}));
    CHECK(check_solution(Graph{}, VertexSet(0), {Variant::TDS, 1}));
    CHECK_FALSE(check_solution(k3, VertexSet(3, {0, 1}), {Variant::IDS, 0}));
    CHECK(check_solution(k3, VertexSet(3, {0, 1}), {Variant::DC, 0}));
    CHECK_FALSE(check_solution(c4, VertexSet(4, {0, 2}), {Variant::DC, 0}));
    CHECK(check_solution(k3, VertexSet(3, {0, 1, 2}), {Variant::THDS, 2}));
    CHECK_FALSE(check_solution(k3, VertexSet(3, {0, 1}), {Variant::THDS, 2}));
}

TEST_CASE("brute_min examples") {
    CHECK(brute_min(testing_support::complete_graph(3), {Variant::DS, 0}).size == 1);
    CHECK_FALSE(brute_min(testing_support::cycle_graph(4), {Variant::EDS, 0}).feasible());
    CHECK_FALSE(brute_min(build_graph(4, {{0, 1}, {2, 3}}), {Variant::DC, 0}).feasible());
    auto p4 = brute_min(testing_support::path_graph(4), {Variant::DS, 0});
    CHECK(p4.vertices.to_vector() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(brute_min(build_graph(kBruteVertexCap + 1, {}), {Variant::DS, 0}), CapExceeded);
}

TEST_CASE("definitional implications on random pairs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = testing_support::pick(rng, 0, 9);
        auto g = testing_support::random_graph(rng, n, 0.4);
        auto d = subset_of(n, static_cast<std::uint32_t>(rng()));
        const bool ds = check_solution(g, d, {Variant::DS, 0});
        if (check_solution(g, d, {Variant::EDS, 0})) CHECK(ds);
        if (check_solution(g, d, {Variant::IDS, 0})) CHECK(ds);
        if (check_solution(g, d, {Variant::DC, 0})) CHECK(ds);
        if (!d.empty() && check_solution(g, d, {Variant::TDS, 1})) CHECK(ds);
        if (check_solution(g, d, {Variant::THDS, 2})) CHECK(check_solution(g, d, {Variant::TDS, 1}));
    }
}

TEST_CASE("minimum dominating set never grows when edges are added") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = testing_support::pick(rng, 2, 10);
        auto g = testing_support::random_graph(rng, n, 0.25);
        auto edges = g.edges();
        int u = testing_support::pick(rng, 0, n - 1), v = testing_support::pick(rng, 0, n - 1);
        if (u == v) continue;
        edges.emplace_back(u, v);
        auto h = build_graph(n, edges);
        CHECK(brute_min_size(h, Variant::DS) <= brute_min_size(g, Variant::DS));
    }
}

TEST_CASE("search_eds matches brute force") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testing_support::random_graph(rng, testing_support::pick(rng, 0, 12), testing_support::pick(rng, 1, 6) / 10.0);
        auto want = brute_min(g, {Variant::EDS, 0});
        auto got = search_eds(g);
        REQUIRE(got.status == want.status);
        if (!want.feasible()) continue;
        CHECK(got.size == want.size);
        CHECK(check_solution(g, got.vertices, {Variant::EDS, 0}));
        auto exact = search_eds(g, want.size);
        CHECK(exact.feasible());
        CHECK(exact.size == want.size);
        CHECK_FALSE(search_eds(g, want.size - 1).feasible());
    }
}

TEST_CASE("brute_cover edge cases") {
    CoverInstance empty;
    auto e = brute_cover(empty);
    CHECK(e.feasible);
    CHECK(e.size == 0);
    CoverInstance uncovered;
    uncovered.universe_size = 1;
    uncovered.family = {0u};
    uncovered.block_sizes = {1};
    uncovered.block_requirement = {0};
    CHECK_FALSE(brute_cover(uncovered).feasible);
    CoverInstance big;
    big.family.assign(kBruteFamilyCap + 1, 0u);
    big.block_sizes = {kBruteFamilyCap + 1};
    big.block_requirement = {0};
    CHECK_THROWS_AS(brute_cover(big), CapExceeded);
}

TEST_CASE("split normalization examples") {
    // 2 sees both clique vertices, so {2} dominates.
    auto g = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    SplitPartition p{VertexSet(3, {0, 1}), VertexSet(3, {2})};
    CHECK(normalize_split_dominating(g, p, VertexSet(3, {2}), {Variant::DS, 0}).to_vector() == std::vector<int>{0});
    CHECK(normalize_split_dominating(g, p, VertexSet(3, {0}), {Variant::DS, 0}).to_vector() == std::vector<int>{0});
    auto pendant = build_graph(3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(normalize_split_dominating(pendant, p, VertexSet(3, {2}), {Variant::DS, 0}), ContractError);
    CHECK_THROWS_AS(normalize_split_dominating(g, p, VertexSet(3, {0}), {Variant::EDS, 0}), ContractError);
}

TEST_CASE("split normalization over every solution of small split graphs") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        const int c = testing_support::pick(rng, 1, 5);
        const int i = testing_support::pick(rng, 0, 10 - c);
        auto g = random_connected_split(rng, c, i);
        const int n = g.vertex_count();
        SplitPartition p{subset_of(n, (1u << c) - 1), g.all_vertices() - subset_of(n, (1u << c) - 1)};
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            auto d = subset_of(n, mask);
            for (Variant v : {Variant::DS, Variant::DC, Variant::TDS}) {
                const VariantSpec spec{v, effective_threshold(v, 0)};
                if (!check_solution(g, d, spec)) continue;
                if (v == Variant::TDS && (c < 2 || d.size() < 2)) continue;
                auto out = normalize_split_dominating(g, p, d, spec);
                CHECK_FALSE(out.intersects(p.independent_side));
                CHECK(check_solution(g, out, spec));
                CHECK(out.size() <= d.size());
            }
        }
    }
}

TEST_CASE("minimal vertex cover complements") {
    auto p3 = testing_support::path_graph(3);
    auto ids = mmvc_from_ids(p3, VertexSet(3, {1}), ComplementDirection::CoverToIds);
    CHECK(ids.to_vector() == std::vector<int>{0, 2});
    CHECK(check_solution(p3, ids, {Variant::IDS, 0}));
    CHECK(brute_max_minimal_vertex_cover(p3) == 2);
    CHECK(mmvc_from_ids(p3, VertexSet(3, {1}), ComplementDirection::IdsToCover).to_vector() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(mmvc_from_ids(p3, VertexSet(3, {0, 1}), ComplementDirection::CoverToIds), ContractError);
    CHECK_THROWS_AS(mmvc_from_ids(p3, VertexSet(3, {0}), ComplementDirection::IdsToCover), ContractError);

    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = testing_support::pick(rng, 0, 10);
        auto g = testing_support::random_graph(rng, n, testing_support::pick(rng, 1, 8) / 10.0);
        CHECK(brute_max_minimal_vertex_cover(g) == n - brute_min_size(g, Variant::IDS));
        for (std::uint32_t mask = 0; mask < (1u << std::min(n, 6)); ++mask) {
            auto t = subset_of(n, mask);
            if (is_minimal_vertex_cover(g, t))
                CHECK(check_solution(g, mmvc_from_ids(g, t, ComplementDirection::CoverToIds), {Variant::IDS, 0}));
        }
    }
}
