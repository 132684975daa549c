#include <degdiam/degdiam.hpp>
#include <doctest.h>

#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace degdiam;

namespace {

Group cyclic(std::int64_t m, std::int64_t n, std::int64_t a) {
    return Group::validate(SemidirectCyclicSpec{m, n, a});
}

GeneratorSet make_set(const Group& G, const std::vector<Element>& raw) {
    return GeneratorSet::close_under_inverses(G, raw);
}

}  // namespace

TEST_CASE("closure adds missing inverses, deduplicates, and counts involutions") {
    const Group s3 = cyclic(2, 3, 2);

    const GeneratorSet closed = make_set(s3, {Element{1, 0}, Element{0, 1}});
    CHECK(closed.degree() == 3);
    CHECK(closed.involution_count() == 1);
    CHECK(closed.elements() == std::vector<Element>{{1, 0}, {0, 1}, {0, 2}});

    // Already closed input keeps its order; duplicates collapse.
    const GeneratorSet kept = make_set(s3, {Element{0, 2}, Element{1, 1}, Element{0, 2}, Element{0, 1}});
    CHECK(kept.elements() == std::vector<Element>{{0, 2}, {1, 1}, {0, 1}});
    CHECK(kept.involution_count() == 1);

    CHECK_THROWS_AS(make_set(s3, {}), EmptySet);
    CHECK_THROWS_AS(make_set(s3, {Element{0, 0}}), ContainsIdentity);
    CHECK_THROWS_AS(make_set(s3, {Element{0, 3}}), CoordinateOutOfRange);
}

TEST_CASE("bfs reproduces the published order 1155 profile") {
    const Group G = cyclic(15, 77, 4);
    const GeneratorSet S = make_set(G, {Element{6, 2}, Element{10, 9}});
    REQUIRE(S.degree() == 4);
    const CayleyStats stats = bfs_stats(S);
    CHECK(stats.order == 1155);
    CHECK(stats.degree == 4);
    CHECK(stats.connected);
    CHECK(stats.reached == 1155);
    REQUIRE(stats.diameter.has_value());
    CHECK(*stats.diameter == 7);
    CHECK(static_cast<int>(stats.distance_histogram.size()) == 8);
    CHECK(std::accumulate(stats.distance_histogram.begin(), stats.distance_histogram.end(),
                          std::int64_t{0}) == 1155);
    CHECK(stats.distance_histogram[0] == 1);
    CHECK(stats.distance_histogram[1] == 4);
    // Sphere sizes never exceed the Moore term delta*(delta-1)^(d-1).
    std::int64_t cap = 4;
    for (std::size_t d = 1; d < stats.distance_histogram.size(); ++d) {
        CHECK(stats.distance_histogram[d] <= cap);
        cap *= 3;
    }
}

TEST_CASE("bfs agrees with the cubic-time oracle on small graphs") {
    const Group s3 = cyclic(2, 3, 2);
    const Group g234 = cyclic(18, 13, 3);
    struct Case {
        const Group* group;
        std::vector<Element> raw;
    };
    const std::vector<Case> cases{
        {&s3, {Element{1, 0}, Element{0, 1}}},
        {&s3, {Element{1, 0}, Element{1, 1}, Element{1, 2}}},
        {&g234, {Element{7, 5}, Element{9, 0}}},
        {&g234, {Element{1, 0}, Element{17, 0}}},
    };
    for (const auto& c : cases) {
        const GeneratorSet S = make_set(*c.group, c.raw);
        const CayleyStats stats = bfs_stats(S);
        const auto oracle = oracles::diameter_floyd_warshall(S);
        CHECK(stats.connected == oracle.has_value());
        if (oracle) CHECK(*stats.diameter == *oracle);
        // And the dedicated all-pairs oracle agrees too.
        CHECK(all_pairs_diameter_oracle(S) == oracle);
    }
}

TEST_CASE("proper subgroup generators leave the graph disconnected") {
    const Group G = cyclic(15, 77, 4);
    const GeneratorSet S = make_set(G, {Element{0, 7}});
    const CayleyStats stats = bfs_stats(S);
    CHECK_FALSE(stats.connected);
    CHECK(stats.reached == 11);  // the cyclic subgroup generated by [0,7]
    CHECK_FALSE(stats.diameter.has_value());
    CHECK(all_pairs_diameter_oracle(S) == std::nullopt);
}

TEST_CASE("the full non-identity set yields a complete graph") {
    const Group s3 = cyclic(2, 3, 2);
    std::vector<Element> all;
    for (std::int64_t i = 1; i < 6; ++i) all.push_back(s3.unindex(i));
    const GeneratorSet S = make_set(s3, all);
    CHECK(S.degree() == 5);
    const CayleyStats stats = bfs_stats(S);
    CHECK(*stats.diameter == 1);
    CHECK(stats.distance_histogram == std::vector<std::int64_t>{1, 5});
}

TEST_CASE("distance overflow throws past 254 and succeeds exactly at it") {
    // C_509 has diameter 254: the longest representable distance.
    const Group c509 = cyclic(1, 509, 1);
    const GeneratorSet ring509 = make_set(c509, {Element{0, 1}});
    const CayleyStats ok = bfs_stats(ring509);
    CHECK(*ok.diameter == 254);

    // C_600 would need distance 300.
    const Group c600 = cyclic(1, 600, 1);
    const GeneratorSet ring600 = make_set(c600, {Element{0, 1}});
    CHECK_THROWS_AS(bfs_stats(ring600), DistanceOverflow);
}

TEST_CASE("vertex budget is enforced up front") {
    const Group G = cyclic(15, 77, 4);
    const GeneratorSet S = make_set(G, {Element{6, 2}, Element{10, 9}});
    CHECK_THROWS_AS(bfs_stats(S, 1154), MemoryBudgetExceeded);
    CHECK(bfs_stats(S, 1155).connected);
}

TEST_CASE("neighborhoods are symmetric and regular") {
    const Group G = Group::validate(SemidirectSquareSpec{16, 3, Mat2{1, 1, 1, 0}});
    const GeneratorSet S = make_set(G, {Element{1, 0, 1}, Element{5, 2, 0}});
    const int deg = S.degree();
    for (std::int64_t i = 0; i < G.order(); ++i) {
        const Element v = G.unindex(i);
        const auto nb = neighbors(S, v);
        CHECK(static_cast<int>(nb.size()) == deg);
        for (const Element& w : nb) {
            const auto back = neighbors(S, w);
            CHECK(std::find(back.begin(), back.end(), v) != back.end());
        }
    }
}

TEST_CASE("export writes both formats exactly") {
    const Group s3 = cyclic(2, 3, 2);
    std::vector<Element> all;
    for (std::int64_t i = 1; i < 6; ++i) all.push_back(s3.unindex(i));
    const GeneratorSet S = make_set(s3, all);

    std::ostringstream edge;
    CHECK(export_graph(S, GraphFormat::edgelist, edge) == 15);
    std::string expected;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            expected += std::to_string(u) + " " + std::to_string(v) + "\n";
    CHECK(edge.str() == expected);

    std::ostringstream dimacs;
    CHECK(export_graph(S, GraphFormat::dimacs, dimacs) == 15);
    CHECK(dimacs.str().rfind("p edge 6 15\ne 1 2\n", 0) == 0);
    CHECK(dimacs.str().back() == '\n');

    // Byte-identical across repeated runs.
    std::ostringstream again;
    export_graph(S, GraphFormat::edgelist, again);
    CHECK(again.str() == edge.str());
}

TEST_CASE("export edge count matches the handshake identity on a published row") {
    const Group G = cyclic(15, 77, 4);
    const GeneratorSet S = make_set(G, {Element{6, 2}, Element{10, 9}});
    std::ostringstream out;
    const std::int64_t edges = export_graph(S, GraphFormat::edgelist, out);
    CHECK(edges == 1155 * 4 / 2);
    // Lines are "u v" with u < v, strictly increasing, LF-terminated.
    std::istringstream in(out.str());
    std::int64_t count = 0;
    std::int64_t pu = -1, pv = -1;
    std::int64_t u = 0, v = 0;
    while (in >> u >> v) {
        CHECK(u < v);
        CHECK((u > pu || (u == pu && v > pv)));
        pu = u;
        pv = v;
        ++count;
    }
    CHECK(count == edges);
    CHECK(out.str().back() == '\n');
}

TEST_CASE("export surfaces sink failures") {
    const Group s3 = cyclic(2, 3, 2);
    const GeneratorSet S = make_set(s3, {Element{1, 0}});
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    CHECK_THROWS_AS(export_graph(S, GraphFormat::edgelist, out), SinkError);
}

TEST_CASE("the all-pairs oracle refuses oversized graphs") {
    const Group big = cyclic(5, 1001, 1);  // order 5005
    const GeneratorSet S = make_set(big, {Element{1, 1}});
    CHECK_THROWS_AS(all_pairs_diameter_oracle(S), TooLarge);
}
