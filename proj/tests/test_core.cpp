#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cubemodel/core.hpp"

using namespace cubemodel;

namespace {

VertexId random_vertex(std::mt19937_64& rng, int moves) {
    VertexId v;
    std::uniform_int_distribution<int> move(0, 8);
    for (int i = 0; i < moves; ++i) {
        int m = move(rng);
        if (m < 6)
            v = twist_target(v, kSlots[static_cast<std::size_t>(m / 2)], m % 2 == 0 ? +1 : -1);
        else
            v = switch_target(v, kSlots[static_cast<std::size_t>(m - 6)]);
    }
    return v;
}

}  // namespace

TEST_CASE("word reduction cancels backtracks") {
    CHECK(reduce_word({{2, 5}, {2, 0}}) == TreeNodeId{});
    CHECK(reduce_word({{2, 5}, {1, 3}, {1, 0}}) == reduce_word({{2, 5}}));
    // (1,0) after (2,5) is a genuine child, and (2,0) after (1,0) likewise
    TreeNodeId already{{{2, 5}, {1, 0}, {2, 0}}};
    CHECK(reduce_word({{2, 5}, {1, 0}, {2, 0}}) == already);
    CHECK(is_reduced(already.word));
}

TEST_CASE("word reduction cascades and is idempotent") {
    TreeNodeId r = reduce_word({{1, 5}, {2, 3}, {2, 0}, {1, 0}});
    CHECK(r == TreeNodeId{});

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> slot(1, 3);
    std::uniform_int_distribution<long long> idx(-2, 2);
    std::uniform_int_distribution<int> len(0, 12);
    for (int t = 0; t < 500; ++t) {
        std::vector<SwitchLabel> w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back({slot(rng), idx(rng)});
        TreeNodeId r1 = reduce_word(w);
        CHECK(is_reduced(r1.word));
        CHECK(r1.word.size() <= w.size());
        CHECK(reduce_word(r1.word) == r1);
    }
}

TEST_CASE("twist moves shift one coordinate") {
    VertexId o = basepoint();
    CHECK(twist_target(o, 2, +1) == VertexId{TreeNodeId{}, {0, 1, 0}});
    CHECK(twist_target(VertexId{TreeNodeId{}, {0, 1, 0}}, 2, -1) == o);
    VertexId v{reduce_word({{2, 5}}), {4, 0, -1}};
    CHECK(twist_target(v, 1, +1) == VertexId{reduce_word({{2, 5}}), {5, 0, -1}});
}

TEST_CASE("switch moves cross bridges with coordinate transport") {
    VertexId u{TreeNodeId{}, {0, 5, 0}};
    VertexId child{reduce_word({{2, 5}}), {0, 0, 0}};
    CHECK(switch_target(u, 2) == child);
    CHECK(switch_target(child, 2) == u);

    VertexId v{reduce_word({{2, 5}}), {3, 7, 0}};
    CHECK(switch_target(v, 2) == VertexId{reduce_word({{2, 5}, {2, 7}}), {3, 0, 0}});
}

TEST_CASE("switch moves are involutions") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        VertexId v = random_vertex(rng, 10);
        for (Slot s : kSlots) CHECK(switch_target(switch_target(v, s), s) == v);
    }
}

TEST_CASE("every vertex has nine distinct neighbors") {
    VertexId o = basepoint();
    auto nb = neighbors(o);
    std::set<VertexId> set(nb.begin(), nb.end());
    REQUIRE(set.size() == 9);
    CHECK(set.count(VertexId{TreeNodeId{}, {1, 0, 0}}));
    CHECK(set.count(VertexId{TreeNodeId{}, {0, 0, -1}}));
    CHECK(set.count(VertexId{reduce_word({{1, 0}}), {0, 0, 0}}));
    CHECK(set.count(VertexId{reduce_word({{2, 0}}), {0, 0, 0}}));
    CHECK(set.count(VertexId{reduce_word({{3, 0}}), {0, 0, 0}}));

    auto nb2 = neighbors(VertexId{TreeNodeId{}, {0, 5, 0}});
    CHECK(std::set<VertexId>(nb2.begin(), nb2.end()).count(VertexId{reduce_word({{2, 5}}), {0, 0, 0}}));

    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        VertexId v = random_vertex(rng, 5);
        auto n = neighbors(v);
        CHECK(std::set<VertexId>(n.begin(), n.end()).size() == 9);
    }
}

TEST_CASE("neighbor relation is symmetric") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        VertexId v = random_vertex(rng, 8);
        for (const VertexId& w : neighbors(v)) {
            auto back = neighbors(w);
            CHECK(std::count(back.begin(), back.end(), v) == 1);
        }
    }
}

TEST_CASE("canonical edges are orientation independent") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        VertexId v = random_vertex(rng, 8);
        for (Slot s : kSlots) {
            VertexId w = twist_target(v, s, +1);
            CHECK(make_twist_edge(v, s, +1) == make_twist_edge(w, s, -1));
            VertexId x = switch_target(v, s);
            CHECK(make_switch_edge(v, s) == make_switch_edge(x, s));
        }
    }
}

TEST_CASE("tree geodesics join words through the common prefix") {
    TreeNodeId a = reduce_word({{2, 5}, {1, 3}});
    TreeNodeId b = reduce_word({{2, 5}, {3, -1}, {1, 0}});
    auto path = tree_geodesic(a, b);
    REQUIRE(path.size() == 4);
    CHECK(path.front() == a);
    CHECK(path[1] == reduce_word({{2, 5}}));
    CHECK(path.back() == b);
    CHECK(tree_distance(a, b) == 3);
}

TEST_CASE("vertex literals render deterministically") {
    CHECK(to_string(basepoint()) == "\xce\xb5;0,0,0");
    VertexId v{reduce_word({{2, 5}, {1, 0}}), {3, -1, 0}};
    CHECK(to_string(v) == "(2,5),(1,0);3,-1,0");
}
