#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "cubemodel/ball.hpp"
#include "cubemodel/hyperplane.hpp"

using namespace cubemodel;

namespace {

EdgeId edge_between(const VertexId& u, const VertexId& v) {
    if (u.node == v.node) {
        for (Slot s : kSlots) {
            if (twist_target(u, s, +1) == v) return make_twist_edge(u, s, +1);
            if (twist_target(u, s, -1) == v) return make_twist_edge(u, s, -1);
        }
    } else {
        for (Slot s : kSlots)
            if (switch_target(u, s) == v) return make_switch_edge(u, s);
    }
    throw std::logic_error("vertices are not adjacent");
}

// Edge-level carrier oracle. Two hyperplanes cross when, at a shared carrier
// vertex, the moves along their dual edges commute (the square exists in the
// complex even if a corner leaves the ball); they osculate when their
// carriers merely share a vertex.
struct CarrierOracle {
    const Ball& ball;
    std::map<HyperplaneId, std::vector<EdgeId>, HyperplaneLess> dual_edges;
    // vertex index -> moves along incident dual edges, per hyperplane
    std::map<HyperplaneId, std::map<int, std::vector<VertexId>>, HyperplaneLess> carrier_moves;

    explicit CarrierOracle(const Ball& b) : ball(b) {
        for (const EdgeId& e : b.edges) {
            HyperplaneId h = dual_hyperplane(e);
            dual_edges[h].push_back(e);
            auto [x, y] = edge_endpoints(e);
            carrier_moves[h][b.index_of(x)].push_back(y);
            carrier_moves[h][b.index_of(y)].push_back(x);
        }
    }

    bool interior(const HyperplaneId& h, int margin) const {
        auto it = dual_edges.find(h);
        if (it == dual_edges.end()) return false;
        for (const EdgeId& e : it->second) {
            auto [x, y] = edge_endpoints(e);
            int dx = ball.depth[static_cast<std::size_t>(ball.index_of(x))];
            int dy = ball.depth[static_cast<std::size_t>(ball.index_of(y))];
            if (std::max(dx, dy) <= ball.radius - margin) return true;
        }
        return false;
    }

    static VertexId apply_move(const VertexId& from, const VertexId& to, const VertexId& at) {
        if (from.node == to.node) {
            for (Slot s : kSlots) {
                if (twist_target(from, s, +1) == to) return twist_target(at, s, +1);
                if (twist_target(from, s, -1) == to) return twist_target(at, s, -1);
            }
        }
        for (Slot s : kSlots)
            if (switch_target(from, s) == to) return switch_target(at, s);
        throw std::logic_error("not a move");
    }

    ContactKind contact_kind(const HyperplaneId& a, const HyperplaneId& b) const {
        const auto& ca = carrier_moves.at(a);
        const auto& cb = carrier_moves.at(b);
        bool shared = false;
        for (const auto& [i, moves_a] : ca) {
            auto it = cb.find(i);
            if (it == cb.end()) continue;
            shared = true;
            const VertexId& v = ball.vertices[static_cast<std::size_t>(i)];
            for (const VertexId& x : moves_a)
                for (const VertexId& y : it->second) {
                    VertexId corner = apply_move(v, x, y);
                    if (corner == apply_move(v, y, x) && !(corner == v)) return ContactKind::Cross;
                }
        }
        return shared ? ContactKind::Osculate : ContactKind::None;
    }
};

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

TEST_CASE("meridians canonicalize to root-most nodes") {
    CHECK(meridian_of(TreeNodeId{}, 2) == MeridianId{TreeNodeId{}, 2});
    CHECK(meridian_of(reduce_word({{1, 3}}), 2) == MeridianId{TreeNodeId{}, 2});
    CHECK(meridian_of(reduce_word({{2, 5}, {1, 0}}), 2) == MeridianId{reduce_word({{2, 5}}), 2});
}

TEST_CASE("support membership follows slot-avoiding paths") {
    MeridianId m{TreeNodeId{}, 2};
    CHECK(in_support(m, TreeNodeId{}));
    CHECK_FALSE(in_support(m, reduce_word({{2, 0}})));
    CHECK(in_support(m, reduce_word({{1, 4}, {3, -2}})));
}

TEST_CASE("dual hyperplanes identify edges across flats") {
    CHECK(dual_hyperplane(make_twist_edge(basepoint(), 1, +1)) ==
          HyperplaneId{TwistHyperplaneId{{TreeNodeId{}, 1}, 0}});
    CHECK(dual_hyperplane(make_switch_edge(VertexId{TreeNodeId{}, {0, 5, 0}}, 2)) ==
          HyperplaneId{SwitchHyperplaneId{reduce_word({{2, 5}})}});

    EdgeId e1 = make_twist_edge(basepoint(), 1, +1);
    EdgeId e2 = make_twist_edge(VertexId{reduce_word({{2, 7}}), {0, 9, 9}}, 1, +1);
    CHECK(dual_hyperplane(e1) == dual_hyperplane(e2));
}

TEST_CASE("every ball edge is dual to exactly one separating hyperplane of its endpoints") {
    Ball b = make_ball(basepoint(), 3);
    for (const EdgeId& e : b.edges) {
        auto [u, v] = edge_endpoints(e);
        auto sep = separating_set(u, v);
        REQUIRE(sep.size() == 1);
        CHECK(sep[0] == dual_hyperplane(e));
    }
}

TEST_CASE("separation examples") {
    HyperplaneId sw{SwitchHyperplaneId{reduce_word({{2, 5}})}};
    CHECK(separates(sw, basepoint(), VertexId{reduce_word({{2, 5}}), {0, 0, 0}}));

    HyperplaneId t0{TwistHyperplaneId{{TreeNodeId{}, 1}, 0}};
    CHECK(separates(t0, basepoint(), VertexId{TreeNodeId{}, {1, 0, 0}}));
    CHECK_FALSE(separates(t0, basepoint(), VertexId{TreeNodeId{}, {0, 9, 9}}));

    HyperplaneId t3{TwistHyperplaneId{{TreeNodeId{}, 2}, 3}};
    CHECK(separates(t3, basepoint(), VertexId{reduce_word({{2, 5}}), {0, 0, 0}}));
}

TEST_CASE("separating sets match worked examples") {
    CHECK(separating_set(basepoint(), basepoint()).empty());

    auto sep = separating_set(basepoint(), VertexId{TreeNodeId{}, {1, 2, 3}});
    REQUIRE(sep.size() == 6);
    std::set<HyperplaneId, HyperplaneLess> want;
    want.insert(TwistHyperplaneId{{TreeNodeId{}, 1}, 0});
    want.insert(TwistHyperplaneId{{TreeNodeId{}, 2}, 0});
    want.insert(TwistHyperplaneId{{TreeNodeId{}, 2}, 1});
    want.insert(TwistHyperplaneId{{TreeNodeId{}, 3}, 0});
    want.insert(TwistHyperplaneId{{TreeNodeId{}, 3}, 1});
    want.insert(TwistHyperplaneId{{TreeNodeId{}, 3}, 2});
    CHECK(std::set<HyperplaneId, HyperplaneLess>(sep.begin(), sep.end()) == want);

    auto sep2 = separating_set(VertexId{TreeNodeId{}, {0, 5, 0}}, VertexId{reduce_word({{2, 5}}), {0, 0, 0}});
    REQUIRE(sep2.size() == 1);
    CHECK(sep2[0] == HyperplaneId{SwitchHyperplaneId{reduce_word({{2, 5}})}});
}

TEST_CASE("hyperplane count equals graph distance on certified pairs") {
    Ball b = make_ball(basepoint(), 4);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, b.vertices.size() - 1);
    int tried = 0;
    while (tried < 2000) {
        std::size_t i = pick(rng), j = pick(rng);
        if (b.depth[i] + b.depth[j] > b.radius) continue;
        ++tried;
        const VertexId& u = b.vertices[i];
        const VertexId& v = b.vertices[j];
        REQUIRE(metric_distance(u, v) == static_cast<std::size_t>(bfs_distance(b, u, v)));
        REQUIRE(separating_set(u, v).size() == metric_distance(u, v));
    }
}

TEST_CASE("membership in the separating set matches the side predicate") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        VertexId u = random_vertex(rng, 6);
        VertexId v = random_vertex(rng, 6);
        auto sep = separating_set(u, v);
        for (const auto& h : sep) CHECK(separates(h, u, v));
        // vertices on the same side of everything in a sampled non-member set
        for (const auto& h : separating_set(u, u)) CHECK_FALSE(separates(h, u, u));
    }
}

TEST_CASE("vertices above a deep anchor sit at the bridge entry coordinate") {
    // the support of ((2,5),2) hangs below the basepoint flat; everything
    // above it enters through the child side of the bridge, at coordinate 0
    MeridianId m{reduce_word({{2, 5}}), 2};
    HyperplaneId wall0{TwistHyperplaneId{m, 0}};
    VertexId above{TreeNodeId{}, {0, 4, 0}};
    CHECK(transported_coord(m, above) == 0);
    CHECK_FALSE(separates(wall0, above, VertexId{reduce_word({{2, 5}}), {0, 0, 0}}));
    CHECK(separates(wall0, above, VertexId{reduce_word({{2, 5}}), {0, 1, 0}}));

    // hyperplane count equals the certified ball distance through the bridge
    VertexId u{TreeNodeId{}, {0, 4, 0}};
    VertexId v{reduce_word({{2, 5}}), {0, 1, 0}};
    CHECK(metric_distance(u, v) == 3);
    Ball b = make_ball(VertexId{TreeNodeId{}, {0, 5, 0}}, 6);
    CHECK(bfs_distance(b, u, v) == 3);
    auto sep = separating_set(u, v);
    REQUIRE(sep.size() == 3);
    CHECK(std::count(sep.begin(), sep.end(), wall0) == 1);
}

TEST_CASE("median agrees with examples and brute force") {
    VertexId u = basepoint();
    CHECK(median(u, u, VertexId{TreeNodeId{}, {3, 3, 3}}) == u);
    CHECK(median(basepoint(), VertexId{TreeNodeId{}, {2, 0, 0}}, VertexId{TreeNodeId{}, {1, 5, 0}}) ==
          VertexId{TreeNodeId{}, {1, 0, 0}});
    CHECK(median(basepoint(), VertexId{reduce_word({{2, 0}}), {0, 0, 0}}, VertexId{TreeNodeId{}, {0, 3, 0}}) ==
          basepoint());

    Ball b = make_ball(basepoint(), 3);
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> pick(0, b.vertices.size() - 1);
    for (int t = 0; t < 60; ++t) {
        const VertexId& u2 = b.vertices[pick(rng)];
        const VertexId& v2 = b.vertices[pick(rng)];
        const VertexId& w2 = b.vertices[pick(rng)];
        VertexId m = median(u2, v2, w2);
        CHECK(m == median(v2, w2, u2));
        CHECK(m == median(w2, u2, v2));
        // the median minimizes the sum of distances to the triple
        std::size_t best = metric_distance(u2, m) + metric_distance(v2, m) + metric_distance(w2, m);
        for (int s = 0; s < 40; ++s) {
            const VertexId& cand = b.vertices[pick(rng)];
            std::size_t val =
                metric_distance(u2, cand) + metric_distance(v2, cand) + metric_distance(w2, cand);
            CHECK(val >= best);
        }
        // and lies on a geodesic between each pair
        CHECK(metric_distance(u2, m) + metric_distance(m, v2) == metric_distance(u2, v2));
        CHECK(metric_distance(v2, m) + metric_distance(m, w2) == metric_distance(v2, w2));
        CHECK(metric_distance(u2, m) + metric_distance(m, w2) == metric_distance(u2, w2));
    }
}

TEST_CASE("contact classification on named pairs") {
    HyperplaneId t10{TwistHyperplaneId{{TreeNodeId{}, 1}, 0}};
    HyperplaneId t20{TwistHyperplaneId{{TreeNodeId{}, 2}, 0}};
    HyperplaneId t30{TwistHyperplaneId{{TreeNodeId{}, 3}, 0}};
    HyperplaneId t31{TwistHyperplaneId{{TreeNodeId{}, 3}, 1}};
    CHECK(contact(t10, t20) == ContactKind::Cross);
    CHECK(contact(t30, t31) == ContactKind::Osculate);

    HyperplaneId s25{SwitchHyperplaneId{reduce_word({{2, 5}})}};
    HyperplaneId s26{SwitchHyperplaneId{reduce_word({{2, 6}})}};
    HyperplaneId s10{SwitchHyperplaneId{reduce_word({{1, 0}})}};
    CHECK(contact(s25, s10) == ContactKind::Osculate);
    CHECK(contact(s25, s26) == ContactKind::None);

    CHECK_THROWS_AS(contact(t10, t10), std::invalid_argument);
}

TEST_CASE("contact matches the carrier oracle on interior pairs") {
    Ball b = make_ball(basepoint(), 3);
    CarrierOracle oracle(b);
    std::vector<HyperplaneId> interior;
    for (const auto& [h, edges] : oracle.dual_edges)
        if (oracle.interior(h, 1)) interior.push_back(h);
    REQUIRE(interior.size() > 20);
    int checked = 0;
    for (std::size_t i = 0; i < interior.size(); ++i)
        for (std::size_t j = i + 1; j < interior.size(); ++j) {
            ContactKind sym = contact(interior[i], interior[j]);
            ContactKind ora = oracle.contact_kind(interior[i], interior[j]);
            if (sym != ora) {
                CAPTURE(to_string(interior[i]), to_string(interior[j]), to_string(sym), to_string(ora));
                REQUIRE(sym == ora);
            }
            ++checked;
        }
    CHECK(checked > 200);
}

TEST_CASE("contact matches the carrier oracle away from the basepoint") {
    VertexId center{reduce_word({{2, 5}, {1, -3}}), {4, 0, -2}};
    Ball small = make_ball(center, 3);
    Ball wide = make_ball(center, 5);
    CarrierOracle small_oracle(small);
    CarrierOracle oracle(wide);
    std::vector<HyperplaneId> interior;
    for (const auto& [h, edges] : small_oracle.dual_edges)
        if (small_oracle.interior(h, 1)) interior.push_back(h);
    REQUIRE(interior.size() > 10);
    for (std::size_t i = 0; i < interior.size(); ++i)
        for (std::size_t j = i + 1; j < interior.size(); ++j) {
            ContactKind sym = contact(interior[i], interior[j]);
            ContactKind ora = oracle.contact_kind(interior[i], interior[j]);
            if (sym != ora) {
                CAPTURE(to_string(interior[i]), to_string(interior[j]), to_string(sym), to_string(ora));
                REQUIRE(sym == ora);
            }
        }
}

TEST_CASE("supports are connected subtrees") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<int> slot_d(1, 3);
    std::uniform_int_distribution<long long> idx(-3, 3);
    for (int t = 0; t < 200; ++t) {
        // a random canonical meridian and two random nodes of its support
        VertexId v = random_vertex(rng, 6);
        MeridianId m = meridian_of(v.node, slot_d(rng));
        auto random_support_node = [&]() {
            TreeNodeId z = m.anchor;
            int steps = static_cast<int>(rng() % 4);
            for (int i = 0; i < steps; ++i) {
                Slot s = slot_d(rng);
                if (s == m.slot) continue;
                TwistCoord k = idx(rng);
                if (k == 0 && !z.empty() && z.back().slot == s) continue;
                z = z.child(SwitchLabel{s, k});
            }
            return z;
        };
        TreeNodeId a = random_support_node();
        TreeNodeId b = random_support_node();
        REQUIRE(in_support(m, a));
        REQUIRE(in_support(m, b));
        for (const TreeNodeId& z : tree_geodesic(a, b)) CHECK(in_support(m, z));
    }
}

TEST_CASE("parallel classes collapse walls and bridge components") {
    CombinatorialHyperplaneId a{TwistHyperplaneId{{TreeNodeId{}, 1}, 0}, Side::Plus};
    CombinatorialHyperplaneId c{TwistHyperplaneId{{TreeNodeId{}, 1}, 7}, Side::Minus};
    CHECK(parallel_class(a) == parallel_class(c));

    CombinatorialHyperplaneId s1{SwitchHyperplaneId{reduce_word({{2, 5}})}, Side::Minus};
    CombinatorialHyperplaneId s2{SwitchHyperplaneId{reduce_word({{2, 8}})}, Side::Plus};
    auto cls = parallel_class(s1);
    CHECK(cls == parallel_class(s2));
    CHECK(cls.kind == ParallelClassId::SwitchClass);
    CHECK(cls.anchor == TreeNodeId{});
    CHECK(cls.free_slot == 2);

    CombinatorialHyperplaneId deep{SwitchHyperplaneId{reduce_word({{1, 0}, {2, 5}})}, Side::Minus};
    auto cls2 = parallel_class(deep);
    CHECK(cls2.anchor == reduce_word({{1, 0}}));
    CHECK(cls2.free_slot == 2);
}

TEST_CASE("parallel copies stream deterministically") {
    CombinatorialHyperplaneId t{TwistHyperplaneId{{TreeNodeId{}, 1}, 0}, Side::Plus};
    auto copies = enumerate_parallel_copies(t, 3);
    REQUIRE(copies.size() == 3);
    CHECK(as_twist(copies[0].hyperplane).wall == 0);
    CHECK(as_twist(copies[1].hyperplane).wall == 1);
    CHECK(as_twist(copies[2].hyperplane).wall == 2);

    CombinatorialHyperplaneId s{SwitchHyperplaneId{reduce_word({{2, 0}})}, Side::Minus};
    auto scopies = enumerate_parallel_copies(s, 3);
    REQUIRE(scopies.size() == 3);
    CHECK(as_switch(scopies[0].hyperplane).child == reduce_word({{2, 0}}));
    CHECK(as_switch(scopies[1].hyperplane).child == reduce_word({{2, 1}}));
    CHECK(as_switch(scopies[2].hyperplane).child == reduce_word({{2, -1}}));

    CHECK(enumerate_parallel_copies(t, 1) == std::vector<CombinatorialHyperplaneId>{t});

    auto many = enumerate_parallel_copies(s, 30);
    REQUIRE(many.size() == 30);
    for (std::size_t i = 0; i < many.size(); ++i)
        for (std::size_t j = i + 1; j < many.size(); ++j) {
            CHECK_FALSE(many[i] == many[j]);
            CHECK(parallel_class(many[i]) == parallel_class(many[j]));
        }
}
