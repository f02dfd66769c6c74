#include <catch2/catch_amalgamated.hpp>

#include "cubemodel/json_io.hpp"
#include "cubemodel/verify.hpp"

using namespace cubemodel;

TEST_CASE("vertex literals parse and render") {
    CHECK(parse_vertex("\xce\xb5;0,0,0") == basepoint());
    CHECK(parse_vertex("eps;1,-2,3") == VertexId{TreeNodeId{}, {1, -2, 3}});
    VertexId v{reduce_word({{2, 5}, {1, 0}}), {3, -1, 0}};
    CHECK(parse_vertex("(2,5),(1,0);3,-1,0") == v);
    CHECK(parse_vertex(to_string(v)) == v);
    CHECK_THROWS_AS(parse_vertex("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("(2,5),(2,0);0,0,0"), std::invalid_argument);  // unreduced word
    CHECK_THROWS_AS(parse_vertex("(4,1);0,0,0"), std::invalid_argument);        // bad slot
}

TEST_CASE("meridian literals parse with canonical anchors") {
    CHECK(parse_meridian("\xce\xb5@2") == MeridianId{TreeNodeId{}, 2});
    CHECK(parse_meridian("(2,5)@2") == MeridianId{reduce_word({{2, 5}}), 2});
    CHECK_THROWS_AS(parse_meridian("(1,5)@2"), std::invalid_argument);  // anchor not canonical
    CHECK_THROWS_AS(parse_meridian("\xce\xb5@4"), std::invalid_argument);
}

TEST_CASE("hyperplane literals mirror the display names") {
    HyperplaneId t{TwistHyperplaneId{{reduce_word({{2, 5}}), 2}, -3}};
    CHECK(parse_hyperplane(to_string(t)) == t);
    CHECK(parse_hyperplane("T[\xce\xb5]@1:0") == HyperplaneId{TwistHyperplaneId{{TreeNodeId{}, 1}, 0}});
    HyperplaneId s{SwitchHyperplaneId{reduce_word({{1, 0}, {2, 5}})}};
    CHECK(parse_hyperplane(to_string(s)) == s);
    CHECK_THROWS_AS(parse_hyperplane("X[foo]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hyperplane("T[(1,5)]@2:0"), std::invalid_argument);
}

TEST_CASE("hyperplane json round trips through the schema") {
    HyperplaneId t{TwistHyperplaneId{{reduce_word({{2, 5}}), 2}, -3}};
    json jt = hyperplane_to_json(t);
    CHECK(jt.at("kind") == "twist");
    CHECK(jt.at("wall") == -3);
    CHECK(hyperplane_from_json(jt) == t);

    HyperplaneId s{SwitchHyperplaneId{reduce_word({{1, 0}, {2, 5}})}};
    json js = hyperplane_to_json(s);
    CHECK(js.at("kind") == "switch");
    CHECK(hyperplane_from_json(js) == s);

    CHECK_THROWS_AS(hyperplane_from_json(json{{"kind", "nope"}}), std::invalid_argument);
}

TEST_CASE("descriptor json carries the variant tag") {
    CHECK(descriptor_to_json(Whole{}).at("variant") == "whole");
    CHECK(descriptor_to_json(ZeroCube{basepoint()}).at("variant") == "zero-cube");
    CHECK(descriptor_to_json(CombTwist{{TreeNodeId{}, 1}, 4}).at("variant") == "comb-twist");
    CHECK(descriptor_to_json(CombSwitch{TreeNodeId{}, 2, -1}).at("variant") == "comb-switch");
    CHECK(descriptor_to_json(make_line(TreeNodeId{}, 2, 7, 1, 5)).at("variant") == "line");
    json tr = descriptor_to_json(make_tree(MeridianId{TreeNodeId{}, 2}, 1, MeridianId{TreeNodeId{}, 1}, 0));
    CHECK(tr.at("variant") == "tree");
    CHECK(tr.at("m1").at("slot") == 1);  // canonicalized slot order
}

TEST_CASE("ball json has stable ordering") {
    Ball b = make_ball(basepoint(), 2);
    json j1 = ball_to_json(b);
    json j2 = ball_to_json(make_ball(basepoint(), 2));
    CHECK(j1 == j2);
    CHECK(j1.at("vertices").size() == 58);
    CHECK(j1.at("edges").size() == 81);
    CHECK(j1.at("squares").size() == 24);
    // vertices are sorted lexicographically, so the json is reproducible
    CHECK(vertex_from_json(j1.at("vertices").at(0)) == b.vertices[0]);
}

TEST_CASE("dot exports name vertices canonically") {
    Ball b = make_ball(basepoint(), 1);
    std::string dot = ball_to_dot(b);
    CHECK(dot.find("graph skeleton {") == 0);
    CHECK(dot.find("\xce\xb5;0,0,0") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);  // switch edges

    ContactGraph g = build_contact_graph(hyperplanes_of_ball(b));
    std::string cdot = contact_graph_to_dot(g);
    CHECK(cdot.find("T[\xce\xb5]@1:-1") != std::string::npos);
    CHECK(cdot.find("S[(1,0)]") != std::string::npos);

    MeridianGraph mg = build_meridian_graph(b);
    std::string mdot = meridian_graph_to_dot(mg);
    CHECK(mdot.find("M[\xce\xb5]@1") != std::string::npos);
}

TEST_CASE("distance results serialize their certification state") {
    DistanceResult r;
    r.value = 2;
    r.search_radius = 2;
    json j = distance_to_json(r);
    CHECK(j.at("value") == 2);
    CHECK(j.at("status") == "exact");
    CHECK(j.at("searchRadius") == 2);
    r.status = DistanceResult::Status::UpperBound;
    CHECK(distance_to_json(r).at("status") == "upper_bound");
}

TEST_CASE("serialization round trips over sampled values") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> slot(1, 3);
    std::uniform_int_distribution<long long> idx(-9, 9);
    std::uniform_int_distribution<int> len(0, 5);
    for (int t = 0; t < 200; ++t) {
        std::vector<SwitchLabel> w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back({slot(rng), idx(rng)});
        VertexId v{reduce_word(w), {idx(rng), idx(rng), idx(rng)}};
        CHECK(vertex_from_json(vertex_to_json(v)) == v);
        CHECK(parse_vertex(to_string(v)) == v);

        MeridianId m = meridian_of(v.node, slot(rng));
        CHECK(meridian_from_json(meridian_to_json(m)) == m);
        CHECK(parse_meridian(to_string(m.anchor) + "@" + std::to_string(m.slot)) == m);

        HyperplaneId h{TwistHyperplaneId{m, idx(rng)}};
        CHECK(hyperplane_from_json(hyperplane_to_json(h)) == h);
        CHECK(parse_hyperplane(to_string(h)) == h);
        if (!v.node.empty()) {
            HyperplaneId s{SwitchHyperplaneId{v.node}};
            CHECK(hyperplane_from_json(hyperplane_to_json(s)) == s);
            CHECK(parse_hyperplane(to_string(s)) == s);
        }
    }
}

TEST_CASE("verification reports render deterministically") {
    VerificationReport r{"demo", 2, 7, {}};
    add_check(r, "a", true, "1", "1", "exact");
    add_check(r, "b", false, "0", "1", "oracle");
    std::string text = render_report(r);
    CHECK(text == render_report(r));
    CHECK(text.find("[PASS] a") != std::string::npos);
    CHECK(text.find("[FAIL] b") != std::string::npos);
    CHECK(r.exit_code() == 1);
}
