#pragma once

// JSON and DOT serialization with stable ordering, plus the shell-facing
// literal syntax: vertices as "word;n1,n2,n3" and meridians as "word@slot",
// where word is the epsilon sign or comma-separated (slot,index) pairs.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cubemodel/ball.hpp"
#include "cubemodel/contact_graph.hpp"
#include "cubemodel/core.hpp"
#include "cubemodel/disk_graph.hpp"
#include "cubemodel/factor_system.hpp"
#include "cubemodel/hyperplane.hpp"

namespace cubemodel {

using nlohmann::json;

inline json node_to_json(const TreeNodeId& n) {
    json arr = json::array();
    for (const auto& l : n.word) arr.push_back({l.slot, l.dual_index});
    return arr;
}

inline TreeNodeId node_from_json(const json& j) {
    std::vector<SwitchLabel> w;
    for (const auto& e : j) w.push_back({e.at(0).get<Slot>(), e.at(1).get<TwistCoord>()});
    TreeNodeId n{std::move(w)};
    if (!is_reduced(n.word)) throw std::invalid_argument("tree node word is not reduced");
    return n;
}

inline json vertex_to_json(const VertexId& v) {
    return json{{"node", node_to_json(v.node)}, {"twist", {v.twist[0], v.twist[1], v.twist[2]}}};
}

inline VertexId vertex_from_json(const json& j) {
    VertexId v;
    v.node = node_from_json(j.at("node"));
    for (std::size_t i = 0; i < 3; ++i) v.twist[i] = j.at("twist").at(i).get<TwistCoord>();
    return v;
}

inline json meridian_to_json(const MeridianId& m) {
    return json{{"anchor", node_to_json(m.anchor)}, {"slot", m.slot}};
}

inline MeridianId meridian_from_json(const json& j) {
    MeridianId m{node_from_json(j.at("anchor")), j.at("slot").get<Slot>()};
    check_slot(m.slot);
    if (!m.anchor.empty() && m.anchor.back().slot != m.slot)
        throw std::invalid_argument("meridian anchor is not canonical");
    return m;
}

inline json hyperplane_to_json(const HyperplaneId& h) {
    if (is_twist(h)) {
        const auto& t = as_twist(h);
        return json{{"kind", "twist"}, {"meridian", meridian_to_json(t.meridian)}, {"wall", t.wall}};
    }
    return json{{"kind", "switch"}, {"child", node_to_json(as_switch(h).child)}};
}

inline HyperplaneId hyperplane_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "twist") return TwistHyperplaneId{meridian_from_json(j.at("meridian")), j.at("wall").get<TwistCoord>()};
    if (kind == "switch") {
        SwitchHyperplaneId s{node_from_json(j.at("child"))};
        if (s.child.empty()) throw std::invalid_argument("switch hyperplane child must be nonempty");
        return s;
    }
    throw std::invalid_argument("unknown hyperplane kind: " + kind);
}

inline json descriptor_to_json(const SubcomplexDescriptor& d) {
    if (std::holds_alternative<Whole>(d)) return json{{"variant", "whole"}};
    if (const auto* z = std::get_if<ZeroCube>(&d)) return json{{"variant", "zero-cube"}, {"vertex", vertex_to_json(z->vertex)}};
    if (const auto* t = std::get_if<CombTwist>(&d))
        return json{{"variant", "comb-twist"}, {"meridian", meridian_to_json(t->meridian)}, {"value", t->value}};
    if (const auto* c = std::get_if<CombSwitch>(&d))
        return json{{"variant", "comb-switch"}, {"node", node_to_json(c->node)}, {"slot", c->slot}, {"value", c->value}};
    if (const auto* l = std::get_if<FlatLine>(&d))
        return json{{"variant", "line"},
                    {"node", node_to_json(l->node)},
                    {"slots", {l->slot_a, l->slot_b}},
                    {"values", {l->value_a, l->value_b}}};
    const auto& tr = std::get<SupportTree>(d);
    return json{{"variant", "tree"},
                {"m1", meridian_to_json(tr.m1)},
                {"v1", tr.v1},
                {"m2", meridian_to_json(tr.m2)},
                {"v2", tr.v2}};
}

inline json distance_to_json(const DistanceResult& r) {
    return json{{"value", r.value},
                {"status", r.exact() ? "exact" : "upper_bound"},
                {"searchRadius", r.search_radius}};
}

// --- literals ---------------------------------------------------------------

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline TreeNodeId parse_word(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.empty() || s == "\xce\xb5" || s == "eps" || s == "e") return TreeNodeId{};
    std::vector<SwitchLabel> w;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',') ++i;
        if (i >= s.size()) break;
        if (s[i] != '(') throw std::invalid_argument("bad word literal: " + raw);
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("bad word literal: " + raw);
        std::string pair = s.substr(i + 1, close - i - 1);
        std::size_t comma = pair.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad word literal: " + raw);
        SwitchLabel l;
        l.slot = std::stoi(pair.substr(0, comma));
        l.dual_index = std::stoll(pair.substr(comma + 1));
        check_slot(l.slot);
        w.push_back(l);
        i = close + 1;
    }
    TreeNodeId n{std::move(w)};
    if (!is_reduced(n.word)) throw std::invalid_argument("word literal is not reduced: " + raw);
    return n;
}

inline VertexId parse_vertex(const std::string& raw) {
    std::string s = strip_spaces(raw);
    std::size_t semi = s.rfind(';');
    if (semi == std::string::npos) throw std::invalid_argument("vertex literal needs 'word;n1,n2,n3': " + raw);
    VertexId v;
    v.node = parse_word(s.substr(0, semi));
    std::string coords = s.substr(semi + 1);
    std::size_t p = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t q = k < 2 ? coords.find(',', p) : coords.size();
        if (q == std::string::npos) throw std::invalid_argument("vertex literal needs three coordinates: " + raw);
        v.twist[k] = std::stoll(coords.substr(p, q - p));
        p = q + 1;
    }
    return v;
}

inline MeridianId parse_meridian(const std::string& raw) {
    std::string s = strip_spaces(raw);
    std::size_t at = s.rfind('@');
    if (at == std::string::npos) throw std::invalid_argument("meridian literal needs 'word@slot': " + raw);
    MeridianId m;
    m.anchor = parse_word(s.substr(0, at));
    m.slot = std::stoi(s.substr(at + 1));
    check_slot(m.slot);
    if (!m.anchor.empty() && m.anchor.back().slot != m.slot)
        throw std::invalid_argument("meridian anchor is not canonical: " + raw);
    return m;
}

// Hyperplane literals use the canonical display names: "T[word]@slot:wall"
// for twist hyperplanes and "S[word]" for switch hyperplanes.
inline HyperplaneId parse_hyperplane(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.size() >= 4 && s[0] == 'S' && s[1] == '[' && s.back() == ']')
        return SwitchHyperplaneId{parse_word(s.substr(2, s.size() - 3))};
    if (s.size() >= 4 && s[0] == 'T' && s[1] == '[') {
        std::size_t close = s.find(']');
        std::size_t at = s.find('@', close);
        std::size_t colon = s.find(':', at);
        if (close == std::string::npos || at == std::string::npos || colon == std::string::npos)
            throw std::invalid_argument("bad twist hyperplane literal: " + raw);
        MeridianId m;
        m.anchor = parse_word(s.substr(2, close - 2));
        m.slot = std::stoi(s.substr(at + 1, colon - at - 1));
        check_slot(m.slot);
        if (!m.anchor.empty() && m.anchor.back().slot != m.slot)
            throw std::invalid_argument("meridian anchor is not canonical: " + raw);
        return TwistHyperplaneId{m, std::stoll(s.substr(colon + 1))};
    }
    throw std::invalid_argument("hyperplane literal needs 'T[word]@slot:wall' or 'S[word]': " + raw);
}

inline json closure_report_to_json(const HyperclosureResult& c) {
    std::array<std::size_t, 6> counts{};
    for (const auto& d : c.members) counts[d.index()]++;
    return json{{"rounds", c.rounds},
                {"counts", json{{"whole", counts[0]},
                                {"zero-cube", counts[1]},
                                {"comb-twist", counts[2]},
                                {"comb-switch", counts[3]},
                                {"line", counts[4]},
                                {"tree", counts[5]}}}};
}

// --- ball and graph exports -------------------------------------------------

inline json ball_to_json(const Ball& b) {
    json j;
    j["center"] = vertex_to_json(b.center);
    j["radius"] = b.radius;
    json vs = json::array();
    for (const VertexId& v : b.vertices) vs.push_back(vertex_to_json(v));
    j["vertices"] = std::move(vs);
    json es = json::array();
    for (const EdgeId& e : b.edges) {
        auto [x, y] = edge_endpoints(e);
        es.push_back(json{{"kind", e.kind == EdgeKind::Twist ? "twist" : "switch"},
                          {"from", b.index_of(x)},
                          {"to", b.index_of(y)},
                          {"slot", e.slot}});
    }
    j["edges"] = std::move(es);
    json sq = json::array();
    for (const auto& q : b.squares) sq.push_back(q);
    j["squares"] = std::move(sq);
    json cu = json::array();
    for (const auto& c : b.cubes) cu.push_back(c);
    j["cubes"] = std::move(cu);
    return j;
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string ball_to_dot(const Ball& b) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
        os << "  v" << i << " [label=" << dot_quote(to_string(b.vertices[i])) << "];\n";
    for (const EdgeId& e : b.edges) {
        auto [x, y] = edge_endpoints(e);
        os << "  v" << b.index_of(x) << " -- v" << b.index_of(y)
           << (e.kind == EdgeKind::Switch ? " [style=dashed]" : "") << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline json contact_graph_to_json(const ContactGraph& g) {
    json j;
    j["provenance"] = g.provenance == ContactGraph::Provenance::Plain ? "plain" : "factored";
    json hs = json::array();
    for (const auto& h : g.hyperplanes) hs.push_back(hyperplane_to_json(h));
    j["hyperplanes"] = std::move(hs);
    json cones = json::array();
    for (const auto& c : g.cone_reps) cones.push_back(descriptor_to_json(c));
    j["cones"] = std::move(cones);
    json es = json::array();
    for (auto [a, b] : g.edges) es.push_back({a, b});
    j["edges"] = std::move(es);
    return j;
}

inline std::string contact_graph_to_dot(const ContactGraph& g) {
    std::ostringstream os;
    os << "graph contact {\n";
    for (std::size_t i = 0; i < g.hyperplanes.size(); ++i)
        os << "  h" << i << " [label=" << dot_quote(to_string(g.hyperplanes[i])) << "];\n";
    for (std::size_t c = 0; c < g.cone_reps.size(); ++c)
        os << "  h" << g.hyperplanes.size() + c << " [label=" << dot_quote("[" + to_string(g.cone_reps[c]) + "]")
           << ", shape=box];\n";
    for (auto [a, b] : g.edges) os << "  h" << a << " -- h" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline json meridian_graph_to_json(const MeridianGraph& g) {
    json j;
    json ms = json::array();
    for (const auto& m : g.meridians) ms.push_back(meridian_to_json(m));
    j["meridians"] = std::move(ms);
    json es = json::array();
    for (auto [a, b] : g.edges) es.push_back({a, b});
    j["edges"] = std::move(es);
    return j;
}

inline std::string meridian_graph_to_dot(const MeridianGraph& g) {
    std::ostringstream os;
    os << "graph meridians {\n";
    for (std::size_t i = 0; i < g.meridians.size(); ++i)
        os << "  m" << i << " [label=" << dot_quote(to_string(g.meridians[i])) << "];\n";
    for (auto [a, b] : g.edges) os << "  m" << a << " -- m" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

}  // namespace cubemodel
