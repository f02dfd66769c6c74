#pragma once

// The symbolic non-separating disk graph on meridians of the model, its
// embedding into the contact graph by wall-0 twist hyperplanes, the geodesic
// rewriting procedure, and density witnesses.

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "cubemodel/ball.hpp"
#include "cubemodel/contact_graph.hpp"
#include "cubemodel/hyperplane.hpp"

namespace cubemodel {

// Disjointness of meridians: co-occurrence in a pants decomposition, i.e.
// intersecting supports.
inline bool nd_adjacent(const MeridianId& a, const MeridianId& b) {
    if (a == b) throw std::invalid_argument("nd_adjacent requires distinct meridians");
    return supports_intersect(a, b);
}

inline TwistHyperplaneId iota(const MeridianId& m) { return TwistHyperplaneId{m, 0}; }

inline bool in_iota_image(const HyperplaneId& h) { return is_twist(h) && as_twist(h).wall == 0; }

struct MeridianGraph {
    std::vector<MeridianId> meridians;  // sorted
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;

    int index_of(const MeridianId& m) const {
        auto it = std::lower_bound(meridians.begin(), meridians.end(), m);
        if (it == meridians.end() || !(*it == m)) return -1;
        return static_cast<int>(it - meridians.begin());
    }
};

// Meridians realized as pants curves over the ball's flats.
inline std::vector<MeridianId> meridians_of_ball(const Ball& b) {
    std::set<MeridianId> ms;
    for (const VertexId& v : b.vertices)
        for (Slot s : kSlots) ms.insert(meridian_of(v.node, s));
    return {ms.begin(), ms.end()};
}

inline MeridianGraph build_meridian_graph(const Ball& b) {
    MeridianGraph g;
    g.meridians = meridians_of_ball(b);
    g.adjacency.assign(g.meridians.size(), {});
    int n = static_cast<int>(g.meridians.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (supports_intersect(g.meridians[static_cast<std::size_t>(i)],
                                   g.meridians[static_cast<std::size_t>(j)])) {
                g.edges.push_back({i, j});
                g.adjacency[static_cast<std::size_t>(i)].push_back(j);
                g.adjacency[static_cast<std::size_t>(j)].push_back(i);
            }
    return g;
}

namespace detail {

// Geodesic between two supports; a single shared node when they intersect.
inline std::vector<TreeNodeId> meridian_bridge_path(const MeridianId& a, const MeridianId& b) {
    if (supports_intersect(a, b)) {
        if (in_support(a, b.anchor)) return {b.anchor};
        return {a.anchor};
    }
    TreeNodeId y1 = gate_node(support_of(a), b.anchor);
    TreeNodeId y2 = gate_node(support_of(b), y1);
    return tree_geodesic(y1, y2);
}

inline std::vector<MeridianId> meridian_candidates(const std::vector<TreeNodeId>& nodes) {
    std::set<MeridianId> ms;
    for (const TreeNodeId& z : nodes)
        for (Slot s : kSlots) ms.insert(meridian_of(z, s));
    return {ms.begin(), ms.end()};
}

}  // namespace detail

// Certified lazy distance in the non-separating disk graph: 0..2 closed
// form over the complete bridge-path candidates, 3 exact because 2 was
// excluded, beyond that upper bounds with the flagged stabilization rule.
inline DistanceResult nd_distance(const MeridianId& a, const MeridianId& b, int search_radius = 2) {
    DistanceResult r;
    r.search_radius = search_radius;
    if (a == b) return r;
    if (supports_intersect(a, b)) {
        r.value = 1;
        return r;
    }
    std::vector<TreeNodeId> path = detail::meridian_bridge_path(a, b);
    for (const MeridianId& m : detail::meridian_candidates(path)) {
        if (m == a || m == b) continue;
        if (supports_intersect(m, a) && supports_intersect(m, b)) {
            r.value = 2;
            return r;
        }
    }
    // BFS over meridians anchored on the fattened hull
    std::size_t prev = static_cast<std::size_t>(-1);
    HyperplaneId ha{iota(a)}, hb{iota(b)};
    for (int f = 0; f <= search_radius; ++f) {
        auto hull = detail::fattened_hull(ha, hb, f);
        auto universe = detail::meridian_candidates(hull);
        std::vector<MeridianId> verts = universe;
        verts.push_back(a);
        verts.push_back(b);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        auto find = [&](const MeridianId& m) {
            return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), m) - verts.begin());
        };
        std::vector<int> dist(verts.size(), -1);
        std::size_t s = find(a), t = find(b);
        dist[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        std::size_t d = static_cast<std::size_t>(-1);
        while (!q.empty() && d == static_cast<std::size_t>(-1)) {
            std::size_t i = q.front();
            q.pop();
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (dist[j] >= 0 || i == j) continue;
                if (!supports_intersect(verts[i], verts[j])) continue;
                dist[j] = dist[i] + 1;
                if (j == t) {
                    d = static_cast<std::size_t>(dist[j]);
                    break;
                }
                q.push(j);
            }
        }
        if (d == 3) {
            r.value = 3;
            return r;
        }
        if (d != static_cast<std::size_t>(-1)) {
            if (d == prev) {
                r.value = d;
                return r;  // stabilization rule, documented heuristic
            }
            prev = d;
        }
    }
    if (prev == static_cast<std::size_t>(-1))
        throw ResourceLimitError("nd distance not resolved within search radius");
    r.value = prev;
    r.status = DistanceResult::Status::UpperBound;
    return r;
}

// A wall-0 twist hyperplane within contact distance 1 of h (h itself when
// already in the image): a wall-0 partner of another slot at a shared
// support node for off-image twists, and of an unswitched slot at the
// bridge's parent node for switch hyperplanes.
inline TwistHyperplaneId density_witness(const HyperplaneId& h) {
    if (in_iota_image(h)) return as_twist(h);
    if (is_twist(h)) {
        const MeridianId& m = as_twist(h).meridian;
        for (Slot s : kSlots) {
            if (s == m.slot) continue;
            return iota(meridian_of(m.anchor, s));
        }
    }
    BridgeInfo br = bridge_of(as_switch(h));
    for (Slot s : kSlots) {
        if (s == br.slot) continue;
        return iota(meridian_of(br.parent, s));
    }
    throw std::logic_error("unreachable");
}

namespace detail {

// Deterministic choice of a twist hyperplane crossing a switch hyperplane.
inline TwistHyperplaneId twist_crossing_bridge(const SwitchHyperplaneId& s) {
    BridgeInfo br = bridge_of(s);
    for (Slot sl : kSlots)
        if (sl != br.slot) return TwistHyperplaneId{meridian_of(br.parent, sl), 0};
    throw std::logic_error("unreachable");
}

// Deterministic twist hyperplane osculating a switch hyperplane: the
// parent-side attaching wall.
inline TwistHyperplaneId twist_osculating_bridge(const SwitchHyperplaneId& s) {
    BridgeInfo br = bridge_of(s);
    return TwistHyperplaneId{meridian_of(br.parent, br.slot), br.index};
}

// The slot of a bridge at one of its endpoints.
inline Slot bridge_slot(const SwitchHyperplaneId& s) { return s.child.back().slot; }

// Shared flat of two osculating bridges.
inline TreeNodeId shared_bridge_node(const SwitchHyperplaneId& a, const SwitchHyperplaneId& b) {
    BridgeInfo ba = bridge_of(a), bb = bridge_of(b);
    if (ba.parent == bb.parent || ba.parent == b.child) return ba.parent;
    if (a.child == bb.parent || a.child == b.child) return a.child;
    throw std::invalid_argument("bridges share no flat");
}

}  // namespace detail

// Rewrite an edge-path of the contact graph with endpoints in the image of
// iota into an equal-length path through wall-0 twist hyperplanes only.
// First pass replaces switch hyperplanes, second pass moves twist
// hyperplanes to wall 0; each replacement keeps contact with both
// neighbors. A configuration matching no case signals a model bug.
inline std::vector<HyperplaneId> rewrite_geodesic(const std::vector<HyperplaneId>& path) {
    if (path.empty()) throw std::invalid_argument("empty path");
    auto valid_edge = [](const HyperplaneId& x, const HyperplaneId& y) {
        return !(x == y) && contact(x, y) != ContactKind::None;
    };
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!valid_edge(path[i], path[i + 1])) throw std::invalid_argument("not an edge-path in the contact graph");
    if (!in_iota_image(path.front()) || !in_iota_image(path.back()))
        throw std::invalid_argument("path endpoints must lie in the image of iota");

    std::vector<HyperplaneId> out = path;
    auto try_replace = [&](std::size_t i, const std::vector<HyperplaneId>& candidates) {
        for (const HyperplaneId& c : candidates) {
            if (c == out[i - 1] || c == out[i + 1]) continue;
            if (valid_edge(out[i - 1], c) && valid_edge(c, out[i + 1])) {
                out[i] = c;
                return true;
            }
        }
        return false;
    };

    // pass 1: eliminate switch hyperplanes, walking from the iota end
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
        if (!is_switch(out[i])) continue;
        const SwitchHyperplaneId sw = as_switch(out[i]);
        std::vector<HyperplaneId> candidates;
        if (is_twist(out[i + 1])) {
            ContactKind prev_kind = contact(out[i - 1], out[i]);
            ContactKind next_kind = contact(out[i], out[i + 1]);
            if (prev_kind == ContactKind::Osculate && next_kind == ContactKind::Osculate) {
                // both neighbors contain the bridge: any twist crossing it works
                BridgeInfo br = bridge_of(sw);
                for (Slot sl : kSlots)
                    if (sl != br.slot) candidates.push_back(TwistHyperplaneId{meridian_of(br.parent, sl), 0});
            } else if (prev_kind == ContactKind::Cross && next_kind == ContactKind::Cross) {
                // the bridge is parallel into any twist hyperplane it osculates
                candidates.push_back(detail::twist_osculating_bridge(sw));
                BridgeInfo br = bridge_of(sw);
                candidates.push_back(TwistHyperplaneId{meridian_of(br.parent, br.slot), br.index - 1});
                candidates.push_back(TwistHyperplaneId{MeridianId{sw.child, br.slot}, 0});
                candidates.push_back(TwistHyperplaneId{MeridianId{sw.child, br.slot}, -1});
            } else {
                throw std::runtime_error("mixed cross/osculate configuration at a switch hyperplane");
            }
        } else {
            // two osculating bridges at a shared flat: a twist hyperplane of
            // the third slot there crosses both
            const SwitchHyperplaneId nx = as_switch(out[i + 1]);
            TreeNodeId shared = detail::shared_bridge_node(sw, nx);
            Slot s1 = detail::bridge_slot(sw), s2 = detail::bridge_slot(nx);
            if (s1 == s2) throw std::runtime_error("parallel bridges cannot be adjacent in the contact graph");
            for (Slot sl : kSlots)
                if (sl != s1 && sl != s2) candidates.push_back(TwistHyperplaneId{meridian_of(shared, sl), 0});
        }
        if (!try_replace(i, candidates))
            throw std::runtime_error("no replacement twist hyperplane matches the case analysis");
    }

    // pass 2: move interior twist hyperplanes into the image of iota
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
        if (in_iota_image(out[i])) continue;
        const TwistHyperplaneId t = as_twist(out[i]);
        std::vector<HyperplaneId> candidates;
        candidates.push_back(iota(t.meridian));
        // when both neighbors osculate, all three share a meridian; a
        // crossing meridian at any shared support node works instead
        for (Slot sl : kSlots)
            if (sl != t.meridian.slot) candidates.push_back(iota(meridian_of(t.meridian.anchor, sl)));
        if (!try_replace(i, candidates))
            throw std::runtime_error("no wall-0 replacement matches the case analysis");
    }

    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (!valid_edge(out[i], out[i + 1])) throw std::runtime_error("rewriting produced an invalid path");
    for (const HyperplaneId& h : out)
        if (!in_iota_image(h)) throw std::runtime_error("rewriting left an off-image vertex");
    return out;
}

}  // namespace cubemodel
