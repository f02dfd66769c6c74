#pragma once

// Symbolic hyperplane calculus: twist and switch hyperplanes, supports,
// separation, the hyperplane-count metric, medians, contact classification
// and parallelism classes. Everything here is a pure function over values.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cubemodel/core.hpp"

namespace cubemodel {

// A non-separating meridian realized as a pants curve: the canonical anchor
// is the root-most tree node whose slot-`slot` curve it is.
struct MeridianId {
    TreeNodeId anchor;
    Slot slot = 1;

    auto operator<=>(const MeridianId&) const = default;
};

// Strip trailing labels while they do not touch `slot`; the result is the
// root-most node carrying the same slot-`slot` curve.
inline MeridianId meridian_of(const TreeNodeId& node, Slot slot) {
    check_slot(slot);
    TreeNodeId a = node;
    while (!a.empty() && a.back().slot != slot) a.word.pop_back();
    return MeridianId{a, slot};
}

inline bool in_support(const MeridianId& m, const TreeNodeId& node) {
    return meridian_of(node, m.slot) == m;
}

// Two distinct meridians share a pants decomposition iff one support's
// anchor lies in the other support (anchors of intersecting supports are
// comparable in the tree).
inline bool supports_intersect(const MeridianId& a, const MeridianId& b) {
    if (a == b) return true;
    if (a.slot == b.slot) return false;
    return in_support(a, b.anchor) || in_support(b, a.anchor);
}

// A connected set of tree nodes: everything below `anchor` reachable without
// crossing an edge whose label slot is forbidden. Supports, support
// intersections, single nodes and the whole tree are all of this form.
struct NodeSet {
    TreeNodeId anchor;
    std::array<bool, 3> forbidden{false, false, false};

    bool forbids(Slot s) const { return forbidden[static_cast<std::size_t>(s - 1)]; }
    void forbid(Slot s) { forbidden[static_cast<std::size_t>(s - 1)] = true; }
    int forbidden_count() const {
        return static_cast<int>(forbidden[0]) + static_cast<int>(forbidden[1]) + static_cast<int>(forbidden[2]);
    }

    bool contains(const TreeNodeId& z) const {
        if (!anchor.is_prefix_of(z)) return false;
        for (std::size_t i = anchor.size(); i < z.size(); ++i)
            if (forbids(z.word[i].slot)) return false;
        return true;
    }

    auto operator<=>(const NodeSet&) const = default;
};

inline NodeSet whole_tree() { return NodeSet{}; }

inline NodeSet single_node(const TreeNodeId& n) {
    NodeSet s;
    s.anchor = n;
    s.forbidden = {true, true, true};
    return s;
}

inline NodeSet support_of(const MeridianId& m) {
    NodeSet s;
    s.anchor = m.anchor;
    s.forbid(m.slot);
    return s;
}

// Intersection of two node sets; nullopt when empty.
inline std::optional<NodeSet> intersect(const NodeSet& a, const NodeSet& b) {
    const NodeSet* up = &a;
    const NodeSet* down = &b;
    if (!up->anchor.is_prefix_of(down->anchor)) {
        std::swap(up, down);
        if (!up->anchor.is_prefix_of(down->anchor)) return std::nullopt;
    }
    if (!up->contains(down->anchor)) return std::nullopt;
    NodeSet out = *down;
    for (Slot s : kSlots)
        if (up->forbids(s)) out.forbid(s);
    return out;
}

// Nearest member of the set to `n` in the tree.
inline TreeNodeId gate_node(const NodeSet& set, const TreeNodeId& n) {
    if (!set.anchor.is_prefix_of(n)) return set.anchor;
    TreeNodeId g = set.anchor;
    for (std::size_t i = set.anchor.size(); i < n.size(); ++i) {
        if (set.forbids(n.word[i].slot)) break;
        g.word.push_back(n.word[i]);
    }
    return g;
}

// The twist coordinate of `x` as seen from the support of m: the literal
// coordinate inside the support, the dual index of the exit edge when x
// hangs below the support, and 0 when x sits above the anchor. This is the
// value transported to the support along any path from x.
inline TwistCoord transported_coord(const MeridianId& m, const VertexId& x) {
    if (m.anchor.is_prefix_of(x.node)) {
        for (std::size_t i = m.anchor.size(); i < x.node.size(); ++i)
            if (x.node.word[i].slot == m.slot) return x.node.word[i].dual_index;
        return x.coord(m.slot);
    }
    return 0;
}

struct TwistHyperplaneId {
    MeridianId meridian;
    TwistCoord wall = 0;  // separates coordinate <= wall from >= wall+1

    auto operator<=>(const TwistHyperplaneId&) const = default;
};

struct SwitchHyperplaneId {
    TreeNodeId child;  // nonempty; names the tree edge (parent, child)

    auto operator<=>(const SwitchHyperplaneId&) const = default;
};

using HyperplaneId = std::variant<TwistHyperplaneId, SwitchHyperplaneId>;

inline bool is_twist(const HyperplaneId& h) { return std::holds_alternative<TwistHyperplaneId>(h); }
inline bool is_switch(const HyperplaneId& h) { return std::holds_alternative<SwitchHyperplaneId>(h); }
inline const TwistHyperplaneId& as_twist(const HyperplaneId& h) { return std::get<TwistHyperplaneId>(h); }
inline const SwitchHyperplaneId& as_switch(const HyperplaneId& h) { return std::get<SwitchHyperplaneId>(h); }

inline bool hyperplane_less(const HyperplaneId& a, const HyperplaneId& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (is_twist(a)) return as_twist(a) < as_twist(b);
    return as_switch(a) < as_switch(b);
}

struct HyperplaneLess {
    bool operator()(const HyperplaneId& a, const HyperplaneId& b) const { return hyperplane_less(a, b); }
};

// Bridge data of a switch hyperplane: parent node, label slot and index.
struct BridgeInfo {
    TreeNodeId parent;
    Slot slot;
    TwistCoord index;
};

inline BridgeInfo bridge_of(const SwitchHyperplaneId& h) {
    if (h.child.empty()) throw std::invalid_argument("switch hyperplane child must be nonempty");
    return BridgeInfo{h.child.parent(), h.child.back().slot, h.child.back().dual_index};
}

inline HyperplaneId dual_hyperplane(const EdgeId& e) {
    if (e.kind == EdgeKind::Twist)
        return TwistHyperplaneId{meridian_of(e.base.node, e.slot), e.base.coord(e.slot)};
    VertexId child_side = switch_target(e.base, e.slot);
    return SwitchHyperplaneId{child_side.node};
}

inline bool separates(const HyperplaneId& h, const VertexId& u, const VertexId& v) {
    if (is_switch(h)) {
        const TreeNodeId& c = as_switch(h).child;
        return c.is_prefix_of(u.node) != c.is_prefix_of(v.node);
    }
    const TwistHyperplaneId& t = as_twist(h);
    TwistCoord ku = transported_coord(t.meridian, u);
    TwistCoord kv = transported_coord(t.meridian, v);
    return (ku <= t.wall) != (kv <= t.wall);
}

// The exact finite set of hyperplanes separating u from v. Its size is the
// 1-skeleton distance.
inline std::vector<HyperplaneId> separating_set(const VertexId& u, const VertexId& v) {
    std::vector<HyperplaneId> out;
    std::vector<TreeNodeId> path = tree_geodesic(u.node, v.node);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const TreeNodeId& deeper = path[i].size() > path[i + 1].size() ? path[i] : path[i + 1];
        out.push_back(SwitchHyperplaneId{deeper});
    }
    std::set<MeridianId> meridians;
    for (const TreeNodeId& z : path)
        for (Slot s : kSlots) meridians.insert(meridian_of(z, s));
    for (const MeridianId& m : meridians) {
        TwistCoord a = transported_coord(m, u);
        TwistCoord b = transported_coord(m, v);
        if (a > b) std::swap(a, b);
        for (TwistCoord w = a; w < b; ++w) out.push_back(TwistHyperplaneId{m, w});
    }
    std::sort(out.begin(), out.end(), HyperplaneLess{});
    return out;
}

inline std::size_t metric_distance(const VertexId& u, const VertexId& v) {
    std::size_t d = tree_distance(u.node, v.node);
    std::set<MeridianId> meridians;
    for (const TreeNodeId& z : tree_geodesic(u.node, v.node))
        for (Slot s : kSlots) meridians.insert(meridian_of(z, s));
    for (const MeridianId& m : meridians) {
        TwistCoord a = transported_coord(m, u);
        TwistCoord b = transported_coord(m, v);
        d += static_cast<std::size_t>(a > b ? a - b : b - a);
    }
    return d;
}

inline TwistCoord median3(TwistCoord a, TwistCoord b, TwistCoord c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

inline TreeNodeId tree_median(const TreeNodeId& a, const TreeNodeId& b, const TreeNodeId& c) {
    auto meet = [](const TreeNodeId& x, const TreeNodeId& y) {
        TreeNodeId m;
        std::size_t p = common_prefix_length(x, y);
        m.word.assign(x.word.begin(), x.word.begin() + static_cast<std::ptrdiff_t>(p));
        return m;
    };
    TreeNodeId ab = meet(a, b), ac = meet(a, c), bc = meet(b, c);
    const TreeNodeId* best = &ab;
    if (ac.size() > best->size()) best = &ac;
    if (bc.size() > best->size()) best = &bc;
    return *best;
}

// The unique vertex lying on geodesics between each pair of the triple: the
// tree median of the flats, with the coordinatewise median of transported
// coordinates.
inline VertexId median(const VertexId& u, const VertexId& v, const VertexId& w) {
    VertexId m;
    m.node = tree_median(u.node, v.node, w.node);
    for (Slot s : kSlots) {
        MeridianId ms = meridian_of(m.node, s);
        m.set_coord(s, median3(transported_coord(ms, u), transported_coord(ms, v), transported_coord(ms, w)));
    }
    return m;
}

enum class ContactKind { None, Cross, Osculate };

inline const char* to_string(ContactKind k) {
    switch (k) {
        case ContactKind::Cross: return "cross";
        case ContactKind::Osculate: return "osculate";
        default: return "none";
    }
}

// Symbolic contact classification. Two switch hyperplanes never cross; twist
// hyperplanes over one meridian osculate exactly at adjacent walls; twist
// hyperplanes over distinct meridians cross exactly when their supports
// share a node; a bridge meets a twist hyperplane of another slot over its
// parent flat by crossing, and one of its own slot by osculation at the two
// walls bounding the attaching plane (on either side of the bridge).
inline ContactKind contact(const HyperplaneId& h1, const HyperplaneId& h2) {
    if (h1 == h2) throw std::invalid_argument("contact requires distinct hyperplanes");
    if (is_switch(h1) && is_switch(h2)) {
        BridgeInfo b1 = bridge_of(as_switch(h1));
        BridgeInfo b2 = bridge_of(as_switch(h2));
        const TreeNodeId& c1 = as_switch(h1).child;
        const TreeNodeId& c2 = as_switch(h2).child;
        bool share = b1.parent == b2.parent || b1.parent == c2 || c1 == b2.parent || c1 == c2;
        if (!share) return ContactKind::None;
        return b1.slot != b2.slot ? ContactKind::Osculate : ContactKind::None;
    }
    if (is_twist(h1) && is_twist(h2)) {
        const TwistHyperplaneId& a = as_twist(h1);
        const TwistHyperplaneId& b = as_twist(h2);
        if (a.meridian == b.meridian) {
            TwistCoord d = a.wall > b.wall ? a.wall - b.wall : b.wall - a.wall;
            return d == 1 ? ContactKind::Osculate : ContactKind::None;
        }
        return supports_intersect(a.meridian, b.meridian) ? ContactKind::Cross : ContactKind::None;
    }
    const TwistHyperplaneId& t = is_twist(h1) ? as_twist(h1) : as_twist(h2);
    const SwitchHyperplaneId& s = is_switch(h1) ? as_switch(h1) : as_switch(h2);
    BridgeInfo br = bridge_of(s);
    if (t.meridian.slot != br.slot)
        return in_support(t.meridian, br.parent) ? ContactKind::Cross : ContactKind::None;
    if (in_support(t.meridian, br.parent) && (br.index == t.wall || br.index == t.wall + 1))
        return ContactKind::Osculate;
    if (in_support(t.meridian, s.child) && (t.wall == 0 || t.wall == -1)) return ContactKind::Osculate;
    return ContactKind::None;
}

enum class Side { Minus, Plus };

// One of the two bounding copies of a hyperplane. Minus is the coordinate
// <= wall side of a twist hyperplane and the parent side of a bridge.
struct CombinatorialHyperplaneId {
    HyperplaneId hyperplane;
    Side side = Side::Minus;

    bool operator==(const CombinatorialHyperplaneId& o) const {
        return hyperplane == o.hyperplane && side == o.side;
    }
};

struct ParallelClassId {
    enum Kind { TwistClass, SwitchClass } kind = TwistClass;
    // TwistClass: the meridian. SwitchClass: root-most node of the slot
    // component together with the switching slot.
    MeridianId meridian;        // TwistClass
    TreeNodeId anchor;          // SwitchClass
    Slot free_slot = 1;         // SwitchClass

    auto operator<=>(const ParallelClassId&) const = default;
};

inline TreeNodeId switch_component_anchor(TreeNodeId node, Slot slot) {
    while (!node.empty() && node.back().slot == slot) node.word.pop_back();
    return node;
}

inline ParallelClassId parallel_class(const CombinatorialHyperplaneId& c) {
    ParallelClassId out;
    if (is_twist(c.hyperplane)) {
        out.kind = ParallelClassId::TwistClass;
        out.meridian = as_twist(c.hyperplane).meridian;
        return out;
    }
    BridgeInfo br = bridge_of(as_switch(c.hyperplane));
    out.kind = ParallelClassId::SwitchClass;
    out.anchor = switch_component_anchor(br.parent, br.slot);
    out.free_slot = br.slot;
    return out;
}

// Deterministic stream of pairwise-distinct members of the parallelism
// class of c, starting with c itself. Twist classes walk ascending walls;
// switch classes walk the bridges of the slot component by level.
inline std::vector<CombinatorialHyperplaneId> enumerate_parallel_copies(const CombinatorialHyperplaneId& c,
                                                                        std::size_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<CombinatorialHyperplaneId> out;
    out.push_back(c);
    if (is_twist(c.hyperplane)) {
        TwistHyperplaneId t = as_twist(c.hyperplane);
        while (out.size() < count) {
            ++t.wall;
            out.push_back(CombinatorialHyperplaneId{t, c.side});
        }
        return out;
    }
    ParallelClassId cls = parallel_class(c);
    const TreeNodeId start = as_switch(c.hyperplane).child;
    auto index_order = [](TwistCoord rank) {  // 0, 1, -1, 2, -2, ...
        if (rank == 0) return static_cast<TwistCoord>(0);
        TwistCoord half = (rank + 1) / 2;
        return rank % 2 == 1 ? half : -half;
    };
    for (TwistCoord level = 1; out.size() < count; ++level) {
        // bridges with child word anchor ++ (slot,k_1)..(slot,k_d), d <= level,
        // all |k_j| <= level
        std::vector<TreeNodeId> nodes{cls.anchor};
        for (TwistCoord depth = 1; depth <= level && out.size() < count; ++depth) {
            std::vector<TreeNodeId> next;
            for (const TreeNodeId& z : nodes) {
                for (TwistCoord r = 0; r <= 2 * level; ++r) {
                    TwistCoord k = index_order(r);
                    if (k == 0 && !z.empty() && z.back().slot == cls.free_slot) continue;
                    TreeNodeId child = z.child(SwitchLabel{cls.free_slot, k});
                    next.push_back(child);
                    if (child == start) continue;
                    CombinatorialHyperplaneId cand{SwitchHyperplaneId{child}, c.side};
                    bool seen = false;
                    for (const auto& e : out)
                        if (e == cand) { seen = true; break; }
                    if (!seen) out.push_back(cand);
                    if (out.size() >= count) return out;
                }
            }
            nodes = std::move(next);
        }
    }
    return out;
}

inline std::string to_string(const MeridianId& m) {
    return "M[" + to_string(m.anchor) + "]@" + std::to_string(m.slot);
}

inline std::string to_string(const HyperplaneId& h) {
    if (is_twist(h)) {
        const auto& t = as_twist(h);
        return "T[" + to_string(t.meridian.anchor) + "]@" + std::to_string(t.meridian.slot) + ":" +
               std::to_string(t.wall);
    }
    return "S[" + to_string(as_switch(h).child) + "]";
}

}  // namespace cubemodel
