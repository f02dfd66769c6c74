#pragma once

// The six convex-subcomplex shapes closed under gate projections: the whole
// complex, combinatorial twist and switch hyperplanes, lines and trees of
// hyperplane intersections, and single 0-cubes. A descriptor is intensional;
// ball restriction happens only in oracles and closure bookkeeping.
//
// Internally every descriptor is a NodeSet (which flats) plus per-slot
// clamped coordinates; gates are computed in that algebra and mapped back.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cubemodel/ball.hpp"
#include "cubemodel/core.hpp"
#include "cubemodel/hyperplane.hpp"

namespace cubemodel {

struct Whole {
    auto operator<=>(const Whole&) const = default;
};

struct ZeroCube {
    VertexId vertex;
    auto operator<=>(const ZeroCube&) const = default;
};

// All vertices over the meridian's support with the meridian's twist
// coordinate pinned: one combinatorial twist hyperplane.
struct CombTwist {
    MeridianId meridian;
    TwistCoord value = 0;
    auto operator<=>(const CombTwist&) const = default;
};

// One coordinate plane inside a single twist flat: a bridge-side copy.
struct CombSwitch {
    TreeNodeId node;
    Slot slot = 1;
    TwistCoord value = 0;
    auto operator<=>(const CombSwitch&) const = default;
};

// A line in one flat: two coordinates pinned, the third free.
struct FlatLine {
    TreeNodeId node;
    Slot slot_a = 1, slot_b = 2;  // slot_a < slot_b
    TwistCoord value_a = 0, value_b = 0;
    auto operator<=>(const FlatLine&) const = default;
};

// The intersection of two combinatorial twist hyperplanes: a tree of lines
// over the common support, one line per common flat.
struct SupportTree {
    MeridianId m1;  // m1.slot < m2.slot
    TwistCoord v1 = 0;
    MeridianId m2;
    TwistCoord v2 = 0;
    auto operator<=>(const SupportTree&) const = default;
};

using SubcomplexDescriptor = std::variant<Whole, ZeroCube, CombTwist, CombSwitch, FlatLine, SupportTree>;

inline bool descriptor_less(const SubcomplexDescriptor& a, const SubcomplexDescriptor& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x < std::get<T>(b);
        },
        a);
}

struct DescriptorLess {
    bool operator()(const SubcomplexDescriptor& a, const SubcomplexDescriptor& b) const {
        return descriptor_less(a, b);
    }
};

inline FlatLine make_line(TreeNodeId node, Slot sa, TwistCoord va, Slot sb, TwistCoord vb) {
    check_slot(sa);
    check_slot(sb);
    if (sa == sb) throw std::invalid_argument("line slots must differ");
    if (sa > sb) {
        std::swap(sa, sb);
        std::swap(va, vb);
    }
    return FlatLine{std::move(node), sa, sb, va, vb};
}

inline SupportTree make_tree(MeridianId m1, TwistCoord v1, MeridianId m2, TwistCoord v2) {
    if (m1.slot == m2.slot) throw std::invalid_argument("tree meridians must occupy distinct slots");
    if (!supports_intersect(m1, m2)) throw std::invalid_argument("tree meridian supports must intersect");
    if (m1.slot > m2.slot) {
        std::swap(m1, m2);
        std::swap(v1, v2);
    }
    return SupportTree{std::move(m1), v1, std::move(m2), v2};
}

// NodeSet plus per-slot clamps; the meridian of a clamped slot is the
// slot meridian at the node set's anchor.
struct SubcomplexShape {
    NodeSet nodes;
    std::array<std::optional<TwistCoord>, 3> clamp;

    const std::optional<TwistCoord>& clamped(Slot s) const { return clamp[static_cast<std::size_t>(s - 1)]; }
    void set_clamp(Slot s, TwistCoord v) { clamp[static_cast<std::size_t>(s - 1)] = v; }
    int clamp_count() const {
        return static_cast<int>(clamp[0].has_value()) + static_cast<int>(clamp[1].has_value()) +
               static_cast<int>(clamp[2].has_value());
    }
};

inline SubcomplexShape shape_of(const SubcomplexDescriptor& d) {
    SubcomplexShape s;
    if (std::holds_alternative<Whole>(d)) {
        s.nodes = whole_tree();
    } else if (const auto* z = std::get_if<ZeroCube>(&d)) {
        s.nodes = single_node(z->vertex.node);
        for (Slot sl : kSlots) s.set_clamp(sl, z->vertex.coord(sl));
    } else if (const auto* t = std::get_if<CombTwist>(&d)) {
        s.nodes = support_of(t->meridian);
        s.set_clamp(t->meridian.slot, t->value);
    } else if (const auto* c = std::get_if<CombSwitch>(&d)) {
        s.nodes = single_node(c->node);
        s.set_clamp(c->slot, c->value);
    } else if (const auto* l = std::get_if<FlatLine>(&d)) {
        s.nodes = single_node(l->node);
        s.set_clamp(l->slot_a, l->value_a);
        s.set_clamp(l->slot_b, l->value_b);
    } else {
        const auto& tr = std::get<SupportTree>(d);
        auto ns = intersect(support_of(tr.m1), support_of(tr.m2));
        if (!ns) throw std::invalid_argument("tree descriptor with disjoint supports");
        s.nodes = *ns;
        s.set_clamp(tr.m1.slot, tr.v1);
        s.set_clamp(tr.m2.slot, tr.v2);
    }
    return s;
}

inline SubcomplexDescriptor descriptor_of(const SubcomplexShape& s) {
    int forb = s.nodes.forbidden_count();
    int clamps = s.clamp_count();
    if (forb == 0) {
        if (clamps != 0) throw std::logic_error("whole-tree shape cannot carry clamps");
        return Whole{};
    }
    if (forb == 3) {
        if (clamps == 3) {
            VertexId v;
            v.node = s.nodes.anchor;
            for (Slot sl : kSlots) v.set_coord(sl, *s.clamped(sl));
            return ZeroCube{v};
        }
        if (clamps == 2) {
            std::array<Slot, 2> sl{};
            int n = 0;
            for (Slot x : kSlots)
                if (s.clamped(x)) sl[static_cast<std::size_t>(n++)] = x;
            return make_line(s.nodes.anchor, sl[0], *s.clamped(sl[0]), sl[1], *s.clamped(sl[1]));
        }
        if (clamps == 1) {
            for (Slot x : kSlots)
                if (s.clamped(x)) return CombSwitch{s.nodes.anchor, x, *s.clamped(x)};
        }
        throw std::logic_error("single-flat shape without clamps is not a factor-system member");
    }
    if (forb == 1) {
        for (Slot x : kSlots)
            if (s.nodes.forbids(x)) {
                if (clamps != 1 || !s.clamped(x)) throw std::logic_error("support shape must clamp its own slot");
                return CombTwist{MeridianId{s.nodes.anchor, x}, *s.clamped(x)};
            }
    }
    if (forb == 2) {
        std::array<Slot, 2> sl{};
        int n = 0;
        for (Slot x : kSlots)
            if (s.nodes.forbids(x)) sl[static_cast<std::size_t>(n++)] = x;
        if (clamps != 2 || !s.clamped(sl[0]) || !s.clamped(sl[1]))
            throw std::logic_error("pair-support shape must clamp exactly its slots");
        MeridianId m1 = meridian_of(s.nodes.anchor, sl[0]);
        MeridianId m2 = meridian_of(s.nodes.anchor, sl[1]);
        return make_tree(m1, *s.clamped(sl[0]), m2, *s.clamped(sl[1]));
    }
    throw std::logic_error("unrecognized subcomplex shape");
}

inline bool contains(const SubcomplexDescriptor& d, const VertexId& v) {
    SubcomplexShape s = shape_of(d);
    if (!s.nodes.contains(v.node)) return false;
    for (Slot sl : kSlots)
        if (s.clamped(sl) && v.coord(sl) != *s.clamped(sl)) return false;
    return true;
}

inline VertexId representative_vertex(const SubcomplexShape& s) {
    VertexId v;
    v.node = s.nodes.anchor;
    for (Slot sl : kSlots)
        if (s.clamped(sl)) v.set_coord(sl, *s.clamped(sl));
    return v;
}

// Nearest vertex of F to v: gate the flat in the tree, transport the free
// coordinates along the way, clamp the constrained ones.
inline VertexId gate_vertex(const SubcomplexDescriptor& F, const VertexId& v) {
    SubcomplexShape s = shape_of(F);
    VertexId g;
    g.node = gate_node(s.nodes, v.node);
    for (Slot sl : kSlots) {
        if (s.clamped(sl))
            g.set_coord(sl, *s.clamped(sl));
        else
            g.set_coord(sl, transported_coord(meridian_of(g.node, sl), v));
    }
    return g;
}

// The gate image of F2 in F1, always again one of the six shapes.
inline SubcomplexDescriptor gate_subcomplex(const SubcomplexDescriptor& F1, const SubcomplexDescriptor& F2) {
    SubcomplexShape s1 = shape_of(F1);
    SubcomplexShape s2 = shape_of(F2);
    SubcomplexShape g;
    if (auto ns12 = intersect(s1.nodes, s2.nodes)) {
        g.nodes = *ns12;
        for (Slot sl : kSlots) {
            if (s1.clamped(sl))
                g.set_clamp(sl, *s1.clamped(sl));
            else if (s2.clamped(sl))
                g.set_clamp(sl, *s2.clamped(sl));
        }
        return descriptor_of(g);
    }
    TreeNodeId y = gate_node(s1.nodes, s2.nodes.anchor);
    g.nodes = single_node(y);
    VertexId rep2 = representative_vertex(s2);
    for (Slot sl : kSlots) {
        if (s1.clamped(sl)) {
            g.set_clamp(sl, *s1.clamped(sl));
            continue;
        }
        MeridianId m = meridian_of(y, sl);
        bool crossed_in_f2 = !s2.clamped(sl) && intersect(support_of(m), s2.nodes).has_value();
        if (!crossed_in_f2) g.set_clamp(sl, transported_coord(m, rep2));
    }
    return descriptor_of(g);
}

// Whether the hyperplane meets the subcomplex: a bridge must lie inside the
// node set; a twist hyperplane needs an unclamped slot and a support node in
// common (walls are immaterial).
inline bool hyperplane_crosses(const HyperplaneId& h, const SubcomplexDescriptor& d) {
    SubcomplexShape s = shape_of(d);
    if (is_switch(h)) {
        const TreeNodeId& c = as_switch(h).child;
        return s.nodes.contains(c) && s.nodes.contains(c.parent());
    }
    const TwistHyperplaneId& t = as_twist(h);
    if (s.clamped(t.meridian.slot)) return false;
    return intersect(support_of(t.meridian), s.nodes).has_value();
}

// The 14 factor-system members through a vertex.
inline std::vector<SubcomplexDescriptor> members_at(const VertexId& v) {
    std::vector<SubcomplexDescriptor> out;
    out.reserve(14);
    out.push_back(Whole{});
    out.push_back(ZeroCube{v});
    for (Slot s : kSlots) out.push_back(CombSwitch{v.node, s, v.coord(s)});
    for (Slot s : kSlots) out.push_back(CombTwist{meridian_of(v.node, s), v.coord(s)});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            out.push_back(make_line(v.node, kSlots[i], v.coord(kSlots[i]), kSlots[j], v.coord(kSlots[j])));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            out.push_back(make_tree(meridian_of(v.node, kSlots[i]), v.coord(kSlots[i]),
                                    meridian_of(v.node, kSlots[j]), v.coord(kSlots[j])));
    return out;
}

inline bool descriptor_meets_ball(const SubcomplexDescriptor& d, const Ball& b) {
    SubcomplexShape s = shape_of(d);
    for (const VertexId& v : b.vertices) {
        if (!s.nodes.contains(v.node)) continue;
        bool ok = true;
        for (Slot sl : kSlots)
            if (s.clamped(sl) && v.coord(sl) != *s.clamped(sl)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

struct HyperclosureResult {
    std::vector<SubcomplexDescriptor> members;  // sorted
    int rounds = 0;                             // gate rounds until stable
};

// Ball-restricted hyperclosure: seed with the whole complex and every
// combinatorial hyperplane through a ball vertex, then close under pairwise
// gates, keeping only descriptors that still meet the ball.
inline HyperclosureResult hyperclosure_ball(const Ball& b, std::size_t cap = 100'000) {
    std::set<SubcomplexDescriptor, DescriptorLess> closure;
    closure.insert(Whole{});
    for (const VertexId& v : b.vertices) {
        for (Slot s : kSlots) {
            closure.insert(CombSwitch{v.node, s, v.coord(s)});
            closure.insert(CombTwist{meridian_of(v.node, s), v.coord(s)});
        }
    }
    HyperclosureResult res;
    bool grew = true;
    while (grew) {
        grew = false;
        ++res.rounds;
        std::vector<SubcomplexDescriptor> current(closure.begin(), closure.end());
        for (const auto& f1 : current) {
            for (const auto& f2 : current) {
                SubcomplexDescriptor g = gate_subcomplex(f1, f2);
                if (closure.count(g)) continue;
                if (!descriptor_meets_ball(g, b)) continue;
                closure.insert(g);
                if (closure.size() > cap) throw ResourceLimitError("hyperclosure exceeds descriptor cap");
                grew = true;
            }
        }
    }
    res.members.assign(closure.begin(), closure.end());
    return res;
}

inline SwitchHyperplaneId bridge_hyperplane(const CombSwitch& c) {
    std::vector<SwitchLabel> w = c.node.word;
    w.push_back(SwitchLabel{c.slot, c.value});
    TreeNodeId child = reduce_word(w);
    if (child.size() < c.node.size()) child = c.node;  // parent-side cancellation
    return SwitchHyperplaneId{child};
}

inline bool nodeset_inside_subtree(const NodeSet& s, const TreeNodeId& c) { return c.is_prefix_of(s.anchor); }

inline bool nodeset_meets_subtree(const NodeSet& s, const TreeNodeId& c) {
    return c.is_prefix_of(s.anchor) || s.contains(c);
}

// Strict separation of two subcomplexes by the bridge named by c.
inline bool switch_separates(const SwitchHyperplaneId& h, const SubcomplexDescriptor& F1,
                             const SubcomplexDescriptor& F2) {
    NodeSet n1 = shape_of(F1).nodes;
    NodeSet n2 = shape_of(F2).nodes;
    const TreeNodeId& c = h.child;
    bool f1_in = nodeset_inside_subtree(n1, c), f1_out = !nodeset_meets_subtree(n1, c);
    bool f2_in = nodeset_inside_subtree(n2, c), f2_out = !nodeset_meets_subtree(n2, c);
    return (f1_in && f2_out) || (f2_in && f1_out);
}

// Factored projection through a chain of separating combinatorial switch
// hyperplanes, ordered with the one nearest F1 last.
inline SubcomplexDescriptor gate_chain(const SubcomplexDescriptor& F1, const SubcomplexDescriptor& F2,
                                       const std::vector<CombSwitch>& chain) {
    SubcomplexDescriptor g = F2;
    for (const CombSwitch& c : chain) {
        if (!switch_separates(bridge_hyperplane(c), F1, F2))
            throw std::invalid_argument("chain element does not separate the subcomplexes");
        g = gate_subcomplex(SubcomplexDescriptor{c}, g);
    }
    return gate_subcomplex(F1, g);
}

// Parallelism of descriptors: equality of crossing sets. Whole and 0-cubes
// form a class each; combinatorial twist hyperplanes are classed by
// meridian; switch planes by slot component; lines by their free meridian;
// trees by their meridian pair.
inline bool descriptor_parallel(const SubcomplexDescriptor& a, const SubcomplexDescriptor& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Whole>(a) || std::holds_alternative<ZeroCube>(a)) return true;
    if (const auto* ta = std::get_if<CombTwist>(&a))
        return ta->meridian == std::get<CombTwist>(b).meridian;
    if (const auto* ca = std::get_if<CombSwitch>(&a)) {
        const auto& cb = std::get<CombSwitch>(b);
        return ca->slot == cb.slot &&
               switch_component_anchor(ca->node, ca->slot) == switch_component_anchor(cb.node, cb.slot);
    }
    if (const auto* la = std::get_if<FlatLine>(&a)) {
        const auto& lb = std::get<FlatLine>(b);
        if (la->slot_a != lb.slot_a || la->slot_b != lb.slot_b) return false;
        Slot free_slot = 6 - la->slot_a - la->slot_b;
        return meridian_of(la->node, free_slot) == meridian_of(lb.node, free_slot);
    }
    const auto& tra = std::get<SupportTree>(a);
    const auto& trb = std::get<SupportTree>(b);
    return tra.m1 == trb.m1 && tra.m2 == trb.m2;
}

inline std::string to_string(const SubcomplexDescriptor& d) {
    if (std::holds_alternative<Whole>(d)) return "Whole";
    if (const auto* z = std::get_if<ZeroCube>(&d)) return "Cube0[" + to_string(z->vertex) + "]";
    if (const auto* t = std::get_if<CombTwist>(&d))
        return "CT[" + to_string(t->meridian.anchor) + "]@" + std::to_string(t->meridian.slot) + "=" +
               std::to_string(t->value);
    if (const auto* c = std::get_if<CombSwitch>(&d))
        return "CS[" + to_string(c->node) + "]@" + std::to_string(c->slot) + "=" + std::to_string(c->value);
    if (const auto* l = std::get_if<FlatLine>(&d))
        return "L[" + to_string(l->node) + "]@" + std::to_string(l->slot_a) + "=" + std::to_string(l->value_a) +
               "," + std::to_string(l->slot_b) + "=" + std::to_string(l->value_b);
    const auto& tr = std::get<SupportTree>(d);
    return "TR[" + to_string(tr.m1) + "=" + std::to_string(tr.v1) + "," + to_string(tr.m2) + "=" +
           std::to_string(tr.v2) + "]";
}

}  // namespace cubemodel
