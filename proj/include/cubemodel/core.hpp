#pragma once

// Core value types of the cube complex: vertices are (tree node, twist
// coordinates) pairs, where tree nodes are reduced words of switch labels.
// All types are immutable values and safe to share across threads.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubemodel {

using Slot = int;  // pants-curve position, 1..3
using TwistCoord = std::int64_t;

inline constexpr std::array<Slot, 3> kSlots{1, 2, 3};

inline void check_slot(Slot s) {
    if (s < 1 || s > 3) throw std::invalid_argument("slot out of range: " + std::to_string(s));
}

struct SwitchLabel {
    Slot slot = 1;
    TwistCoord dual_index = 0;

    auto operator<=>(const SwitchLabel&) const = default;
};

// A reduced word of switch labels addressing one twist flat. The empty word
// is the basepoint flat. Reduced means no label (i,0) directly follows a
// label of the same slot i; such a pair is a backtrack in the tree.
struct TreeNodeId {
    std::vector<SwitchLabel> word;

    TreeNodeId() = default;
    explicit TreeNodeId(std::vector<SwitchLabel> w) : word(std::move(w)) {}

    bool empty() const { return word.empty(); }
    std::size_t size() const { return word.size(); }
    const SwitchLabel& back() const { return word.back(); }

    TreeNodeId parent() const {
        TreeNodeId p = *this;
        p.word.pop_back();
        return p;
    }

    TreeNodeId child(SwitchLabel l) const {
        TreeNodeId c = *this;
        c.word.push_back(l);
        return c;
    }

    // true when `this` is a prefix of (or equal to) z, i.e. z lies in the
    // subtree rooted here.
    bool is_prefix_of(const TreeNodeId& z) const {
        if (word.size() > z.word.size()) return false;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (!(word[i] == z.word[i])) return false;
        return true;
    }

    auto operator<=>(const TreeNodeId&) const = default;
};

inline bool is_reduced(std::span<const SwitchLabel> labels) {
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i].dual_index == 0 && labels[i].slot == labels[i - 1].slot) return false;
    return true;
}

// Left-to-right reduction: appending (i,0) after a label of slot i cancels
// the pair. This is exactly the composition of switch moves in the tree.
inline TreeNodeId reduce_word(std::span<const SwitchLabel> labels) {
    TreeNodeId out;
    for (const SwitchLabel& l : labels) {
        if (l.dual_index == 0 && !out.word.empty() && out.word.back().slot == l.slot)
            out.word.pop_back();
        else
            out.word.push_back(l);
    }
    return out;
}

inline TreeNodeId reduce_word(std::initializer_list<SwitchLabel> labels) {
    return reduce_word(std::span<const SwitchLabel>(labels.begin(), labels.size()));
}

inline std::size_t common_prefix_length(const TreeNodeId& a, const TreeNodeId& b) {
    std::size_t n = std::min(a.word.size(), b.word.size());
    std::size_t i = 0;
    while (i < n && a.word[i] == b.word[i]) ++i;
    return i;
}

inline std::size_t tree_distance(const TreeNodeId& a, const TreeNodeId& b) {
    std::size_t p = common_prefix_length(a, b);
    return (a.word.size() - p) + (b.word.size() - p);
}

// Nodes of the tree geodesic from a to b, inclusive of both ends.
inline std::vector<TreeNodeId> tree_geodesic(const TreeNodeId& a, const TreeNodeId& b) {
    std::size_t p = common_prefix_length(a, b);
    std::vector<TreeNodeId> path;
    TreeNodeId cur = a;
    path.push_back(cur);
    while (cur.word.size() > p) {
        cur = cur.parent();
        path.push_back(cur);
    }
    for (std::size_t i = p; i < b.word.size(); ++i) {
        cur = cur.child(b.word[i]);
        path.push_back(cur);
    }
    return path;
}

// A 0-cube: a twist flat plus three twist coordinates within it.
struct VertexId {
    TreeNodeId node;
    std::array<TwistCoord, 3> twist{0, 0, 0};

    VertexId() = default;
    VertexId(TreeNodeId n, std::array<TwistCoord, 3> t) : node(std::move(n)), twist(t) {}

    TwistCoord coord(Slot s) const { return twist[static_cast<std::size_t>(s - 1)]; }
    void set_coord(Slot s, TwistCoord v) { twist[static_cast<std::size_t>(s - 1)] = v; }

    auto operator<=>(const VertexId&) const = default;
};

inline VertexId basepoint() { return VertexId{}; }

inline VertexId twist_target(const VertexId& v, Slot slot, int direction) {
    check_slot(slot);
    if (direction != 1 && direction != -1) throw std::invalid_argument("twist direction must be +-1");
    VertexId out = v;
    out.set_coord(slot, out.coord(slot) + direction);
    return out;
}

// The unique switch move at `slot`: crossing the bridge resets the switched
// coordinate to 0 (child direction) or restores the stored edge index
// (parent direction). Involution: applying it twice returns v.
inline VertexId switch_target(const VertexId& v, Slot slot) {
    check_slot(slot);
    VertexId out = v;
    TwistCoord k = v.coord(slot);
    if (k == 0 && !v.node.empty() && v.node.back().slot == slot) {
        out.set_coord(slot, v.node.back().dual_index);
        out.node = v.node.parent();
    } else {
        out.node = v.node.child(SwitchLabel{slot, k});
        out.set_coord(slot, 0);
    }
    return out;
}

// Every vertex has exactly 9 neighbors: 6 twist, 3 switch.
inline std::vector<VertexId> neighbors(const VertexId& v) {
    std::vector<VertexId> out;
    out.reserve(9);
    for (Slot s : kSlots) {
        out.push_back(twist_target(v, s, +1));
        out.push_back(twist_target(v, s, -1));
    }
    for (Slot s : kSlots) out.push_back(switch_target(v, s));
    return out;
}

enum class EdgeKind { Twist, Switch };

// Canonical edge: a twist edge is stored at its lesser endpoint with
// direction +1; a switch edge is stored at the parent-side endpoint.
struct EdgeId {
    EdgeKind kind = EdgeKind::Twist;
    VertexId base;
    Slot slot = 1;

    auto operator<=>(const EdgeId&) const = default;
};

inline EdgeId make_twist_edge(const VertexId& v, Slot slot, int direction) {
    check_slot(slot);
    EdgeId e;
    e.kind = EdgeKind::Twist;
    e.slot = slot;
    e.base = direction > 0 ? v : twist_target(v, slot, -1);
    return e;
}

inline EdgeId make_switch_edge(const VertexId& v, Slot slot) {
    check_slot(slot);
    EdgeId e;
    e.kind = EdgeKind::Switch;
    e.slot = slot;
    bool parent_direction = v.coord(slot) == 0 && !v.node.empty() && v.node.back().slot == slot;
    e.base = parent_direction ? switch_target(v, slot) : v;
    return e;
}

inline std::pair<VertexId, VertexId> edge_endpoints(const EdgeId& e) {
    if (e.kind == EdgeKind::Twist) return {e.base, twist_target(e.base, e.slot, +1)};
    return {e.base, switch_target(e.base, e.slot)};
}

// The 9 canonical edges at v.
inline std::vector<EdgeId> edges_at(const VertexId& v) {
    std::vector<EdgeId> out;
    out.reserve(9);
    for (Slot s : kSlots) {
        out.push_back(make_twist_edge(v, s, +1));
        out.push_back(make_twist_edge(v, s, -1));
        out.push_back(make_switch_edge(v, s));
    }
    return out;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t h) {
    return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct TreeNodeHash {
    std::size_t operator()(const TreeNodeId& n) const {
        std::size_t h = 0x5bd1e995u;
        for (const auto& l : n.word) {
            h = hash_combine(h, std::hash<int>{}(l.slot));
            h = hash_combine(h, std::hash<long long>{}(static_cast<long long>(l.dual_index)));
        }
        return h;
    }
};

struct VertexHash {
    std::size_t operator()(const VertexId& v) const {
        std::size_t h = TreeNodeHash{}(v.node);
        for (TwistCoord c : v.twist) h = hash_combine(h, std::hash<long long>{}(static_cast<long long>(c)));
        return h;
    }
};

inline std::string to_string(const TreeNodeId& n) {
    if (n.empty()) return "\xce\xb5";  // epsilon
    std::string s;
    for (std::size_t i = 0; i < n.word.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(n.word[i].slot) + "," + std::to_string(n.word[i].dual_index) + ")";
    }
    return s;
}

inline std::string to_string(const VertexId& v) {
    std::string s = to_string(v.node) + ";";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += std::to_string(v.twist[i]);
    }
    return s;
}

}  // namespace cubemodel
