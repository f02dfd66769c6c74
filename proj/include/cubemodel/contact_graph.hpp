#pragma once

// Contact graphs over finite hyperplane sets, the factored variant with one
// cone vertex per parallelism class of proper factor-system members, lazy
// certified contact distances, and the four-point hyperbolicity diagnostic.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "cubemodel/factor_system.hpp"
#include "cubemodel/hyperplane.hpp"

namespace cubemodel {

struct ContactGraph {
    enum class Provenance { Plain, Factored };
    Provenance provenance = Provenance::Plain;
    std::vector<HyperplaneId> hyperplanes;        // sorted; graph vertices 0..h-1
    std::vector<SubcomplexDescriptor> cone_reps;  // class representatives; vertices h..h+c-1
    std::vector<std::pair<int, int>> edges;       // i < j, sorted
    std::vector<std::vector<int>> adjacency;

    std::size_t size() const { return hyperplanes.size() + cone_reps.size(); }

    void finalize_edges(std::set<std::pair<int, int>>& es) {
        edges.assign(es.begin(), es.end());
        adjacency.assign(size(), {});
        for (auto [i, j] : edges) {
            adjacency[static_cast<std::size_t>(i)].push_back(j);
            adjacency[static_cast<std::size_t>(j)].push_back(i);
        }
        for (auto& a : adjacency) std::sort(a.begin(), a.end());
    }
};

inline std::vector<HyperplaneId> hyperplanes_of_ball(const Ball& b) {
    std::set<HyperplaneId, HyperplaneLess> hs;
    for (const EdgeId& e : b.edges) hs.insert(dual_hyperplane(e));
    return {hs.begin(), hs.end()};
}

inline ContactGraph build_contact_graph(std::vector<HyperplaneId> hyperplanes) {
    std::sort(hyperplanes.begin(), hyperplanes.end(), HyperplaneLess{});
    hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
    ContactGraph g;
    g.provenance = ContactGraph::Provenance::Plain;
    g.hyperplanes = std::move(hyperplanes);
    std::set<std::pair<int, int>> es;
    int n = static_cast<int>(g.hyperplanes.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (contact(g.hyperplanes[static_cast<std::size_t>(i)], g.hyperplanes[static_cast<std::size_t>(j)]) !=
                ContactKind::None)
                es.insert({i, j});
    g.finalize_edges(es);
    return g;
}

// Cone vertices come from parallelism classes of proper members with
// infinite diameter: combinatorial hyperplanes, lines and trees. The whole
// complex and 0-cubes are never coned.
inline bool cone_eligible(const SubcomplexDescriptor& d) {
    return !std::holds_alternative<Whole>(d) && !std::holds_alternative<ZeroCube>(d);
}

inline ContactGraph build_factored_contact_graph(std::vector<HyperplaneId> hyperplanes,
                                                 const std::vector<SubcomplexDescriptor>& subcomplexes) {
    ContactGraph g = build_contact_graph(std::move(hyperplanes));
    g.provenance = ContactGraph::Provenance::Factored;

    std::vector<SubcomplexDescriptor> sorted = subcomplexes;
    std::sort(sorted.begin(), sorted.end(), DescriptorLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& d : sorted) {
        if (!cone_eligible(d)) continue;
        bool seen = false;
        for (const auto& rep : g.cone_reps)
            if (descriptor_parallel(rep, d)) {
                seen = true;
                break;
            }
        if (!seen) g.cone_reps.push_back(d);
    }

    std::set<std::pair<int, int>> es(g.edges.begin(), g.edges.end());
    int h = static_cast<int>(g.hyperplanes.size());
    for (int c = 0; c < static_cast<int>(g.cone_reps.size()); ++c)
        for (int i = 0; i < h; ++i)
            if (hyperplane_crosses(g.hyperplanes[static_cast<std::size_t>(i)],
                                   g.cone_reps[static_cast<std::size_t>(c)]))
                es.insert({i, h + c});
    g.finalize_edges(es);
    return g;
}

inline std::vector<int> graph_distances(const ContactGraph& g, int source) {
    std::vector<int> dist(g.size(), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j : g.adjacency[static_cast<std::size_t>(i)])
            if (dist[static_cast<std::size_t>(j)] < 0) {
                dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + 1;
                q.push(j);
            }
    }
    return dist;
}

struct DistanceResult {
    std::size_t value = 0;
    enum class Status { Exact, UpperBound } status = Status::Exact;
    int search_radius = 0;

    bool exact() const { return status == Status::Exact; }
};

namespace detail {

// Footprint of a hyperplane in the tree: the support subtree for a twist
// hyperplane, the two bridge nodes for a switch hyperplane.
struct Footprint {
    bool is_edge = false;
    NodeSet support;          // twist
    TreeNodeId parent, child; // switch

    TreeNodeId representative() const { return is_edge ? parent : support.anchor; }

    bool contains(const TreeNodeId& z) const {
        if (is_edge) return z == parent || z == child;
        return support.contains(z);
    }

    TreeNodeId gate_toward(const TreeNodeId& n) const {
        if (!is_edge) return gate_node(support, n);
        return tree_distance(parent, n) <= tree_distance(child, n) ? parent : child;
    }
};

inline Footprint footprint(const HyperplaneId& h) {
    Footprint f;
    if (is_twist(h)) {
        f.support = support_of(as_twist(h).meridian);
        return f;
    }
    f.is_edge = true;
    f.child = as_switch(h).child;
    f.parent = f.child.parent();
    return f;
}

inline bool footprints_intersect(const Footprint& a, const Footprint& b, TreeNodeId& witness) {
    if (!a.is_edge && !b.is_edge) {
        if (auto ns = intersect(a.support, b.support)) {
            witness = ns->anchor;
            return true;
        }
        return false;
    }
    const Footprint& edge = a.is_edge ? a : b;
    const Footprint& other = a.is_edge ? b : a;
    if (other.contains(edge.parent)) {
        witness = edge.parent;
        return true;
    }
    if (other.contains(edge.child)) {
        witness = edge.child;
        return true;
    }
    return false;
}

// Nodes of the geodesic joining the two footprints (a single shared node
// when they intersect). Every hyperplane in contact with both must have its
// footprint contain all of these nodes.
inline std::vector<TreeNodeId> bridge_path(const HyperplaneId& h1, const HyperplaneId& h2) {
    Footprint f1 = footprint(h1), f2 = footprint(h2);
    TreeNodeId witness;
    if (footprints_intersect(f1, f2, witness)) return {witness};
    TreeNodeId y1 = f1.gate_toward(f2.representative());
    TreeNodeId y2 = f2.gate_toward(y1);
    return tree_geodesic(y1, y2);
}

inline std::vector<TwistCoord> wall_pool(const HyperplaneId& h1, const HyperplaneId& h2,
                                         const std::vector<TreeNodeId>& nodes) {
    std::set<TwistCoord> walls{-1, 0, 1};
    auto add = [&](const HyperplaneId& h) {
        if (is_twist(h)) {
            TwistCoord a = as_twist(h).wall;
            walls.insert({a - 1, a, a + 1});
        } else {
            TwistCoord k = as_switch(h).child.back().dual_index;
            walls.insert({k - 1, k});
        }
    };
    add(h1);
    add(h2);
    for (const TreeNodeId& z : nodes)
        for (const SwitchLabel& l : z.word) {
            walls.insert(l.dual_index);
            walls.insert(l.dual_index - 1);
        }
    return {walls.begin(), walls.end()};
}

// All contact candidates anchored on the given node path.
inline std::vector<HyperplaneId> path_candidates(const HyperplaneId& h1, const HyperplaneId& h2,
                                                 const std::vector<TreeNodeId>& nodes) {
    std::set<HyperplaneId, HyperplaneLess> out;
    std::set<MeridianId> ms;
    for (const TreeNodeId& z : nodes)
        for (Slot s : kSlots) ms.insert(meridian_of(z, s));
    auto walls = wall_pool(h1, h2, nodes);
    for (const MeridianId& m : ms)
        for (TwistCoord w : walls) out.insert(TwistHyperplaneId{m, w});
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const TreeNodeId& deeper = nodes[i].size() > nodes[i + 1].size() ? nodes[i] : nodes[i + 1];
        out.insert(SwitchHyperplaneId{deeper});
    }
    out.erase(h1);
    out.erase(h2);
    return {out.begin(), out.end()};
}

// Fattened node hull: grow the bridge path by parent steps and child steps
// over a bounded index alphabet.
inline std::vector<TreeNodeId> fattened_hull(const HyperplaneId& h1, const HyperplaneId& h2, int fatten) {
    std::vector<TreeNodeId> base = bridge_path(h1, h2);
    std::set<TwistCoord> alphabet{-1, 0, 1};
    if (is_twist(h1)) alphabet.insert(as_twist(h1).wall);
    if (is_twist(h2)) alphabet.insert(as_twist(h2).wall);
    for (const TreeNodeId& z : base)
        for (const SwitchLabel& l : z.word) alphabet.insert(l.dual_index);

    std::set<TreeNodeId> nodes(base.begin(), base.end());
    std::vector<TreeNodeId> frontier = base;
    for (int step = 0; step < fatten; ++step) {
        std::vector<TreeNodeId> next;
        for (const TreeNodeId& z : frontier) {
            if (!z.empty()) {
                TreeNodeId p = z.parent();
                if (nodes.insert(p).second) next.push_back(p);
            }
            for (Slot s : kSlots)
                for (TwistCoord k : alphabet) {
                    if (k == 0 && !z.empty() && z.back().slot == s) continue;
                    TreeNodeId c = z.child(SwitchLabel{s, k});
                    if (nodes.insert(c).second) next.push_back(c);
                }
        }
        frontier = std::move(next);
    }
    return {nodes.begin(), nodes.end()};
}

inline std::size_t bfs_over_candidates(const HyperplaneId& h1, const HyperplaneId& h2,
                                       const std::vector<HyperplaneId>& universe) {
    std::vector<HyperplaneId> verts = universe;
    verts.push_back(h1);
    verts.push_back(h2);
    std::sort(verts.begin(), verts.end(), HyperplaneLess{});
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto find = [&](const HyperplaneId& h) {
        return static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), h, HyperplaneLess{}) - verts.begin());
    };
    std::size_t s = find(h1), t = find(h2);
    std::vector<int> dist(verts.size(), -1);
    dist[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (dist[j] >= 0 || i == j) continue;
            if (contact(verts[i], verts[j]) == ContactKind::None) continue;
            dist[j] = dist[i] + 1;
            if (j == t) return static_cast<std::size_t>(dist[j]);
            q.push(j);
        }
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace detail

// Certified lazy distance in the contact graph of the whole complex.
// Distances 0..2 are decided by closed-form case analysis over a provably
// complete candidate set; a value of 3 is exact because 2 was excluded;
// beyond that the BFS value is an upper bound, marked exact only when two
// consecutive fattenings agree (a flagged heuristic).
inline DistanceResult contact_distance(const HyperplaneId& h1, const HyperplaneId& h2, int search_radius = 2) {
    DistanceResult r;
    r.search_radius = search_radius;
    if (h1 == h2) return r;
    if (contact(h1, h2) != ContactKind::None) {
        r.value = 1;
        return r;
    }
    std::vector<TreeNodeId> path = detail::bridge_path(h1, h2);
    for (const HyperplaneId& c : detail::path_candidates(h1, h2, path)) {
        if (contact(c, h1) != ContactKind::None && contact(c, h2) != ContactKind::None) {
            r.value = 2;
            return r;
        }
    }
    std::size_t prev = static_cast<std::size_t>(-1);
    for (int f = 0; f <= search_radius; ++f) {
        auto hull = detail::fattened_hull(h1, h2, f);
        auto universe = detail::path_candidates(h1, h2, hull);
        std::size_t d = detail::bfs_over_candidates(h1, h2, universe);
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
        throw ResourceLimitError("contact distance not resolved within search radius");
    r.value = prev;
    r.status = DistanceResult::Status::UpperBound;
    return r;
}

// Gromov four-point delta over quadruples of the graph, exhaustive when
// sample_size is 0, otherwise over seeded samples. Restricted to the largest
// component when disconnected. Returns twice the usual value to stay
// integral; callers report value/2.
inline std::int64_t four_point_delta_doubled(const ContactGraph& g, std::size_t sample_size,
                                             std::uint64_t seed) {
    std::size_t n = g.size();
    if (n < 4) return 0;
    // restrict to largest connected component
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(i);
        comp[i] = ncomp;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            for (int y : g.adjacency[x])
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = ncomp;
                    q.push(static_cast<std::size_t>(y));
                }
        }
        ++ncomp;
    }
    std::vector<std::size_t> comp_size(static_cast<std::size_t>(ncomp), 0);
    for (std::size_t i = 0; i < n; ++i) comp_size[static_cast<std::size_t>(comp[i])]++;
    int biggest = static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());
    std::vector<int> verts;
    for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == biggest) verts.push_back(static_cast<int>(i));
    std::size_t m = verts.size();
    if (m < 4) return 0;

    // distance matrix on the component
    std::vector<std::vector<int>> dist(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto all = graph_distances(g, verts[i]);
        dist[i].resize(m);
        for (std::size_t j = 0; j < m; ++j) dist[i][j] = all[static_cast<std::size_t>(verts[j])];
    }

    auto delta_of = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        std::int64_t s1 = dist[a][b] + dist[c][d];
        std::int64_t s2 = dist[a][c] + dist[b][d];
        std::int64_t s3 = dist[a][d] + dist[b][c];
        if (s1 < s2) std::swap(s1, s2);
        if (s1 < s3) std::swap(s1, s3);
        if (s2 < s3) std::swap(s2, s3);
        return s1 - s2;
    };

    std::int64_t best = 0;
    if (sample_size == 0) {
        unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        std::vector<std::int64_t> results(workers, 0);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w]() {
                std::int64_t local = 0;
                for (std::size_t a = w; a < m; a += workers)
                    for (std::size_t b = a + 1; b < m; ++b)
                        for (std::size_t c = b + 1; c < m; ++c)
                            for (std::size_t d = c + 1; d < m; ++d) local = std::max(local, delta_of(a, b, c, d));
                results[w] = local;
            });
        }
        for (auto& t : threads) t.join();
        best = *std::max_element(results.begin(), results.end());
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t s = 0; s < sample_size; ++s) {
            std::size_t a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            best = std::max(best, delta_of(a, b, c, d));
        }
    }
    return best;
}

inline double four_point_delta(const ContactGraph& g, std::size_t sample_size = 0, std::uint64_t seed = 0) {
    return static_cast<double>(four_point_delta_doubled(g, sample_size, seed)) / 2.0;
}

}  // namespace cubemodel
