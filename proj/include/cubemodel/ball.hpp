#pragma once

// Finite-ball materialization of the complex: vertices within a 1-skeleton
// radius of a center, the induced edges, and the squares and 3-cubes whose
// corners all lie in the ball. Once built a Ball is read-only.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cubemodel/core.hpp"

namespace cubemodel {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BallOptions {
    int max_radius = 6;
    std::size_t vertex_cap = 2'000'000;
};

class Ball {
public:
    VertexId center;
    int radius = 0;
    std::vector<VertexId> vertices;               // sorted lexicographically
    std::vector<int> depth;                       // distance from center, per vertex
    std::vector<EdgeId> edges;                    // canonical, sorted
    std::vector<std::array<int, 4>> squares;      // sorted corner indices, sorted
    std::vector<std::array<int, 8>> cubes;        // sorted corner indices, sorted
    std::vector<std::vector<int>> adjacency;      // neighbor indices, per vertex

    int index_of(const VertexId& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const VertexId& v) const { return index_.count(v) != 0; }

    friend Ball make_ball(const VertexId&, int, const BallOptions&);

private:
    std::unordered_map<VertexId, int, VertexHash> index_;
};

struct CellSet {
    std::vector<std::array<int, 4>> squares;
    std::vector<std::array<int, 8>> cubes;
};

// Squares come in two kinds: two twist directions in one flat, or one twist
// and one switch direction with distinct slots. Two switch moves never
// commute, nor do a twist and a switch at the same slot.
inline CellSet detect_cells(const Ball& b) {
    std::set<std::array<int, 4>> squares;
    std::set<std::array<int, 8>> cubes;

    auto idx = [&](const VertexId& v) { return b.index_of(v); };

    for (const VertexId& v : b.vertices) {
        // twist-twist squares, v as the minimal corner
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t c = a + 1; c < 3; ++c) {
                Slot sa = kSlots[a], sc = kSlots[c];
                int i0 = idx(v);
                int i1 = idx(twist_target(v, sa, +1));
                int i2 = idx(twist_target(v, sc, +1));
                int i3 = idx(twist_target(twist_target(v, sa, +1), sc, +1));
                if (i0 >= 0 && i1 >= 0 && i2 >= 0 && i3 >= 0) {
                    std::array<int, 4> q{i0, i1, i2, i3};
                    std::sort(q.begin(), q.end());
                    squares.insert(q);
                }
            }
        }
        // twist-switch squares, distinct slots
        for (Slot st : kSlots) {
            for (Slot ss : kSlots) {
                if (st == ss) continue;
                VertexId vt = twist_target(v, st, +1);
                int i0 = idx(v), i1 = idx(vt);
                int i2 = idx(switch_target(v, ss));
                int i3 = idx(switch_target(vt, ss));
                if (i0 >= 0 && i1 >= 0 && i2 >= 0 && i3 >= 0) {
                    std::array<int, 4> q{i0, i1, i2, i3};
                    std::sort(q.begin(), q.end());
                    squares.insert(q);
                }
            }
        }
        // twist cubes
        {
            std::array<int, 8> c;
            bool ok = true;
            int n = 0;
            for (int a = 0; a < 2 && ok; ++a)
                for (int bb = 0; bb < 2 && ok; ++bb)
                    for (int cc = 0; cc < 2 && ok; ++cc) {
                        VertexId w = v;
                        w.set_coord(1, w.coord(1) + a);
                        w.set_coord(2, w.coord(2) + bb);
                        w.set_coord(3, w.coord(3) + cc);
                        int i = idx(w);
                        if (i < 0) ok = false;
                        else c[static_cast<std::size_t>(n++)] = i;
                    }
            if (ok) {
                std::sort(c.begin(), c.end());
                cubes.insert(c);
            }
        }
        // switch cubes: two twist directions plus the switch at the third slot
        for (Slot ss : kSlots) {
            std::array<Slot, 2> ts{};
            int n = 0;
            for (Slot s : kSlots)
                if (s != ss) ts[static_cast<std::size_t>(n++)] = s;
            std::array<int, 8> c;
            bool ok = true;
            int m = 0;
            for (int a = 0; a < 2 && ok; ++a)
                for (int bb = 0; bb < 2 && ok; ++bb) {
                    VertexId w = v;
                    w.set_coord(ts[0], w.coord(ts[0]) + a);
                    w.set_coord(ts[1], w.coord(ts[1]) + bb);
                    int i = idx(w);
                    int j = idx(switch_target(w, ss));
                    if (i < 0 || j < 0) ok = false;
                    else {
                        c[static_cast<std::size_t>(m++)] = i;
                        c[static_cast<std::size_t>(m++)] = j;
                    }
                }
            if (ok) {
                std::sort(c.begin(), c.end());
                cubes.insert(c);
            }
        }
    }

    CellSet out;
    out.squares.assign(squares.begin(), squares.end());
    out.cubes.assign(cubes.begin(), cubes.end());
    return out;
}

inline Ball make_ball(const VertexId& center, int radius, const BallOptions& opts = {}) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (radius > opts.max_radius)
        throw std::invalid_argument("radius exceeds configured maximum of " + std::to_string(opts.max_radius));

    std::unordered_map<VertexId, int, VertexHash> dist;
    dist.emplace(center, 0);
    std::queue<VertexId> frontier;
    frontier.push(center);
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop();
        int d = dist.at(v);
        if (d == radius) continue;
        for (const VertexId& w : neighbors(v)) {
            if (dist.emplace(w, d + 1).second) {
                if (dist.size() > opts.vertex_cap)
                    throw ResourceLimitError("ball exceeds vertex cap; reduce radius");
                frontier.push(w);
            }
        }
    }

    Ball b;
    b.center = center;
    b.radius = radius;
    b.vertices.reserve(dist.size());
    for (const auto& [v, d] : dist) b.vertices.push_back(v);
    std::sort(b.vertices.begin(), b.vertices.end());
    b.depth.resize(b.vertices.size());
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        b.index_.emplace(b.vertices[i], static_cast<int>(i));
        b.depth[i] = dist.at(b.vertices[i]);
    }

    std::set<EdgeId> edges;
    b.adjacency.assign(b.vertices.size(), {});
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        const VertexId& v = b.vertices[i];
        for (Slot s : kSlots) {
            for (int dir : {+1, -1}) {
                VertexId w = twist_target(v, s, dir);
                int j = b.index_of(w);
                if (j >= 0) {
                    b.adjacency[i].push_back(j);
                    edges.insert(make_twist_edge(v, s, dir));
                }
            }
            VertexId w = switch_target(v, s);
            int j = b.index_of(w);
            if (j >= 0) {
                b.adjacency[i].push_back(j);
                edges.insert(make_switch_edge(v, s));
            }
        }
        std::sort(b.adjacency[i].begin(), b.adjacency[i].end());
    }
    b.edges.assign(edges.begin(), edges.end());

    CellSet cells = detect_cells(b);
    b.squares = std::move(cells.squares);
    b.cubes = std::move(cells.cubes);
    return b;
}

inline int bfs_distance(const Ball& b, const VertexId& u, const VertexId& v) {
    int su = b.index_of(u), sv = b.index_of(v);
    if (su < 0 || sv < 0) throw std::invalid_argument("vertex not in ball");
    if (su == sv) return 0;
    std::vector<int> dist(b.vertices.size(), -1);
    dist[static_cast<std::size_t>(su)] = 0;
    std::queue<int> q;
    q.push(su);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j : b.adjacency[static_cast<std::size_t>(i)]) {
            if (dist[static_cast<std::size_t>(j)] < 0) {
                dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + 1;
                if (j == sv) return dist[static_cast<std::size_t>(j)];
                q.push(j);
            }
        }
    }
    return -1;  // unreachable within the ball
}

// All distances from one source, for bulk queries.
inline std::vector<int> bfs_all_distances(const Ball& b, int source) {
    std::vector<int> dist(b.vertices.size(), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j : b.adjacency[static_cast<std::size_t>(i)])
            if (dist[static_cast<std::size_t>(j)] < 0) {
                dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + 1;
                q.push(j);
            }
    }
    return dist;
}

}  // namespace cubemodel
