#include "scdraw/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "scdraw/errors.hpp"

namespace scdraw {

long long PlanarGraph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& ring : rotation) deg_sum += static_cast<long long>(ring.size());
    return deg_sum / 2;
}

bool PlanarGraph::has_edge(int u, int v) const {
    const auto& ring = rotation[u];
    return std::find(ring.begin(), ring.end(), v) != ring.end();
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.empty()) return cycle;
    size_t best = 0;
    for (size_t i = 1; i < cycle.size(); ++i) {
        for (size_t j = 0; j < cycle.size(); ++j) {
            int a = cycle[(i + j) % cycle.size()];
            int b = cycle[(best + j) % cycle.size()];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
    return cycle;
}

void validate_graph(const PlanarGraph& g) {
    if (g.n <= 0 || static_cast<int>(g.rotation.size()) != g.n)
        throw error(errc::embedding_invalid, "rotation table size does not match n");
    for (int v = 0; v < g.n; ++v) {
        std::unordered_set<int> seen;
        for (int u : g.rotation[v]) {
            if (u < 0 || u >= g.n)
                throw error(errc::embedding_invalid, "neighbor id out of range");
            if (u == v)
                throw error(errc::embedding_invalid, "self-loop");
            if (!seen.insert(u).second)
                throw error(errc::embedding_invalid, "parallel edge in rotation");
        }
    }
    for (int v = 0; v < g.n; ++v)
        for (int u : g.rotation[v])
            if (!g.has_edge(u, v))
                throw error(errc::embedding_invalid, "asymmetric adjacency");

    std::vector<char> visited(g.n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : g.rotation[v])
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                bfs.push(u);
            }
    }
    if (reached != g.n)
        throw error(errc::embedding_invalid, "graph is not connected");

    extract_faces(g);  // Euler check lives there
}

int DartMesh::find_dart(int u, int v) const {
    if (dart_out[u] < 0) return -1;
    int d = dart_out[u];
    do {
        if (head[d] == v) return d;
        d = nxt[d];
    } while (d != dart_out[u]);
    return -1;
}

DartMesh DartMesh::build(const PlanarGraph& g) {
    DartMesh mesh;
    mesh.n = g.n;
    mesh.m = static_cast<int>(g.edge_count());
    int dart_count = 2 * mesh.m;
    mesh.tail.resize(dart_count);
    mesh.head.resize(dart_count);
    mesh.nxt.resize(dart_count);
    mesh.prv.resize(dart_count);
    mesh.dart_out.assign(g.n, -1);

    std::unordered_map<long long, int> dart_id;
    dart_id.reserve(dart_count * 2);
    auto key = [&](int u, int v) {
        return static_cast<long long>(u) * g.n + v;
    };
    int next_edge = 0;
    for (int v = 0; v < g.n; ++v)
        for (int u : g.rotation[v]) {
            if (v < u) {
                int d = 2 * next_edge++;
                mesh.tail[d] = v;
                mesh.head[d] = u;
                mesh.tail[d + 1] = u;
                mesh.head[d + 1] = v;
                dart_id[key(v, u)] = d;
                dart_id[key(u, v)] = d + 1;
            }
        }

    for (int v = 0; v < g.n; ++v) {
        const auto& ring = g.rotation[v];
        if (ring.empty()) continue;
        int deg = static_cast<int>(ring.size());
        std::vector<int> darts(deg);
        for (int i = 0; i < deg; ++i) darts[i] = dart_id.at(key(v, ring[i]));
        mesh.dart_out[v] = darts[0];
        for (int i = 0; i < deg; ++i) {
            mesh.nxt[darts[i]] = darts[(i + 1) % deg];
            mesh.prv[darts[i]] = darts[(i + deg - 1) % deg];
        }
    }
    return mesh;
}

void DartMesh::trace_faces() {
    face_of.assign(tail.size(), -1);
    face_vertices.clear();
    for (int d0 = 0; d0 < static_cast<int>(tail.size()); ++d0) {
        if (face_of[d0] != -1) continue;
        int id = static_cast<int>(face_vertices.size());
        std::vector<int> walk;
        int d = d0;
        do {
            face_of[d] = id;
            walk.push_back(tail[d]);
            d = next_on_face(d);
        } while (d != d0);
        face_vertices.push_back(std::move(walk));
    }
}

FaceSet extract_faces(const PlanarGraph& g) {
    DartMesh mesh = DartMesh::build(g);
    mesh.trace_faces();

    long long m = g.edge_count();
    long long f = static_cast<long long>(mesh.face_vertices.size());
    if (g.n - m + f != 2)
        throw error(errc::embedding_invalid,
                    "face trace violates Euler's formula; embedding is corrupt");

    FaceSet out;
    out.faces.reserve(mesh.face_vertices.size());
    for (auto& walk : mesh.face_vertices) out.faces.push_back(canonical_cycle(walk));
    std::sort(out.faces.begin(), out.faces.end());

    if (g.outer_face) {
        auto target = canonical_cycle(*g.outer_face);
        auto it = std::find(out.faces.begin(), out.faces.end(), target);
        if (it == out.faces.end())
            throw error(errc::unknown_face, "designated outer face is not a face");
        out.outer_index = static_cast<int>(it - out.faces.begin());
    }
    return out;
}

namespace {

bool connected_without(const PlanarGraph& g, int skip1, int skip2) {
    int start = -1;
    for (int v = 0; v < g.n && start < 0; ++v)
        if (v != skip1 && v != skip2) start = v;
    if (start < 0) return true;
    std::vector<char> visited(g.n, 0);
    std::vector<int> stack = {start};
    visited[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.rotation[v]) {
            if (u == skip1 || u == skip2 || visited[u]) continue;
            visited[u] = 1;
            ++reached;
            stack.push_back(u);
        }
    }
    int expect = g.n - (skip1 >= 0 ? 1 : 0) - (skip2 >= 0 && skip2 != skip1 ? 1 : 0);
    return reached == expect;
}

}  // namespace

bool is_three_connected(const PlanarGraph& g) {
    if (g.n < 4) return false;
    if (!connected_without(g, -1, -1)) return false;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (!connected_without(g, a, b)) return false;
    return true;
}

int choose_outer_face(const FaceSet& faces) {
    int best = -1;
    for (int f = 0; f < faces.count(); ++f) {
        if (faces.degree(f) > 5) continue;
        if (best < 0 || faces.degree(f) < faces.degree(best)) best = f;
    }
    if (best < 0)
        throw error(errc::no_small_face, "no face of degree at most 5");
    return best;
}

PlanarGraph set_outer_face(const PlanarGraph& g, const FaceSet& faces, int face_id) {
    if (face_id < 0 || face_id >= faces.count())
        throw error(errc::unknown_face, "face id out of range");
    PlanarGraph out = g;
    out.outer_face = faces.faces[face_id];
    return out;
}

PlanarGraph from_face_cycles(int n, const std::vector<std::vector<int>>& faces,
                             int outer_index) {
    // Each face contributes, at every corner (u -> v -> w), the constraint
    // that w immediately precedes u in rotation[v].
    std::vector<std::map<int, int>> succ(n);  // succ[v][w] = u
    for (const auto& walk : faces) {
        int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            int u = walk[i];
            int v = walk[(i + 1) % len];
            int w = walk[(i + 2) % len];
            auto inserted = succ[v].emplace(w, u);
            if (!inserted.second)
                throw error(errc::embedding_invalid, "inconsistent face corners");
        }
    }
    PlanarGraph g;
    g.n = n;
    g.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            g.rotation[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                throw error(errc::embedding_invalid, "open rotation ring");
            cur = it->second;
        } while (cur != start);
        if (g.rotation[v].size() != succ[v].size())
            throw error(errc::embedding_invalid, "rotation ring does not close");
    }
    if (outer_index >= 0)
        g.outer_face = canonical_cycle(faces[outer_index]);
    validate_graph(g);
    return g;
}

}  // namespace scdraw
