#pragma once

#include <optional>
#include <vector>

namespace scdraw {

// A plane graph: simple, connected, with a rotation system listing each
// vertex's neighbors in counterclockwise order, plus an optional designated
// outer face. Immutable after construction by convention; all operations on
// it are pure.
struct PlanarGraph {
    int n = 0;
    std::vector<std::vector<int>> rotation;
    // Canonical cycle (lexicographically smallest rotation of the boundary
    // walk) of the designated outer face, if any.
    std::optional<std::vector<int>> outer_face;

    int degree(int v) const { return static_cast<int>(rotation[v].size()); }
    long long edge_count() const;
    bool has_edge(int u, int v) const;
};

struct FaceSet {
    // Each face is its boundary walk; inner faces run counterclockwise and
    // the outer face clockwise in any drawing that realizes the embedding.
    // Walks are stored in canonical rotation and the list is sorted, so face
    // ids are deterministic.
    std::vector<std::vector<int>> faces;
    std::optional<int> outer_index;

    int degree(int f) const { return static_cast<int>(faces[f].size()); }
    int count() const { return static_cast<int>(faces.size()); }
};

// Rotate a cyclic sequence to its lexicographically smallest rotation.
std::vector<int> canonical_cycle(std::vector<int> cycle);

// Structural validation of the PlanarGraph invariants: symmetric simple
// adjacency, connectivity, and the Euler face-count check. Throws
// errc::embedding_invalid on violation.
void validate_graph(const PlanarGraph& g);

// Trace all faces of the rotation system. Throws errc::embedding_invalid if
// the face count violates Euler's formula.
FaceSet extract_faces(const PlanarGraph& g);

// Brute-force 3-connectivity test (all vertex-pair removals).
bool is_three_connected(const PlanarGraph& g);

// Pick a face of degree <= 5; ties by smallest degree, then smallest index.
// Throws errc::no_small_face when none exists.
int choose_outer_face(const FaceSet& faces);

// Same graph with the given face designated as outer. Throws
// errc::unknown_face.
PlanarGraph set_outer_face(const PlanarGraph& g, const FaceSet& faces, int face_id);

// Build the rotation system of a plane graph from a consistently oriented
// face list (inner faces counterclockwise, outer clockwise). Intended for
// fixtures and generators built face-first.
PlanarGraph from_face_cycles(int n, const std::vector<std::vector<int>>& faces,
                             int outer_index);

// Dart-level view of the embedding used by the face and ordering machinery.
// Darts come in twin pairs 2e / 2e+1; the face walk with the face on the
// left continues from dart d via prev[twin(d)].
struct DartMesh {
    int n = 0;
    int m = 0;
    std::vector<int> tail, head;    // per dart
    std::vector<int> nxt, prv;      // ccw rotation ring around tail
    std::vector<int> dart_out;      // one outgoing dart per vertex (-1 if none)
    std::vector<int> face_of;       // per dart, filled by trace_faces
    std::vector<std::vector<int>> face_vertices;

    static int twin(int d) { return d ^ 1; }
    int next_on_face(int d) const { return prv[twin(d)]; }

    int find_dart(int u, int v) const;  // -1 if absent

    static DartMesh build(const PlanarGraph& g);
    void trace_faces();
};

}  // namespace scdraw
