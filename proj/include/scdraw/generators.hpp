#pragma once

#include <cstdint>

#include "scdraw/planar_graph.hpp"

namespace scdraw {

// SplitMix64. Pinned here (constants and all) so that generated corpora are
// byte-identical across platforms and standard library versions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by multiply-shift; bias is immaterial here and
    // the result is platform-independent.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next()) * bound) >> 64);
    }
};

// Hub + k-cycle; n = k + 1. Requires k >= 3.
PlanarGraph gen_wheel(int k);

// Two concentric k-cycles joined by spokes; n = 2k. All faces are
// quadrilaterals except the two k-gons, which makes long chains and
// horizontal collinearities common downstream. Requires k >= 3.
PlanarGraph gen_prism(int k);

// Random stacked triangulation: start from K4 and repeatedly split a
// uniformly random inner face with a new vertex until n vertices.
// Deterministic for a fixed (n, seed). Requires n >= 4.
PlanarGraph gen_apollonian(int n, std::uint64_t seed);

// The dodecahedron (n = 20, all faces pentagons); the smallest generator
// output whose minimum face degree is 5.
PlanarGraph gen_dodecahedron();

}  // namespace scdraw
