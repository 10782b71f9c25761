#pragma once

#include <random>

#include "prym/cover.hpp"

namespace prym {

struct GeneratorOptions {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 10;
    std::size_t max_attempts = 10000;
};

// Random valid cover: vertex/edge counts within the bounds, dilation by an
// independent coin per vertex (dilated edges only between dilated vertices),
// σ uniform on free edges, small random rational lengths. Regenerates until
// validation passes (connected, nontrivial).
DoubleCover random_cover(std::mt19937_64& rng, const GeneratorOptions& opts = {});

// Uniformly random edge reversals on the undilated edges.
Orientation random_orientation(std::mt19937_64& rng, const DoubleCover& c);

}  // namespace prym
