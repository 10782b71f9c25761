#include "prym/generate.hpp"

namespace prym {

DoubleCover random_cover(std::mt19937_64& rng, const GeneratorOptions& opts) {
    for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
        DoubleCover c;
        std::uniform_int_distribution<std::size_t> nv_dist(1, opts.max_vertices);
        std::size_t nv = nv_dist(rng);
        std::uniform_int_distribution<std::size_t> ne_dist(1, opts.max_edges);
        std::size_t ne = ne_dist(rng);
        for (std::size_t i = 0; i < nv; ++i) c.base.add_vertex("v" + std::to_string(i));
        std::uniform_int_distribution<std::size_t> v_dist(0, nv - 1);
        std::bernoulli_distribution coin(0.5);
        std::bernoulli_distribution dilate_vertex(0.3);
        for (std::size_t i = 0; i < nv; ++i)
            if (dilate_vertex(rng)) c.dilated_vertices.insert("v" + std::to_string(i));
        std::uniform_int_distribution<int> num_dist(1, 6);
        std::uniform_int_distribution<int> den_dist(1, 4);
        for (std::size_t i = 0; i < ne; ++i) {
            std::string id = "e" + std::to_string(i);
            std::string u = "v" + std::to_string(v_dist(rng));
            std::string v = "v" + std::to_string(v_dist(rng));
            c.base.add_edge(id, u, v);
            Rat len(num_dist(rng), den_dist(rng));
            len.canonicalize();
            c.lengths[id] = len;
            bool both_dilated = c.is_dilated_vertex(u) && c.is_dilated_vertex(v);
            if (both_dilated && coin(rng)) {
                c.dilated_edges.insert(id);
            } else if (!c.is_dilated_vertex(u) && !c.is_dilated_vertex(v)) {
                c.sigma[id] = coin(rng) ? 1 : -1;
            }
        }
        try {
            return validate_cover(std::move(c));
        } catch (const CoverError&) {
            continue;
        }
    }
    throw std::runtime_error("random_cover: exhausted attempts");
}

Orientation random_orientation(std::mt19937_64& rng, const DoubleCover& c) {
    Orientation o;
    std::bernoulli_distribution coin(0.5);
    for (const auto& e : c.undilated_edges())
        if (coin(rng)) o.flipped[e] = true;
    return o;
}

}  // namespace prym
