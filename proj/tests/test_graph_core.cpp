#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prym/graph.hpp"

using namespace prym;

namespace {

HalfEdgeGraph triangle() {
    HalfEdgeGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("ab", "a", "b");
    g.add_edge("bc", "b", "c");
    g.add_edge("ca", "c", "a");
    return g;
}

HalfEdgeGraph dumbbell() {
    HalfEdgeGraph g;
    g.add_vertex("u");
    g.add_vertex("w");
    g.add_edge("l1", "u", "u");
    g.add_edge("m", "u", "w");
    g.add_edge("l2", "w", "w");
    return g;
}

HalfEdgeGraph path3() {
    HalfEdgeGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("e1", "a", "b");
    g.add_edge("e2", "b", "c");
    return g;
}

HalfEdgeGraph random_graph(std::mt19937_64& rng, std::size_t nv, std::size_t ne) {
    HalfEdgeGraph g;
    for (std::size_t i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    for (std::size_t i = 0; i < ne; ++i)
        g.add_edge("e" + std::to_string(i), "v" + std::to_string(pick(rng)),
                   "v" + std::to_string(pick(rng)));
    return g;
}

long genus_sum(const HalfEdgeGraph& g) {
    return static_cast<long>(g.edges.size()) - static_cast<long>(g.vertices.size()) +
           static_cast<long>(connected_components(g).size());
}

bool acyclic(const HalfEdgeGraph& g) {
    return genus_sum(g) == 0;
}

}  // namespace

TEST_CASE("genus of tree, triangle, dumbbell") {
    CHECK(genus(path3()) == 0);
    CHECK(genus(triangle()) == 1);
    CHECK(genus(dumbbell()) == 2);
}

TEST_CASE("connected components are deterministic and cover the vertex set") {
    HalfEdgeGraph g;
    g.add_vertex("x");
    g.add_vertex("y");
    g.add_vertex("z");
    g.add_edge("e", "y", "z");
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::string>{"x"});
    CHECK(comps[1] == std::vector<std::string>{"y", "z"});
}

TEST_CASE("contract_edges merges components of the contracted set") {
    HalfEdgeGraph g = triangle();
    ContractionResult r = contract_edges(g, {"ab"});
    CHECK(r.graph.vertices.size() == 2);
    CHECK(r.graph.edges.size() == 2);
    CHECK(r.vertex_map.at("a") == r.vertex_map.at("b"));
    CHECK(r.vertex_map.at("c") != r.vertex_map.at("a"));
    // Surviving edges keep their ids.
    CHECK(r.graph.has_edge("bc"));
    CHECK(r.graph.has_edge("ca"));
    // Contracting the remaining two edges makes both loops at one vertex.
    ContractionResult all = contract_edges(g, {"ab", "bc", "ca"});
    CHECK(all.graph.vertices.size() == 1);
    CHECK(all.graph.edges.empty());
}

TEST_CASE("contraction genus bookkeeping on random graphs") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 60; ++t) {
        HalfEdgeGraph g = random_graph(rng, 2 + t % 5, 1 + t % 8);
        EdgeSet f;
        for (const auto& e : g.edges)
            if (rng() % 2) f.insert(e.id);
        ContractionResult r = contract_edges(g, f);
        long contracted_genus = genus_sum(induced_subgraph(g, f));
        CHECK(genus_sum(r.graph) == genus_sum(g) - contracted_genus);
        CHECK(connected_components(r.graph).size() == connected_components(g).size());
    }
}

TEST_CASE("delete_edges keeps all vertices; induced subgraph keeps endpoints") {
    HalfEdgeGraph g = dumbbell();
    HalfEdgeGraph d = delete_edges(g, {"m"});
    CHECK(d.vertices.size() == 2);
    CHECK(d.edges.size() == 2);
    HalfEdgeGraph ind = induced_subgraph(g, {"l1"});
    CHECK(ind.vertices == std::vector<std::string>{"u"});
    CHECK(ind.edges.size() == 1);
}

TEST_CASE("is_bridge") {
    HalfEdgeGraph g = dumbbell();
    CHECK(is_bridge(g, "m"));
    CHECK_FALSE(is_bridge(g, "l1"));
    CHECK_FALSE(is_bridge(triangle(), "ab"));
    CHECK(is_bridge(path3(), "e1"));
}

TEST_CASE("boundary matrix kills cycle basis chains") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 40; ++t) {
        HalfEdgeGraph g = random_graph(rng, 2 + t % 4, 2 + t % 7);
        Orientation o;
        for (const auto& e : g.edges) o.flipped[e.id] = rng() % 2 == 0;
        IntMatrix b = boundary_matrix(g, o);
        auto basis = cycle_space_basis(g, o);
        CHECK(static_cast<long>(basis.size()) == genus_sum(g));
        for (const auto& ch : basis) {
            for (std::size_t i = 0; i < b.rows; ++i) {
                Int acc = 0;
                for (const auto& [e, coef] : ch) acc += b.at(i, g.edge_index(e)) * coef;
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("loop columns of the boundary matrix vanish") {
    HalfEdgeGraph g = dumbbell();
    IntMatrix b = boundary_matrix(g, Orientation{});
    for (std::size_t i = 0; i < b.rows; ++i) {
        CHECK(b.at(i, g.edge_index("l1")) == 0);
        CHECK(b.at(i, g.edge_index("l2")) == 0);
    }
    // The middle edge column has one +1 and one -1.
    CHECK(b.at(g.vertex_index("u"), g.edge_index("m")) == -1);
    CHECK(b.at(g.vertex_index("w"), g.edge_index("m")) == 1);
}

TEST_CASE("cycle_basis size equals genus on connected graphs") {
    CHECK(cycle_basis(triangle(), Orientation{}).size() == 1);
    CHECK(cycle_basis(dumbbell(), Orientation{}).size() == 2);
    CHECK(cycle_basis(path3(), Orientation{}).empty());
}

TEST_CASE("spanning tree and forest") {
    HalfEdgeGraph g = triangle();
    EdgeSet t = spanning_tree(g);
    CHECK(t.size() == 2);
    CHECK(acyclic(induced_subgraph(g, t)));

    HalfEdgeGraph two;
    two.add_vertex("a");
    two.add_vertex("b");
    two.add_vertex("c");
    two.add_vertex("d");
    two.add_edge("e1", "a", "b");
    two.add_edge("e2", "a", "b");
    two.add_edge("f1", "c", "d");
    EdgeSet forest = spanning_forest(two);
    CHECK(forest.size() == 2);
    CHECK(acyclic(induced_subgraph(two, forest)));

    std::mt19937_64 rng(53);
    for (int t2 = 0; t2 < 40; ++t2) {
        HalfEdgeGraph g2 = random_graph(rng, 2 + t2 % 5, 1 + t2 % 8);
        EdgeSet f = spanning_forest(g2);
        CHECK(acyclic(induced_subgraph(g2, f)));
        // Spanning: same number of components with only forest edges.
        CHECK(connected_components(delete_edges(g2, [&] {
                  EdgeSet rest;
                  for (const auto& e : g2.edges)
                      if (!f.count(e.id)) rest.insert(e.id);
                  return rest;
              }()))
                  .size() == connected_components(g2).size());
    }
}

TEST_CASE("delete_edges preserves vertex count on random graphs") {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 30; ++t) {
        HalfEdgeGraph g = random_graph(rng, 2 + t % 5, 1 + t % 7);
        EdgeSet f;
        for (const auto& e : g.edges)
            if (rng() % 3 == 0) f.insert(e.id);
        CHECK(delete_edges(g, f).vertices.size() == g.vertices.size());
    }
}
