#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "prym/cover.hpp"
#include "prym/generate.hpp"

using namespace prym;

TEST_CASE("total graph of a free edge between dilated vertices is two parallel edges") {
    DoubleCover c;
    c.base.add_vertex("d1");
    c.base.add_vertex("d2");
    c.base.add_vertex("x");
    c.base.add_edge("e", "d1", "d2");
    c.base.add_edge("p", "d1", "x");
    c.base.add_edge("q", "x", "d2");
    c.lengths = {{"e", 1}, {"p", 1}, {"q", 1}};
    c.dilated_vertices = {"d1", "d2"};
    c = validate_cover(c);
    TotalGraph t = build_total_graph(c);
    REQUIRE(t.graph.has_edge("e+"));
    REQUIRE(t.graph.has_edge("e-"));
    const auto& ep = t.graph.edge("e+");
    const auto& em = t.graph.edge("e-");
    CHECK(ep.u == "d1~");
    CHECK(ep.v == "d2~");
    CHECK(em.u == "d1~");
    CHECK(em.v == "d2~");
}

TEST_CASE("odd loop lifts to an upstairs 2-cycle, even loop to two loops") {
    DoubleCover c = corpus::cover_e();
    TotalGraph t = build_total_graph(c);
    CHECK(t.graph.vertices.size() == 2);
    CHECK(t.graph.edges.size() == 2);
    const auto& ep = t.graph.edge("e+");
    CHECK(ep.u != ep.v);
    CHECK(genus(t.graph) == 1);

    DoubleCover theta = corpus::cover_theta();
    // Even edges lift to u±->w±; the odd edge crosses.
    TotalGraph tt = build_total_graph(theta);
    CHECK(tt.graph.edge("t1+").v == "w+");
    CHECK(tt.graph.edge("t3+").v == "w-");
}

TEST_CASE("undilated loop at a dilated vertex becomes two loops upstairs") {
    DoubleCover c;
    c.base.add_vertex("d");
    c.base.add_vertex("x");
    c.base.add_edge("l", "d", "d");
    c.base.add_edge("p", "d", "x");
    c.lengths = {{"l", 1}, {"p", 1}};
    c.dilated_vertices = {"d"};
    c = validate_cover(c);
    TotalGraph t = build_total_graph(c);
    CHECK(t.graph.edge("l+").u == "d~");
    CHECK(t.graph.edge("l+").v == "d~");
    CHECK(t.graph.edge("l-").u == "d~");
}

TEST_CASE("dilated edges lift once at half length") {
    DoubleCover c = corpus::cover_triangle_dilated();
    TotalGraph t = build_total_graph(c);
    CHECK(t.graph.has_edge("s~"));
    CHECK_FALSE(t.graph.has_edge("s+"));
    CHECK(t.lengths.at("s~") == Rat(1, 2));
    CHECK(t.lengths.at("a+") == 1);
}

TEST_CASE("genus counts for the golden covers") {
    CHECK(base_genus(corpus::cover_a()) == 3);
    CHECK(total_genus(corpus::cover_a()) == 5);
    CHECK(prym_rank(corpus::cover_a()) == 2);
    CHECK(base_genus(corpus::cover_b()) == 2);
    CHECK(total_genus(corpus::cover_b()) == 4);
    CHECK(prym_rank(corpus::cover_b()) == 2);
    CHECK(prym_rank(corpus::cover_c()) == 1);
    CHECK(prym_rank(corpus::cover_no_ogod()) == 3);
    for (int n = 1; n <= 4; ++n) CHECK(prym_rank(corpus::cover_d(n)) == n);
}

TEST_CASE("validation rejects malformed covers with the offending element") {
    DoubleCover c;
    c.base.add_vertex("u");
    c.base.add_edge("e", "u", "u");
    c.lengths = {{"e", 1}};
    c.sigma = {{"e", 1}};
    // Even loop alone: switching-trivial free cover.
    CHECK_THROWS_AS(validate_cover(c), CoverError);

    DoubleCover d = corpus::cover_b();
    d.sigma["f1"] = 1;  // sign on an edge with a dilated endpoint
    CHECK_THROWS_AS(validate_cover(d), CoverError);

    DoubleCover m = corpus::cover_a();
    m.lengths.erase("e2");
    CHECK_THROWS_AS(validate_cover(m), CoverError);

    DoubleCover z = corpus::cover_a();
    z.lengths["e1"] = 0;
    CHECK_THROWS_AS(validate_cover(z), CoverError);

    DoubleCover disc;
    disc.base.add_vertex("a");
    disc.base.add_vertex("b");
    disc.base.add_edge("l", "a", "a");
    disc.lengths = {{"l", 1}};
    disc.sigma = {{"l", -1}};
    CHECK_THROWS_AS(validate_cover(disc), CoverError);

    DoubleCover de = corpus::cover_triangle_dilated();
    de.dilated_edges.insert("a");  // endpoint x is not dilated
    CHECK_THROWS_AS(validate_cover(de), CoverError);
}

TEST_CASE("normalize_sigma puts +1 on a spanning forest of the free subgraph") {
    DoubleCover c = corpus::cover_a();
    // e2 or e3 is the forest edge between u and w; after normalization one of
    // them must carry +1 while the product over the u-w pair is preserved.
    CHECK((c.sigma.at("e2") == 1 || c.sigma.at("e3") == 1));
    // Switching invariance: flipping all signs at u gives the same normalized cover.
    DoubleCover raw = corpus::cover_a();
    for (const auto& id : {"e2", "e3"}) raw.sigma[id] = -raw.sigma[id];
    raw = validate_cover(raw);
    CHECK(raw.sigma == c.sigma);
}

TEST_CASE("contract_cover: trivially covered free component stays undilated") {
    // Contract the even bridge of the dumbbell: the two ends merge into one
    // undilated vertex (the restricted cover over the bridge is trivial).
    DoubleCover c = corpus::cover_c();
    CoverContraction r = contract_cover(c, {"b"});
    CHECK(r.cover.base.vertices.size() == 1);
    CHECK(r.cover.dilated_vertices.empty());
    CHECK(r.cover.base.edges.size() == 2);
    CHECK(r.cover.sigma.at("e1") == -1);
    CHECK(r.cover.sigma.at("e2") == -1);
}

TEST_CASE("contract_cover: nontrivially covered component becomes dilated") {
    // Contracting an odd loop's vertex class (the loop itself) is nontrivial.
    DoubleCover c = corpus::cover_c();
    CoverContraction r = contract_cover(c, {"e1"});
    CHECK(r.cover.is_dilated_vertex(r.vertex_map.at("u")));
    CHECK_FALSE(r.cover.is_dilated_vertex(r.vertex_map.at("w")));
}

TEST_CASE("edge_free_reduction and free_resolution preserve the Prym rank") {
    std::mt19937_64 rng(61);
    GeneratorOptions opts;
    opts.max_edges = 8;
    for (int t = 0; t < 40; ++t) {
        DoubleCover c = random_cover(rng, opts);
        long h = prym_rank(c);
        DoubleCover ef = edge_free_reduction(c);
        CHECK(prym_rank(ef) == h);
        DoubleCover fr = free_resolution(c);
        CHECK(fr.dilated_vertices.empty());
        CHECK(fr.dilated_edges.empty());
        CHECK(prym_rank(fr) == h);
    }
}

TEST_CASE("free_resolution round trip reproduces a dilated vertex") {
    DoubleCover c = corpus::cover_b();
    DoubleCover fr = free_resolution(c);
    REQUIRE(fr.base.has_edge("loop_w"));
    CoverContraction back = contract_cover(fr, {"loop_w"});
    CHECK(back.cover.is_dilated_vertex(back.vertex_map.at("w")));
    CHECK(prym_rank(back.cover) == prym_rank(c));
}

TEST_CASE("homology maps: pushforward after pullback is twice the identity") {
    for (const auto& c : corpus::small_corpus()) {
        if (total_genus(c) == 0 || base_genus(c) == 0) continue;
        PushPull pp = homology_maps(c);
        IntMatrix comp = mul(pp.pushforward, pp.pullback);
        IntMatrix twice = IntMatrix::identity(comp.rows);
        for (auto& x : twice.a) x *= 2;
        CHECK(comp == twice);
    }
}

TEST_CASE("kernel of the pushforward has rank g-tilde minus g") {
    std::mt19937_64 rng(62);
    GeneratorOptions opts;
    opts.max_edges = 9;
    for (int t = 0; t < 40; ++t) {
        DoubleCover c = random_cover(rng, opts);
        PushPull pp = homology_maps(c);
        CHECK(static_cast<long>(int_kernel(pp.pushforward).size()) == prym_rank(c));
    }
}

TEST_CASE("pushforward of the single odd loop is multiplication by two") {
    PushPull pp = homology_maps(corpus::cover_e());
    REQUIRE(pp.pushforward.rows == 1);
    REQUIRE(pp.pushforward.cols == 1);
    Int entry = pp.pushforward.at(0, 0);
    CHECK((entry == 2 || entry == -2));
}
