#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "corpus.hpp"
#include "prym/matroid.hpp"

using namespace prym;

namespace {

std::vector<EdgeSet> all_subsets(const std::vector<std::string>& ground) {
    std::vector<EdgeSet> out;
    std::size_t n = ground.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        EdgeSet f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) f.insert(ground[i]);
        out.push_back(std::move(f));
    }
    return out;
}

// Checks the hereditary and exchange axioms for an independence oracle,
// exhaustively over the ground set.
void check_matroid_axioms(const std::vector<std::string>& ground,
                          const std::function<bool(const EdgeSet&)>& indep) {
    auto subsets = all_subsets(ground);
    CHECK(indep(EdgeSet{}));
    for (const auto& f : subsets) {
        if (!indep(f)) continue;
        for (const auto& e : f) {
            EdgeSet smaller = f;
            smaller.erase(e);
            CHECK(indep(smaller));
        }
    }
    for (const auto& a : subsets) {
        if (!indep(a)) continue;
        for (const auto& b : subsets) {
            if (!indep(b) || b.size() <= a.size()) continue;
            bool exchanged = false;
            for (const auto& e : b) {
                if (a.count(e)) continue;
                EdgeSet bigger = a;
                bigger.insert(e);
                if (indep(bigger)) exchanged = true;
            }
            CHECK(exchanged);
        }
    }
}

EdgeSet complement(const std::vector<std::string>& ground, const EdgeSet& f) {
    EdgeSet out;
    for (const auto& e : ground)
        if (!f.count(e)) out.insert(e);
    return out;
}

long matroid_rank(const std::vector<std::string>& ground,
                  const std::function<bool(const EdgeSet&)>& indep) {
    long r = 0;
    for (const auto& f : all_subsets(ground))
        if (indep(f)) r = std::max(r, static_cast<long>(f.size()));
    return r;
}

}  // namespace

TEST_CASE("both independence oracles satisfy the matroid axioms on the corpus") {
    for (const auto& c : corpus::small_corpus()) {
        SignedMatroidView v(c);
        REQUIRE(v.ground().size() <= 6);
        check_matroid_axioms(v.ground(), [&](const EdgeSet& f) { return v.is_independent_dual(f); });
        check_matroid_axioms(v.ground(), [&](const EdgeSet& f) { return v.is_independent(f); });
    }
}

TEST_CASE("duality: bases of one side are complements of bases of the other") {
    for (const auto& c : corpus::small_corpus()) {
        SignedMatroidView v(c);
        long rank_dual = v.rank();
        long rank_primal =
            matroid_rank(v.ground(), [&](const EdgeSet& f) { return v.is_independent(f); });
        CHECK(rank_dual + rank_primal == static_cast<long>(v.ground().size()));
        for (const auto& f : all_subsets(v.ground())) {
            bool basis_dual =
                static_cast<long>(f.size()) == rank_dual && v.is_independent_dual(f);
            EdgeSet comp = complement(v.ground(), f);
            bool basis_primal =
                static_cast<long>(comp.size()) == rank_primal && v.is_independent(comp);
            CHECK(basis_dual == basis_primal);
        }
    }
}

TEST_CASE("rank law on the corpus") {
    for (const auto& c : corpus::small_corpus()) {
        SignedMatroidView v(c);
        CHECK(v.rank() == prym_rank(c));
    }
}

TEST_CASE("golden ogods of CoverA and CoverB") {
    SignedMatroidView a(corpus::cover_a());
    // Every 2-subset is an ogod; only the even cycle {e2,e3} has index 2.
    CHECK(a.ogods().size() == 6);
    std::map<EdgeSet, long> idx_a;
    for (const auto& og : a.ogods()) idx_a[og.edges] = og.index;
    CHECK(idx_a.at(EdgeSet{"e3", "e4"}) == 1);
    CHECK(idx_a.at(EdgeSet{"e1", "e2"}) == 1);
    CHECK(idx_a.at(EdgeSet{"e2", "e3"}) == 2);

    SignedMatroidView b(corpus::cover_b());
    bool has_f2f3 = false;
    for (const auto& og : b.ogods())
        if (og.edges == EdgeSet{"f2", "f3"}) has_f2f3 = true;
    CHECK(has_f2f3);
    CHECK(b.dilation_index() == 1);
}

TEST_CASE("CoverD(n) is the free matroid U_nn with index |F|+1") {
    for (int n = 1; n <= 5; ++n) {
        SignedMatroidView v(corpus::cover_d(n));
        CHECK(v.rank() == n);
        for (const auto& f : all_subsets(v.ground())) {
            CHECK(v.is_independent_dual(f));
            CHECK(v.index(f) == static_cast<long>(f.size()) + 1);
        }
        REQUIRE(v.ogods().size() == 1);
        CHECK(v.ogods()[0].index == n + 1);
        CHECK(v.dilation_index() == n + 1);
    }
}

TEST_CASE("CoverE has rank zero") {
    SignedMatroidView v(corpus::cover_e());
    CHECK(v.rank() == 0);
    CHECK_FALSE(v.is_independent_dual({"e"}));
}

TEST_CASE("index function: monotone, bounded, continuous under basis exchange") {
    for (const auto& c : corpus::small_corpus()) {
        SignedMatroidView v(c);
        long d = v.dilation_index();
        auto subsets = all_subsets(v.ground());
        for (const auto& f : subsets) {
            if (!v.is_independent_dual(f)) continue;
            long ind = v.index(f);
            CHECK(ind >= 1);
            CHECK(ind <= v.rank() + 1);
            for (const auto& e : f) {
                EdgeSet smaller = f;
                smaller.erase(e);
                CHECK(v.index(smaller) <= ind);
            }
        }
        for (const auto& og : v.ogods()) CHECK(og.index >= d);
        for (const auto& f1 : v.ogods())
            for (const auto& f2 : v.ogods()) {
                EdgeSet diff;
                for (const auto& e : f1.edges)
                    if (!f2.edges.count(e)) diff.insert(e);
                if (diff.size() == 1)
                    CHECK(std::abs(f1.index - f2.index) <= 1);
            }
    }
}

TEST_CASE("M-circuit enumeration and classification on the golden covers") {
    SignedMatroidView a(corpus::cover_a());
    std::map<EdgeSet, std::string> types_a;
    for (const auto& c : a.circuits_M()) types_a[c.edges] = c.type_tag;
    REQUIRE(types_a.size() == 4);
    // Two odd loops joined by a bridge.
    CHECK(types_a.at(EdgeSet{"e1", "e2", "e4"}) == "II");
    CHECK(types_a.at(EdgeSet{"e1", "e3", "e4"}) == "II");
    // Odd loop plus the odd cycle {e2,e3} through the same vertex.
    CHECK(types_a.at(EdgeSet{"e1", "e2", "e3"}) == "III");
    CHECK(types_a.at(EdgeSet{"e2", "e3", "e4"}) == "III");

    SignedMatroidView b(corpus::cover_b());
    std::map<EdgeSet, std::string> types_b;
    for (const auto& c : b.circuits_M()) types_b[c.edges] = c.type_tag;
    // Cycle through the dilated vertex w.
    CHECK(types_b.at(EdgeSet{"f1", "f2"}) == "V");
    // Path from w to itself through the odd loop.
    CHECK(types_b.at(EdgeSet{"f1", "f3"}) == "IV");
    CHECK(types_b.at(EdgeSet{"f2", "f3"}) == "IV");

    SignedMatroidView d(corpus::cover_d(2));
    for (const auto& c : d.circuits_M()) {
        CHECK(c.edges.size() == 1);
        CHECK(c.type_tag == "VI");
    }

    // Every corpus circuit gets exactly one of the six tags.
    for (const auto& c : corpus::small_corpus())
        for (const auto& circ : SignedMatroidView(c).circuits_M()) {
            static const std::set<std::string> tags{"I", "II", "III", "IV", "V", "VI"};
            CHECK(tags.count(circ.type_tag) == 1);
        }
}

TEST_CASE("M-circuits are minimal dependent sets") {
    for (const auto& c : corpus::small_corpus()) {
        SignedMatroidView v(c);
        for (const auto& circ : v.circuits_M()) {
            CHECK_FALSE(v.is_independent(circ.edges));
            for (const auto& e : circ.edges) {
                EdgeSet smaller = circ.edges;
                smaller.erase(e);
                CHECK(v.is_independent(smaller));
            }
        }
    }
}

TEST_CASE("small dual circuits carry multiplicities 2^(ind-1)") {
    SignedMatroidView c(corpus::cover_c());
    DualSmallCircuits sm = c.circuits_dual_small();
    CHECK(sm.one_circuits.empty());
    // Rank 1 on three edges: every pair is a 2-circuit.
    REQUIRE(sm.two_circuits.size() == 3);
    CHECK(sm.two_circuits[0].f1 == "b");
    CHECK(sm.two_circuits[0].f2 == "e1");
    CHECK(sm.two_circuits[0].mult1 == 2);  // the bridge has index 2
    CHECK(sm.two_circuits[0].mult2 == 1);
    CHECK(sm.two_circuits[2].f1 == "e1");
    CHECK(sm.two_circuits[2].f2 == "e2");
    CHECK(sm.two_circuits[2].mult1 == 1);
    CHECK(sm.two_circuits[2].mult2 == 1);

    // A pendant free tree edge is a 1-circuit.
    DoubleCover pend = corpus::cover_a();
    pend.base.add_vertex("p");
    pend.base.add_edge("t", "u", "p");
    pend.lengths["t"] = 1;
    pend.sigma["t"] = 1;
    pend = validate_cover(pend);
    DualSmallCircuits sp = SignedMatroidView(pend).circuits_dual_small();
    CHECK(sp.one_circuits == std::vector<std::string>{"t"});
}

TEST_CASE("simplify leaves CoverA unchanged") {
    SimplifyResult s = simplify(corpus::cover_a());
    CHECK(s.transcript.empty());
    CHECK(s.cover.base.edges.size() == 4);
    for (const auto& [from, to] : s.edge_map) CHECK(from == to);
}

TEST_CASE("simplify contracts the CoverC dumbbell into one loop") {
    SimplifyResult s = simplify(corpus::cover_c(Rat(2), Rat(3), Rat(5)));
    // Bridge b (multiplicity 2) merges into a loop with weight factor 4; the
    // two odd loops then merge. Final length a + 4b + c.
    CHECK(s.cover.base.edges.size() == 1);
    CHECK(s.cover.base.vertices.size() == 1);
    CHECK(s.cover.dilated_vertices.size() == 1);
    Rat total = Rat(2) + 4 * Rat(3) + Rat(5);
    CHECK(s.cover.lengths.begin()->second == total);
    CHECK_FALSE(s.transcript.empty());
}

TEST_CASE("simplify contracts pendant free trees as 1-circuits") {
    DoubleCover pend = corpus::cover_c();
    pend.base.add_vertex("p");
    pend.base.add_edge("t", "u", "p");
    pend.lengths["t"] = 7;
    pend.sigma["t"] = 1;
    pend = validate_cover(pend);
    SimplifyResult s = simplify(pend);
    CHECK(s.edge_map.at("t") == "");
    CHECK(s.cover.base.edges.size() == 1);
}

TEST_CASE("simplified covers are simple and keep rank and dilation index") {
    for (const auto& c : corpus::small_corpus()) {
        SignedMatroidView v(c);
        SimplifyResult s = simplify(c);
        SignedMatroidView sv(s.cover);
        DualSmallCircuits sm = sv.circuits_dual_small();
        CHECK(sm.one_circuits.empty());
        CHECK(sm.two_circuits.empty());
        CHECK(sv.rank() == v.rank());
        CHECK(sv.dilation_index() == v.dilation_index());
        // Idempotence.
        CHECK(simplify(s.cover).transcript.empty());
    }
}
