#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prym/graph.hpp"

namespace prym {

struct CoverError : std::runtime_error {
    explicit CoverError(const std::string& what) : std::runtime_error(what) {}
};

// A harmonic double cover presented by base-side data: the base graph, the
// dilation subgraph (dilated vertices and edges), and the sign assignment σ
// on free edges (both endpoints undilated). Undilated edges with at least one
// dilated endpoint carry the implicit sign +1; dilated edges carry none.
struct DoubleCover {
    HalfEdgeGraph base;
    std::map<std::string, Rat> lengths;   // every base edge -> positive length
    std::set<std::string> dilated_vertices;
    std::set<std::string> dilated_edges;
    std::map<std::string, int> sigma;     // free edges only, values ±1

    bool is_dilated_vertex(const std::string& v) const { return dilated_vertices.count(v) != 0; }
    bool is_dilated_edge(const std::string& e) const { return dilated_edges.count(e) != 0; }
    bool is_undilated_edge(const std::string& e) const { return !is_dilated_edge(e); }
    bool is_free_edge(const std::string& e) const;
    // Sign of an undilated edge: σ(e) for free edges, +1 with a dilated end.
    int edge_sign(const std::string& e) const;
    // Undilated edge ids in base input order.
    std::vector<std::string> undilated_edges() const;
};

// Switching normalization: σ is set to +1 on a spanning forest of the free
// subgraph (undilated vertices + free edges), by a deterministic switching.
void normalize_sigma(DoubleCover& c);

// Full validation (connected base, dilation forms a subgraph, σ exactly on
// free edges, positive lengths, nontrivial cover) + σ normalization.
// Throws CoverError naming the offending element.
DoubleCover validate_cover(DoubleCover c);

// Upstairs labels.
inline std::string lift_plus(const std::string& id) { return id + "+"; }
inline std::string lift_minus(const std::string& id) { return id + "-"; }
inline std::string lift_dilated(const std::string& id) { return id + "~"; }

struct TotalGraph {
    HalfEdgeGraph graph;
    std::map<std::string, Rat> lengths;  // ℓ(e) on lifts of undilated e, ℓ(e)/2 on dilated
    // Downstairs image of each upstairs vertex / edge.
    std::map<std::string, std::string> vertex_image;
    std::map<std::string, std::string> edge_image;
};

// Builds the total graph Γ̃ with labels v+/v-/v~ and e+/e-/e~, oriented
// compatibly with the base's canonical orientation.
TotalGraph build_total_graph(const DoubleCover& c);

// Restriction over G∖f (all vertices kept) or over G[f] (isolated vertices
// dropped). Results may be disconnected or trivial on components; they are
// returned unvalidated.
DoubleCover restrict_delete(const DoubleCover& c, const EdgeSet& f);
DoubleCover restrict_induced(const DoubleCover& c, const EdgeSet& f);

// Contracts every component H of G[f]; the image vertex is dilated iff H
// contains a dilated vertex or the restricted cover over H is free and
// nontrivial. σ on surviving edges is recomputed via a consistent choice of
// preimage labels and re-normalized. Returns the cover plus the quotient maps.
struct CoverContraction {
    DoubleCover cover;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;  // surviving edges only
};
CoverContraction contract_cover(const DoubleCover& c, const EdgeSet& f);

// Contracts all dilated edges (each dilation component becomes one vertex).
DoubleCover edge_free_reduction(const DoubleCover& c);

// Replaces each dilated vertex of an edge-free cover by an undilated vertex
// carrying a fresh odd loop (id "loop_<v>", length 1); formerly implicit
// signs become explicit +1. Applies edge_free_reduction first if needed.
DoubleCover free_resolution(const DoubleCover& c);

struct PushPull {
    std::vector<Chain1> base_cycles;   // basis of H1(Γ)
    std::vector<Chain1> total_cycles;  // basis of H1(Γ̃)
    IntMatrix pushforward;             // g x g̃: π_* in these bases
    IntMatrix pullback;                // g̃ x g: π* in these bases
};

// Homology maps in the canonical cycle bases; requires base and total graph
// connected (trivial free covers are rejected upstream).
PushPull homology_maps(const DoubleCover& c);

long base_genus(const DoubleCover& c);
long total_genus(const DoubleCover& c);
// h = g̃ − g, the Prym dimension and the rank of M*.
long prym_rank(const DoubleCover& c);

}  // namespace prym
