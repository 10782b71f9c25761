#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "prym/matrix.hpp"

namespace prym {

using EdgeSet = std::set<std::string>;

// Integer 1-chain: finitely supported edge-id -> coefficient map, relative to
// the host graph's stored orientation.
using Chain1 = std::map<std::string, Int>;

// Half-edge multigraph with opaque string ids. Every edge consists of the two
// half-edges (e,0) and (e,1); the involution swaps them and the root map sends
// (e,0) -> u, (e,1) -> v. Loops (u == v) and multiedges are permitted. The
// stored canonical orientation directs each edge from its first-listed
// endpoint (tail = root of half-edge 0) to its second (head = root of
// half-edge 1).
struct HalfEdgeGraph {
    struct Edge {
        std::string id;
        std::string u;  // tail (root of half-edge 0)
        std::string v;  // head (root of half-edge 1)
    };

    std::vector<std::string> vertices;  // input order, preserved
    std::vector<Edge> edges;            // input order, preserved

    void add_vertex(const std::string& id);
    void add_edge(const std::string& id, const std::string& u, const std::string& v);

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    const Edge& edge(const std::string& id) const;
    std::size_t vertex_index(const std::string& id) const;
    std::size_t edge_index(const std::string& id) const;
};

// Orientation as half-edge signs: o(e,1) = +1 (head), o(e,0) = -1 (tail) for
// the canonical orientation; a reorientation flips both signs of an edge.
struct Orientation {
    // flipped[e] = true means edge e is traversed head -> tail.
    std::map<std::string, bool> flipped;
    bool is_flipped(const std::string& e) const {
        auto it = flipped.find(e);
        return it != flipped.end() && it->second;
    }
};

// |E| - |V| + 1; requires a connected graph.
long genus(const HalfEdgeGraph& g);

// Partition of the vertex set by reachability; isolated vertices form their
// own components. Deterministic: components ordered by first vertex, vertices
// in input order.
std::vector<std::vector<std::string>> connected_components(const HalfEdgeGraph& g);

struct ContractionResult {
    HalfEdgeGraph graph;
    std::map<std::string, std::string> vertex_map;  // old vertex -> new vertex
    std::map<std::string, std::string> edge_map;    // surviving old edge -> new edge id
};

// Contracts each connected component of G[f] to one vertex, named by the
// sorted list of its members joined with '+'. Surviving edges keep their ids.
ContractionResult contract_edges(const HalfEdgeGraph& g, const EdgeSet& f);

// Deletion keeps all vertices; the induced subgraph G[f] keeps exactly the
// endpoints of f (isolated vertices dropped).
HalfEdgeGraph delete_edges(const HalfEdgeGraph& g, const EdgeSet& f);
HalfEdgeGraph induced_subgraph(const HalfEdgeGraph& g, const EdgeSet& f);

bool is_bridge(const HalfEdgeGraph& g, const std::string& e);

// Vertices x edges incidence: column of edge e gets +1 at its head and -1 at
// its tail (after applying the orientation); loop columns are zero.
IntMatrix boundary_matrix(const HalfEdgeGraph& g, const Orientation& o);

// Integer basis of ker(boundary_matrix); size = genus for connected graphs.
std::vector<Chain1> cycle_basis(const HalfEdgeGraph& g, const Orientation& o);

// Same, without the connectivity requirement (size = |E| - |V| + #components).
std::vector<Chain1> cycle_space_basis(const HalfEdgeGraph& g, const Orientation& o);

EdgeSet spanning_tree(const HalfEdgeGraph& g);

// Spanning forest (one tree per component); no connectivity requirement.
EdgeSet spanning_forest(const HalfEdgeGraph& g);

}  // namespace prym
