#include "prym/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace prym {

void HalfEdgeGraph::add_vertex(const std::string& id) {
    if (has_vertex(id)) throw std::invalid_argument("duplicate vertex id: " + id);
    vertices.push_back(id);
}

void HalfEdgeGraph::add_edge(const std::string& id, const std::string& u, const std::string& v) {
    if (has_edge(id)) throw std::invalid_argument("duplicate edge id: " + id);
    if (!has_vertex(u)) throw std::invalid_argument("unknown vertex id: " + u);
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id: " + v);
    edges.push_back({id, u, v});
}

bool HalfEdgeGraph::has_vertex(const std::string& id) const {
    return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

bool HalfEdgeGraph::has_edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return true;
    return false;
}

const HalfEdgeGraph::Edge& HalfEdgeGraph::edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown edge id: " + id);
}

std::size_t HalfEdgeGraph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return i;
    throw std::invalid_argument("unknown vertex id: " + id);
}

std::size_t HalfEdgeGraph::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return i;
    throw std::invalid_argument("unknown edge id: " + id);
}

namespace {

// Union-find over vertex indices.
struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

Dsu components_dsu(const HalfEdgeGraph& g) {
    Dsu dsu(g.vertices.size());
    for (const auto& e : g.edges) dsu.unite(g.vertex_index(e.u), g.vertex_index(e.v));
    return dsu;
}

}  // namespace

std::vector<std::vector<std::string>> connected_components(const HalfEdgeGraph& g) {
    Dsu dsu = components_dsu(g);
    std::vector<std::vector<std::string>> out;
    std::map<std::size_t, std::size_t> root_to_slot;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        std::size_t r = dsu.find(i);
        auto it = root_to_slot.find(r);
        if (it == root_to_slot.end()) {
            root_to_slot[r] = out.size();
            out.push_back({g.vertices[i]});
        } else {
            out[it->second].push_back(g.vertices[i]);
        }
    }
    return out;
}

long genus(const HalfEdgeGraph& g) {
    if (connected_components(g).size() != 1) throw std::invalid_argument("genus: graph is disconnected");
    return static_cast<long>(g.edges.size()) - static_cast<long>(g.vertices.size()) + 1;
}

ContractionResult contract_edges(const HalfEdgeGraph& g, const EdgeSet& f) {
    for (const auto& id : f)
        if (!g.has_edge(id)) throw std::invalid_argument("contract_edges: unknown edge " + id);
    // Components of G[f] via union-find restricted to f.
    Dsu dsu(g.vertices.size());
    std::set<std::size_t> touched;
    for (const auto& e : g.edges) {
        if (!f.count(e.id)) continue;
        std::size_t a = g.vertex_index(e.u), b = g.vertex_index(e.v);
        dsu.unite(a, b);
        touched.insert(a);
        touched.insert(b);
    }
    ContractionResult res;
    // New name per class: untouched vertices keep their id; contracted
    // components are named by sorted members joined with '+'.
    std::map<std::size_t, std::vector<std::string>> members;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) members[dsu.find(i)].push_back(g.vertices[i]);
    std::map<std::size_t, std::string> root_name;
    for (auto& [root, mem] : members) {
        bool contracted = false;
        for (const auto& m : mem)
            if (touched.count(g.vertex_index(m))) contracted = true;
        if (!contracted || mem.size() == 1) {
            root_name[root] = mem.front();
        } else {
            std::vector<std::string> sorted = mem;
            std::sort(sorted.begin(), sorted.end());
            std::string name = sorted.front();
            for (std::size_t i = 1; i < sorted.size(); ++i) name += "+" + sorted[i];
            root_name[root] = name;
        }
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        res.vertex_map[g.vertices[i]] = root_name[dsu.find(i)];
    // New vertices in order of first appearance of their class.
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        std::size_t r = dsu.find(i);
        if (seen.insert(r).second) res.graph.add_vertex(root_name[r]);
    }
    for (const auto& e : g.edges) {
        if (f.count(e.id)) continue;
        res.graph.add_edge(e.id, res.vertex_map.at(e.u), res.vertex_map.at(e.v));
        res.edge_map[e.id] = e.id;
    }
    return res;
}

HalfEdgeGraph delete_edges(const HalfEdgeGraph& g, const EdgeSet& f) {
    HalfEdgeGraph out;
    out.vertices = g.vertices;
    for (const auto& e : g.edges)
        if (!f.count(e.id)) out.edges.push_back(e);
    return out;
}

HalfEdgeGraph induced_subgraph(const HalfEdgeGraph& g, const EdgeSet& f) {
    HalfEdgeGraph out;
    for (const auto& v : g.vertices) {
        bool incident = false;
        for (const auto& e : g.edges)
            if (f.count(e.id) && (e.u == v || e.v == v)) incident = true;
        if (incident) out.add_vertex(v);
    }
    for (const auto& e : g.edges)
        if (f.count(e.id)) out.edges.push_back(e);
    return out;
}

bool is_bridge(const HalfEdgeGraph& g, const std::string& e) {
    const auto& ed = g.edge(e);
    if (ed.u == ed.v) return false;
    std::size_t before = connected_components(g).size();
    std::size_t after = connected_components(delete_edges(g, {e})).size();
    return after > before;
}

IntMatrix boundary_matrix(const HalfEdgeGraph& g, const Orientation& o) {
    IntMatrix m(g.vertices.size(), g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const auto& e = g.edges[j];
        int sign = o.is_flipped(e.id) ? -1 : 1;
        m.at(g.vertex_index(e.v), j) += sign;  // head
        m.at(g.vertex_index(e.u), j) -= sign;  // tail
    }
    return m;
}

std::vector<Chain1> cycle_space_basis(const HalfEdgeGraph& g, const Orientation& o) {
    auto kernel = int_kernel(boundary_matrix(g, o));
    std::vector<Chain1> out;
    for (const auto& vec : kernel) {
        Chain1 c;
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (vec[j] != 0) c[g.edges[j].id] = vec[j];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Chain1> cycle_basis(const HalfEdgeGraph& g, const Orientation& o) {
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("cycle_basis: graph is disconnected");
    return cycle_space_basis(g, o);
}

EdgeSet spanning_forest(const HalfEdgeGraph& g) {
    Dsu dsu(g.vertices.size());
    EdgeSet tree;
    for (const auto& e : g.edges)
        if (dsu.unite(g.vertex_index(e.u), g.vertex_index(e.v))) tree.insert(e.id);
    return tree;
}

EdgeSet spanning_tree(const HalfEdgeGraph& g) {
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("spanning_tree: graph is disconnected");
    return spanning_forest(g);
}

}  // namespace prym
