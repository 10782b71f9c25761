#include "prym/cover.hpp"

#include <algorithm>

namespace prym {

bool DoubleCover::is_free_edge(const std::string& e) const {
    if (is_dilated_edge(e)) return false;
    const auto& ed = base.edge(e);
    return !is_dilated_vertex(ed.u) && !is_dilated_vertex(ed.v);
}

int DoubleCover::edge_sign(const std::string& e) const {
    if (is_dilated_edge(e)) throw CoverError("edge_sign: dilated edge " + e);
    if (is_free_edge(e)) return sigma.at(e);
    return 1;
}

std::vector<std::string> DoubleCover::undilated_edges() const {
    std::vector<std::string> out;
    for (const auto& e : base.edges)
        if (!is_dilated_edge(e.id)) out.push_back(e.id);
    return out;
}

void normalize_sigma(DoubleCover& c) {
    // Spanning forest of the free subgraph, then switch so forest signs are +1.
    HalfEdgeGraph free_sub;
    for (const auto& v : c.base.vertices)
        if (!c.is_dilated_vertex(v)) free_sub.add_vertex(v);
    for (const auto& e : c.base.edges)
        if (c.is_free_edge(e.id) && e.u != e.v) free_sub.add_edge(e.id, e.u, e.v);
    EdgeSet forest = spanning_forest(free_sub);

    // Switching signs s(v), propagated from forest roots.
    std::map<std::string, int> s;
    for (const auto& v : free_sub.vertices) s[v] = 0;  // 0 = unassigned
    for (const auto& v : free_sub.vertices) {
        if (s[v] != 0) continue;
        s[v] = 1;
        std::vector<std::string> stack{v};
        while (!stack.empty()) {
            std::string x = stack.back();
            stack.pop_back();
            for (const auto& e : free_sub.edges) {
                if (!forest.count(e.id)) continue;
                std::string y;
                if (e.u == x) y = e.v;
                else if (e.v == x) y = e.u;
                else continue;
                if (s[y] != 0) continue;
                s[y] = s[x] * c.sigma.at(e.id);
                stack.push_back(y);
            }
        }
    }
    for (auto& [id, sign] : c.sigma) {
        const auto& ed = c.base.edge(id);
        sign = s.at(ed.u) * sign * s.at(ed.v);
    }
}

DoubleCover validate_cover(DoubleCover c) {
    {
        std::set<std::string> vids(c.base.vertices.begin(), c.base.vertices.end());
        if (vids.size() != c.base.vertices.size()) throw CoverError("duplicate vertex ids");
        std::set<std::string> eids;
        for (const auto& e : c.base.edges)
            if (!eids.insert(e.id).second) throw CoverError("duplicate edge id: " + e.id);
    }
    if (c.base.vertices.empty()) throw CoverError("empty base graph");
    if (connected_components(c.base).size() != 1) throw CoverError("base graph is disconnected");
    for (const auto& v : c.dilated_vertices)
        if (!c.base.has_vertex(v)) throw CoverError("dilated vertex not in base: " + v);
    for (const auto& id : c.dilated_edges) {
        if (!c.base.has_edge(id)) throw CoverError("dilated edge not in base: " + id);
        const auto& e = c.base.edge(id);
        if (!c.is_dilated_vertex(e.u) || !c.is_dilated_vertex(e.v))
            throw CoverError("dilated edge with undilated endpoint: " + id);
    }
    for (const auto& e : c.base.edges) {
        auto it = c.lengths.find(e.id);
        if (it == c.lengths.end()) throw CoverError("missing length for edge: " + e.id);
        if (it->second <= 0) throw CoverError("non-positive length for edge: " + e.id);
        bool free = c.is_free_edge(e.id);
        bool has_sigma = c.sigma.count(e.id) != 0;
        if (free && !has_sigma) throw CoverError("missing sign on free edge: " + e.id);
        if (!free && has_sigma) throw CoverError("sign given on non-free edge: " + e.id);
        if (has_sigma && c.sigma.at(e.id) != 1 && c.sigma.at(e.id) != -1)
            throw CoverError("sign must be ±1 on edge: " + e.id);
    }
    for (const auto& [id, len] : c.lengths)
        if (!c.base.has_edge(id)) throw CoverError("length for unknown edge: " + id);
    normalize_sigma(c);
    if (c.dilated_vertices.empty()) {
        bool nontrivial = false;
        for (const auto& [id, sign] : c.sigma)
            if (sign == -1) nontrivial = true;
        if (!nontrivial) throw CoverError("trivial cover: dilation empty and σ switching-trivial");
    }
    return c;
}

TotalGraph build_total_graph(const DoubleCover& c) {
    TotalGraph t;
    for (const auto& v : c.base.vertices) {
        if (c.is_dilated_vertex(v)) {
            t.graph.add_vertex(lift_dilated(v));
            t.vertex_image[lift_dilated(v)] = v;
        } else {
            t.graph.add_vertex(lift_plus(v));
            t.graph.add_vertex(lift_minus(v));
            t.vertex_image[lift_plus(v)] = v;
            t.vertex_image[lift_minus(v)] = v;
        }
    }
    for (const auto& e : c.base.edges) {
        const Rat& len = c.lengths.at(e.id);
        if (c.is_dilated_edge(e.id)) {
            std::string id = lift_dilated(e.id);
            t.graph.add_edge(id, lift_dilated(e.u), lift_dilated(e.v));
            t.lengths[id] = len / 2;
            t.edge_image[id] = e.id;
            continue;
        }
        bool du = c.is_dilated_vertex(e.u), dv = c.is_dilated_vertex(e.v);
        std::string tail_p = du ? lift_dilated(e.u) : lift_plus(e.u);
        std::string tail_m = du ? lift_dilated(e.u) : lift_minus(e.u);
        std::string head_p, head_m;
        if (dv) {
            head_p = head_m = lift_dilated(e.v);
        } else if (du) {
            head_p = lift_plus(e.v);
            head_m = lift_minus(e.v);
        } else {
            int sg = c.sigma.at(e.id);
            head_p = sg == 1 ? lift_plus(e.v) : lift_minus(e.v);
            head_m = sg == 1 ? lift_minus(e.v) : lift_plus(e.v);
        }
        t.graph.add_edge(lift_plus(e.id), tail_p, head_p);
        t.graph.add_edge(lift_minus(e.id), tail_m, head_m);
        t.lengths[lift_plus(e.id)] = len;
        t.lengths[lift_minus(e.id)] = len;
        t.edge_image[lift_plus(e.id)] = e.id;
        t.edge_image[lift_minus(e.id)] = e.id;
    }
    return t;
}

namespace {

DoubleCover restricted_to(const DoubleCover& c, const HalfEdgeGraph& sub) {
    DoubleCover r;
    r.base = sub;
    for (const auto& v : sub.vertices)
        if (c.is_dilated_vertex(v)) r.dilated_vertices.insert(v);
    for (const auto& e : sub.edges) {
        r.lengths[e.id] = c.lengths.at(e.id);
        if (c.is_dilated_edge(e.id)) r.dilated_edges.insert(e.id);
        else if (c.is_free_edge(e.id)) r.sigma[e.id] = c.sigma.at(e.id);
    }
    return r;
}

}  // namespace

DoubleCover restrict_delete(const DoubleCover& c, const EdgeSet& f) {
    return restricted_to(c, delete_edges(c.base, f));
}

DoubleCover restrict_induced(const DoubleCover& c, const EdgeSet& f) {
    return restricted_to(c, induced_subgraph(c.base, f));
}

CoverContraction contract_cover(const DoubleCover& c, const EdgeSet& f) {
    ContractionResult q = contract_edges(c.base, f);

    // Group base vertices by image.
    std::map<std::string, std::vector<std::string>> classes;
    for (const auto& v : c.base.vertices) classes[q.vertex_map.at(v)].push_back(v);

    // Per class: dilation status, and for trivially-covered contracted
    // components a trivializing switching s (σ(e) = s(u)s(v) on class edges).
    std::map<std::string, int> s;  // switching applied before contraction
    for (const auto& v : c.base.vertices) s[v] = 1;
    std::set<std::string> new_dilated;
    for (const auto& [img, members] : classes) {
        bool has_dilated = false;
        for (const auto& v : members)
            if (c.is_dilated_vertex(v)) has_dilated = true;
        if (has_dilated) {
            new_dilated.insert(img);
            continue;
        }
        // Edges of G[f] inside this class (all free, since no dilated vertex).
        std::vector<const HalfEdgeGraph::Edge*> inner;
        std::set<std::string> member_set(members.begin(), members.end());
        for (const auto& e : c.base.edges)
            if (f.count(e.id) && member_set.count(e.u)) inner.push_back(&e);
        if (inner.empty()) continue;  // vertex not actually contracted
        // Propagate s over a spanning tree of the class; detect nontriviality.
        std::map<std::string, int> local;
        for (const auto& v : members) local[v] = 0;
        local[members.front()] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto* e : inner) {
                if (e->u == e->v) continue;
                int su = local[e->u], sv = local[e->v];
                int sg = c.sigma.at(e->id);
                if (su != 0 && sv == 0) {
                    local[e->v] = su * sg;
                    changed = true;
                } else if (sv != 0 && su == 0) {
                    local[e->u] = sv * sg;
                    changed = true;
                }
            }
        }
        bool trivial = true;
        for (const auto* e : inner)
            if (local[e->u] * c.sigma.at(e->id) * local[e->v] != 1) trivial = false;
        if (!trivial) {
            new_dilated.insert(img);
        } else {
            for (const auto& v : members) s[v] = local[v];
        }
    }

    CoverContraction out;
    out.vertex_map = q.vertex_map;
    out.edge_map = q.edge_map;
    DoubleCover& r = out.cover;
    r.base = q.graph;
    for (const auto& v : r.base.vertices) {
        if (new_dilated.count(v)) r.dilated_vertices.insert(v);
    }
    for (const auto& e : r.base.edges) {
        r.lengths[e.id] = c.lengths.at(e.id);
        if (c.is_dilated_edge(e.id)) {
            r.dilated_edges.insert(e.id);
            continue;
        }
        bool free_now = !r.is_dilated_vertex(e.u) && !r.is_dilated_vertex(e.v);
        if (!free_now) continue;  // implicit +1
        const auto& orig = c.base.edge(e.id);
        int sg = c.edge_sign(e.id);  // σ or implicit +1 in the original cover
        r.sigma[e.id] = s.at(orig.u) * sg * s.at(orig.v);
    }
    normalize_sigma(r);
    return out;
}

DoubleCover edge_free_reduction(const DoubleCover& c) {
    if (c.dilated_edges.empty()) return c;
    return contract_cover(c, c.dilated_edges).cover;
}

DoubleCover free_resolution(const DoubleCover& c) {
    DoubleCover r = edge_free_reduction(c);
    std::vector<std::string> dil(r.dilated_vertices.begin(), r.dilated_vertices.end());
    for (const auto& v : dil) {
        r.dilated_vertices.erase(v);
        std::string id = "loop_" + v;
        while (r.base.has_edge(id)) id += "'";
        r.base.add_edge(id, v, v);
        r.lengths[id] = 1;
        r.sigma[id] = -1;
        // Formerly dilated-incident edges become free with the '+'-to-'+'
        // reattachment, i.e. explicit sign +1.
        for (const auto& e : r.base.edges) {
            if (e.id == id || r.sigma.count(e.id)) continue;
            if (r.is_free_edge(e.id)) r.sigma[e.id] = 1;
        }
    }
    normalize_sigma(r);
    return r;
}

long base_genus(const DoubleCover& c) { return genus(c.base); }

long total_genus(const DoubleCover& c) { return genus(build_total_graph(c).graph); }

long prym_rank(const DoubleCover& c) { return total_genus(c) - base_genus(c); }

namespace {

std::vector<Rat> chain_to_vector(const HalfEdgeGraph& g, const Chain1& ch) {
    std::vector<Rat> v(g.edges.size(), Rat(0));
    for (const auto& [id, coef] : ch) v[g.edge_index(id)] = Rat(coef);
    return v;
}

// Expresses the chain in the given cycle basis; entries must come out integral.
std::vector<Int> in_basis(const HalfEdgeGraph& g, const std::vector<Chain1>& basis,
                          const Chain1& ch, const char* what) {
    RatMatrix m(g.edges.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto col = chain_to_vector(g, basis[j]);
        for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
    }
    std::vector<Rat> rhs = chain_to_vector(g, ch), x;
    if (!solve_rational(m, rhs, x)) throw std::logic_error(std::string(what) + ": chain not in cycle space");
    std::vector<Int> out;
    out.reserve(x.size());
    for (const auto& r : x) {
        if (r.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral coordinates");
        out.push_back(r.get_num());
    }
    return out;
}

}  // namespace

PushPull homology_maps(const DoubleCover& c) {
    if (connected_components(c.base).size() != 1)
        throw CoverError("homology_maps: base graph is disconnected");
    TotalGraph t = build_total_graph(c);
    if (connected_components(t.graph).size() != 1)
        throw CoverError("homology_maps: total graph is disconnected (trivial free cover)");
    PushPull pp;
    Orientation o;
    pp.base_cycles = cycle_basis(c.base, o);
    pp.total_cycles = cycle_basis(t.graph, o);
    std::size_t g = pp.base_cycles.size(), gt = pp.total_cycles.size();
    pp.pushforward = IntMatrix(g, gt);
    for (std::size_t j = 0; j < gt; ++j) {
        Chain1 pushed;
        for (const auto& [id, coef] : pp.total_cycles[j]) pushed[t.edge_image.at(id)] += coef;
        std::erase_if(pushed, [](const auto& kv) { return kv.second == 0; });
        auto coords = in_basis(c.base, pp.base_cycles, pushed, "pushforward");
        for (std::size_t i = 0; i < g; ++i) pp.pushforward.at(i, j) = coords[i];
    }
    pp.pullback = IntMatrix(gt, g);
    for (std::size_t j = 0; j < g; ++j) {
        Chain1 pulled;
        for (const auto& [id, coef] : pp.base_cycles[j]) {
            if (c.is_dilated_edge(id)) {
                pulled[lift_dilated(id)] += 2 * coef;
            } else {
                pulled[lift_plus(id)] += coef;
                pulled[lift_minus(id)] += coef;
            }
        }
        auto coords = in_basis(t.graph, pp.total_cycles, pulled, "pullback");
        for (std::size_t i = 0; i < gt; ++i) pp.pullback.at(i, j) = coords[i];
    }
    // Degree-two norm composition: π_* ∘ π* = 2·id on H1(Γ).
    IntMatrix comp = mul(pp.pushforward, pp.pullback);
    IntMatrix twice = IntMatrix::identity(g);
    for (auto& x : twice.a) x *= 2;
    if (comp != twice) throw std::logic_error("homology_maps: pushforward∘pullback != 2·id");
    return pp;
}

}  // namespace prym
