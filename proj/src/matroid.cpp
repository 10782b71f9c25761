#include "prym/matroid.hpp"

#include <algorithm>

namespace prym {

std::pair<int, int> tau_of(const DoubleCover& c, const Orientation& o, const std::string& e) {
    int sg = c.edge_sign(e);
    bool flipped = o.is_flipped(e);
    int tail = flipped ? sg : -1;
    int head = flipped ? -1 : sg;
    return {tail, head};
}

IntMatrix tau_matrix(const DoubleCover& c, const Orientation& o,
                     const std::vector<std::string>& ground,
                     const std::vector<std::string>& undilated_vertices) {
    IntMatrix m(undilated_vertices.size(), ground.size());
    std::map<std::string, std::size_t> vrow;
    for (std::size_t i = 0; i < undilated_vertices.size(); ++i) vrow[undilated_vertices[i]] = i;
    for (std::size_t j = 0; j < ground.size(); ++j) {
        const auto& ed = c.base.edge(ground[j]);
        auto [tail, head] = tau_of(c, o, ground[j]);
        if (!c.is_dilated_vertex(ed.u)) m.at(vrow.at(ed.u), j) += tail;
        if (!c.is_dilated_vertex(ed.v)) m.at(vrow.at(ed.v), j) += head;
    }
    return m;
}

SignedMatroidView::SignedMatroidView(DoubleCover cover, Orientation orientation)
    : cover_(std::move(cover)), orientation_(std::move(orientation)) {
    total_ = build_total_graph(cover_);
    ground_ = cover_.undilated_edges();
    for (const auto& v : cover_.base.vertices)
        if (!cover_.is_dilated_vertex(v)) undilated_vertices_.push_back(v);
    tau_ = prym::tau_matrix(cover_, orientation_, ground_, undilated_vertices_);
}

std::size_t SignedMatroidView::ground_index(const std::string& e) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == e) return i;
    throw std::invalid_argument("not a ground-set edge: " + e);
}

bool SignedMatroidView::is_independent_dual(const EdgeSet& f) const {
    for (const auto& e : f)
        if (cover_.is_dilated_edge(e)) throw std::invalid_argument("dual oracle: dilated edge " + e);
    // Remove f downstairs and its preimage upstairs; independent iff each
    // downstairs component has a connected preimage.
    HalfEdgeGraph down = delete_edges(cover_.base, f);
    EdgeSet lifts;
    for (const auto& e : f) {
        lifts.insert(lift_plus(e));
        lifts.insert(lift_minus(e));
    }
    HalfEdgeGraph up = delete_edges(total_.graph, lifts);
    auto down_comp = connected_components(down);
    auto up_comp = connected_components(up);
    std::map<std::string, std::size_t> down_slot;
    for (std::size_t i = 0; i < down_comp.size(); ++i)
        for (const auto& v : down_comp[i]) down_slot[v] = i;
    std::vector<std::set<std::size_t>> up_slots_per_down(down_comp.size());
    for (std::size_t i = 0; i < up_comp.size(); ++i)
        for (const auto& v : up_comp[i])
            up_slots_per_down[down_slot.at(total_.vertex_image.at(v))].insert(i);
    for (const auto& slots : up_slots_per_down)
        if (slots.size() != 1) return false;
    return true;
}

bool SignedMatroidView::is_independent(const EdgeSet& f) const {
    // Columns of the τ-matrix are independent iff the restricted pushforward
    // is injective.
    IntMatrix sub(tau_.rows, f.size());
    std::size_t j = 0;
    for (const auto& e : f) {
        std::size_t col = ground_index(e);
        for (std::size_t i = 0; i < tau_.rows; ++i) sub.at(i, j) = tau_.at(i, col);
        ++j;
    }
    return int_kernel(sub).empty();
}

long SignedMatroidView::rank() const { return prym_rank(cover_); }

long SignedMatroidView::index(const EdgeSet& f) const {
    if (!is_independent_dual(f)) throw std::invalid_argument("index: dependent set in M*");
    return static_cast<long>(connected_components(delete_edges(cover_.base, f)).size());
}

long SignedMatroidView::dilation_index() const {
    if (cover_.dilated_vertices.empty()) return 1;
    HalfEdgeGraph dil;
    for (const auto& v : cover_.base.vertices)
        if (cover_.is_dilated_vertex(v)) dil.add_vertex(v);
    for (const auto& e : cover_.base.edges)
        if (cover_.is_dilated_edge(e.id)) dil.add_edge(e.id, e.u, e.v);
    return static_cast<long>(connected_components(dil).size());
}

namespace {

// Structural check of the two elementary-cover cases for one component of
// G∖F: dilated with connected dilation subgraph of full genus, or free
// nontrivial of genus one. Throws on violation (ogod enumeration bug trap).
void assert_elementary(const DoubleCover& c, const HalfEdgeGraph& component) {
    bool has_dilated = false;
    for (const auto& v : component.vertices)
        if (c.is_dilated_vertex(v)) has_dilated = true;
    if (has_dilated) {
        HalfEdgeGraph dil;
        for (const auto& v : component.vertices)
            if (c.is_dilated_vertex(v)) dil.add_vertex(v);
        for (const auto& e : component.edges)
            if (c.is_dilated_edge(e.id)) dil.add_edge(e.id, e.u, e.v);
        if (connected_components(dil).size() != 1)
            throw std::logic_error("ogod check: dilation subgraph of component disconnected");
        long g_dil = static_cast<long>(dil.edges.size()) - static_cast<long>(dil.vertices.size()) + 1;
        if (g_dil != genus(component))
            throw std::logic_error("ogod check: g(G_dil) != g(G) on dilated component");
    } else {
        if (genus(component) != 1)
            throw std::logic_error("ogod check: free component of genus != 1");
        // Nontrivial: σ-product −1 around the unique cycle (non-bridge edges).
        int prod = 1;
        for (const auto& e : component.edges)
            if (!is_bridge(component, e.id)) prod *= c.sigma.at(e.id);
        if (prod != -1) throw std::logic_error("ogod check: trivial cover on free component");
    }
}

HalfEdgeGraph component_graph(const HalfEdgeGraph& g, const std::vector<std::string>& verts) {
    HalfEdgeGraph out;
    std::set<std::string> vs(verts.begin(), verts.end());
    for (const auto& v : g.vertices)
        if (vs.count(v)) out.add_vertex(v);
    for (const auto& e : g.edges)
        if (vs.count(e.u)) out.edges.push_back(e);
    return out;
}

}  // namespace

const std::vector<IndexedSubset>& SignedMatroidView::ogods() const {
    if (ogods_) return *ogods_;
    long h = rank();
    std::vector<IndexedSubset> found;
    // DFS over independent sets of M*, extending in ground order.
    std::vector<std::pair<EdgeSet, std::size_t>> stack{{EdgeSet{}, 0}};
    while (!stack.empty()) {
        auto [f, next] = stack.back();
        stack.pop_back();
        if (static_cast<long>(f.size()) == h) {
            found.push_back({f, index(f)});
            // Structural cross-check per the elementary-cover definition.
            HalfEdgeGraph rest = delete_edges(cover_.base, f);
            for (const auto& comp : connected_components(rest))
                assert_elementary(cover_, component_graph(rest, comp));
            continue;
        }
        for (std::size_t i = next; i < ground_.size(); ++i) {
            EdgeSet g = f;
            g.insert(ground_[i]);
            if (is_independent_dual(g)) stack.push_back({g, i + 1});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const IndexedSubset& a, const IndexedSubset& b) { return a.edges < b.edges; });
    ogods_ = std::move(found);
    return *ogods_;
}

namespace {

std::string classify_circuit(const DoubleCover& c, const EdgeSet& circuit) {
    HalfEdgeGraph sub = induced_subgraph(c.base, circuit);
    if (connected_components(sub).size() != 1)
        throw std::logic_error("circuit classification: G[C] disconnected");
    long g1 = genus(sub);
    std::vector<std::string> dil;
    for (const auto& v : sub.vertices)
        if (c.is_dilated_vertex(v)) dil.push_back(v);
    // No undilated valency-1 vertices in a circuit.
    for (const auto& v : sub.vertices) {
        if (c.is_dilated_vertex(v)) continue;
        std::size_t val = 0;
        for (const auto& e : sub.edges) val += (e.u == v) + (e.v == v);
        if (val == 1) throw std::logic_error("circuit classification: undilated leaf in G[C]");
    }
    if (dil.empty()) {
        if (g1 == 1) {
            int prod = 1;
            for (const auto& e : sub.edges) prod *= c.sigma.at(e.id);
            if (prod != 1) throw std::logic_error("circuit classification: odd free cycle cannot be dependent");
            return "I";
        }
        if (g1 == 2) {
            for (const auto& e : sub.edges)
                if (is_bridge(sub, e.id)) return "II";
            return "III";
        }
        throw std::logic_error("circuit classification: free circuit of genus " + std::to_string(g1));
    }
    if (g1 == 0) {
        if (dil.size() != 2) throw std::logic_error("circuit classification: path with != 2 dilated vertices");
        return "VI";
    }
    if (g1 == 1) {
        // Unique cycle = non-bridge edges; type V iff it meets a dilated vertex.
        std::set<std::string> cycle_vertices;
        for (const auto& e : sub.edges)
            if (!is_bridge(sub, e.id)) {
                cycle_vertices.insert(e.u);
                cycle_vertices.insert(e.v);
            }
        bool cycle_dilated = false;
        for (const auto& v : dil)
            if (cycle_vertices.count(v)) cycle_dilated = true;
        if (dil.size() != 1)
            throw std::logic_error("circuit classification: genus-one circuit with multiple dilated vertices");
        return cycle_dilated ? "V" : "IV";
    }
    throw std::logic_error("circuit classification: unrecognized shape");
}

}  // namespace

std::vector<CircuitRecord> SignedMatroidView::circuits_M() const {
    std::vector<CircuitRecord> out;
    long max_size = static_cast<long>(ground_.size()) - rank() + 1;  // rank(M)+1
    std::size_t n = ground_.size();
    if (n > 20) throw std::logic_error("circuits_M: ground set too large for exhaustive search");
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        if (static_cast<long>(__builtin_popcountll(mask)) > max_size) continue;
        EdgeSet f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) f.insert(ground_[i]);
        if (is_independent(f)) continue;
        bool minimal = true;
        for (const auto& e : f) {
            EdgeSet g = f;
            g.erase(e);
            if (!is_independent(g)) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        out.push_back({f, CircuitRecord::Side::M, classify_circuit(cover_, f)});
    }
    std::sort(out.begin(), out.end(),
              [](const CircuitRecord& a, const CircuitRecord& b) { return a.edges < b.edges; });
    return out;
}

std::vector<EdgeSet> SignedMatroidView::circuits_dual_all() const {
    std::vector<EdgeSet> out;
    std::size_t n = ground_.size();
    if (n > 20) throw std::logic_error("circuits_dual_all: ground set too large");
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        EdgeSet f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) f.insert(ground_[i]);
        if (is_independent_dual(f)) continue;
        bool minimal = true;
        for (const auto& e : f) {
            EdgeSet g = f;
            g.erase(e);
            if (!is_independent_dual(g)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DualSmallCircuits SignedMatroidView::circuits_dual_small() const {
    DualSmallCircuits out;
    for (const auto& e : ground_)
        if (!is_independent_dual({e})) out.one_circuits.push_back(e);
    std::set<std::string> ones(out.one_circuits.begin(), out.one_circuits.end());
    std::vector<std::string> sorted_ground = ground_;
    std::sort(sorted_ground.begin(), sorted_ground.end());
    for (std::size_t i = 0; i < sorted_ground.size(); ++i) {
        if (ones.count(sorted_ground[i])) continue;
        for (std::size_t j = i + 1; j < sorted_ground.size(); ++j) {
            if (ones.count(sorted_ground[j])) continue;
            if (is_independent_dual({sorted_ground[i], sorted_ground[j]})) continue;
            DualSmallCircuits::TwoCircuit tc;
            tc.f1 = sorted_ground[i];
            tc.f2 = sorted_ground[j];
            tc.mult1 = index({tc.f1}) == 2 ? 2 : 1;
            tc.mult2 = index({tc.f2}) == 2 ? 2 : 1;
            // mult = 2 exactly for bridges of the base graph.
            if ((tc.mult1 == 2) != is_bridge(cover_.base, tc.f1) ||
                (tc.mult2 == 2) != is_bridge(cover_.base, tc.f2))
                throw std::logic_error("2-circuit multiplicity/bridge mismatch");
            out.two_circuits.push_back(tc);
        }
    }
    std::sort(out.one_circuits.begin(), out.one_circuits.end());
    return out;
}

SimplifyResult simplify(const DoubleCover& c) {
    SimplifyResult res;
    res.cover = c;
    for (const auto& e : c.base.edges)
        if (!c.is_dilated_edge(e.id)) res.edge_map[e.id] = e.id;

    auto remap_to = [&res](const std::string& from, const std::string& to) {
        for (auto& [orig, cur] : res.edge_map)
            if (cur == from) cur = to;
    };

    while (true) {
        SignedMatroidView view(res.cover);
        auto small = view.circuits_dual_small();
        if (!small.one_circuits.empty()) {
            EdgeSet ones(small.one_circuits.begin(), small.one_circuits.end());
            std::string joined;
            for (const auto& e : small.one_circuits) joined += (joined.empty() ? "" : ",") + e;
            res.transcript.push_back("contract 1-circuits {" + joined + "}");
            res.cover = contract_cover(res.cover, ones).cover;
            for (const auto& e : ones) remap_to(e, "");
            continue;
        }
        if (small.two_circuits.empty()) break;
        const auto& tc = small.two_circuits.front();  // lexicographically first
        std::string contract_edge = tc.f1, keep_edge = tc.f2;
        long mc = tc.mult1, mk = tc.mult2;
        if (mc != mk && mk == 2) {
            std::swap(contract_edge, keep_edge);
            std::swap(mc, mk);
        }
        Rat ratio2(mc * mc, mk * mk);
        ratio2.canonicalize();
        Rat added = ratio2 * res.cover.lengths.at(contract_edge);
        res.transcript.push_back("2-circuit {" + tc.f1 + "," + tc.f2 + "}: contract " + contract_edge +
                                 ", ℓ(" + keep_edge + ") += (" + std::to_string(mc) + "/" +
                                 std::to_string(mk) + ")²·ℓ(" + contract_edge + ") = +" +
                                 rat_to_string(added));
        res.cover = contract_cover(res.cover, {contract_edge}).cover;
        res.cover.lengths.at(keep_edge) += added;
        remap_to(contract_edge, keep_edge);
    }
    return res;
}

}  // namespace prym
