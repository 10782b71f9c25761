#include "prym/cycles.hpp"

#include <algorithm>

namespace prym {

TauAssignment tau(const DoubleCover& c, const Orientation& o) {
    TauAssignment t;
    for (const auto& e : c.undilated_edges()) t.values[e] = tau_of(c, o, e);
    return t;
}

Int CycleVector::coeff(const std::string& e) const {
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (ground[i] == e) return coeffs[i];
    return 0;
}

Chain1 CycleVector::as_chain() const {
    Chain1 c;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (coeffs[i] != 0) c[ground[i]] = coeffs[i];
    return c;
}

namespace {

std::vector<std::string> by_ground_order(const SignedMatroidView& v, const EdgeSet& s) {
    std::vector<std::string> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [&v](const std::string& a, const std::string& b) {
        return v.ground_index(a) < v.ground_index(b);
    });
    return out;
}

CycleVector embed(const SignedMatroidView& v, const std::vector<std::string>& cols,
                  const std::vector<Int>& values) {
    CycleVector out;
    out.ground = v.ground();
    out.coeffs.assign(out.ground.size(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) out.coeffs[v.ground_index(cols[j])] = values[j];
    return out;
}

void normalize_sign_smallest_id(CycleVector& cv) {
    std::string smallest;
    Int val = 0;
    for (std::size_t i = 0; i < cv.ground.size(); ++i) {
        if (cv.coeffs[i] == 0) continue;
        if (smallest.empty() || cv.ground[i] < smallest) {
            smallest = cv.ground[i];
            val = cv.coeffs[i];
        }
    }
    if (val < 0)
        for (auto& c : cv.coeffs) c = -c;
}

long magnitude_exponent(const SignedMatroidView& v, const EdgeSet& f, const std::string& e) {
    EdgeSet without = f;
    without.erase(e);
    return v.index(f) - v.index(without);
}

// Primitive kernel generator of the τ-matrix restricted to the circuit.
CycleVector kernel_route(const SignedMatroidView& v, const EdgeSet& circuit) {
    std::vector<std::string> cols = by_ground_order(v, circuit);
    const IntMatrix& tau_m = v.tau_matrix();
    IntMatrix sub(tau_m.rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::size_t col = v.ground_index(cols[j]);
        for (std::size_t i = 0; i < tau_m.rows; ++i) sub.at(i, j) = tau_m.at(i, col);
    }
    auto ker = int_kernel(sub);
    if (ker.size() != 1) throw std::logic_error("fundamental cycle: kernel rank != 1 on circuit");
    for (const auto& x : ker[0])
        if (x == 0) throw std::logic_error("fundamental cycle: kernel vanishes on a circuit edge");
    CycleVector out = embed(v, cols, ker[0]);
    normalize_sign_smallest_id(out);
    return out;
}

// Magnitudes from the index formula, gcd-normalized, with signs solved from
// closedness (τ·γ = 0), sign on the smallest-id edge fixed positive.
CycleVector index_route(const SignedMatroidView& v, const EdgeSet& circuit) {
    std::vector<std::string> cedges = by_ground_order(v, circuit);
    HalfEdgeGraph sub = induced_subgraph(v.cover().base, circuit);
    std::vector<Int> mag(cedges.size()), mag_bridge(cedges.size());
    for (std::size_t i = 0; i < cedges.size(); ++i) {
        const std::string& f = cedges[i];
        const IndexedSubset* chosen = nullptr;
        for (const auto& cand : v.ogods()) {
            bool ok = true;
            for (const auto& g : circuit)
                if (g != f && cand.edges.count(g)) ok = false;
            if (ok) {
                chosen = &cand;
                break;
            }
        }
        if (!chosen)
            throw std::logic_error("fundamental cycle: no ogod avoids the circuit minus " + f);
        mag[i] = chosen->edges.count(f) ? int_pow2(magnitude_exponent(v, chosen->edges, f)) : 1;
        // The structural magnitude rule: 2 on bridges of G[C], 1 otherwise.
        mag_bridge[i] = is_bridge(sub, f) ? 2 : 1;
    }
    // Both magnitude rules must agree after gcd normalization (they may
    // differ by the overall power of two that normalization removes).
    auto normalize = [](std::vector<Int>& m) {
        Int g = 0;
        for (const auto& x : m) g = gcd(g, x);
        for (auto& x : m) x /= g;
    };
    normalize(mag);
    normalize(mag_bridge);
    if (mag != mag_bridge)
        throw std::logic_error("fundamental cycle: index-formula and bridge magnitudes disagree");
    // Sign pattern from closedness; smallest-id edge (index 0 of cedges in
    // lexicographic order) positive.
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < cedges.size(); ++i)
        if (cedges[i] < cedges[anchor]) anchor = i;
    const IntMatrix& tau_m = v.tau_matrix();
    std::vector<std::vector<int>> solutions;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cedges.size()); ++mask) {
        std::vector<int> signs(cedges.size());
        for (std::size_t i = 0; i < cedges.size(); ++i)
            signs[i] = (mask & (std::size_t{1} << i)) ? -1 : 1;
        if (signs[anchor] != 1) continue;
        bool closed = true;
        for (std::size_t r = 0; r < tau_m.rows && closed; ++r) {
            Int sum = 0;
            for (std::size_t i = 0; i < cedges.size(); ++i)
                sum += tau_m.at(r, v.ground_index(cedges[i])) * signs[i] * mag[i];
            if (sum != 0) closed = false;
        }
        if (closed) solutions.push_back(std::move(signs));
    }
    if (solutions.size() != 1)
        throw std::logic_error("fundamental cycle: closedness sign pattern not unique");
    std::vector<Int> vals(cedges.size());
    for (std::size_t i = 0; i < cedges.size(); ++i) vals[i] = solutions[0][i] * mag[i];
    return embed(v, cedges, vals);
}

}  // namespace

FundamentalCycle fundamental_cycle(const SignedMatroidView& v, const CircuitRecord& c) {
    if (c.side != CircuitRecord::Side::M)
        throw std::invalid_argument("fundamental_cycle: circuit must be on the M side");
    CycleVector a = kernel_route(v, c.edges);
    CycleVector b = index_route(v, c.edges);
    if (!(a == b)) throw std::logic_error("fundamental cycle: kernel and index routes disagree");
    return {c, a};
}

CircuitRecord circuit_for_ogod_edge(const SignedMatroidView& v, const EdgeSet& ogod,
                                    const std::string& e) {
    if (!ogod.count(e)) throw std::invalid_argument("circuit_for_ogod_edge: edge not in the ogod");
    EdgeSet s;
    for (const auto& f : v.ground())
        if (!ogod.count(f)) s.insert(f);
    s.insert(e);
    if (v.is_independent(s)) throw std::logic_error("circuit_for_ogod_edge: no circuit present");
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const auto& f : s) {
            if (f == e) continue;
            EdgeSet t = s;
            t.erase(f);
            if (!v.is_independent(t)) {
                s = std::move(t);
                shrunk = true;
                break;
            }
        }
    }
    auto all = v.circuits_M();
    for (const auto& rec : all)
        if (rec.edges == s) return rec;
    throw std::logic_error("circuit_for_ogod_edge: circuit missing from enumeration");
}

CycleVector ogod_cycle(const SignedMatroidView& v, const EdgeSet& ogod, const std::string& e) {
    FundamentalCycle fc = fundamental_cycle(v, circuit_for_ogod_edge(v, ogod, e));
    CycleVector out = fc.coefficients;
    if (out.coeff(e) == 0) throw std::logic_error("ogod_cycle: zero coefficient on " + e);
    if (out.coeff(e) < 0)
        for (auto& c : out.coeffs) c = -c;
    // The ogod-derived cycle carries the index-formula coefficient
    // 2^{ind(F)-ind(F\{e})} on its defining edge; the primitive cycle is
    // rescaled accordingly. For index-1 ogods the scale is always 1.
    EdgeSet rest = ogod;
    rest.erase(e);
    long drop = 0;
    for (const auto& cand : v.ogods())
        if (cand.edges == ogod) drop = cand.index - v.index(rest);
    Int want = int_pow2(drop);
    Int have = out.coeff(e);
    if (want % have != 0)
        throw std::logic_error("ogod_cycle: non-integral rescale on " + e);
    Int scale = want / have;
    if (scale != 1)
        for (auto& c : out.coeffs) c *= scale;
    return out;
}

namespace {

bool same_lattice(const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b,
                  std::size_t cols) {
    return hnf_lattice(a, cols) == hnf_lattice(b, cols);
}

}  // namespace

KernelLattice kernel_lattice_reference(const SignedMatroidView& v) {
    PushPull pp = homology_maps(v.cover());
    auto ker = int_kernel(pp.pushforward);
    KernelLattice out;
    out.ground = v.ground();
    out.provenance = "hnf";
    std::vector<std::vector<Int>> rows;
    for (const auto& x : ker) {
        // Chain on the total graph in its stored edge directions.
        Chain1 chain;
        for (std::size_t j = 0; j < pp.total_cycles.size(); ++j)
            for (const auto& [eid, c] : pp.total_cycles[j]) chain[eid] += x[j] * c;
        std::vector<Int> row(out.ground.size(), 0);
        for (std::size_t i = 0; i < out.ground.size(); ++i) {
            const std::string& e = out.ground[i];
            Int plus = 0, minus = 0;
            if (auto it = chain.find(lift_plus(e)); it != chain.end()) plus = it->second;
            if (auto it = chain.find(lift_minus(e)); it != chain.end()) minus = it->second;
            if (plus + minus != 0)
                throw std::logic_error("reference lattice: chain not anti-invariant on " + e);
            // Ground coordinates in the view's orientation differ from the
            // stored-direction ones exactly on reversed even edges.
            bool negate = v.orientation().is_flipped(e) && v.cover().edge_sign(e) == 1;
            row[i] = negate ? -plus : plus;
        }
        for (const auto& [eid, c] : chain) {
            if (c == 0) continue;
            if (v.cover().is_dilated_edge(v.total().edge_image.at(eid)))
                throw std::logic_error("reference lattice: nonzero coefficient on dilated lift " + eid);
        }
        rows.push_back(std::move(row));
    }
    out.basis = hnf_lattice(rows, out.ground.size());
    return out;
}

KernelLattice kernel_lattice_for_ogod(const SignedMatroidView& v, const EdgeSet& ogod) {
    bool found = false;
    for (const auto& cand : v.ogods())
        if (cand.edges == ogod) found = true;
    if (!found) throw std::invalid_argument("kernel_lattice_for_ogod: not an ogod");
    KernelLattice out;
    out.ground = v.ground();
    out.provenance = "ogod";
    out.ogod = ogod;
    for (const auto& e : ogod) out.basis.push_back(ogod_cycle(v, ogod, e).coeffs);
    return out;
}

KernelLattice kernel_lattice(const SignedMatroidView& v) {
    KernelLattice out;
    out.ground = v.ground();
    // Smallest index, then lexicographically greatest (ogods are sorted).
    const IndexedSubset* best = nullptr;
    for (const auto& cand : v.ogods())
        if (!best || cand.index <= best->index) best = &cand;
    if (best && best->index == 1) {
        out = kernel_lattice_for_ogod(v, best->edges);
        for (std::size_t i = 0; i < out.basis.size(); ++i) {
            // Index-1 cycles hit their ogod edge with coefficient exactly +1.
            auto it = out.ogod->begin();
            std::advance(it, i);
            if (out.basis[i][v.ground_index(*it)] != 1)
                throw std::logic_error("kernel_lattice: index-1 ogod coefficient != 1");
        }
    } else {
        out.provenance = "hnf";
        out.basis = hnf_lattice(int_kernel(v.tau_matrix()), out.ground.size());
    }
    KernelLattice ref = kernel_lattice_reference(v);
    if (!same_lattice(out.basis, ref.basis, out.ground.size()))
        throw std::logic_error("kernel_lattice: homology reference disagrees");
    return out;
}

Int sublattice_index(const KernelLattice& lat, const KernelLattice& sub) {
    if (lat.ground != sub.ground) throw std::invalid_argument("sublattice_index: ground mismatch");
    auto h1 = hnf_lattice(lat.basis, lat.ground.size());
    auto h2 = hnf_lattice(sub.basis, sub.ground.size());
    if (h1.size() != h2.size()) throw std::invalid_argument("sublattice_index: rank mismatch");
    std::size_t n = h1.size(), m = lat.ground.size();
    if (n == 0) return 1;
    // Express each row of h2 in the h1 basis; the matrix of coordinates must
    // be integral and its |det| is the index.
    RatMatrix coords(n, n);
    RatMatrix h1t(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) h1t.at(j, i) = Rat(h1[i][j]);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rat> b(m), x;
        for (std::size_t j = 0; j < m; ++j) b[j] = Rat(h2[r][j]);
        if (!solve_rational(h1t, b, x))
            throw std::invalid_argument("sublattice_index: not contained in the lattice");
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].get_den() != 1)
                throw std::invalid_argument("sublattice_index: not an integral sublattice");
            coords.at(r, i) = x[i];
        }
    }
    Rat d = det(coords);
    Int num = abs(d.get_num());
    if (d.get_den() != 1 || num == 0) throw std::logic_error("sublattice_index: degenerate");
    return num;
}

}  // namespace prym
