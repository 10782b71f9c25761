#include "prym/prym.hpp"

#include <algorithm>
#include <functional>

namespace prym {

Rat VolumePolynomial::evaluate(const std::map<std::string, Rat>& lengths) const {
    Rat total = 0;
    for (const auto& [mono, coeff] : monomials) {
        Rat term = coeff;
        for (const auto& e : mono) term *= lengths.at(e);
        total += term;
    }
    return total;
}

RatMatrix gram_matrix(const std::vector<std::vector<Int>>& basis,
                      const std::vector<std::string>& ground,
                      const std::map<std::string, Rat>& lengths, bool factor_two) {
    RatMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Rat sum = 0;
            for (std::size_t k = 0; k < ground.size(); ++k)
                if (basis[i][k] != 0 && basis[j][k] != 0)
                    sum += Rat(basis[i][k] * basis[j][k]) * lengths.at(ground[k]);
            if (factor_two) sum *= 2;
            g.at(i, j) = sum;
            g.at(j, i) = sum;
        }
    return g;
}

std::vector<std::vector<LinForm>> gram_symbolic(const std::vector<std::vector<Int>>& basis,
                                                const std::vector<std::string>& ground,
                                                bool factor_two) {
    std::vector<std::vector<LinForm>> g(basis.size(), std::vector<LinForm>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            LinForm f;
            for (std::size_t k = 0; k < ground.size(); ++k) {
                Int c = basis[i][k] * basis[j][k];
                if (factor_two) c *= 2;
                if (c != 0) f[ground[k]] += Rat(c);
            }
            g[i][j] = f;
            g[j][i] = f;
        }
    return g;
}

Rat prym_volume_det(const PrymData& p) { return p.volumeSquared; }

std::pair<Rat, VolumePolynomial> prym_volume_ogod(const SignedMatroidView& v,
                                                  const std::map<std::string, Rat>& lengths) {
    long d = v.dilation_index();
    VolumePolynomial poly;
    for (const auto& og : v.ogods()) {
        std::vector<std::string> mono(og.edges.begin(), og.edges.end());
        poly.monomials[mono] += rat_pow2(1 - d) * rat_pow2(2 * (og.index - 1));
    }
    if (v.rank() == 0 && poly.monomials.empty()) poly.monomials[{}] = 1;
    return {poly.evaluate(lengths), poly};
}

std::pair<Rat, VolumePolynomial> jacobian_volume(const HalfEdgeGraph& g,
                                                 const std::map<std::string, Rat>& lengths) {
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("jacobian_volume: graph not connected");
    long gen = genus(g);
    std::size_t n = g.edges.size();
    VolumePolynomial poly;
    std::vector<std::size_t> idx(gen > 0 ? gen : 0);
    // Enumerate g-element complements of spanning trees.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == static_cast<std::size_t>(gen)) {
            EdgeSet f;
            for (std::size_t k = 0; k < idx.size(); ++k) f.insert(g.edges[idx[k]].id);
            HalfEdgeGraph rest = delete_edges(g, f);
            if (rest.vertices.size() == g.vertices.size() &&
                connected_components(rest).size() == 1 && genus(rest) == 0) {
                std::vector<std::string> mono(f.begin(), f.end());
                poly.monomials[mono] += 1;
            }
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (gen == 0)
        poly.monomials[{}] = 1;
    else
        rec(0, 0);
    return {poly.evaluate(lengths), poly};
}

namespace {

// Expresses an integer vector in an integer row basis; throws unless the
// coordinates are integral.
std::vector<Int> integral_coordinates(const std::vector<std::vector<Int>>& rows,
                                      const std::vector<Int>& target) {
    std::size_t n = rows.size(), m = target.size();
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a.at(j, i) = Rat(rows[i][j]);
    std::vector<Rat> b(m), x;
    for (std::size_t j = 0; j < m; ++j) b[j] = Rat(target[j]);
    if (!solve_rational(a, b, x)) throw std::logic_error("integral_coordinates: unsolvable");
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].get_den() != 1) throw std::logic_error("integral_coordinates: non-integral");
        out[i] = x[i].get_num();
    }
    return out;
}

std::vector<Int> closed_form_type(long h, long d) {
    std::vector<Int> t;
    for (long i = 0; i < d - 1; ++i) t.push_back(1);
    for (long i = 0; i < h - d + 1; ++i) t.push_back(2);
    return t;
}

}  // namespace

std::vector<Int> polarization_type(const DoubleCover& c) {
    SignedMatroidView v(c);
    long h = v.rank(), d = v.dilation_index();
    PushPull pp = homology_maps(c);
    long g = static_cast<long>(pp.base_cycles.size());
    long gt = static_cast<long>(pp.total_cycles.size());
    auto ker = int_kernel(pp.pushforward);  // rows: basis of Ker π_* in H1(Γ̃)
    if (static_cast<long>(ker.size()) != h) throw std::logic_error("polarization: kernel rank != h");
    SmithDecomposition sd = snf_with_transforms(pp.pullback);
    // ξ(x) = the free part of [x] in Coker(π*): coordinates g..g̃ of U·x.
    IntMatrix xi(h, h);
    for (long col = 0; col < h; ++col) {
        for (long row = 0; row < h; ++row) {
            Int sum = 0;
            for (long k = 0; k < gt; ++k) sum += sd.u.at(g + row, k) * ker[col][k];
            xi.at(row, col) = sum;
        }
    }
    std::vector<Int> factors = snf(xi);
    if (factors != closed_form_type(h, d))
        throw std::logic_error("polarization type does not match the closed form");
    return factors;
}

namespace {

// Converts a basis row from the view's orientation to canonical coordinates:
// reversed even edges carry a sign flip; reversed odd edges do not.
void to_canonical(const SignedMatroidView& v, std::vector<Int>& row) {
    const auto& ground = v.ground();
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (v.orientation().is_flipped(ground[i]) && v.cover().edge_sign(ground[i]) == 1)
            row[i] = -row[i];
}

void assert_positive_definite(const RatMatrix& g) {
    for (std::size_t k = 1; k <= g.rows; ++k) {
        RatMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
        if (det(minor) <= 0) throw std::logic_error("Gram matrix is not positive definite");
    }
}

PrymData assemble(std::vector<std::vector<Int>> basis, const std::string& provenance,
                  std::optional<EdgeSet> ogod, const std::vector<std::string>& ground,
                  const std::map<std::string, Rat>& lengths, long h, long d,
                  std::vector<Int> pol_type) {
    PrymData p;
    p.dim = h;
    p.ground = ground;
    p.basis = std::move(basis);
    p.basisProvenance = provenance;
    p.ogod = std::move(ogod);
    if (static_cast<long>(p.basis.size()) != h)
        throw std::logic_error("Prym assembly: basis size != h");
    p.gram = gram_matrix(p.basis, ground, lengths, true);
    p.gramRaw = gram_matrix(p.basis, ground, lengths, false);
    assert_positive_definite(p.gram);
    p.detGram = det(p.gram);
    p.volumeSquared = p.detGram * rat_pow2(-(h - d + 1));
    p.polarizationType = std::move(pol_type);
    p.dilationIndex = d;
    return p;
}

}  // namespace

PrymData prym_data(const SignedMatroidView& v) {
    long h = v.rank(), d = v.dilation_index();
    if (!v.ogods().empty()) {
        long min_index = v.ogods().front().index;
        for (const auto& og : v.ogods()) min_index = std::min(min_index, og.index);
        if (min_index != d)
            throw std::logic_error("dilation index differs from the minimal ogod index");
    }
    KernelLattice lat = kernel_lattice(v);
    for (auto& row : lat.basis) to_canonical(v, row);
    if (lat.provenance == "ogod") {
        // Restore the per-cycle sign rule (positive on the ogod edge) after
        // the coordinate change.
        auto it = lat.ogod->begin();
        for (std::size_t i = 0; i < lat.basis.size(); ++i, ++it) {
            Int c = lat.basis[i][v.ground_index(*it)];
            if (c == 0) throw std::logic_error("prym_data: lost ogod coefficient");
            if (c < 0)
                for (auto& x : lat.basis[i]) x = -x;
        }
    } else {
        lat.basis = hnf_lattice(lat.basis, lat.ground.size());
    }
    return assemble(lat.basis, lat.provenance, lat.ogod, v.ground(), v.cover().lengths, h, d,
                    polarization_type(v.cover()));
}

MatroidPackage extract_package(const SignedMatroidView& v) {
    MatroidPackage pkg;
    pkg.ground = v.ground();
    for (const auto& rec : v.circuits_M()) {
        CycleVector cv = fundamental_cycle(v, rec).coefficients;
        std::vector<Int> row = cv.coeffs;
        to_canonical(v, row);
        // Re-apply the smallest-id sign rule in canonical coordinates.
        std::string smallest;
        Int val = 0;
        for (std::size_t i = 0; i < pkg.ground.size(); ++i) {
            if (row[i] == 0) continue;
            if (smallest.empty() || pkg.ground[i] < smallest) {
                smallest = pkg.ground[i];
                val = row[i];
            }
        }
        if (val < 0)
            for (auto& x : row) x = -x;
        cv.coeffs = std::move(row);
        pkg.circuits.push_back(std::move(cv));
    }
    pkg.ogods = v.ogods();
    pkg.dilationIndex = v.dilation_index();
    pkg.lengths = v.cover().lengths;
    return pkg;
}

PrymData prym_from_matroid(const MatroidPackage& package) {
    if (package.ogods.empty()) throw std::invalid_argument("prym_from_matroid: no ogods in package");
    long h = static_cast<long>(package.ogods.front().edges.size());
    long d = package.ogods.front().index;
    const IndexedSubset* best = &package.ogods.front();
    for (const auto& og : package.ogods) {
        if (static_cast<long>(og.edges.size()) != h)
            throw std::invalid_argument("prym_from_matroid: ogods of unequal size");
        if (og.index <= d) {
            d = og.index;
            best = &og;
        }
    }
    if (d != package.dilationIndex)
        throw std::logic_error("prym_from_matroid: index data disagrees with the dilation index");
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < package.ground.size(); ++i) pos[package.ground[i]] = i;

    std::vector<std::vector<Int>> basis;
    std::string provenance;
    std::optional<EdgeSet> ogod;
    if (d == 1) {
        provenance = "ogod";
        ogod = best->edges;
        for (const auto& e : best->edges) {
            // The fundamental cycle through e relative to this ogod is the
            // unique packaged circuit meeting the ogod exactly in {e}.
            const CycleVector* found = nullptr;
            for (const auto& cv : package.circuits) {
                if (cv.coeff(e) == 0) continue;
                bool inside = true;
                for (const auto& f : best->edges)
                    if (f != e && cv.coeff(f) != 0) inside = false;
                if (!inside) continue;
                if (found) throw std::logic_error("prym_from_matroid: ambiguous ogod circuit");
                found = &cv;
            }
            if (!found) throw std::logic_error("prym_from_matroid: missing ogod circuit for " + e);
            std::vector<Int> row = found->coeffs;
            if (row[pos.at(e)] < 0)
                for (auto& x : row) x = -x;
            basis.push_back(std::move(row));
        }
    } else {
        provenance = "hnf";
        std::vector<std::vector<Int>> rows;
        for (const auto& cv : package.circuits) rows.push_back(cv.coeffs);
        basis = hnf_lattice(rows, package.ground.size());
    }
    return assemble(std::move(basis), provenance, std::move(ogod), package.ground, package.lengths,
                    h, d, closed_form_type(h, d));
}

namespace {

bool congruence_search(const RatMatrix& ga, const RatMatrix& gb, long bound, IntMatrix& out) {
    std::size_t n = ga.rows;
    // Candidate columns for each target diagonal norm, filled left to right
    // with cross-pairing constraints against already-fixed columns.
    std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
    std::vector<Int> cur(n, -bound);
    std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
        std::vector<Int> v(n, -bound);
        std::function<bool(std::size_t)> fill = [&](std::size_t k) -> bool {
            if (k == n) {
                Rat norm = 0;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) norm += Rat(v[p] * v[q]) * ga.at(p, q);
                if (norm != gb.at(j, j)) return false;
                for (std::size_t i = 0; i < j; ++i) {
                    Rat cross = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q)
                            cross += Rat(cols[i][p] * v[q]) * ga.at(p, q);
                    if (cross != gb.at(i, j)) return false;
                }
                cols[j] = v;
                if (j + 1 == n) {
                    IntMatrix u(n, n);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) u.at(p, q) = cols[q][p];
                    if (abs(det(u)) != 1) return false;
                    out = u;
                    return true;
                }
                return place(j + 1);
            }
            for (Int x = -bound; x <= bound; ++x) {
                v[k] = x;
                if (fill(k + 1)) return true;
            }
            return false;
        };
        return fill(0);
    };
    if (n == 0) {
        out = IntMatrix(0, 0);
        return true;
    }
    return place(0);
}

// Complete multiset of nonzero-vector norms ≤ t of a positive-definite Gram
// form; the enumeration box comes from the diagonal of the inverse.
std::vector<Rat> small_norms(const RatMatrix& g, const Rat& t) {
    std::size_t n = g.rows;
    std::vector<Rat> out;
    if (n == 0) return out;
    // Bounds: x_i² ≤ t · (g⁻¹)_{ii}.
    std::vector<long> bounds(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0)), x;
        e[i] = 1;
        if (!solve_rational(g, e, x)) throw std::logic_error("small_norms: singular Gram");
        Rat limit = t * x[i];
        long b = 0;
        while (Rat((b + 1)) * Rat((b + 1)) <= limit) ++b;
        bounds[i] = b;
    }
    std::vector<Int> v(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            bool zero = true;
            for (const auto& x : v) zero = zero && x == 0;
            if (zero) return;
            Rat norm = 0;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) norm += Rat(v[p] * v[q]) * g.at(p, q);
            if (norm <= t) out.push_back(norm);
            return;
        }
        for (long x = -bounds[k]; x <= bounds[k]; ++x) {
            v[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CompareResult compare_pryms(const PrymData& a, const PrymData& b, long bound) {
    CompareResult r;
    if (a.dim != b.dim) {
        r.verdict = CompareVerdict::Distinct;
        r.witness = "dimension";
        return r;
    }
    if (a.gram == b.gram) {
        r.verdict = CompareVerdict::EqualGram;
        return r;
    }
    if (a.detGram != b.detGram) {
        r.verdict = CompareVerdict::Distinct;
        r.witness = "determinant";
        return r;
    }
    if (a.dim <= 4) {
        IntMatrix u;
        if (congruence_search(a.gram, b.gram, bound, u)) {
            r.verdict = CompareVerdict::Congruent;
            r.transform = u;
            return r;
        }
    }
    Rat t = 0;
    for (std::size_t i = 0; i < a.gram.rows; ++i) t = std::max(t, a.gram.at(i, i));
    for (std::size_t i = 0; i < b.gram.rows; ++i) t = std::max(t, b.gram.at(i, i));
    if (small_norms(a.gram, t) != small_norms(b.gram, t)) {
        r.verdict = CompareVerdict::Distinct;
        r.witness = "norm multiset";
        return r;
    }
    r.verdict = CompareVerdict::Undecided;
    return r;
}

SimplificationReport verify_simplification_invariance(const DoubleCover& c) {
    SimplificationReport rep;
    SignedMatroidView before(c);
    PrymData pa = prym_data(before);
    SimplifyResult s = simplify(c);
    rep.transcript = s.transcript;
    SignedMatroidView after(s.cover);
    PrymData pb = prym_data(after);

    // Project the original basis to the surviving edge coordinates; edge ids
    // are preserved through contraction.
    const auto& new_ground = after.ground();
    std::map<std::string, std::size_t> old_pos;
    for (std::size_t i = 0; i < pa.ground.size(); ++i) old_pos[pa.ground[i]] = i;
    std::vector<std::vector<Int>> projected;
    for (const auto& row : pa.basis) {
        std::vector<Int> p(new_ground.size(), 0);
        for (std::size_t i = 0; i < new_ground.size(); ++i) p[i] = row[old_pos.at(new_ground[i])];
        projected.push_back(std::move(p));
    }
    rep.gram_before = pa.gram;
    rep.gram_after = gram_matrix(projected, new_ground, s.cover.lengths, true);

    // The simplified cover's σ is re-normalized by vertex switching, which
    // flips the sign of cycle coordinates on some edges. Compare the lattices
    // up to such per-coordinate sign flips (a length-form isometry).
    const std::size_t k = new_ground.size();
    std::vector<std::vector<Int>> target = hnf_lattice(pb.basis, k);
    std::vector<std::size_t> flippable;
    for (std::size_t j = 0; j < k; ++j) {
        bool nonzero = false;
        for (const auto& row : projected)
            if (row[j] != 0) nonzero = true;
        if (nonzero) flippable.push_back(j);
    }
    rep.lattices_equal = false;
    // A global negation fixes the lattice, so the first sign can stay +1.
    std::size_t patterns = flippable.empty() ? 1 : (std::size_t{1} << (flippable.size() - 1));
    for (std::size_t mask = 0; mask < patterns && !rep.lattices_equal; ++mask) {
        std::vector<std::vector<Int>> flipped = projected;
        for (std::size_t b = 1; b < flippable.size(); ++b)
            if (mask & (std::size_t{1} << (b - 1)))
                for (auto& row : flipped) row[flippable[b]] = -row[flippable[b]];
        if (hnf_lattice(flipped, k) == target) rep.lattices_equal = true;
    }
    rep.ok = (rep.gram_before == rep.gram_after) && rep.lattices_equal;
    if (!rep.ok) rep.detail = !rep.lattices_equal ? "lattice mismatch" : "gram mismatch";
    return rep;
}

}  // namespace prym
