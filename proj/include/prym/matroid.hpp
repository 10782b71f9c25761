#pragma once

#include <optional>

#include "prym/cover.hpp"

namespace prym {

struct CircuitRecord {
    enum class Side { M, Dual };
    EdgeSet edges;
    Side side = Side::M;
    // For M-circuits: "I".."VI"; for dual circuits: "1-circuit"/"2-circuit".
    std::string type_tag;
};

struct IndexedSubset {
    EdgeSet edges;
    long index = 0;
};

struct DualSmallCircuits {
    std::vector<std::string> one_circuits;
    struct TwoCircuit {
        std::string f1, f2;   // f1 < f2 lexicographically
        long mult1 = 0, mult2 = 0;  // 2^{ind({f})-1}, in {1,2}
    };
    std::vector<TwoCircuit> two_circuits;
};

// View of the signed cographic matroid M*(Γ̃/Γ) and its dual M(Γ̃/Γ) on the
// undilated edges of a validated cover. An optional orientation (default: the
// stored canonical one) drives the τ-incidence matrix used for the M-side
// oracle and for cycle-sign computations.
class SignedMatroidView {
public:
    explicit SignedMatroidView(DoubleCover cover, Orientation orientation = {});

    const DoubleCover& cover() const { return cover_; }
    const TotalGraph& total() const { return total_; }
    const Orientation& orientation() const { return orientation_; }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<std::string>& undilated_vertices() const { return undilated_vertices_; }
    // Undilated vertices x ground edges; entry (v,e) = Σ τ(h) over half-edges
    // of e rooted at v. M(Γ̃/Γ) is the column matroid of this matrix.
    const IntMatrix& tau_matrix() const { return tau_; }
    std::size_t ground_index(const std::string& e) const;

    bool is_independent_dual(const EdgeSet& f) const;
    bool is_independent(const EdgeSet& f) const;
    long rank() const;  // rank of M* = g̃ − g
    const std::vector<IndexedSubset>& ogods() const;
    std::vector<CircuitRecord> circuits_M() const;
    DualSmallCircuits circuits_dual_small() const;
    long index(const EdgeSet& f) const;  // f must be independent in M*
    long dilation_index() const;

    // All circuits of M* (test support; exponential, desk scale only).
    std::vector<EdgeSet> circuits_dual_all() const;

private:
    DoubleCover cover_;
    Orientation orientation_;
    TotalGraph total_;
    std::vector<std::string> ground_;
    std::vector<std::string> undilated_vertices_;
    IntMatrix tau_;
    mutable std::optional<std::vector<IndexedSubset>> ogods_;
};

// τ(h) = σ(e) on heads, −1 on tails (heads/tails after applying o); satisfies
// τ(h)·τ(ι(h)) = −σ(e). Indexed as tau_of(c, o, e) = {tail value, head value}
// relative to the edge's stored endpoint order.
std::pair<int, int> tau_of(const DoubleCover& c, const Orientation& o, const std::string& e);

IntMatrix tau_matrix(const DoubleCover& c, const Orientation& o,
                     const std::vector<std::string>& ground,
                     const std::vector<std::string>& undilated_vertices);

struct SimplifyResult {
    DoubleCover cover;
    // original undilated edge -> id of the simplified-cover edge that absorbed
    // its length, or "" for edges contracted as (members of) 1-circuits.
    std::map<std::string, std::string> edge_map;
    std::vector<std::string> transcript;
};

// Contracts all 1-circuits of M*, then repeatedly contracts one edge of a
// 2-circuit {f1,f2} with ℓ(f2) += (mult(f1)/mult(f2))²·ℓ(f1) until the
// matroid is simple. Mixed multiplicities always contract the multiplicity-2
// edge; ties contract the lexicographically smaller id. Deterministic.
SimplifyResult simplify(const DoubleCover& c);

}  // namespace prym
