#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/matroid.hpp"

namespace prym {

// τ on the half-edges of every undilated edge, stored per edge as the pair
// (value at tail, value at head) relative to the edge's stored endpoint order.
// Satisfies τ(h)·τ(ι(h)) = −σ(e).
struct TauAssignment {
    std::map<std::string, std::pair<int, int>> values;  // edge id -> (tail, head)
};

TauAssignment tau(const DoubleCover& c, const Orientation& o);

// Integer chain supported on the undilated edges of the base, expressed in the
// ground ordering of a SignedMatroidView.
struct CycleVector {
    std::vector<std::string> ground;
    std::vector<Int> coeffs;

    Int coeff(const std::string& e) const;
    Chain1 as_chain() const;
    bool operator==(const CycleVector& other) const = default;
};

// Primitive generator of the closed chains supported on an M-circuit, signed
// so that the smallest-id support edge has a positive coefficient.
struct FundamentalCycle {
    CircuitRecord circuit;
    CycleVector coefficients;
};

// Computed two ways and asserted equal: (a) the primitive integer kernel of
// the τ-matrix restricted to the circuit's columns; (b) magnitudes from the
// index formula 2^{ind(F)−ind(F∖{e})} (gcd-normalized) with signs solved from
// closedness. Disagreement throws.
FundamentalCycle fundamental_cycle(const SignedMatroidView& v, const CircuitRecord& c);

// The unique M-circuit inside (E∖F) ∪ {e} for an ogod F and e ∈ F.
CircuitRecord circuit_for_ogod_edge(const SignedMatroidView& v, const EdgeSet& ogod,
                                    const std::string& e);

// Fundamental cycle of that circuit, re-signed so that the coefficient on e is
// positive (equal to +1 when the ogod has index one).
CycleVector ogod_cycle(const SignedMatroidView& v, const EdgeSet& ogod, const std::string& e);

struct KernelLattice {
    std::vector<std::string> ground;
    std::vector<std::vector<Int>> basis;  // rows; HNF-reduced when provenance == "hnf"
    std::string provenance;               // "ogod" or "hnf"
    std::optional<EdgeSet> ogod;          // present when provenance == "ogod"
};

// Lattice of closed chains Ker(π_*) in ground coordinates. If an index-1 ogod
// exists (smallest index, then lexicographically first), its cycles form the
// basis; otherwise the Hermite normal form of the integer kernel of the
// τ-matrix. Either way the result is verified against the homology route.
KernelLattice kernel_lattice(const SignedMatroidView& v);

// The span of the cycles of a caller-chosen ogod. For ogods of index > 1 this
// may be a proper finite-index sublattice of Ker(π_*); no spanning check is
// performed.
KernelLattice kernel_lattice_for_ogod(const SignedMatroidView& v, const EdgeSet& ogod);

// Reference computation via homology of the total graph: Ker(π_*) inside
// H_1(Γ̃), converted to ground coordinates through the e⁺ lifts. Always HNF.
KernelLattice kernel_lattice_reference(const SignedMatroidView& v);

// Index of the row-span of `sub` inside the row-span of `lat` (same ground,
// same rank); throws if sub is not a finite-index sublattice.
Int sublattice_index(const KernelLattice& lat, const KernelLattice& sub);

}  // namespace prym
