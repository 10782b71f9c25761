#pragma once

#include <optional>

#include "prym/cycles.hpp"

namespace prym {

// Linear form in edge-length variables, keyed by edge id.
using LinForm = std::map<std::string, Rat>;

// Polynomial in edge-length variables; each monomial is the sorted multiset of
// its edge-id factors.
struct VolumePolynomial {
    std::map<std::vector<std::string>, Rat> monomials;

    Rat evaluate(const std::map<std::string, Rat>& lengths) const;
    bool operator==(const VolumePolynomial& other) const = default;
};

// The principalized tropical Prym variety of a cover: the lattice Ker(π_*)
// with the length pairing. Basis coordinates are always stored relative to
// the canonical (stored) edge directions, so the data is identical for every
// orientation of the same cover.
struct PrymData {
    long dim = 0;                           // h = g̃ − g
    std::vector<std::string> ground;        // undilated edge ids, base order
    std::vector<std::vector<Int>> basis;    // rows: lattice basis
    std::string basisProvenance;            // "ogod" or "hnf"
    std::optional<EdgeSet> ogod;            // basis-producing ogod, if any
    RatMatrix gram;                         // [γi,γj] = Σ 2·γi(e)·γj(e)·ℓ(e)
    RatMatrix gramRaw;                      // same without the factor 2
    Rat detGram;                            // det(gram)
    Rat volumeSquared;                      // det(gram) / 2^{h−d+1}
    std::vector<Int> polarizationType;      // (1,…,1,2,…,2), d−1 ones
    long dilationIndex = 1;                 // d

    bool operator==(const PrymData& other) const = default;
};

// Gram matrix of chain rows over the ground ordering: G[i][j] =
// Σ_e 2·γi(e)·γj(e)·ℓ(e) (factor_two false drops the 2).
RatMatrix gram_matrix(const std::vector<std::vector<Int>>& basis,
                      const std::vector<std::string>& ground,
                      const std::map<std::string, Rat>& lengths, bool factor_two = true);

// Same with the lengths left symbolic.
std::vector<std::vector<LinForm>> gram_symbolic(const std::vector<std::vector<Int>>& basis,
                                                const std::vector<std::string>& ground,
                                                bool factor_two = true);

// Squared volume from the Gram determinant: det(gram) / 2^{h−d+1}.
Rat prym_volume_det(const PrymData& p);

// Squared volume from the ogod sum: 2^{1−d} Σ_F 4^{ind(F)−1} Π_{e∈F} ℓ(e),
// returned evaluated and as a polynomial.
std::pair<Rat, VolumePolynomial> prym_volume_ogod(const SignedMatroidView& v,
                                                  const std::map<std::string, Rat>& lengths);

// Squared volume of the Jacobian: Σ over g-element F with G∖F a spanning tree
// of Π_{e∈F} ℓ(e).
std::pair<Rat, VolumePolynomial> jacobian_volume(const HalfEdgeGraph& g,
                                                 const std::map<std::string, Rat>& lengths);

// Invariant factors of the induced polarization ξ: Ker(π_*) → (Coker π*)^tf,
// computed from the homology maps and asserted equal to the closed form
// (1,…,1,2,…,2) with d−1 ones.
std::vector<Int> polarization_type(const DoubleCover& c);

// Full assembly. The result is independent of the view's orientation.
PrymData prym_data(const SignedMatroidView& v);

// Everything the matroidal reconstruction is allowed to see: the oriented
// circuits (canonical coordinates), the indexed ogods, and the lengths.
struct MatroidPackage {
    std::vector<std::string> ground;
    std::vector<CycleVector> circuits;  // fundamental cycles of all M-circuits
    std::vector<IndexedSubset> ogods;
    long dilationIndex = 1;
    std::map<std::string, Rat> lengths;
};

MatroidPackage extract_package(const SignedMatroidView& v);

// Rebuilds the Prym purely from the package; agrees with prym_data on every
// cover (the cover itself is never consulted).
PrymData prym_from_matroid(const MatroidPackage& package);

enum class CompareVerdict { EqualGram, Congruent, Distinct, Undecided };

struct CompareResult {
    CompareVerdict verdict = CompareVerdict::Undecided;
    std::optional<IntMatrix> transform;  // U with Uᵀ·Gram_a·U = Gram_b
    std::string witness;                 // which invariant separated, if any
};

// Semi-decision comparison: equal Grams in the stored bases; else a bounded
// search for a unimodular congruence (|entries| ≤ bound, dims ≤ 4); else
// genuine invariants (dimension, determinant, multiset of small vector norms)
// to certify distinctness; otherwise undecided.
CompareResult compare_pryms(const PrymData& a, const PrymData& b, long bound = 3);

struct SimplificationReport {
    bool ok = false;
    RatMatrix gram_before;   // original basis, original lengths
    RatMatrix gram_after;    // projected basis, simplified lengths
    bool lattices_equal = false;
    std::vector<std::string> transcript;
    std::string detail;
};

// Checks that simplification preserves the Prym: the projection of the
// original kernel basis to the surviving edges has the same Gram under the
// new lengths and spans the simplified cover's kernel lattice.
SimplificationReport verify_simplification_invariance(const DoubleCover& c);

}  // namespace prym
