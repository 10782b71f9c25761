#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

// Dense row-major matrix over arbitrary-precision integers.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;  // rows*cols entries

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;
};

// Dense row-major matrix over rationals.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static RatMatrix from_int(const IntMatrix& m);
    bool operator==(const RatMatrix& o) const = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
RatMatrix mul(const RatMatrix& x, const RatMatrix& y);

// Row-style Hermite normal form: returns (h, u) with u unimodular, u*m = h,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows of h are collected at the bottom.
std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m);

// Smith normal form invariant factors d1 | d2 | ... (length min(rows, cols),
// trailing zeros for rank deficiency), all nonnegative.
std::vector<Int> snf(const IntMatrix& m);

// Smith normal form with transforms: u*m*v = d (diagonal), u and v unimodular.
struct SmithDecomposition {
    IntMatrix u, v, d;
};
SmithDecomposition snf_with_transforms(const IntMatrix& m);

// Lattice basis of {x integer : m*x = 0}, HNF-normalized so that each basis
// vector's first nonzero entry is positive. Rows of the returned matrix are
// the basis vectors (possibly zero rows count: 0 when kernel is trivial).
std::vector<std::vector<Int>> int_kernel(const IntMatrix& m);

// Exact determinant (Gaussian elimination over Q). Throws on non-square.
Rat det(const RatMatrix& m);
Int det(const IntMatrix& m);

// HNF of the lattice spanned by the given row vectors; zero rows dropped.
// Canonical form: two row sets span the same lattice iff outputs are equal.
std::vector<std::vector<Int>> hnf_lattice(const std::vector<std::vector<Int>>& rows,
                                          std::size_t cols);

// Solves a * x = b exactly over Q. Returns empty optional-style flag via bool.
bool solve_rational(const RatMatrix& a, const std::vector<Rat>& b, std::vector<Rat>& x);

}  // namespace prym
