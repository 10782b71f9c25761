#include "prym/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace prym {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

RatMatrix mul(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    RatMatrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols; ++c) m.at(dst, c) += q * m.at(src, c);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// floor division quotient for integers
Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols && pivot_row < h.rows; ++col) {
        // Eliminate below pivot_row in this column via Euclidean row ops.
        while (true) {
            std::size_t best = h.rows;
            for (std::size_t r = pivot_row; r < h.rows; ++r) {
                if (h.at(r, col) == 0) continue;
                if (best == h.rows || cmp(abs(h.at(r, col)), abs(h.at(best, col))) < 0) best = r;
            }
            if (best == h.rows) break;  // column is zero at/below pivot_row
            swap_rows(h, pivot_row, best);
            swap_rows(u, pivot_row, best);
            bool reduced_all = true;
            for (std::size_t r = pivot_row + 1; r < h.rows; ++r) {
                if (h.at(r, col) == 0) continue;
                Int q = fdiv_q(h.at(r, col), h.at(pivot_row, col));
                add_row_multiple(h, r, pivot_row, -q);
                add_row_multiple(u, r, pivot_row, -q);
                if (h.at(r, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (pivot_row < h.rows && h.at(pivot_row, col) != 0) {
            if (h.at(pivot_row, col) < 0) {
                negate_row(h, pivot_row);
                negate_row(u, pivot_row);
            }
            // Reduce entries above the pivot into [0, pivot).
            for (std::size_t r = 0; r < pivot_row; ++r) {
                Int q = fdiv_q(h.at(r, col), h.at(pivot_row, col));
                add_row_multiple(h, r, pivot_row, -q);
                add_row_multiple(u, r, pivot_row, -q);
            }
            ++pivot_row;
        }
    }
    return {h, u};
}

SmithDecomposition snf_with_transforms(const IntMatrix& m) {
    SmithDecomposition s;
    s.d = m;
    s.u = IntMatrix::identity(m.rows);
    s.v = IntMatrix::identity(m.cols);
    IntMatrix& d = s.d;

    auto swap_cols = [&](IntMatrix& x, std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < x.rows; ++r) std::swap(x.at(r, i), x.at(r, j));
    };
    auto add_col_multiple = [&](IntMatrix& x, std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < x.rows; ++r) x.at(r, dst) += q * x.at(r, src);
    };

    std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            // Find smallest-magnitude nonzero entry in the trailing block.
            std::size_t pi = m.rows, pj = m.cols;
            for (std::size_t i = k; i < m.rows; ++i)
                for (std::size_t j = k; j < m.cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi == m.rows || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m.rows) break;  // block is zero
            swap_rows(d, k, pi);
            swap_rows(s.u, k, pi);
            swap_cols(d, k, pj);
            swap_cols(s.v, k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < m.rows; ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = fdiv_q(d.at(i, k), d.at(k, k));
                add_row_multiple(d, i, k, -q);
                add_row_multiple(s.u, i, k, -q);
                if (d.at(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < m.cols; ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = fdiv_q(d.at(k, j), d.at(k, k));
                add_col_multiple(d, j, k, -q);
                add_col_multiple(s.v, j, k, -q);
                if (d.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility d(k,k) | d(i,j) for the trailing block.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < m.rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < m.cols && divides_all; ++j) {
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        add_row_multiple(d, k, i, 1);
                        add_row_multiple(s.u, k, i, 1);
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
        if (d.at(k, k) < 0) {
            negate_row(d, k);
            negate_row(s.u, k);
        }
    }
    return s;
}

std::vector<Int> snf(const IntMatrix& m) {
    SmithDecomposition s = snf_with_transforms(m);
    std::size_t n = std::min(m.rows, m.cols);
    std::vector<Int> factors(n);
    for (std::size_t k = 0; k < n; ++k) factors[k] = s.d.at(k, k);
    return factors;
}

std::vector<std::vector<Int>> hnf_lattice(const std::vector<std::vector<Int>>& rows,
                                          std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("hnf_lattice: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    IntMatrix h = hnf(m).first;
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < h.rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (h.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        std::vector<Int> v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = h.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Int>> int_kernel(const IntMatrix& m) {
    // Row-HNF of the transpose: u * m^T = h. Rows of u matching zero rows of h
    // form a lattice basis of ker(m); HNF-normalize them for canonical output.
    auto [h, u] = hnf(m.transpose());
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < h.rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols; ++j)
            if (h.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<Int> v(u.cols);
        for (std::size_t j = 0; j < u.cols; ++j) v[j] = u.at(i, j);
        gens.push_back(std::move(v));
    }
    return hnf_lattice(gens, m.cols);
}

Rat det(const RatMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows;
    RatMatrix w = m;
    Rat result = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            result = -result;
        }
        result *= w.at(k, k);
        Rat inv = 1 / w.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rat f = w.at(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return result;
}

Int det(const IntMatrix& m) {
    Rat d = det(RatMatrix::from_int(m));
    if (d.get_den() != 1) throw std::logic_error("integer det produced non-integer");
    return d.get_num();
}

bool solve_rational(const RatMatrix& a, const std::vector<Rat>& b, std::vector<Rat>& x) {
    if (b.size() != a.rows) throw std::invalid_argument("solve_rational: dimension mismatch");
    std::size_t rows = a.rows, cols = a.cols;
    RatMatrix w(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col(rows, cols + 1);
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = pr; i < rows; ++i)
            if (w.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p == rows) continue;
        for (std::size_t j = 0; j <= cols; ++j) std::swap(w.at(pr, j), w.at(p, j));
        Rat inv = 1 / w.at(pr, c);
        for (std::size_t j = c; j <= cols; ++j) w.at(pr, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || w.at(i, c) == 0) continue;
            Rat f = w.at(i, c);
            for (std::size_t j = c; j <= cols; ++j) w.at(i, j) -= f * w.at(pr, j);
        }
        pivot_col[pr] = c;
        ++pr;
    }
    for (std::size_t i = pr; i < rows; ++i)
        if (w.at(i, cols) != 0) return false;  // inconsistent
    x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < pr; ++i) x[pivot_col[i]] = w.at(i, cols);
    return true;
}

}  // namespace prym
