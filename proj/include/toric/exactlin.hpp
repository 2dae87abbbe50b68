#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels, ranks and saturation of sublattices. Everything is done with
// arbitrary-precision integers.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    IntVector column(std::size_t c) const {
        IntVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
    }
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    IntVector apply(const IntVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: length mismatch");
        IntVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// A basis of a sublattice of Z^ambient_rank. Vectors are linearly
/// independent over Q.
struct LatticeBasis {
    std::size_t ambient_rank = 0;
    std::vector<IntVector> vectors;

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
    IntMatrix as_matrix() const { return IntMatrix::from_rows(vectors, ambient_rank); }
};

struct HermiteResult {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
};

struct SmithResult {
    IntMatrix D;
    IntVector invariant_factors;
};

/// Row-style Hermite normal form: U * M = H with U unimodular. Pivots are
/// positive and entries above a pivot are reduced into [0, pivot).
inline HermiteResult hermite_normal_form(const IntMatrix& M) {
    IntMatrix H = M;
    IntMatrix U = IntMatrix::identity(M.rows());
    const std::size_t m = H.rows();
    const std::size_t n = H.cols();
    std::size_t pivot_row = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
        // Euclid on the column, always pivoting on the smallest nonzero |entry|.
        while (true) {
            std::size_t best = m;
            for (std::size_t r = pivot_row; r < m; ++r) {
                if (H(r, col) == 0) continue;
                if (best == m || abs(H(r, col)) < abs(H(best, col))) best = r;
            }
            if (best == m) break;
            H.swap_rows(pivot_row, best);
            U.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < m; ++r) {
                if (H(r, col) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), H(r, col).get_mpz_t(), H(pivot_row, col).get_mpz_t());
                H.add_row_multiple(r, pivot_row, -q);
                U.add_row_multiple(r, pivot_row, -q);
                if (H(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (H(pivot_row, col) == 0) continue;
        if (H(pivot_row, col) < 0) {
            H.negate_row(pivot_row);
            U.negate_row(pivot_row);
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H(r, col).get_mpz_t(), H(pivot_row, col).get_mpz_t());
            H.add_row_multiple(r, pivot_row, -q);
            U.add_row_multiple(r, pivot_row, -q);
        }
        pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }
    return {std::move(H), std::move(U), pivot_row};
}

inline std::size_t rank(const IntMatrix& M) { return hermite_normal_form(M).rank; }

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && A(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            A.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                mpz_divexact(A(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

/// Basis of the full integer kernel {v in Z^cols : M v = 0}. The basis is
/// returned in Hermite normal form, which makes it canonical.
inline LatticeBasis kernel_basis(const IntMatrix& M) {
    const HermiteResult hnf = hermite_normal_form(M.transposed());
    LatticeBasis out;
    out.ambient_rank = M.cols();
    std::vector<IntVector> rows;
    for (std::size_t r = hnf.rank; r < hnf.H.rows(); ++r) rows.push_back(hnf.U.row(r));
    if (rows.empty()) return out;
    const HermiteResult canon = hermite_normal_form(IntMatrix::from_rows(rows, M.cols()));
    for (std::size_t r = 0; r < canon.rank; ++r) out.vectors.push_back(canon.H.row(r));
    return out;
}

/// Smith normal form D = P M Q. Invariant factors are the nonzero diagonal
/// entries, positive and in divisibility order.
inline SmithResult smith_normal_form(const IntMatrix& M) {
    IntMatrix D = M;
    const std::size_t m = D.rows();
    const std::size_t n = D.cols();
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            std::size_t br = m, bc = n;
            for (std::size_t r = t; r < m; ++r)
                for (std::size_t c = t; c < n; ++c) {
                    if (D(r, c) == 0) continue;
                    if (br == m || abs(D(r, c)) < abs(D(br, bc))) {
                        br = r;
                        bc = c;
                    }
                }
            if (br == m) break;
            D.swap_rows(t, br);
            D.swap_cols(t, bc);

            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (D(r, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(r, t).get_mpz_t(), D(t, t).get_mpz_t());
                D.add_row_multiple(r, t, -q);
                if (D(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (D(t, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, c).get_mpz_t(), D(t, t).get_mpz_t());
                D.add_col_multiple(c, t, -q);
                if (D(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix.
            bool divides = true;
            for (std::size_t r = t + 1; r < m && divides; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (D(r, c) % D(t, t) != 0) {
                        D.add_row_multiple(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(t, t) < 0) D.negate_row(t);
    }

    SmithResult out;
    for (std::size_t t = 0; t < steps; ++t)
        if (D(t, t) != 0) out.invariant_factors.push_back(D(t, t));
    out.D = std::move(D);
    return out;
}

/// True iff Z^ambient / span(B) is torsion-free.
inline bool is_saturated_sublattice(const LatticeBasis& B) {
    if (B.empty()) throw std::invalid_argument("is_saturated_sublattice: empty basis");
    const SmithResult snf = smith_normal_form(B.as_matrix());
    if (snf.invariant_factors.size() != B.size()) return false;
    return std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                       [](const Integer& d) { return d == 1; });
}

inline IntVector to_int_vector(const std::vector<long>& v) {
    IntVector out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

// ------------------------------------------------------ rational systems

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Some solution of M x = b over the rationals, or nullopt if inconsistent.
inline std::optional<RatVector> solve_rational(const IntMatrix& M, const IntVector& b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve_rational: right-hand side has wrong length");
    const std::size_t m = M.rows(), n = M.cols();
    std::vector<RatVector> T(m, RatVector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = M(i, j);
        T[i][n] = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && T[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(T[p], T[r]);
        const Rational inv = 1 / T[r][c];
        for (auto& x : T[r]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || T[i][c] == 0) continue;
            const Rational f = T[i][c];
            for (std::size_t j = c; j <= n; ++j) T[i][j] -= f * T[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (T[i][n] != 0) return std::nullopt;
    RatVector x(n, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = T[i][n];
    return x;
}

/// A vertex of {x >= 0 : A x = b}, or nullopt if the polyhedron is empty.
/// Phase-one simplex with Bland's rule over exact rationals.
inline std::optional<RatVector> nonnegative_solution(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("nonnegative_solution: right-hand side has wrong length");
    const std::size_t m = A.rows(), n = A.cols(), width = n + m + 1;
    std::vector<RatVector> T(m, RatVector(width, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = sign * A(i, j);
        T[i][n + i] = 1;
        T[i][width - 1] = sign * b[i];
        basis[i] = n + i;
    }
    RatVector cost(width, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) cost[j] -= T[i][j];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            const Rational ratio = T[i][width - 1] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break; // unbounded direction; cannot happen in phase one
        const Rational inv = 1 / T[leave][enter];
        for (auto& x : T[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rational f = T[i][enter];
            for (std::size_t j = 0; j < width; ++j) T[i][j] -= f * T[leave][j];
        }
        const Rational f = cost[enter];
        for (std::size_t j = 0; j < width; ++j) cost[j] -= f * T[leave][j];
        basis[leave] = enter;
    }
    if (cost[width - 1] != 0) return std::nullopt;
    RatVector x(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][width - 1];
    return x;
}

} // namespace toric
