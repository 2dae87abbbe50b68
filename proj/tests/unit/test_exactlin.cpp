#include "toric/exactlin.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace toric;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    IntMatrix M(r, c);
    std::uniform_int_distribution<long> dist(lo, hi);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = dist(rng);
    return M;
}

// Cofactor expansion, independent of the Bareiss implementation.
Integer cofactor_det(const IntMatrix& M) {
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    if (n == 1) return M(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = M(i, j);
        Integer term = M(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

// gcd of all k×k minors, the k-th determinantal divisor.
Integer determinantal_divisor(const IntMatrix& M, std::size_t k) {
    Integer g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t start) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t r = start; r < M.rows(); ++r) {
            rs[depth] = r;
            pick_rows(depth + 1, r + 1);
        }
    };
    pick_cols = [&](std::size_t depth, std::size_t start) {
        if (depth == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = M(rs[i], cs[j]);
            Integer d = cofactor_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
        }
        for (std::size_t c = start; c < M.cols(); ++c) {
            cs[depth] = c;
            pick_cols(depth + 1, c + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

IntMatrix cycle4_incidence() { return {{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}; }

bool annihilates(const IntMatrix& M, const IntVector& v) {
    for (const auto& x : M.apply(v))
        if (x != 0) return false;
    return true;
}

} // namespace

TEST(Hermite, IdentityIsFixed) {
    const auto I = IntMatrix::identity(2);
    const auto r = hermite_normal_form(I);
    EXPECT_EQ(r.H, I);
    EXPECT_EQ(r.U, I);
}

TEST(Hermite, SmallExample) {
    const IntMatrix M{{2, 4}, {1, 3}};
    const auto r = hermite_normal_form(M);
    EXPECT_EQ(r.H(0, 0), 1);
    EXPECT_EQ(r.U * M, r.H);
    EXPECT_EQ(abs(cofactor_det(r.U)), 1);
}

TEST(Hermite, ZeroMatrix) {
    const IntMatrix Z(3, 2);
    const auto r = hermite_normal_form(Z);
    EXPECT_TRUE(r.H.is_zero());
    EXPECT_EQ(r.U, IntMatrix::identity(3));
    EXPECT_EQ(r.rank, 0u);
}

TEST(Hermite, RandomUnimodularTransform) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const auto M = random_matrix(rng, r, c, -6, 6);
        const auto h = hermite_normal_form(M);
        EXPECT_EQ(h.U * M, h.H);
        EXPECT_EQ(abs(cofactor_det(h.U)), 1);
        // Row echelon with positive pivots and zero rows at the bottom.
        std::size_t last_pivot = 0;
        for (std::size_t i = 0; i < h.rank; ++i) {
            std::size_t p = 0;
            while (p < c && h.H(i, p) == 0) ++p;
            ASSERT_LT(p, c);
            EXPECT_GT(h.H(i, p), 0);
            if (i > 0) {
                EXPECT_GT(p, last_pivot);
            }
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(h.H(k, p), 0);
                EXPECT_LT(h.H(k, p), h.H(i, p));
            }
            last_pivot = p;
        }
        for (std::size_t i = h.rank; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(h.H(i, j), 0);
    }
}

TEST(Determinant, MatchesCofactorExpansion) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto M = random_matrix(rng, n, n, -4, 4);
        EXPECT_EQ(determinant(M), cofactor_det(M));
    }
}

TEST(Kernel, FourCycleAgainstBoxSearch) {
    const auto A = cycle4_incidence();
    const auto K = kernel_basis(A);
    ASSERT_EQ(K.size(), 1u);
    const IntVector expected{1, -1, 1, -1};
    IntVector negated;
    for (const auto& x : expected) negated.push_back(-x);
    EXPECT_TRUE(K.vectors[0] == expected || K.vectors[0] == negated);
    // Every nonzero kernel vector in a small box is a multiple of the basis vector.
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    const IntVector v{a, b, c, d};
                    if (!annihilates(A, v)) continue;
                    EXPECT_TRUE(a == -b && b == -c && c == -d);
                }
}

TEST(Kernel, FullRankSquareIsEmpty) { EXPECT_TRUE(kernel_basis(IntMatrix{{2, 1}, {1, 1}}).empty()); }

TEST(Kernel, OneByTwo) {
    const auto K = kernel_basis(IntMatrix{{2, -4}});
    ASSERT_EQ(K.size(), 1u);
    EXPECT_EQ(K.vectors[0], (IntVector{2, 1}));
    EXPECT_TRUE(is_saturated_sublattice(K));
}

TEST(Kernel, RandomRankNullityAndSaturation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        const auto M = random_matrix(rng, r, c, -3, 3);
        const auto K = kernel_basis(M);
        EXPECT_EQ(rank(M) + K.size(), c);
        for (const auto& v : K.vectors) EXPECT_TRUE(annihilates(M, v));
        if (!K.empty()) {
            EXPECT_TRUE(is_saturated_sublattice(K));
            EXPECT_EQ(rank(K.as_matrix()), K.size());
        }
    }
}

TEST(Kernel, CanonicalUnderRowOperations) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto M = random_matrix(rng, 3, 6, -3, 3);
        IntMatrix N = M;
        N.add_row_multiple(0, 1, 2);
        N.swap_rows(1, 2);
        N.negate_row(2);
        EXPECT_EQ(kernel_basis(M).vectors, kernel_basis(N).vectors);
    }
}

TEST(Smith, Identity) {
    const auto s = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(s.invariant_factors, (IntVector{1, 1, 1}));
}

TEST(Smith, DiagonalTwoThree) {
    const IntMatrix M{{2, 0}, {0, 3}};
    const auto s = smith_normal_form(M);
    EXPECT_EQ(s.invariant_factors, (IntVector{1, 6}));
    EXPECT_EQ(determinantal_divisor(M, 1), 1);
    EXPECT_EQ(determinantal_divisor(M, 2), 6);
}

TEST(Smith, SingleEntry) { EXPECT_EQ(smith_normal_form(IntMatrix{{2}}).invariant_factors, (IntVector{2})); }

TEST(Smith, RandomAgainstDeterminantalDivisors) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const auto M = random_matrix(rng, r, c, -5, 5);
        const auto s = smith_normal_form(M);
        Integer prefix = 1;
        for (std::size_t k = 0; k < s.invariant_factors.size(); ++k) {
            if (k + 1 < s.invariant_factors.size()) {
                EXPECT_EQ(s.invariant_factors[k + 1] % s.invariant_factors[k], 0);
            }
            prefix *= s.invariant_factors[k];
            EXPECT_EQ(prefix, determinantal_divisor(M, k + 1));
        }
        EXPECT_EQ(s.invariant_factors.size(), rank(M));
    }
}

TEST(Saturation, Examples) {
    EXPECT_TRUE(is_saturated_sublattice(LatticeBasis{4, {IntVector{1, -1, 1, -1}}}));
    EXPECT_FALSE(is_saturated_sublattice(LatticeBasis{2, {IntVector{2, 0}}}));
    EXPECT_THROW(is_saturated_sublattice(LatticeBasis{2, {}}), std::invalid_argument);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(cycle4_incidence()), 3u);
    EXPECT_EQ(rank(IntMatrix{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}), 3u);
    EXPECT_EQ(rank(IntMatrix(3, 4)), 0u);
}
