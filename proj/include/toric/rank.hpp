#pragma once

// Rank of integer matrices over the rationals by fraction-free elimination.
// Entries start in int64; on overflow the computation restarts in GMP.

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace toric {

using SmallMatrix = std::vector<std::vector<long long>>;

enum class RankMethod {
    exact,
    modular, ///< rank modulo one large prime; heuristic, may undercount
};

namespace detail {

struct Overflow {};

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline long long abs_ll(long long a) { return a < 0 ? -a : a; }
inline mpz_class abs_ll(const mpz_class& a) { return abs(a); }

inline long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }

inline long long mul(long long a, long long b) { return checked_mul(a, b); }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline long long sub(long long a, long long b) { return checked_sub(a, b); }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }

/// Row elimination preferring pivots of absolute value one; each reduced row
/// is divided by the gcd of its entries to contain growth.
template <class Int>
std::size_t eliminate_rank(std::vector<std::vector<Int>> rows) {
    std::size_t rank = 0;
    std::vector<bool> used(rows.size(), false);
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r][c] == 0) continue;
            if (pivot == rows.size() || abs_ll(rows[r][c]) < abs_ll(rows[pivot][c])) pivot = r;
            if (abs_ll(rows[r][c]) == 1) break;
        }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        ++rank;
        const Int p = rows[pivot][c];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r][c] == 0) continue;
            const Int q = rows[r][c];
            Int g = 0;
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] = sub(mul(p, rows[r][k]), mul(q, rows[pivot][k]));
                g = gcd_of(g, rows[r][k]);
            }
            if (g > 1)
                for (std::size_t k = c; k < cols; ++k) rows[r][k] /= g;
        }
    }
    return rank;
}

inline std::size_t modular_rank(const SmallMatrix& M) {
    constexpr long long prime = 2305843009213693951LL; // 2^61 - 1
    auto mulmod = [](long long a, long long b) {
        return static_cast<long long>(static_cast<__int128>(a) * b % prime);
    };
    auto powmod = [&](long long a, long long e) {
        long long r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::vector<std::vector<long long>> rows = M;
    for (auto& row : rows)
        for (auto& x : row) x = ((x % prime) + prime) % prime;
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        std::size_t p = top;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[top]);
        const long long inv = powmod(rows[top][c], prime - 2);
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const long long f = mulmod(rows[r][c], inv);
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] = ((rows[r][k] - mulmod(f, rows[top][k])) % prime + prime) % prime;
        }
        ++top;
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Rank over Q of a dense integer matrix given by rows.
inline std::size_t rational_rank(const SmallMatrix& M, RankMethod method = RankMethod::exact) {
    if (M.empty()) return 0;
    for (const auto& row : M)
        if (row.size() != M.front().size()) throw std::invalid_argument("rational_rank: ragged matrix");
    if (method == RankMethod::modular) return detail::modular_rank(M);
    try {
        return detail::eliminate_rank<long long>(M);
    } catch (const detail::Overflow&) {
        std::vector<std::vector<mpz_class>> big(M.size());
        for (std::size_t r = 0; r < M.size(); ++r)
            for (long long x : M[r]) big[r].emplace_back(static_cast<long>(x));
        return detail::eliminate_rank<mpz_class>(std::move(big));
    }
}

} // namespace toric
