#pragma once

// Exponent vectors, monomial orders and pure-difference binomials.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

/// Integer exponent vector. Nonnegative when it stands for a monomial; may
/// carry negative entries when it stands for a lattice element.
using ExpVec = std::vector<int>;
using Monomial = ExpVec;

struct ExpVecHash {
    std::size_t operator()(const ExpVec& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline ExpVec positive_part(const ExpVec& a) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > 0 ? a[i] : 0;
    return out;
}

inline ExpVec negative_part(const ExpVec& a) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] < 0 ? -a[i] : 0;
    return out;
}

inline std::vector<std::size_t> support(const ExpVec& a) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s.push_back(i);
    return s;
}

inline bool is_zero(const ExpVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline int total_degree(const ExpVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

inline ExpVec operator+(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline ExpVec operator-(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline ExpVec unit_vector(std::size_t n, std::size_t i, int value = 1) {
    ExpVec v(n, 0);
    v.at(i) = value;
    return v;
}

/// Thrown when reduction would leave the pure-difference world. This never
/// signals bad input; it means an engine invariant broke.
class CoefficientCollapse : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Monomial order on K[x_0..x_{n-1}].
///
/// `permutation[p]` is the variable sitting at rank p (rank 0 is the largest
/// variable). An empty permutation means the natural order x_0 > x_1 > ...
/// With `block > 0` this is an elimination order: the first `block` ranks are
/// compared by degrevlex first, ties are broken by `base` on the remaining
/// ranks.
struct MonomialOrder {
    enum class Kind { degrevlex, lex };

    Kind base = Kind::degrevlex;
    std::size_t block = 0;
    std::vector<std::size_t> permutation;

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::lex, 0, {}}; }
    static MonomialOrder elimination(std::size_t first_block, Kind rest = Kind::degrevlex) {
        return {rest, first_block, {}};
    }

    bool is_elimination_for(std::size_t k) const { return k == 0 || block == k; }

    std::size_t var_at(std::size_t rank) const { return permutation.empty() ? rank : permutation[rank]; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.size();
        if (block > 0) {
            const auto c = compare_range(a, b, 0, std::min(block, n), Kind::degrevlex);
            if (c != 0) return c;
            return compare_range(a, b, std::min(block, n), n, base);
        }
        return compare_range(a, b, 0, n, base);
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string name() const {
        std::string s = base == Kind::lex ? "lex" : "degrevlex";
        if (block > 0) s = "elimination(" + std::to_string(block) + "," + s + ")";
        return s;
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                                       Kind kind) const {
        if (kind == Kind::lex) {
            for (std::size_t p = lo; p < hi; ++p) {
                const std::size_t v = var_at(p);
                if (a[v] != b[v]) return a[v] <=> b[v];
            }
            return std::strong_ordering::equal;
        }
        int da = 0, db = 0;
        for (std::size_t p = lo; p < hi; ++p) {
            da += a[var_at(p)];
            db += b[var_at(p)];
        }
        if (da != db) return da <=> db;
        for (std::size_t p = hi; p-- > lo;) {
            const std::size_t v = var_at(p);
            if (a[v] != b[v]) return b[v] <=> a[v];
        }
        return std::strong_ordering::equal;
    }
};

/// x^plus - x^minus. Coefficients are implicitly +1 and -1.
struct Binomial {
    Monomial plus;
    Monomial minus;

    Binomial() = default;
    Binomial(Monomial p, Monomial m) : plus(std::move(p)), minus(std::move(m)) {
        if (plus.size() != minus.size()) throw std::invalid_argument("Binomial: length mismatch");
        for (std::size_t i = 0; i < plus.size(); ++i)
            if (plus[i] < 0 || minus[i] < 0) throw std::invalid_argument("Binomial: negative exponent");
    }

    /// x^{a+} - x^{a-} for a lattice element a.
    static Binomial from_lattice(const ExpVec& a) { return {positive_part(a), negative_part(a)}; }

    std::size_t nvars() const { return plus.size(); }
    bool is_zero() const { return plus == minus; }
    ExpVec exponent() const { return plus - minus; }
    int degree() const { return std::max(total_degree(plus), total_degree(minus)); }
    bool is_homogeneous() const { return total_degree(plus) == total_degree(minus); }
    Binomial negated() const { return {minus, plus}; }

    /// Flip so that plus is the larger term under `order`.
    Binomial oriented(const MonomialOrder& order) const {
        return order.less(plus, minus) ? negated() : *this;
    }

    friend bool operator==(const Binomial&, const Binomial&) = default;
    friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// Multiply both terms by x^m.
inline Binomial operator*(const Monomial& m, const Binomial& b) { return {m + b.plus, m + b.minus}; }

inline std::string monomial_to_string(const Monomial& m, const std::string& var = "e") {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string binomial_to_string(const Binomial& b, const std::string& var = "e") {
    if (b.is_zero()) return "0";
    return monomial_to_string(b.plus, var) + " - " + monomial_to_string(b.minus, var);
}

} // namespace toric
