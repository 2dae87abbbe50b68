#pragma once

// Standard monomials, Hilbert series and multigraded Betti numbers of R/I_A.
//
// Two independent backends compute β_{i,b}(R/I_A):
//   divisor-complex  dim H̃_{i-1}(Δ_b; Q), Δ_b = {F : b - a_F ∈ NA};
//   koszul           dim H_i of the degree-b strand of K(x) ⊗ R/I, with
//                    R/I represented by standard monomials.
// Candidate degrees b are the A-images of lcms of leading terms of the
// Gröbner basis: Betti numbers of I are bounded by those of its initial
// ideal, whose Taylor resolution lives in exactly those degrees.

#include "toric/betti.hpp"
#include "toric/groebner.hpp"
#include "toric/rank.hpp"
#include "toric/toric_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace toric {

class GradingUnavailable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotGradable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The table computed up to `bound` disagrees with the Hilbert series.
class BoundTooSmall : public std::runtime_error {
public:
    BoundTooSmall(const std::string& what, MultiBettiTable partial, int bound)
        : std::runtime_error(what), partial_(std::move(partial)), bound_(bound) {}
    const MultiBettiTable& partial() const { return partial_; }
    int bound() const { return bound_; }

private:
    MultiBettiTable partial_;
    int bound_;
};

using Polynomial = std::vector<Integer>; // coefficient of t^k at index k

// ---------------------------------------------------------- polynomials

namespace poly {

inline void trim(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Polynomial sub(Polynomial a, const Polynomial& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Polynomial mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline Polynomial shift(const Polynomial& a, std::size_t k) {
    if (a.empty()) return {};
    Polynomial out(k, 0);
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

/// 1 - t^k.
inline Polynomial one_minus_power(std::size_t k) {
    Polynomial p(k + 1, 0);
    p[0] += 1;
    p[k] -= 1;
    trim(p);
    return p;
}

/// a / (1 - t), which must be exact.
inline Polynomial divide_one_minus_t(const Polynomial& a) {
    // a = (1 - t) q  ⇒  q_k = a_0 + ... + a_k.
    if (a.empty()) return {};
    Polynomial q(a.size() - 1, 0);
    Integer run = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        run += a[k];
        q[k] = run;
    }
    if (run + a.back() != 0) throw std::domain_error("divide_one_minus_t: not divisible");
    trim(q);
    return q;
}

inline Integer eval(const Polynomial& p, const Integer& t) {
    Integer acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
    return acc;
}

inline std::string to_string(const Polynomial& p, const std::string& var = "t") {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const Integer c = p[k];
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (k == 0 || mag != 1) s += mag.get_str();
        if (k > 0) s += (mag != 1 ? "*" : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
}

} // namespace poly

// ----------------------------------------------------- standard monomials

/// Monomials of the given total degree divisible by no leading term.
inline std::vector<Monomial> standard_monomials(const ReducedGB& I, int degree) {
    if (I.is_unit() || degree < 0) return {};
    const std::size_t n = I.nvars();
    std::vector<Monomial> out;
    if (n == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Monomial m(n, 0);
    const auto lts = I.leading_terms();
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            m[i] = left;
            if (std::none_of(lts.begin(), lts.end(), [&](const Monomial& lt) { return divides(lt, m); }))
                out.push_back(m);
            m[i] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
        m[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

// ---------------------------------------------------------- Hilbert series

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        const int da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens)
        if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return divides(h, g); })) out.push_back(g);
    return out;
}

/// Numerator of the Hilbert series of R/⟨gens⟩ over (1-t)^n, deg x_i = 1.
inline Polynomial monomial_numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    bool coprime_all = true;
    for (std::size_t i = 0; i < gens.size() && coprime_all; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime_all; ++j)
            if (!coprime(gens[i], gens[j])) coprime_all = false;
    if (coprime_all) {
        Polynomial p{1};
        for (const auto& g : gens) p = poly::mul(p, poly::one_minus_power(static_cast<std::size_t>(total_degree(g))));
        return p;
    }
    // N(J + ⟨m⟩) = N(J) - t^{deg m} N(J : m), with m of largest degree.
    const Monomial m = gens.back();
    gens.pop_back();
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(g - gcd(g, m));
    return poly::sub(monomial_numerator(gens),
                     poly::shift(monomial_numerator(std::move(colon)), static_cast<std::size_t>(total_degree(m))));
}

} // namespace detail

/// HS(t) = numerator / (1-t)^s = h_polynomial / (1-t)^dimension.
struct HilbertData {
    Polynomial numerator;
    std::size_t dimension = 0;
    Polynomial h_polynomial;
};

inline HilbertData hilbert_data(const ToricIdeal& I) {
    if (!grading_vector(I.matrix)) throw NotGradable("hilbert_data: the columns do not lie on a common hyperplane");
    HilbertData h;
    h.numerator = I.gb.is_unit() ? Polynomial{} : detail::monomial_numerator(I.gb.leading_terms());
    h.dimension = krull_dimension(I);
    h.h_polynomial = h.numerator;
    for (std::size_t k = h.dimension; k < I.nvars(); ++k) h.h_polynomial = poly::divide_one_minus_t(h.h_polynomial);
    if (poly::eval(h.h_polynomial, 1) == 0) throw std::logic_error("hilbert_data: h(1) vanished; dimension is wrong");
    return h;
}

// ------------------------------------------------------------ Betti numbers

enum class BettiBackend { divisor_complex, koszul };

inline std::string backend_name(BettiBackend b) {
    return b == BettiBackend::divisor_complex ? "divisor-complex" : "koszul";
}

struct BettiOptions {
    BettiBackend backend = BettiBackend::divisor_complex;
    std::optional<int> max_degree;  ///< bound on the x-degree of strands; default: Taylor bound
    RankMethod rank = RankMethod::exact;
    std::size_t threads = 0;        ///< 0: TORIC_SPLIT_THREADS or hardware concurrency
    bool all_strands = false;       ///< enumerate every semigroup degree instead of the lcm lattice
    bool check_completeness = true; ///< compare with the Hilbert series when a grading exists
};

struct BettiResult {
    MultiBettiTable table;
    int degree_bound = 0;
    int taylor_bound = 0;
    bool complete = false; ///< bound reaches the Taylor bound
    std::size_t strands = 0;
};

/// x-degree of the lcm of all leading terms; no Betti number of R/I lives
/// above it.
inline int taylor_degree_bound(const ReducedGB& I) {
    if (I.is_zero_ideal() || I.is_unit()) return 0;
    Monomial l(I.nvars(), 0);
    for (const auto& g : I.elements()) l = lcm(l, g.plus);
    return total_degree(l);
}

inline std::size_t thread_budget(std::size_t requested = 0) {
    std::size_t n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("TORIC_SPLIT_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) n = static_cast<std::size_t>(v);
        }
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

namespace detail {

struct MultiDegreeHash {
    std::size_t operator()(const MultiDegree& v) const noexcept {
        std::size_t h = 0x84222325cbf29ce4ull;
        for (long x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

/// Columns of a nonnegative matrix without zero columns, with memoized
/// membership in the affine semigroup they generate.
class Semigroup {
public:
    explicit Semigroup(const IntMatrix& A) : rows_(A.rows()), cols_(A.cols()) {
        for (std::size_t j = 0; j < cols_; ++j) {
            MultiDegree c(rows_);
            bool nonzero = false;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (A(i, j) < 0) throw GradingUnavailable("Betti numbers need a nonnegative matrix");
                if (!A(i, j).fits_slong_p()) throw GradingUnavailable("matrix entry too large");
                c[i] = A(i, j).get_si();
                nonzero = nonzero || c[i] != 0;
            }
            if (!nonzero) throw GradingUnavailable("Betti numbers need a matrix without zero columns");
            columns_.push_back(std::move(c));
        }
        by_row_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (columns_[j][i] > 0) by_row_[i].push_back(j);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const MultiDegree& column(std::size_t j) const { return columns_[j]; }

    MultiDegree image(const Monomial& m) const {
        MultiDegree b(rows_, 0);
        for (std::size_t j = 0; j < cols_; ++j)
            if (m[j])
                for (std::size_t i = 0; i < rows_; ++i) b[i] += m[j] * columns_[j][i];
        return b;
    }

    /// b ∈ NA.
    bool contains(const MultiDegree& b) {
        std::size_t first = rows_;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (b[i] < 0) return false;
            if (first == rows_ && b[i] > 0) first = i;
        }
        if (first == rows_) return true;
        auto it = memo_.find(b);
        if (it != memo_.end()) return it->second;
        bool found = false;
        MultiDegree rest(rows_);
        for (std::size_t j : by_row_[first]) {
            bool fits = true;
            for (std::size_t i = 0; i < rows_ && fits; ++i) {
                rest[i] = b[i] - columns_[j][i];
                fits = rest[i] >= 0;
            }
            if (fits && contains(rest)) {
                found = true;
                break;
            }
        }
        memo_.emplace(b, found);
        return found;
    }

    /// All m ∈ N^s with A m = b.
    std::vector<Monomial> fiber(const MultiDegree& b) const {
        std::vector<Monomial> out;
        Monomial m(cols_, 0);
        MultiDegree rest = b;
        // suffix_support[j][i]: some column ≥ j is positive in row i.
        std::vector<std::vector<bool>> suffix(cols_ + 1, std::vector<bool>(rows_, false));
        for (std::size_t j = cols_; j-- > 0;)
            for (std::size_t i = 0; i < rows_; ++i) suffix[j][i] = suffix[j + 1][i] || columns_[j][i] > 0;
        auto rec = [&](auto&& self, std::size_t j) -> void {
            for (std::size_t i = 0; i < rows_; ++i)
                if (rest[i] > 0 && !suffix[j][i]) return;
            if (j == cols_) {
                out.push_back(m);
                return;
            }
            long cap = std::numeric_limits<long>::max();
            for (std::size_t i = 0; i < rows_; ++i)
                if (columns_[j][i] > 0) cap = std::min(cap, rest[i] / columns_[j][i]);
            for (long e = 0; e <= cap; ++e) {
                m[j] = static_cast<int>(e);
                if (e > 0)
                    for (std::size_t i = 0; i < rows_; ++i) rest[i] -= columns_[j][i];
                self(self, j + 1);
            }
            for (std::size_t i = 0; i < rows_; ++i) rest[i] += cap * columns_[j][i];
            m[j] = 0;
        };
        rec(rec, 0);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<MultiDegree> columns_;
    std::vector<std::vector<std::size_t>> by_row_;
    std::unordered_map<MultiDegree, bool, MultiDegreeHash> memo_;
};

using FaceMask = std::uint64_t;

/// Faces of Δ_b as bitmasks, grouped by cardinality.
inline std::vector<std::vector<FaceMask>> divisor_complex(Semigroup& S, const MultiDegree& b) {
    const std::size_t s = S.cols();
    std::vector<std::vector<FaceMask>> faces(s + 1);
    MultiDegree rest = b;
    auto rec = [&](auto&& self, std::size_t start, FaceMask mask, std::size_t size) -> void {
        faces[size].push_back(mask);
        for (std::size_t j = start; j < s; ++j) {
            const auto& c = S.column(j);
            bool fits = true;
            for (std::size_t i = 0; i < c.size() && fits; ++i) fits = rest[i] >= c[i];
            if (!fits) continue;
            for (std::size_t i = 0; i < c.size(); ++i) rest[i] -= c[i];
            if (S.contains(rest)) self(self, j + 1, mask | (FaceMask{1} << j), size + 1);
            for (std::size_t i = 0; i < c.size(); ++i) rest[i] += c[i];
        }
    };
    rec(rec, 0, 0, 0);
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    for (auto& f : faces) std::sort(f.begin(), f.end());
    return faces;
}

inline int sign_of_removal(FaceMask face, std::size_t j) {
    const FaceMask below = face & ((FaceMask{1} << j) - 1);
    return __builtin_popcountll(below) % 2 == 0 ? 1 : -1;
}

/// Matrix of the boundary from faces of size k to faces of size k-1.
inline SmallMatrix boundary(const std::vector<FaceMask>& upper, const std::vector<FaceMask>& lower) {
    SmallMatrix M(upper.size(), std::vector<long long>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
        FaceMask rest = upper[r];
        while (rest) {
            const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(rest));
            rest &= rest - 1;
            const FaceMask sub = upper[r] & ~(FaceMask{1} << j);
            const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            M[r][static_cast<std::size_t>(it - lower.begin())] = sign_of_removal(upper[r], j);
        }
    }
    return M;
}

/// β_{i,b} = dim H̃_{i-1}(Δ_b) for all i.
inline std::map<int, long> divisor_complex_betti(Semigroup& S, const MultiDegree& b, RankMethod method) {
    const auto faces = divisor_complex(S, b);
    // A cone point makes Δ_b contractible.
    FaceMask common = 0;
    if (faces.size() > 1)
        for (FaceMask f : faces[1]) common |= f;
    if (common) {
        std::unordered_set<FaceMask> all;
        for (const auto& level : faces) all.insert(level.begin(), level.end());
        for (const auto& level : faces)
            for (FaceMask f : level) {
                FaceMask cand = common & ~f;
                while (cand) {
                    const FaceMask bit = cand & (~cand + 1);
                    cand &= cand - 1;
                    if (!all.count(f | bit)) common &= ~bit;
                }
                if (!common) break;
            }
        if (common) return {};
    }
    // ranks[k] = rank of ∂ from size-k faces to size-(k-1) faces.
    std::vector<std::size_t> ranks(faces.size() + 1, 0);
    for (std::size_t k = 1; k < faces.size(); ++k) ranks[k] = rational_rank(boundary(faces[k], faces[k - 1]), method);
    std::map<int, long> out;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        // Faces of size k have dimension k-1 and contribute to β_k.
        const long h = static_cast<long>(faces[k].size()) - static_cast<long>(ranks[k]) -
                       static_cast<long>(ranks[k + 1]);
        if (h < 0) throw std::logic_error("divisor_complex_betti: negative homology rank");
        if (h > 0) out[static_cast<int>(k)] = h;
    }
    return out;
}

/// β_{i,b} = dim H_i of the degree-b strand of K(x_1..x_s) ⊗ R/I.
inline std::map<int, long> koszul_betti(const Semigroup& S, const ReducedGB& G, const MultiDegree& b,
                                        RankMethod method) {
    const std::size_t s = S.cols();
    const auto lts = G.leading_terms();
    auto standard = [&](const Monomial& m) {
        return std::none_of(lts.begin(), lts.end(), [&](const Monomial& lt) { return divides(lt, m); });
    };
    // Basis of C_i: pairs (F, m) with |F| = i, m standard of degree b - a_F.
    struct Cell {
        FaceMask face;
        Monomial mono;
        bool operator<(const Cell& o) const { return face != o.face ? face < o.face : mono < o.mono; }
    };
    std::vector<std::vector<Cell>> cells(s + 1);
    MultiDegree rest = b;
    auto rec = [&](auto&& self, std::size_t start, FaceMask mask, std::size_t size) -> void {
        for (const auto& m : S.fiber(rest))
            if (standard(m)) cells[size].push_back({mask, m});
        for (std::size_t j = start; j < s; ++j) {
            const auto& c = S.column(j);
            bool fits = true;
            for (std::size_t i = 0; i < c.size() && fits; ++i) fits = rest[i] >= c[i];
            if (!fits) continue;
            for (std::size_t i = 0; i < c.size(); ++i) rest[i] -= c[i];
            self(self, j + 1, mask | (FaceMask{1} << j), size + 1);
            for (std::size_t i = 0; i < c.size(); ++i) rest[i] += c[i];
        }
    };
    rec(rec, 0, 0, 0);
    while (!cells.empty() && cells.back().empty()) cells.pop_back();
    for (auto& c : cells) std::sort(c.begin(), c.end());

    std::vector<std::size_t> ranks(cells.size() + 1, 0);
    for (std::size_t k = 1; k < cells.size(); ++k) {
        const auto& upper = cells[k];
        const auto& lower = cells[k - 1];
        SmallMatrix M(upper.size(), std::vector<long long>(lower.size(), 0));
        for (std::size_t r = 0; r < upper.size(); ++r) {
            FaceMask left = upper[r].face;
            while (left) {
                const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(left));
                left &= left - 1;
                Monomial m = upper[r].mono;
                m[j] += 1;
                Cell target{upper[r].face & ~(FaceMask{1} << j), normal_form(m, G)};
                const auto it = std::lower_bound(lower.begin(), lower.end(), target);
                if (it == lower.end() || it->face != target.face || it->mono != target.mono)
                    throw std::logic_error("koszul_betti: normal form left the basis");
                M[r][static_cast<std::size_t>(it - lower.begin())] += sign_of_removal(upper[r].face, j);
            }
        }
        ranks[k] = rational_rank(M, method);
    }
    std::map<int, long> out;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const long h = static_cast<long>(cells[k].size()) - static_cast<long>(ranks[k]) -
                       static_cast<long>(ranks[k + 1]);
        if (h < 0) throw std::logic_error("koszul_betti: negative homology rank");
        if (h > 0) out[static_cast<int>(k)] = h;
    }
    return out;
}

/// A-images of lcms of leading-term subsets, keyed by multidegree with the
/// smallest x-degree seen.
inline std::map<MultiDegree, int> lcm_lattice_degrees(const Semigroup& S, const ReducedGB& G, int bound) {
    std::set<Monomial> seen;
    std::vector<Monomial> frontier{Monomial(G.nvars(), 0)};
    seen.insert(frontier.front());
    const auto lts = G.leading_terms();
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& x : frontier)
            for (const auto& g : lts) {
                Monomial y = lcm(x, g);
                if (total_degree(y) > bound || seen.count(y)) continue;
                seen.insert(y);
                next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    std::map<MultiDegree, int> out;
    for (const auto& m : seen) {
        const auto b = S.image(m);
        const int d = total_degree(m);
        auto [it, fresh] = out.emplace(b, d);
        if (!fresh) it->second = std::min(it->second, d);
    }
    return out;
}

/// Every semigroup degree A m with |m| ≤ bound.
inline std::map<MultiDegree, int> semigroup_degrees(const Semigroup& S, int bound) {
    std::map<MultiDegree, int> out;
    std::set<MultiDegree> level{MultiDegree(S.rows(), 0)};
    for (int d = 0; d <= bound; ++d) {
        std::set<MultiDegree> next;
        for (const auto& b : level) {
            out.emplace(b, d);
            if (d == bound) continue;
            for (std::size_t j = 0; j < S.cols(); ++j) {
                MultiDegree c = b;
                for (std::size_t i = 0; i < c.size(); ++i) c[i] += S.column(j)[i];
                next.insert(std::move(c));
            }
        }
        level = std::move(next);
    }
    return out;
}

} // namespace detail

/// β_{i,b}(R/I_A) for the strands of x-degree ≤ bound.
inline BettiResult betti_multigraded(const ToricIdeal& I, const BettiOptions& opt = {}) {
    if (I.gb.is_unit()) throw std::invalid_argument("betti_multigraded: unit ideal");
    if (I.nvars() > 64) throw std::invalid_argument("betti_multigraded: at most 64 variables are supported");
    if (!admits_positive_multigrading(I.matrix)) throw GradingUnavailable("ker(A) meets the positive orthant");
    detail::Semigroup probe(I.matrix);

    BettiResult res;
    res.taylor_bound = taylor_degree_bound(I.gb);
    res.degree_bound = opt.max_degree.value_or(res.taylor_bound);
    if (res.degree_bound < 0) throw std::invalid_argument("betti_multigraded: negative degree bound");
    res.complete = res.degree_bound >= res.taylor_bound;

    const auto strands = opt.all_strands ? detail::semigroup_degrees(probe, res.degree_bound)
                                         : detail::lcm_lattice_degrees(probe, I.gb, res.degree_bound);
    std::vector<MultiDegree> work;
    for (const auto& [b, d] : strands) work.push_back(b);
    res.strands = work.size();

    std::vector<std::map<int, long>> results(work.size());
    const std::size_t nthreads = std::min(thread_budget(opt.threads), std::max<std::size_t>(1, work.size()));
    auto run = [&](std::size_t first) {
        detail::Semigroup S(I.matrix);
        for (std::size_t k = first; k < work.size(); k += nthreads)
            results[k] = opt.backend == BettiBackend::divisor_complex
                             ? detail::divisor_complex_betti(S, work[k], opt.rank)
                             : detail::koszul_betti(S, I.gb, work[k], opt.rank);
    };
    if (nthreads <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                try {
                    run(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (std::size_t k = 0; k < work.size(); ++k)
        for (const auto& [i, v] : results[k]) res.table.add(i, work[k], v);

    if (opt.check_completeness) {
        if (const auto c = grading_vector(I.matrix)) {
            const Polynomial euler = euler_polynomial(betti_graded(res.table, *c));
            const Polynomial numerator = hilbert_data(I).numerator;
            const std::size_t D = static_cast<std::size_t>(res.degree_bound);
            bool ok = numerator.size() <= D + 1;
            for (std::size_t j = 0; j <= D && ok; ++j) {
                const Integer a = j < euler.size() ? euler[j] : Integer(0);
                const Integer b = j < numerator.size() ? numerator[j] : Integer(0);
                ok = a == b;
            }
            if (!ok)
                throw BoundTooSmall("Betti table up to degree " + std::to_string(res.degree_bound) +
                                        " does not account for the Hilbert series; raise the degree bound (at most " +
                                        std::to_string(res.taylor_bound) + " is needed)",
                                    res.table, res.degree_bound);
        }
    }
    return res;
}

/// Standard-graded table of R/I_A; requires a grading vector.
inline GradedBettiTable betti_graded_table(const ToricIdeal& I, const BettiOptions& opt = {}) {
    const auto c = grading_vector(I.matrix);
    if (!c) throw NotGradable("betti_graded_table: the columns do not lie on a common hyperplane");
    return betti_graded(betti_multigraded(I, opt).table, *c);
}

} // namespace toric
