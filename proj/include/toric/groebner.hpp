#pragma once

// Buchberger's algorithm specialised to pure-difference binomials, plus the
// ideal operations built on it (membership, equality, elimination,
// saturation and colon ideals).
//
// The S-polynomial of two pure differences is again a pure difference (or
// zero), and dividing a term by a binomial replaces a monomial by a monomial,
// so no coefficients are ever stored.

#include "toric/binomial.hpp"
#include "toric/exactlin.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace toric {

/// Reduced Groebner basis of a pure-difference binomial ideal. Elements are
/// oriented with the leading term in `plus` and sorted by leading term.
class ReducedGB {
public:
    ReducedGB() = default;
    ReducedGB(std::size_t nvars, MonomialOrder order, std::vector<Binomial> elements, bool unit = false)
        : nvars_(nvars), order_(std::move(order)), elements_(std::move(elements)), unit_(unit) {}

    static ReducedGB zero_ideal(std::size_t nvars, MonomialOrder order = {}) { return {nvars, std::move(order), {}}; }
    static ReducedGB unit_ideal(std::size_t nvars, MonomialOrder order = {}) {
        return {nvars, std::move(order), {}, true};
    }

    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Binomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool is_unit() const { return unit_; }
    bool is_zero_ideal() const { return !unit_ && elements_.empty(); }

    std::vector<Monomial> leading_terms() const {
        std::vector<Monomial> out;
        out.reserve(elements_.size());
        for (const auto& g : elements_) out.push_back(g.plus);
        return out;
    }

    friend bool operator==(const ReducedGB&, const ReducedGB&) = default;

private:
    std::size_t nvars_ = 0;
    MonomialOrder order_;
    std::vector<Binomial> elements_;
    bool unit_ = false;
};

namespace detail {

inline void check_term(const Monomial& m) {
    for (int e : m)
        if (e < 0) throw CoefficientCollapse("reduction produced a negative exponent");
}

/// Rewrite m by the leading terms of `basis` until no leading term divides it.
inline Monomial reduce_monomial(Monomial m, const std::vector<Binomial>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : basis) {
            if (!divides(g.plus, m)) continue;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.minus[i] - g.plus[i];
            changed = true;
            break;
        }
    }
    check_term(m);
    return m;
}

/// Full normal form of p - q; nullopt when it vanishes.
inline std::optional<Binomial> reduce_binomial(const Binomial& b, const std::vector<Binomial>& basis,
                                               const MonomialOrder& order) {
    Monomial p = reduce_monomial(b.plus, basis);
    Monomial q = reduce_monomial(b.minus, basis);
    if (p == q) return std::nullopt;
    return Binomial(std::move(p), std::move(q)).oriented(order);
}

inline void check_compatible(const ReducedGB& a, const ReducedGB& b, const char* what) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument(std::string(what) + ": variable count mismatch");
    if (!(a.order() == b.order())) throw OrderMismatch(std::string(what) + ": monomial orders differ");
}

inline Binomial embed_shift(const Binomial& b, std::size_t shift, std::size_t total) {
    Monomial p(total, 0), q(total, 0);
    for (std::size_t i = 0; i < b.nvars(); ++i) {
        p[i + shift] = b.plus[i];
        q[i + shift] = b.minus[i];
    }
    return {std::move(p), std::move(q)};
}

} // namespace detail

/// Remainder of b under division by G; nullopt means b lies in <G>.
inline std::optional<Binomial> normal_form(const Binomial& b, const ReducedGB& G) {
    if (b.nvars() != G.nvars()) throw std::invalid_argument("normal_form: variable count mismatch");
    if (b.is_zero() || G.is_unit()) return std::nullopt;
    return detail::reduce_binomial(b, G.elements(), G.order());
}

inline Monomial normal_form(const Monomial& m, const ReducedGB& G) {
    if (G.is_unit()) throw std::invalid_argument("normal_form: monomials vanish in the unit ideal");
    return detail::reduce_monomial(m, G.elements());
}

/// Reduced Groebner basis of <gens>. S-pairs are processed smallest lcm
/// first (ties by generator index); Buchberger's coprime and chain criteria
/// discard pairs.
inline ReducedGB buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order, std::size_t nvars) {
    std::vector<Binomial> basis;
    std::vector<bool> active;

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        const auto c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add = [&](Binomial h) {
        const std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            if (!active[i]) continue;
            queue.insert(Pair{lcm(basis[i].plus, h.plus), i, k});
            pending.emplace(i, k);
        }
        basis.push_back(std::move(h));
        active.push_back(true);
    };

    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw std::invalid_argument("buchberger: generator has wrong variable count");
        if (g.is_zero()) continue;
        auto r = detail::reduce_binomial(g, basis, order);
        if (r) add(std::move(*r));
    }

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending.count({a, b}) > 0;
    };

    while (!queue.empty()) {
        const Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});
        const Binomial& f = basis[pr.i];
        const Binomial& g = basis[pr.j];
        if (coprime(f.plus, g.plus)) continue;

        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j || !active[k]) continue;
            if (divides(basis[k].plus, pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
        }
        if (chain) continue;

        Binomial s(pr.lcm - f.plus + f.minus, pr.lcm - g.plus + g.minus);
        detail::check_term(s.plus);
        detail::check_term(s.minus);
        auto r = detail::reduce_binomial(s, basis, order);
        if (r) add(std::move(*r));
    }

    // Minimalise, then reduce the trailing terms.
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !divides(basis[j].plus, basis[i].plus)) continue;
            if (basis[j].plus != basis[i].plus || j < i) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Binomial> reduced;
    reduced.reserve(minimal.size());
    for (const auto& g : minimal) {
        Monomial tail = detail::reduce_monomial(g.minus, minimal);
        if (tail == g.plus) throw CoefficientCollapse("leading term cancelled during interreduction");
        reduced.emplace_back(g.plus, std::move(tail));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&order](const Binomial& a, const Binomial& b) { return order.less(a.plus, b.plus); });
    return ReducedGB(nvars, order, std::move(reduced));
}

inline ReducedGB buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order = {}) {
    if (gens.empty()) throw std::invalid_argument("buchberger: variable count unknown for empty input");
    return buchberger(gens, order, gens.front().nvars());
}

inline bool ideal_membership(const Binomial& b, const ReducedGB& I) { return !normal_form(b, I).has_value(); }

inline bool ideal_equal(const ReducedGB& I, const ReducedGB& J) {
    detail::check_compatible(I, J, "ideal_equal");
    if (I.is_unit() || J.is_unit()) return I.is_unit() == J.is_unit();
    return I.elements() == J.elements();
}

/// I ⊆ J, decided by reducing the generators of I modulo J.
inline bool ideal_contains(const ReducedGB& J, const ReducedGB& I) {
    detail::check_compatible(I, J, "ideal_contains");
    if (J.is_unit()) return true;
    if (I.is_unit()) return false;
    return std::all_of(I.elements().begin(), I.elements().end(),
                       [&J](const Binomial& g) { return ideal_membership(g, J); });
}

inline ReducedGB ideal_sum(const ReducedGB& I, const ReducedGB& J) {
    detail::check_compatible(I, J, "ideal_sum");
    if (I.is_unit() || J.is_unit()) return ReducedGB::unit_ideal(I.nvars(), I.order());
    std::vector<Binomial> gens = I.elements();
    gens.insert(gens.end(), J.elements().begin(), J.elements().end());
    return buchberger(gens, I.order(), I.nvars());
}

/// I ∩ K[x_k, ..., x_{n-1}], with the first k variables dropped from the
/// result. I must carry an elimination order for its first k variables.
inline ReducedGB eliminate(const ReducedGB& I, std::size_t drop_first_k) {
    if (drop_first_k == 0) return I;
    if (drop_first_k > I.nvars()) throw std::invalid_argument("eliminate: more variables than the ring has");
    const MonomialOrder& ord = I.order();
    const bool full = drop_first_k == I.nvars();
    if (!full && !ord.is_elimination_for(drop_first_k))
        throw OrderMismatch("eliminate: order " + ord.name() + " does not eliminate the first " +
                            std::to_string(drop_first_k) + " variables");

    MonomialOrder rest{ord.base, 0, {}};
    if (!ord.permutation.empty()) {
        for (std::size_t p = 0; p < drop_first_k; ++p)
            if (ord.permutation[p] >= drop_first_k)
                throw OrderMismatch("eliminate: permutation does not keep the eliminated block first");
        for (std::size_t p = drop_first_k; p < ord.permutation.size(); ++p)
            rest.permutation.push_back(ord.permutation[p] - drop_first_k);
    }
    const std::size_t n = I.nvars() - drop_first_k;
    if (I.is_unit()) return ReducedGB::unit_ideal(n, rest);

    std::vector<Binomial> kept;
    for (const auto& g : I.elements()) {
        bool free = true;
        for (std::size_t v = 0; v < drop_first_k && free; ++v)
            if (g.plus[v] != 0 || g.minus[v] != 0) free = false;
        if (!free) continue;
        kept.emplace_back(Monomial(g.plus.begin() + static_cast<std::ptrdiff_t>(drop_first_k), g.plus.end()),
                          Monomial(g.minus.begin() + static_cast<std::ptrdiff_t>(drop_first_k), g.minus.end()));
    }
    if (full) return ReducedGB::zero_ideal(0, rest);
    std::sort(kept.begin(), kept.end(),
              [&rest](const Binomial& a, const Binomial& b) { return rest.less(a.plus, b.plus); });
    return ReducedGB(n, rest, std::move(kept));
}

namespace detail {

/// Order on K[t, x] eliminating t and restricting to `base` on x.
inline MonomialOrder with_leading_auxiliary(const MonomialOrder& base) {
    if (base.block != 0) throw OrderMismatch("auxiliary-variable constructions need a non-block order");
    MonomialOrder o = MonomialOrder::elimination(1, base.base);
    if (!base.permutation.empty()) {
        o.permutation.push_back(0);
        for (std::size_t v : base.permutation) o.permutation.push_back(v + 1);
    }
    return o;
}

} // namespace detail

/// I : (x^m)^∞ via one auxiliary variable t and the generator t*x^m - 1.
inline ReducedGB saturate(const ReducedGB& I, const Monomial& m) {
    if (m.size() != I.nvars()) throw std::invalid_argument("saturate: monomial has wrong variable count");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("saturate: not a monomial");
    if (is_zero(m) || I.is_unit() || I.is_zero_ideal()) return I;

    const std::size_t n = I.nvars() + 1;
    const MonomialOrder order = detail::with_leading_auxiliary(I.order());
    std::vector<Binomial> gens;
    gens.reserve(I.size() + 1);
    for (const auto& g : I.elements()) gens.push_back(detail::embed_shift(g, 1, n));
    Monomial tm(n, 0);
    tm[0] = 1;
    for (std::size_t i = 0; i < m.size(); ++i) tm[i + 1] = m[i];
    gens.emplace_back(std::move(tm), Monomial(n, 0));
    ReducedGB sat = eliminate(buchberger(gens, order, n), 1);
    return ReducedGB(sat.nvars(), I.order(), sat.elements(), sat.is_unit());
}

inline Monomial product_of_all_variables(std::size_t n) { return Monomial(n, 1); }

/// I equals its saturation by the product of all variables.
inline bool is_lattice_ideal(const ReducedGB& I) {
    if (I.is_unit()) return false;
    return ideal_equal(saturate(I, product_of_all_variables(I.nvars())), I);
}

/// Exponent lattice spanned by the basis elements.
inline LatticeBasis exponent_lattice(const ReducedGB& I) {
    LatticeBasis out;
    out.ambient_rank = I.nvars();
    if (I.is_zero_ideal() || I.is_unit()) return out;
    std::vector<IntVector> rows;
    for (const auto& g : I.elements()) {
        IntVector v;
        for (int x : g.exponent()) v.emplace_back(x);
        rows.push_back(std::move(v));
    }
    const HermiteResult hnf = hermite_normal_form(IntMatrix::from_rows(rows, I.nvars()));
    for (std::size_t r = 0; r < hnf.rank; ++r) out.vectors.push_back(hnf.H.row(r));
    return out;
}

/// Primality test for pure-difference ideals in characteristic zero: I is a
/// lattice ideal whose lattice is saturated.
inline bool is_prime(const ReducedGB& I) {
    if (I.is_unit()) return false;
    if (I.is_zero_ideal()) return true;
    if (!is_lattice_ideal(I)) return false;
    return is_saturated_sublattice(exponent_lattice(I));
}

using ColonElement = std::variant<Monomial, Binomial>;

/// I : <f^k>. Monomial f is handled through I ∩ <x^{k m}> computed by
/// elimination. A binomial f is supported when the answer is determined by
/// membership and primality (f ∈ I gives the unit ideal, prime I gives I).
inline ReducedGB colon_power(const ReducedGB& I, const ColonElement& f, std::size_t k) {
    if (k == 0) throw std::invalid_argument("colon_power: k must be at least 1");
    if (I.is_unit()) return I;

    if (const auto* bin = std::get_if<Binomial>(&f)) {
        if (bin->nvars() != I.nvars()) throw std::invalid_argument("colon_power: variable count mismatch");
        if (bin->is_zero() || ideal_membership(*bin, I)) return ReducedGB::unit_ideal(I.nvars(), I.order());
        if (is_prime(I)) return I;
        throw std::domain_error("colon_power: colon by a binomial of a non-prime ideal is not supported");
    }

    const Monomial& m = std::get<Monomial>(f);
    if (m.size() != I.nvars()) throw std::invalid_argument("colon_power: variable count mismatch");
    Monomial c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw std::invalid_argument("colon_power: not a monomial");
        c[i] = m[i] * static_cast<int>(k);
    }
    if (is_zero(c) || I.is_zero_ideal()) return I;

    const std::size_t n = I.nvars() + 1;
    const MonomialOrder order = detail::with_leading_auxiliary(I.order());
    std::vector<Binomial> gens;
    for (const auto& g : I.elements()) {
        Binomial e = detail::embed_shift(g, 1, n);
        e.plus[0] += 1;
        e.minus[0] += 1;
        gens.push_back(std::move(e));
    }
    Monomial xc(n, 0), txc(n, 0);
    for (std::size_t i = 0; i < c.size(); ++i) xc[i + 1] = txc[i + 1] = c[i];
    txc[0] = 1;
    gens.emplace_back(std::move(txc), std::move(xc));
    const ReducedGB meet = eliminate(buchberger(gens, order, n), 1);

    std::vector<Binomial> quotients;
    for (const auto& g : meet.elements()) {
        if (!divides(c, g.plus) || !divides(c, g.minus))
            throw CoefficientCollapse("colon_power: intersection element not divisible by the monomial");
        quotients.emplace_back(g.plus - c, g.minus - c);
    }
    return buchberger(quotients, I.order(), I.nvars());
}

} // namespace toric
