#pragma once

// Toric ideals of integer matrices and graphs, gradings, closed even walks
// and primitivity.

#include "toric/binomial.hpp"
#include "toric/exactlin.hpp"
#include "toric/graph.hpp"
#include "toric/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace toric {

class WalkNotClosedEven : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInIdeal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// I_A together with the matrix whose columns give deg(x_i).
struct ToricIdeal {
    IntMatrix matrix;
    ReducedGB gb;

    std::size_t nvars() const { return matrix.cols(); }
    bool is_zero() const { return gb.is_zero_ideal(); }

    /// A·m, the multidegree of x^m.
    IntVector multidegree(const Monomial& m) const {
        IntVector v(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i];
        return matrix.apply(v);
    }
};

inline std::vector<Binomial> lattice_basis_binomials(const LatticeBasis& L) {
    std::vector<Binomial> out;
    for (const auto& v : L.vectors) {
        ExpVec e(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].fits_sint_p()) throw std::overflow_error("lattice_basis_binomials: exponent too large");
            e[i] = static_cast<int>(v[i].get_si());
        }
        out.push_back(Binomial::from_lattice(e));
    }
    return out;
}

/// Lattice basis ideal of ker(A), saturated by the product of all variables.
inline ToricIdeal toric_ideal_of_matrix(const IntMatrix& A, const MonomialOrder& order = {}) {
    const std::size_t s = A.cols();
    const LatticeBasis L = kernel_basis(A);
    if (L.empty()) return {A, ReducedGB::zero_ideal(s, order)};
    const ReducedGB basis_ideal = buchberger(lattice_basis_binomials(L), order, s);
    return {A, saturate(basis_ideal, product_of_all_variables(s))};
}

inline ToricIdeal toric_ideal_of_graph(const Graph& g, const MonomialOrder& order = {}) {
    return toric_ideal_of_matrix(incidence_matrix(g), order);
}

/// f_w: product of the odd-position edges minus product of the even-position
/// edges (positions counted from 1). May be the zero binomial.
inline Binomial walk_binomial(const Graph& g, const Walk& w) {
    if (!w.is_closed_even()) throw WalkNotClosedEven("walk_binomial: walk is not closed of even length");
    Monomial plus(g.num_edges(), 0), minus(g.num_edges(), 0);
    for (std::size_t j = 0; j < w.edges.size(); ++j) (j % 2 == 0 ? plus : minus).at(w.edges[j]) += 1;
    Binomial b(std::move(plus), std::move(minus));
    const IntMatrix A = incidence_matrix(g);
    const ExpVec d = b.exponent();
    IntVector v(d.begin(), d.end());
    for (const auto& x : A.apply(v))
        if (x != 0) throw std::logic_error("walk_binomial: walk binomial is not in the kernel");
    return b;
}

/// No other nonzero x^u - x^v in I with x^u | x^{b+} and x^v | x^{b-}.
inline bool is_primitive(const Binomial& b, const ToricIdeal& I) {
    if (b.is_zero() || !ideal_membership(b, I.gb)) throw NotInIdeal("is_primitive: binomial is not in the ideal");
    auto divisors = [](const Monomial& m) {
        std::vector<Monomial> out{Monomial(m.size(), 0)};
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::size_t count = out.size();
            for (int e = 1; e <= m[i]; ++e)
                for (std::size_t k = 0; k < count; ++k) {
                    Monomial d = out[k];
                    d[i] = e;
                    out.push_back(std::move(d));
                }
        }
        return out;
    };
    std::map<Monomial, std::vector<Monomial>> by_normal_form;
    for (const auto& u : divisors(b.plus)) by_normal_form[normal_form(u, I.gb)].push_back(u);
    for (const auto& v : divisors(b.minus)) {
        auto it = by_normal_form.find(normal_form(v, I.gb));
        if (it == by_normal_form.end()) continue;
        for (const auto& u : it->second) {
            if (u == v) continue;
            if (u == b.plus && v == b.minus) continue;
            return false;
        }
    }
    return true;
}

/// Binomials of primitive closed even walks of length ≤ max_length (default
/// 2|E|), oriented by the ideal's order, deduplicated and sorted.
inline std::vector<Binomial> primitive_walk_generators(const Graph& g, std::optional<std::size_t> max_length = {},
                                                       const MonomialOrder& order = {}) {
    const std::size_t bound = max_length.value_or(2 * g.num_edges());
    if (bound % 2 != 0) throw std::invalid_argument("primitive_walk_generators: max_length must be even");
    const ToricIdeal I = toric_ideal_of_graph(g, order);
    std::vector<Binomial> out;
    for (const auto& w : detail::enumerate_closed_even(g, bound, true)) {
        Binomial f = walk_binomial(g, w);
        if (f.is_zero()) continue;
        f = f.oriented(order);
        if (std::find(out.begin(), out.end(), f) != out.end()) continue;
        if (is_primitive(f, I)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [&order](const Binomial& a, const Binomial& b) {
        if (a.plus != b.plus) return order.less(a.plus, b.plus);
        return order.less(a.minus, b.minus);
    });
    return out;
}

/// Some c ∈ Q^rows with α_i · c = 1 for every column α_i.
inline std::optional<RatVector> grading_vector(const IntMatrix& A) {
    return solve_rational(A.transposed(), IntVector(A.cols(), 1));
}

/// ker(A) ∩ N^s = {0}.
inline bool admits_positive_multigrading(const IntMatrix& A) {
    if (A.cols() == 0) return true;
    bool nonneg_columns = true;
    for (std::size_t j = 0; j < A.cols() && nonneg_columns; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (A(i, j) < 0) nonneg_columns = false;
            if (A(i, j) != 0) nonzero = true;
        }
        if (!nonzero) nonneg_columns = false;
    }
    if (nonneg_columns) return true;
    // Look for x >= 0 with A x = 0 and sum(x) = 1.
    IntMatrix E(A.rows() + 1, A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) E(i, j) = A(i, j);
    for (std::size_t j = 0; j < A.cols(); ++j) E(A.rows(), j) = 1;
    IntVector rhs(A.rows() + 1, 0);
    rhs.back() = 1;
    return !nonnegative_solution(E, rhs).has_value();
}

/// Krull dimension of R/I_A.
inline std::size_t krull_dimension(const ToricIdeal& I) { return rank(I.matrix); }

} // namespace toric
