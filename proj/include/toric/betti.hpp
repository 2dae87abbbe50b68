#pragma once

// Betti tables (multigraded and standard graded), their invariants, text /
// JSON / CSV output, and the two table-level formulas: the mapping cone of a
// regular binomial and the Künneth convolution.

#include "toric/exactlin.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using MultiDegree = std::vector<long>;

class ModeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Whether β is recorded for the quotient R/I or for the ideal I.
enum class BettiSubject { module, ideal };

/// Sparse table i, degree -> β_{i,degree}. Zero entries are never stored.
template <class Degree>
class BettiTableT {
public:
    using Key = std::pair<int, Degree>;

    explicit BettiTableT(BettiSubject subject = BettiSubject::module) : subject_(subject) {}

    BettiSubject subject() const { return subject_; }
    const std::map<Key, long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    long get(int i, const Degree& d) const {
        auto it = entries_.find({i, d});
        return it == entries_.end() ? 0 : it->second;
    }

    void add(int i, const Degree& d, long value) {
        if (value == 0) return;
        long& slot = entries_[{i, d}];
        slot += value;
        if (slot < 0) throw std::logic_error("BettiTable: negative multiplicity");
        if (slot == 0) entries_.erase({i, d});
    }

    /// Σ_degree β_{i,degree}.
    long total(int i) const {
        long s = 0;
        for (const auto& [k, v] : entries_)
            if (k.first == i) s += v;
        return s;
    }

    int max_index() const {
        int m = -1;
        for (const auto& [k, v] : entries_) m = std::max(m, k.first);
        return m;
    }

    std::vector<long> totals() const {
        std::vector<long> out(static_cast<std::size_t>(max_index() + 1), 0);
        for (const auto& [k, v] : entries_) out[static_cast<std::size_t>(k.first)] += v;
        return out;
    }

    /// β_i(I) = β_{i+1}(R/I) and back.
    BettiTableT as_ideal() const {
        if (subject_ == BettiSubject::ideal) return *this;
        BettiTableT out(BettiSubject::ideal);
        for (const auto& [k, v] : entries_)
            if (k.first >= 1) out.add(k.first - 1, k.second, v);
        return out;
    }

    BettiTableT as_module(const Degree& zero) const {
        if (subject_ == BettiSubject::module) return *this;
        BettiTableT out(BettiSubject::module);
        out.add(0, zero, 1);
        for (const auto& [k, v] : entries_) out.add(k.first + 1, k.second, v);
        return out;
    }

    friend bool operator==(const BettiTableT&, const BettiTableT&) = default;

private:
    BettiSubject subject_;
    std::map<Key, long> entries_;
};

using MultiBettiTable = BettiTableT<MultiDegree>;
using GradedBettiTable = BettiTableT<int>;

/// Collapse to the standard grading with j = (c · α); c must make every
/// recorded degree integral.
inline GradedBettiTable betti_graded(const MultiBettiTable& T, const RatVector& c) {
    GradedBettiTable out(T.subject());
    for (const auto& [k, v] : T.entries()) {
        if (k.second.size() != c.size()) throw std::invalid_argument("betti_graded: grading vector has wrong length");
        Rational j = 0;
        for (std::size_t r = 0; r < c.size(); ++r) j += c[r] * k.second[r];
        if (j.get_den() != 1) throw std::invalid_argument("betti_graded: degree is not integral");
        out.add(k.first, static_cast<int>(j.get_num().get_si()), v);
    }
    return out;
}

/// Collapse with j = |α| / d (d = 2 for graphs).
inline GradedBettiTable betti_graded(const MultiBettiTable& T, long d) {
    if (d <= 0) throw std::invalid_argument("betti_graded: d must be positive");
    GradedBettiTable out(T.subject());
    for (const auto& [k, v] : T.entries()) {
        const long total = std::accumulate(k.second.begin(), k.second.end(), 0L);
        if (total % d != 0) throw std::invalid_argument("betti_graded: |alpha| is not a multiple of d");
        out.add(k.first, static_cast<int>(total / d), v);
    }
    return out;
}

/// max{j - i : β_{i,j} ≠ 0}.
inline int regularity(const GradedBettiTable& T) {
    if (T.empty()) throw std::invalid_argument("regularity: empty table");
    int r = std::numeric_limits<int>::min();
    for (const auto& [k, v] : T.entries()) r = std::max(r, k.second - k.first);
    return r;
}

/// max{i : β_{i,j} ≠ 0}.
inline int proj_dim(const GradedBettiTable& T) {
    if (T.empty()) throw std::invalid_argument("proj_dim: empty table");
    return T.max_index();
}

/// Σ_{i,j} (-1)^i β_{i,j} t^j as a coefficient list.
inline std::vector<Integer> euler_polynomial(const GradedBettiTable& T) {
    std::vector<Integer> p;
    for (const auto& [k, v] : T.entries()) {
        if (k.second < 0) throw std::invalid_argument("euler_polynomial: negative degree");
        const std::size_t j = static_cast<std::size_t>(k.second);
        if (p.size() <= j) p.resize(j + 1, 0);
        p[j] += (k.first % 2 == 0 ? 1 : -1) * v;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// β_{i,j} = β_{i,j}(J) + β_{i-1,j-d}(J): quotient by a regular element of degree d.
inline GradedBettiTable mapping_cone_betti(const GradedBettiTable& TJ, int d) {
    if (TJ.subject() != BettiSubject::module) throw ModeMismatch("mapping_cone_betti: expects a table of R/J");
    GradedBettiTable out(BettiSubject::module);
    for (const auto& [k, v] : TJ.entries()) {
        out.add(k.first, k.second, v);
        out.add(k.first + 1, k.second + d, v);
    }
    return out;
}

inline MultiBettiTable mapping_cone_betti(const MultiBettiTable& TJ, const MultiDegree& mu) {
    if (TJ.subject() != BettiSubject::module) throw ModeMismatch("mapping_cone_betti: expects a table of R/J");
    MultiBettiTable out(BettiSubject::module);
    for (const auto& [k, v] : TJ.entries()) {
        if (k.second.size() != mu.size()) throw std::invalid_argument("mapping_cone_betti: degree length mismatch");
        MultiDegree shifted(mu.size());
        for (std::size_t r = 0; r < mu.size(); ++r) shifted[r] = k.second[r] + mu[r];
        out.add(k.first, k.second, v);
        out.add(k.first + 1, shifted, v);
    }
    return out;
}

namespace detail {
inline int combine_degrees(int a, int b) { return a + b; }
inline MultiDegree combine_degrees(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}
} // namespace detail

/// Convolution of the tables of R_1/I_1, ..., R_k/I_k. Graded degrees add;
/// multidegrees are concatenated (the blocks live on disjoint coordinates).
template <class Degree>
BettiTableT<Degree> kunneth_betti(const std::vector<BettiTableT<Degree>>& tables) {
    if (tables.empty()) throw std::invalid_argument("kunneth_betti: no tables");
    for (const auto& t : tables)
        if (t.subject() != BettiSubject::module)
            throw ModeMismatch("kunneth_betti: every table must describe a quotient R/I");
    BettiTableT<Degree> acc = tables.front();
    for (std::size_t n = 1; n < tables.size(); ++n) {
        BettiTableT<Degree> next(BettiSubject::module);
        for (const auto& [ka, va] : acc.entries())
            for (const auto& [kb, vb] : tables[n].entries())
                next.add(ka.first + kb.first, detail::combine_degrees(ka.second, kb.second), va * vb);
        acc = std::move(next);
    }
    return acc;
}

/// Betti table of R/0 in the given degree shape.
inline GradedBettiTable trivial_graded_table() {
    GradedBettiTable t;
    t.add(0, 0, 1);
    return t;
}

// ---------------------------------------------------------------- output

/// Layout with columns i, rows j - i, a "total:" row and "." for zero.
inline std::string format_betti(const GradedBettiTable& T) {
    if (T.empty()) return "(empty table)\n";
    int min_row = std::numeric_limits<int>::max(), max_row = std::numeric_limits<int>::min();
    for (const auto& [k, v] : T.entries()) {
        min_row = std::min(min_row, k.second - k.first);
        max_row = std::max(max_row, k.second - k.first);
    }
    const int cols = T.max_index() + 1;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> labels;
    std::vector<std::string> header;
    for (int i = 0; i < cols; ++i) header.push_back(std::to_string(i));
    labels.push_back("");
    cells.push_back(header);
    std::vector<std::string> totals;
    for (long t : T.totals()) totals.push_back(std::to_string(t));
    labels.push_back("total:");
    cells.push_back(totals);
    for (int r = min_row; r <= max_row; ++r) {
        std::vector<std::string> row;
        for (int i = 0; i < cols; ++i) {
            const long v = T.get(i, r + i);
            row.push_back(v == 0 ? "." : std::to_string(v));
        }
        labels.push_back(std::to_string(r) + ":");
        cells.push_back(row);
    }
    std::size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> width(static_cast<std::size_t>(cols), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line = std::string(label_w - labels[r].size(), ' ') + labels[r];
        for (std::size_t i = 0; i < cells[r].size(); ++i)
            line += " " + std::string(width[i] - cells[r][i].size(), ' ') + cells[r][i];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

inline std::string subject_name(BettiSubject s) { return s == BettiSubject::module ? "R/I" : "I"; }

inline nlohmann::json to_json(const GradedBettiTable& T) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : T.entries()) entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
    nlohmann::json out{{"mode", "graded"}, {"subject", subject_name(T.subject())}, {"entries", entries}};
    out["totals"] = T.totals();
    if (!T.empty()) {
        out["regularity"] = regularity(T);
        out["projective_dimension"] = proj_dim(T);
    }
    return out;
}

inline nlohmann::json to_json(const MultiBettiTable& T) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : T.entries()) entries.push_back({{"i", k.first}, {"degree", k.second}, {"beta", v}});
    return {{"mode", "multigraded"}, {"subject", subject_name(T.subject())}, {"entries", entries}};
}

inline std::string to_csv(const GradedBettiTable& T) {
    std::string s = "i,j,beta\n";
    for (const auto& [k, v] : T.entries())
        s += std::to_string(k.first) + "," + std::to_string(k.second) + "," + std::to_string(v) + "\n";
    return s;
}

inline std::string to_csv(const MultiBettiTable& T) {
    std::string s = "i,degree,beta\n";
    for (const auto& [k, v] : T.entries()) {
        std::string d;
        for (std::size_t r = 0; r < k.second.size(); ++r) d += (r ? " " : "") + std::to_string(k.second[r]);
        s += std::to_string(k.first) + "," + d + "," + std::to_string(v) + "\n";
    }
    return s;
}

} // namespace toric
