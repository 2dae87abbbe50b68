#pragma once

// JSON readers and writers for graphs, matrices, binomials, ideals and
// gluing specifications.

#include "toric/binomial.hpp"
#include "toric/exactlin.hpp"
#include "toric/graph.hpp"
#include "toric/groebner.hpp"
#include "toric/splitkit.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

inline MonomialOrder order_from_name(const std::string& name) {
    if (name == "degrevlex") return MonomialOrder::degrevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw InputError("unknown monomial order '" + name + "'");
}

// ----------------------------------------------------------------- graphs

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
            throw InputError("graph: expected an object with \"vertices\" and \"edges\"");
        auto vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge must be a pair of labels");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return Graph(std::move(vertices), edges);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

inline Graph read_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

// --------------------------------------------------------------- matrices

inline nlohmann::json matrix_to_json(const IntMatrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

/// Entries may be decimal strings or JSON integers.
inline IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("matrix: expected an array of rows");
    std::vector<IntVector> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        if (!r.is_array()) throw InputError("matrix: each row must be an array");
        IntVector row;
        for (const auto& x : r) {
            if (x.is_number_integer()) {
                row.emplace_back(std::to_string(x.get<long long>()));
            } else if (x.is_string()) {
                Integer v;
                if (v.set_str(x.get<std::string>(), 10) != 0) throw InputError("matrix: bad integer '" + x.get<std::string>() + "'");
                row.push_back(v);
            } else {
                throw InputError("matrix: entries must be integers or decimal strings");
            }
        }
        if (!rows.empty() && row.size() != cols) throw InputError("matrix: ragged rows");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows, cols);
}

// ----------------------------------------------------- binomials and ideals

inline nlohmann::json binomial_to_json(const Binomial& b) {
    return {{"plus", b.plus}, {"minus", b.minus}, {"text", binomial_to_string(b)}};
}

inline Binomial binomial_from_json(const nlohmann::json& j) {
    try {
        return {j.at("plus").get<Monomial>(), j.at("minus").get<Monomial>()};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("binomial: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline nlohmann::json ideal_to_json(const ReducedGB& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : I.elements()) gens.push_back(binomial_to_json(g));
    nlohmann::json j{{"order", I.order().name()}, {"nvars", I.nvars()}, {"generators", gens}};
    if (I.is_unit()) j["unit"] = true;
    return j;
}

/// One generator per line; "(zero ideal)" / "(unit ideal)" otherwise.
inline std::string ideal_to_text(const ReducedGB& I) {
    if (I.is_unit()) return "(unit ideal)\n";
    if (I.is_zero_ideal()) return "(zero ideal)\n";
    std::string s;
    for (const auto& g : I.elements()) s += binomial_to_string(g) + "\n";
    return s;
}

// ------------------------------------------------------------ glue specs

/// {"g1": graph, "g2": graph, "h1": [labels], "h2": [labels]}
inline GlueSpec glue_spec_from_json(const nlohmann::json& j) {
    try {
        return {graph_from_json(j.at("g1")), graph_from_json(j.at("g2")), j.at("h1").get<std::vector<std::string>>(),
                j.at("h2").get<std::vector<std::string>>()};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("glue spec: ") + e.what());
    }
}

inline nlohmann::json glue_spec_to_json(const GlueSpec& s) {
    return {{"g1", graph_to_json(s.g1)}, {"g2", graph_to_json(s.g2)}, {"h1", s.h1}, {"h2", s.h2}};
}

/// {"cycle_length": 2d, "attachments": [{"graph": graph, "edge": [u, v]}, ...]}
struct FanSpec {
    std::size_t cycle_length = 0;
    std::vector<FanAttachment> attachments;
};

inline FanSpec fan_spec_from_json(const nlohmann::json& j) {
    try {
        FanSpec f;
        f.cycle_length = j.at("cycle_length").get<std::size_t>();
        for (const auto& a : j.at("attachments")) {
            const auto e = a.at("edge").get<std::vector<std::string>>();
            if (e.size() != 2) throw InputError("fan spec: attachment edge must be a pair");
            f.attachments.push_back({graph_from_json(a.at("graph")), {e[0], e[1]}});
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("fan spec: ") + e.what());
    }
}

inline bool is_fan_spec(const nlohmann::json& j) { return j.is_object() && j.contains("cycle_length"); }
inline bool is_glue_spec(const nlohmann::json& j) { return j.is_object() && j.contains("g1") && j.contains("g2"); }

} // namespace toric
