#pragma once

#include "toric/io.hpp"

#include <string>
#include <vector>

namespace testutil {

inline std::string fixture_path(const std::string& name) { return std::string(TORIC_FIXTURE_DIR) + "/" + name + ".json"; }

inline toric::Graph fixture_graph(const std::string& name) { return toric::read_graph(fixture_path(name)); }

/// Every graph fixture, none with more than 13 edges.
inline std::vector<std::string> graph_fixture_names() {
    return {"cycle4",     "triangle",         "two_squares",         "two_triangles",
            "even_path",  "theta_path",       "k3_gluing",           "four_cycles_G",
            "four_cycles_G_prime", "four_cycles_G_double_prime"};
}

} // namespace testutil
