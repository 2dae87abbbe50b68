#pragma once

#include "toric/binomial.hpp"

#include <functional>
#include <sstream>
#include <vector>
#include <string>

namespace testutil {

// Parses "e1*e3^2" (or "1") into an exponent vector of length n.
inline toric::Monomial mono(const std::string& text, std::size_t n) {
    toric::Monomial m(n, 0);
    if (text == "1") return m;
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        const auto caret = factor.find('^');
        const std::size_t var = std::stoul(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        m.at(var - 1) += power;
    }
    return m;
}

inline toric::Binomial bin(const std::string& plus, const std::string& minus, std::size_t n) {
    return {mono(plus, n), mono(minus, n)};
}

/// All monomials of total degree d in n variables.
inline std::vector<toric::Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<toric::Monomial> out;
    toric::Monomial m(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, d);
    return out;
}

} // namespace testutil
