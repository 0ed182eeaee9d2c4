#pragma once

#include <string>
#include <vector>

#include "superklr/braid.hpp"

namespace superklr {

struct LinkEntry {
    std::string name;
    std::string braid;
    bool knot = true; // single component

    Braid parse() const { return Braid::parse(braid); }
};

// Built-in examples up to eight crossings: unknots with kinks, both Hopf
// links, both trefoils, the (2,n) torus family, the figure eight and the
// twist-style words from the standard braid tables.
inline const std::vector<LinkEntry>& link_table() {
    static const std::vector<LinkEntry> table = {
        {"unknot", "1:", true},
        {"unknot_kink_pos", "2: 1", true},
        {"unknot_kink_neg", "2: -1", true},
        {"hopf_pos", "2: 1 1", false},
        {"hopf_neg", "2: -1 -1", false},
        {"trefoil_right", "2: 1 1 1", true},
        {"trefoil_left", "2: -1 -1 -1", true},
        {"torus_2_4_pos", "2: 1 1 1 1", false},
        {"torus_2_4_neg", "2: -1 -1 -1 -1", false},
        {"torus_2_5", "2: 1 1 1 1 1", true},
        {"torus_2_6", "2: 1 1 1 1 1 1", false},
        {"torus_2_7", "2: 1 1 1 1 1 1 1", true},
        {"torus_2_8", "2: 1 1 1 1 1 1 1 1", false},
        {"figure_eight", "3: 1 -2 1 -2", true},
        {"5_2", "3: 1 1 1 2 -1 2", true},
        {"twist_6", "3: 1 -2 1 -2 1 -2", false}, // (s1 s2^-1)^3, three components
        {"twist_8", "3: 1 -2 1 -2 1 -2 1 -2", true},
    };
    return table;
}

inline const std::vector<LinkEntry>& knot_table() {
    static const std::vector<LinkEntry> knots = [] {
        std::vector<LinkEntry> ks;
        for (const auto& e : link_table())
            if (e.knot) ks.push_back(e);
        return ks;
    }();
    return knots;
}

} // namespace superklr
