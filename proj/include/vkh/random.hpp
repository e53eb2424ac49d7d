#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "vkh/diagram.hpp"

namespace vkh {

// Uniform-ish random signed Gauss code: every code is a valid virtual link
// diagram, so no planarity filter is needed. components is 1 or 2; with 2,
// crossings may join the components.
inline VirtualLinkDiagram randomDiagram(std::mt19937_64& rng, int crossings,
                                        int components = 1) {
    const int slots = 2 * crossings;
    std::vector<int> order(slots);
    for (int i = 0; i < slots; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Pass> flat(slots);
    for (int x = 0; x < crossings; ++x) {
        const int sign = (rng() & 1) ? 1 : -1;
        const bool overFirst = rng() & 1;
        flat[order[2 * x]] = Pass{x + 1, overFirst ? Role::Over : Role::Under, sign};
        flat[order[2 * x + 1]] = Pass{x + 1, overFirst ? Role::Under : Role::Over, sign};
    }
    std::vector<std::vector<Pass>> comps;
    if (components <= 1 || slots < 2) {
        comps.push_back(flat);
    } else {
        // split point keeps both components nonempty
        std::uniform_int_distribution<int> cut(1, slots - 1);
        const int k = cut(rng);
        comps.emplace_back(flat.begin(), flat.begin() + k);
        comps.emplace_back(flat.begin() + k, flat.end());
    }
    return VirtualLinkDiagram(std::move(comps));
}

} // namespace vkh
