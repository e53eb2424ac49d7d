#pragma once

// Unsigned Khovanov homology over GF(2), straight from the classical
// definition: merge multiplies, split comultiplies, a single-cycle
// resmoothing contributes nothing, and no signs, orders or conjugations
// appear anywhere. Kept deliberately separate from the signed engine so it
// can act as an oracle for it.

#include <cstdint>
#include <map>
#include <vector>

#include "vkh/diagram.hpp"
#include "vkh/smoothing.hpp"

namespace vkh_test {

inline int gf2Rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
    int rank = 0;
    const int R = static_cast<int>(rows.size());
    for (int c = 0; c < cols && rank < R; ++c) {
        int pr = -1;
        for (int r = rank; r < R; ++r)
            if ((rows[r][c / 64] >> (c % 64)) & 1ull) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        for (int r = 0; r < R; ++r) {
            if (r == rank) continue;
            if ((rows[r][c / 64] >> (c % 64)) & 1ull)
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

// dim Kh^{i,j} over Z/2 keyed by the shifted bigrading.
inline std::map<std::pair<int, int>, int> z2OracleRanks(const vkh::VirtualLinkDiagram& d) {
    using namespace vkh;
    const int n = d.crossingCount();
    const StateMask N = StateMask(1) << n;

    std::vector<std::vector<Cycle>> cycles(N);
    for (StateMask s = 0; s < N; ++s) cycles[s] = resolve(d, s);

    // basis indexing inside every (i, j) block
    struct Key {
        int i, j;
        bool operator<(const Key& o) const { return i != o.i ? i < o.i : j < o.j; }
    };
    std::map<Key, int> dims;
    std::map<std::pair<StateMask, std::uint32_t>, int> index;
    for (StateMask s = 0; s < N; ++s) {
        const int k = static_cast<int>(cycles[s].size());
        const int i = stateI(s);
        for (std::uint32_t L = 0; L < (1u << k); ++L) {
            const int j = i + k - 2 * __builtin_popcount(L);
            index[{s, L}] = dims[{i, j}]++;
        }
    }

    // matrix entries per (i, j): differential preserves j
    std::map<Key, std::vector<std::pair<int, int>>> entries; // (row, col) mod 2
    for (StateMask u = 0; u < N; ++u) {
        const auto& cu = cycles[u];
        const int k = static_cast<int>(cu.size());
        const int i = stateI(u);
        for (int site = 0; site < n; ++site) {
            if ((u >> site) & 1u) continue;
            const StateMask v = u | (StateMask(1) << site);
            const auto& cv = cycles[v];
            // which source/target cycles touch the site: those whose segment
            // transitions happen at the site's crossing
            auto touches = [&](const Cycle& c, const VirtualLinkDiagram& dd) {
                int count = 0;
                for (const auto& seg : c.segments) {
                    const SemiArc& sa = dd.arcs()[seg.arc];
                    if (sa.tailPass < 0) continue;
                    const int pass = seg.forward ? sa.headPass : sa.tailPass;
                    if (dd.passCrossing(pass) == site) ++count;
                }
                return count;
            };
            std::vector<int> srcTouch, tgtTouch;
            for (const auto& c : cu)
                if (touches(c, d)) srcTouch.push_back(c.cycle_id);
            for (const auto& c : cv)
                if (touches(c, d)) tgtTouch.push_back(c.cycle_id);
            if (srcTouch.size() == 1 && tgtTouch.size() == 1) continue; // eta: zero
            // spectator map by minimal arc
            std::map<int, int> vByMin;
            for (const auto& c : cv) vByMin[c.minArc()] = c.cycle_id;
            std::vector<int> spec(cu.size(), -1);
            for (const auto& c : cu) {
                bool involved = false;
                for (int t : srcTouch) involved = involved || t == c.cycle_id;
                if (!involved) spec[c.cycle_id] = vByMin.at(c.minArc());
            }
            for (std::uint32_t L = 0; L < (1u << k); ++L) {
                std::uint32_t base = 0;
                for (std::size_t c = 0; c < spec.size(); ++c)
                    if (spec[c] >= 0 && ((L >> c) & 1u)) base |= 1u << spec[c];
                const int j = i + k - 2 * __builtin_popcount(L);
                auto emit = [&](std::uint32_t Lv) {
                    entries[{i, j}].push_back({index.at({v, Lv}), index.at({u, L})});
                };
                if (srcTouch.size() == 2) { // merge
                    const bool xA = (L >> srcTouch[0]) & 1u;
                    const bool xB = (L >> srcTouch[1]) & 1u;
                    if (xA && xB) continue; // X.X = 0
                    emit(base | ((xA || xB) ? (1u << tgtTouch[0]) : 0u));
                } else { // split
                    const bool x = (L >> srcTouch[0]) & 1u;
                    if (x) {
                        emit(base | (1u << tgtTouch[0]) | (1u << tgtTouch[1]));
                    } else {
                        emit(base | (1u << tgtTouch[0]));
                        emit(base | (1u << tgtTouch[1]));
                    }
                }
            }
        }
    }

    std::map<Key, int> rank;
    for (auto& [key, es] : entries) {
        const int rows = dims.count({key.i + 1, key.j}) ? dims[{key.i + 1, key.j}] : 0;
        const int cols = dims[{key.i, key.j}];
        std::vector<std::vector<std::uint64_t>> m(rows,
                                                  std::vector<std::uint64_t>((cols + 63) / 64, 0));
        for (auto& [r, c] : es) m[r][c / 64] ^= 1ull << (c % 64); // mod 2
        rank[key] = gf2Rank(std::move(m), cols);
    }

    std::map<std::pair<int, int>, int> out;
    const int si = -d.nMinus();
    const int sj = d.nPlus() - 2 * d.nMinus();
    for (auto& [key, dim] : dims) {
        const int rOut = rank.count(key) ? rank[key] : 0;
        const int rIn = rank.count({key.i - 1, key.j}) ? rank[{key.i - 1, key.j}] : 0;
        const int h = dim - rOut - rIn;
        if (h > 0) out[{key.i + si, key.j + sj}] = h;
    }
    return out;
}

} // namespace vkh_test
