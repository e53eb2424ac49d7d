#pragma once

#include <cstdint>
#include <vector>

#include "vkh/diagram.hpp"
#include "vkh/laurent.hpp"

namespace vkh {

// A vertex of the state cube: bit k set means the B-smoothing was chosen at
// the crossing with internal index k (ids ascending).
using StateMask = std::uint32_t;

inline int stateI(StateMask s) { return __builtin_popcount(s); }

// Directed traversal of a semi-arc; forward means tail -> head.
struct ArcStep {
    int arc = 0;
    bool forward = true;
    bool operator==(const ArcStep&) const = default;
};

// One loop of a smoothed diagram. Segments are listed in traversal order
// starting from the smallest contained arc id (traversed forward).
struct Cycle {
    int cycle_id = 0;
    std::vector<ArcStep> segments;
    int minArc() const { return segments.empty() ? -1 : segments.front().arc; }
};

// Whether the smoothing chosen at crossing k joins the strands coherently
// with the diagram orientation. The A-smoothing of a positive crossing is the
// oriented (Seifert) reconnection; for a negative crossing it is B.
inline bool orientedSmoothing(const Crossing& x, bool choiceB) {
    return (x.sign > 0) != choiceB;
}

constexpr int kDefaultCrossingCap = 24;

// Trace the loops of the state. Deterministic: cycles sorted by minimal
// contained arc id, each starting at that arc traversed forward.
std::vector<Cycle> resolve(const VirtualLinkDiagram& d, StateMask state);

// Loop count only (no cycle structure) -- cheaper inner loop for state sums.
int cycleCount(const VirtualLinkDiagram& d, StateMask state);

// Kauffman bracket <K> = sum_S <K|S> delta^{||S||}, delta = -A^2 - A^{-2}.
// An isolated unknot evaluates to delta.
Laurent bracketA(const VirtualLinkDiagram& d, int crossingCap = kDefaultCrossingCap);

// q-form of the bracket: sum over enhanced states of (-1)^{i} q^{j},
// <unknot> = q + q^{-1}.
Laurent bracketQ(const VirtualLinkDiagram& d, int crossingCap = kDefaultCrossingCap);

// J_K(q) = (-1)^{n_-} q^{n_+ - 2 n_-} <K>_q; invariant under R1-R3.
Laurent jonesJ(const VirtualLinkDiagram& d, int crossingCap = kDefaultCrossingCap);

// f_K(A) = (-A^3)^{-wr} <K>_A / <unknot>_A, and V_K(t) = f_K(t^{-1/4})
// (exponents in quarter units).
Laurent fPoly(const VirtualLinkDiagram& d, int crossingCap = kDefaultCrossingCap);
Laurent vPoly(const VirtualLinkDiagram& d, int crossingCap = kDefaultCrossingCap);

// Diagram-level quantum degree of an enhanced state: j(s) + n_+ - 2 n_-,
// where j(s) = i(s) + (#cycles labeled 1 - #cycles labeled X) and labelsX has
// bit c set when cycle c is labeled X.
int qGrade(const VirtualLinkDiagram& d, StateMask state, int cycleCountOfState,
           std::uint32_t labelsX);

} // namespace vkh
