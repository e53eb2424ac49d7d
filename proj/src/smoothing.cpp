#include "vkh/smoothing.hpp"

#include <string>

namespace vkh {

namespace {

// Directed arc encoded as 2*arc + (forward ? 0 : 1).
inline int enc(int arc, bool fwd) { return 2 * arc + (fwd ? 0 : 1); }

// Successor of a directed arc traversal under the state's reconnections.
// Arriving at a crossing through one slot, we leave through the slot paired
// with it by the chosen smoothing; leaving through an out-slot (an arc tail)
// means forward travel, through an in-slot (an arc head) backward travel.
struct Tracer {
    const VirtualLinkDiagram& d;
    StateMask state;

    ArcStep next(ArcStep cur) const {
        const int endPass = cur.forward ? d.arcs()[cur.arc].headPass
                                        : d.arcs()[cur.arc].tailPass;
        const int xi = d.passCrossing(endPass);
        const Crossing& x = d.crossings()[xi];
        const bool choiceB = (state >> xi) & 1u;
        const bool oriented = orientedSmoothing(x, choiceB);
        const bool atOver = endPass == x.overPass;
        const bool arrivedAtIn = cur.forward; // forward travel ends at a head = in-slot
        const int po = x.overPass, pu = x.underPass;

        // Pairings: oriented {Oin,Uout},{Uin,Oout}; disoriented {Oin,Uin},{Oout,Uout}.
        if (oriented) {
            if (arrivedAtIn)
                return {d.arcOutOfPass(atOver ? pu : po), true};
            return {d.arcIntoPass(atOver ? pu : po), false};
        }
        if (arrivedAtIn)
            return {d.arcIntoPass(atOver ? pu : po), false};
        return {d.arcOutOfPass(atOver ? pu : po), true};
    }
};

} // namespace

std::vector<Cycle> resolve(const VirtualLinkDiagram& d, StateMask state) {
    if (d.crossingCount() < 32 && (state >> d.crossingCount()) != 0)
        throw DomainError("state has bits outside the diagram's crossing set");
    std::vector<Cycle> cycles;
    const int A = d.arcCount();
    if (d.passCount() == 0) {
        for (int a = 0; a < A; ++a)
            cycles.push_back(Cycle{a, {ArcStep{a, true}}});
        return cycles;
    }
    Tracer tr{d, state};
    std::vector<char> visited(A, 0);
    for (int a = 0; a < A; ++a) {
        if (visited[a]) continue;
        Cycle c;
        c.cycle_id = static_cast<int>(cycles.size());
        ArcStep cur{a, true};
        do {
            visited[cur.arc] = 1;
            c.segments.push_back(cur);
            cur = tr.next(cur);
        } while (!(cur == ArcStep{a, true}));
        cycles.push_back(std::move(c));
    }
    return cycles;
}

int cycleCount(const VirtualLinkDiagram& d, StateMask state) {
    const int A = d.arcCount();
    if (d.passCount() == 0) return A;
    Tracer tr{d, state};
    std::vector<char> visited(A, 0);
    int count = 0;
    for (int a = 0; a < A; ++a) {
        if (visited[a]) continue;
        ++count;
        ArcStep cur{a, true};
        do {
            visited[cur.arc] = 1;
            cur = tr.next(cur);
        } while (cur.arc != a || !cur.forward);
    }
    return count;
}

namespace {

void checkCap(const VirtualLinkDiagram& d, int cap) {
    if (d.crossingCount() > cap)
        throw DomainError("diagram has " + std::to_string(d.crossingCount()) +
                          " crossings, exceeding the cap of " + std::to_string(cap) +
                          " (state sums are exponential; raise the cap explicitly)");
}

} // namespace

Laurent bracketA(const VirtualLinkDiagram& d, int crossingCap) {
    checkCap(d, crossingCap);
    const int n = d.crossingCount();
    Laurent delta("A");
    delta.add(2, -1);
    delta.add(-2, -1);
    // delta^k, k up to max loop count
    std::vector<Laurent> deltaPow{Laurent::constant("A", 1)};
    Laurent total("A");
    for (StateMask s = 0; s < (StateMask(1) << n); ++s) {
        const int loops = cycleCount(d, s);
        while (static_cast<int>(deltaPow.size()) <= loops)
            deltaPow.push_back(deltaPow.back() * delta);
        const int i = stateI(s);
        // <K|S> = A^{(n-i) - i}
        total += deltaPow[loops].shifted(n - 2 * i);
    }
    return total;
}

Laurent bracketQ(const VirtualLinkDiagram& d, int crossingCap) {
    checkCap(d, crossingCap);
    const int n = d.crossingCount();
    Laurent loop("q");
    loop.add(1, 1);
    loop.add(-1, 1); // q + q^{-1}
    std::vector<Laurent> loopPow{Laurent::constant("q", 1)};
    Laurent total("q");
    for (StateMask s = 0; s < (StateMask(1) << n); ++s) {
        const int loops = cycleCount(d, s);
        while (static_cast<int>(loopPow.size()) <= loops)
            loopPow.push_back(loopPow.back() * loop);
        const int i = stateI(s);
        total += loopPow[loops].shifted(i).scaled(i % 2 == 0 ? 1 : -1);
    }
    return total;
}

Laurent jonesJ(const VirtualLinkDiagram& d, int crossingCap) {
    Laurent b = bracketQ(d, crossingCap);
    const int nm = d.nMinus();
    return b.shifted(d.nPlus() - 2 * nm).scaled(nm % 2 == 0 ? 1 : -1);
}

Laurent fPoly(const VirtualLinkDiagram& d, int crossingCap) {
    Laurent b = bracketA(d, crossingCap);
    Laurent delta("A");
    delta.add(2, -1);
    delta.add(-2, -1);
    Laurent f = b.dividedBy(delta); // always divides; failure means a state-sum bug
    const int w = d.writhe();
    // multiply by (-A^3)^{-w}
    f = f.shifted(-3 * w);
    if (w % 2 != 0) f = f.scaled(-1);
    return f;
}

Laurent vPoly(const VirtualLinkDiagram& d, int crossingCap) {
    if (d.componentCount() != 1)
        throw DomainError("V_K(t) is computed for knots (1 component)");
    Laurent f = fPoly(d, crossingCap);
    Laurent v("t", 4);
    for (auto& [e, c] : f.terms()) v.add(-e, c); // A -> t^{-1/4}
    return v;
}

int qGrade(const VirtualLinkDiagram& d, StateMask state, int cycleCountOfState,
           std::uint32_t labelsX) {
    const int i = stateI(state);
    const int x = __builtin_popcount(labelsX);
    const int lambda = (cycleCountOfState - x) - x;
    return i + lambda + d.nPlus() - 2 * d.nMinus();
}

} // namespace vkh
