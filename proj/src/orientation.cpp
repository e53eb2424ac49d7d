#include "vkh/orientation.hpp"

namespace vkh {

SourceSinkAssignment canonicalSourceSink(const VirtualLinkDiagram& d) {
    SourceSinkAssignment ss;
    ss.pattern.reserve(d.crossingCount());
    for (const auto& x : d.crossings())
        ss.pattern.push_back(x.sign > 0 ? StrandIn::OverStrandIn
                                        : StrandIn::UnderStrandIn);
    return ss;
}

EndDirection endDirection(const VirtualLinkDiagram& d, const SourceSinkAssignment& ss,
                          int arc, int end) {
    const SemiArc& sa = d.arcs()[arc];
    const int pass = end == 0 ? sa.tailPass : sa.headPass;
    if (pass < 0) throw DomainError("closed arc has no crossing ends");
    const int xi = d.passCrossing(pass);
    const bool passIsOver = d.crossings()[xi].overPass == pass;
    const bool pointsIn = passIsOver == ss.overIn(xi);
    // At the head, pointing toward the crossing is the travel direction; at
    // the tail it is against it.
    if (end == 1) return pointsIn ? EndDirection::WithTravel : EndDirection::AgainstTravel;
    return pointsIn ? EndDirection::AgainstTravel : EndDirection::WithTravel;
}

CutLocusSet cutLoci(const VirtualLinkDiagram& d) {
    return cutLoci(d, canonicalSourceSink(d));
}

CutLocusSet cutLoci(const VirtualLinkDiagram& d, const SourceSinkAssignment& ss) {
    CutLocusSet set;
    set.onArc.assign(d.arcCount(), 0);
    for (const auto& sa : d.arcs()) {
        if (sa.tailPass < 0) continue; // closed arc, no crossings
        const EndDirection t = endDirection(d, ss, sa.id, 0);
        const EndDirection h = endDirection(d, ss, sa.id, 1);
        set.onArc[sa.id] = (t != h) ? 1 : 0;
    }
    return set;
}

StarMarking starMarkings(const std::vector<Cycle>& cycles, StarRule rule) {
    StarMarking m;
    m.starSegment.reserve(cycles.size());
    for (const auto& c : cycles) {
        int best = 0;
        for (int k = 1; k < static_cast<int>(c.segments.size()); ++k) {
            const bool better = rule == StarRule::MinArc
                                    ? c.segments[k].arc < c.segments[best].arc
                                    : c.segments[k].arc > c.segments[best].arc;
            if (better) best = k;
        }
        m.starSegment.push_back(best);
    }
    return m;
}

int barParity(const Cycle& cycle, const CutLocusSet& loci, int point, int starSegment) {
    const int m = static_cast<int>(cycle.segments.size());
    if (point < 0 || point >= m || starSegment < 0 || starSegment >= m)
        throw DomainError("position not on cycle");
    // Walk forward from the transition point after `point` to the point after
    // `starSegment`, crossing one arc per step.
    int parity = 0;
    int j = point;
    while (j != starSegment) {
        j = (j + 1) % m;
        parity ^= loci.has(cycle.segments[j].arc) ? 1 : 0;
    }
    return parity;
}

int cycleCutCount(const Cycle& cycle, const CutLocusSet& loci) {
    int n = 0;
    for (const auto& seg : cycle.segments) n += loci.has(seg.arc) ? 1 : 0;
    return n;
}

} // namespace vkh
