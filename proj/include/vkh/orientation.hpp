#pragma once

#include <vector>

#include "vkh/diagram.hpp"
#include "vkh/smoothing.hpp"

namespace vkh {

enum class StrandIn : std::uint8_t { OverStrandIn, UnderStrandIn };
enum class EndDirection : std::uint8_t { WithTravel, AgainstTravel };

// Canonical source-sink orientation: at each crossing one transversal branch
// has both half-edges pointing into the crossing and the other branch both
// pointing out. The canonical pattern used here: the over branch points in at
// a positive crossing, the under branch at a negative one. The tests pin this
// choice through the even-parity invariant, d^2 = 0 and the classical corpus.
struct SourceSinkAssignment {
    std::vector<StrandIn> pattern; // by internal crossing index

    bool overIn(int crossing) const {
        return pattern[crossing] == StrandIn::OverStrandIn;
    }
};

SourceSinkAssignment canonicalSourceSink(const VirtualLinkDiagram& d);

// Direction induced on a semi-arc end. end = 0 is the tail (at the arc's
// outgoing crossing), end = 1 the head.
EndDirection endDirection(const VirtualLinkDiagram& d, const SourceSinkAssignment& ss,
                          int arc, int end);

// A semi-arc carries a cut locus iff its two end directions disagree.
struct CutLocusSet {
    std::vector<char> onArc; // indexed by arc id, 0 or 1

    bool has(int arc) const { return onArc[arc] != 0; }
    int count() const {
        int n = 0;
        for (char c : onArc) n += c;
        return n;
    }
    bool operator==(const CutLocusSet& o) const { return onArc == o.onArc; }
};

CutLocusSet cutLoci(const VirtualLinkDiagram& d);
CutLocusSet cutLoci(const VirtualLinkDiagram& d, const SourceSinkAssignment& ss);

enum class StarRule : std::uint8_t { MinArc, MaxArc };

// Index into Cycle::segments: the star sits at the end of that segment's
// traversal (never on a cut locus; loci live in arc interiors).
struct StarMarking {
    std::vector<int> starSegment; // one entry per cycle of the state
};

StarMarking starMarkings(const std::vector<Cycle>& cycles,
                         StarRule rule = StarRule::MinArc);

// Parity of cut loci between the transition point after segment `point` and
// the cycle's star. Well-defined in either traversal direction because every
// state cycle contains an even number of cut loci.
int barParity(const Cycle& cycle, const CutLocusSet& loci, int point, int starSegment);

// Total cut loci on one cycle (even for every state of every diagram).
int cycleCutCount(const Cycle& cycle, const CutLocusSet& loci);

} // namespace vkh
