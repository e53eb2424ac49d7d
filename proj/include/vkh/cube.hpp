#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vkh/diagram.hpp"
#include "vkh/orientation.hpp"
#include "vkh/smoothing.hpp"

namespace vkh {

enum class TreeRule : std::uint8_t { LowestBit, HighestBit, Seeded };

struct CubeOptions {
    int t = 0;         // 0 = Khovanov, 1 = Lee
    bool bars = true;  // cut-locus conjugation decorations
    bool orders = true; // local/global order permutation signs + completion
    StarRule star = StarRule::MinArc;
    TreeRule tree = TreeRule::LowestBit;
    std::uint64_t treeSeed = 0;
    std::vector<int> rootOrder; // permutation of the all-A cycles; empty = identity
    int crossingCap = kDefaultCrossingCap;
};

struct StateData {
    std::vector<Cycle> cycles;
    std::vector<int> cycleOfArc;
    // Per crossing, the two smoothing strands: index 0 is the strand through
    // the over pass's incoming slot. Location = (cycle, transition point);
    // agree = cycle traversal matches the source-sink arrows there.
    std::vector<std::array<int, 2>> strandCycle;
    std::vector<std::array<int, 2>> strandPoint;
    std::vector<std::array<int, 2>> strandAgree;
    std::vector<int> rank; // global order, 1-based, per cycle
    std::vector<int> star; // star segment per cycle
};

enum class EdgeKind : std::uint8_t { Merge, Split, Eta };

struct CubeEdge {
    StateMask source = 0, target = 0;
    int site = 0; // internal crossing index
    EdgeKind kind = EdgeKind::Merge;
    int preSign = 1;  // permutation sign on the source side
    int postSign = 1; // permutation sign on the target side
    int sign = 1;     // preSign * postSign

    // merge: srcA/srcB = the two source cycles in local order, tgtA = merged.
    // split: srcA = split cycle, tgtA/tgtB = children in local order.
    int srcA = -1, srcB = -1, tgtA = -1, tgtB = -1;
    int barSrcA = 0, barSrcB = 0, barTgtA = 0, barTgtB = 0;

    // u-cycle index -> v-cycle index for unaffected cycles (-1 on involved).
    std::vector<int> spectator;
};

struct Trip {
    long long row = 0, col = 0;
    std::int64_t coeff = 0;
};

class SignedCubeComplex {
public:
    const VirtualLinkDiagram& diagram() const { return *diagram_; }
    const CubeOptions& options() const { return opts_; }
    const CutLocusSet& loci() const { return loci_; }
    int crossings() const { return n_; }

    const StateData& state(StateMask s) const { return states_[s]; }
    const std::vector<CubeEdge>& edges() const { return edges_; }

    // Enhanced-state basis, ordered by (state mask, label mask) ascending
    // within each homological degree; label bit c set = cycle c labeled X.
    int dim(int i) const { return dims_[i]; }
    int maxDegree() const { return n_; }
    long long basisIndex(StateMask s, std::uint32_t labels) const {
        return stateOffset_[s] + labels;
    }
    // raw gradings (no diagram shift): i = popcount, j = i + lambda
    int jGrade(int i, long long basis) const { return jGrade_[i][basis]; }

    // Integer differential d_i : C^i -> C^{i+1} as sparse triplets.
    const std::vector<Trip>& differential(int i) const { return diff_[i]; }

    // Grading shift record [-n_-]{n_+ - 2 n_-}.
    int shiftHomological() const { return -diagram_->nMinus(); }
    int shiftQuantum() const { return diagram_->nPlus() - 2 * diagram_->nMinus(); }

    friend SignedCubeComplex buildCube(const VirtualLinkDiagram& d, const CubeOptions& opts);

    // Test hook: negate one differential entry (used by the corrupted-cube
    // negative control). Index is into the concatenated triplet lists.
    void corruptEntryForTest(std::size_t k);

private:
    const VirtualLinkDiagram* diagram_ = nullptr;
    CubeOptions opts_;
    CutLocusSet loci_;
    int n_ = 0;
    std::vector<StateData> states_;
    std::vector<CubeEdge> edges_;
    std::vector<long long> stateOffset_;
    std::vector<int> dims_;
    std::vector<std::vector<int>> jGrade_;
    std::vector<std::vector<Trip>> diff_;
};

SignedCubeComplex buildCube(const VirtualLinkDiagram& d, const CubeOptions& opts = {});

// One edge applied to a single label mask of its source state; pairs of
// (target label mask, coefficient). Respects the cube's bars/orders/t options.
std::vector<std::pair<std::uint32_t, std::int64_t>> applyCubeEdge(
    const SignedCubeComplex& cube, const CubeEdge& e, std::uint32_t labels);

// Global orders for every state, propagated from the all-A root order along
// the spanning tree. Merge: the local-1 cycle's label persists and labels
// above the local-2 label close the gap; split: labels above the parent's
// move up, local 1 keeps the parent label, local 2 takes the next; a
// single-cycle resmoothing changes nothing.
struct GlobalOrderAssignment {
    std::vector<std::vector<int>> rank; // per state mask: 1-based rank per cycle
};
GlobalOrderAssignment propagateGlobalOrders(const VirtualLinkDiagram& d,
                                            const std::vector<int>& rootOrder = {},
                                            TreeRule rule = TreeRule::LowestBit,
                                            std::uint64_t seed = 0);

// Permutation sign comparing local to global order at a site. Two-cycle side:
// (-1)^{a+b+1} for a < b and (-1)^{a+b} for a > b, where a sits on the local
// first cycle; one-cycle side: (-1)^{a+1}.
int permSign(int a, int b);
int permSign(int a);

struct D2Failure {
    StateMask state = 0;
    int site1 = -1, site2 = -1;
    std::string detail;
};

struct D2Report {
    bool ok = true;
    std::vector<D2Failure> failures;
};

// Verifies d_{i+1} . d_i = 0 matrix-wise; on failure reports the offending
// faces (state and site pair).
D2Report checkD2(const SignedCubeComplex& cube);

// One line per edge: "s -> t site=k kind=m|d|e pre... " debugging dump.
std::string dumpEdges(const SignedCubeComplex& cube);

// Debug dump of the orientation layer ("arc <id>: CUT" plus per-state stars).
std::string dumpOrientation(const VirtualLinkDiagram& d);

} // namespace vkh
