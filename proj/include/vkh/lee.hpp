#pragma once

#include <map>
#include <string>
#include <vector>

#include "vkh/algebra.hpp"
#include "vkh/cube.hpp"

namespace vkh {

// The six identities of the red/green projections r = (1+X)/2, g = (1-X)/2
// in the Lee algebra (t = 1), each verified by exact arithmetic.
struct RedGreenReport {
    bool projections = false;
    bool complementary = false;
    bool disjoint = false;
    bool eigenprojections = false;
    bool conjugates = false;
    bool comultiplication = false;
    bool all() const {
        return projections && complementary && disjoint && eigenprojections &&
               conjugates && comultiplication;
    }
};

RedGreenReport redGreenProperties();

// The oriented resolution for a choice of component directions: A where the
// reoriented crossing sign is positive, B where negative. Bit k of
// reversedMask reverses component k.
StateMask orientedResolutionState(const VirtualLinkDiagram& d, unsigned reversedMask);

struct CanonicalGenerator {
    unsigned reversedMask = 0; // orientation: bit per reversed component
    StateMask state = 0;
    std::vector<char> cycleGreen; // color at each cycle's star; 0 red, 1 green
    // color of each segment of each cycle (flips at cut loci)
    std::vector<std::vector<char>> segmentGreen;
};

// The 2^c alternately colored smoothings, one per orientation: distinct
// colors across every smoothing site, color flip at every cut locus.
std::vector<CanonicalGenerator> canonicalGenerators(const VirtualLinkDiagram& d,
                                                    StarRule star = StarRule::MinArc);

// Expands the generator over the 1/X basis (scaled by 2^cycles) and applies
// the Lee differential; true when the image is exactly zero.
bool verifyGeneratorCycle(const CanonicalGenerator& gen, const SignedCubeComplex& leeCube);

// Filtration levels of Lee homology classes. Keys are shifted homological
// degrees; values map a (shifted) quantum filtration level to the dimension
// of the associated graded piece at that level.
struct FilteredHomology {
    std::map<int, std::map<int, int>> levels;
    int totalDim = 0;

    std::pair<int, int> extremes() const; // (lowest, highest) populated level
};

FilteredHomology leeFilteredHomology(const VirtualLinkDiagram& d,
                                     const CubeOptions& opts = {});

// (s_min, s_max) for a knot: the extreme filtration levels.
std::pair<int, int> sMinMax(const VirtualLinkDiagram& d);

struct RasmussenResult {
    int s_min = 0;
    int s_max = 0;
    int s_bar = 0;
    Rat lower_genus_bound; // |s_bar| / 2
    Rat upper_genus_bound; // genus of the virtual Seifert surface
    int generators = 0;    // 2^c
};

RasmussenResult rasmussen(const VirtualLinkDiagram& d);

// Fast path for positive diagrams: s_min = q(s_0) with every cycle of the
// oriented (all-A) resolution labeled X, i.e. -r + n. Must agree with the
// full filtration computation.
int positiveSMin(const VirtualLinkDiagram& d);

// Genus of the virtual Seifert surface: (-r + n + 1)/2 over the oriented
// resolution. Exact slice genus for positive diagrams.
Rat seifertGenus(const VirtualLinkDiagram& d);
Rat positiveSliceGenus(const VirtualLinkDiagram& d);

} // namespace vkh
