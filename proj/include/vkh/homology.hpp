#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vkh/algebra.hpp"
#include "vkh/cube.hpp"
#include "vkh/laurent.hpp"
#include "vkh/linalg.hpp"

namespace vkh {

enum class Coeff : std::uint8_t { Z, Q, Z2 };

// One bigraded piece: free rank plus torsion as a multiset of prime powers
// (invariant factors split into prime powers, e.g. Z/6 -> 2^1, 3^1).
struct GradedGroup {
    int freeRank = 0;
    std::vector<std::pair<long, int>> torsion; // (prime, exponent), sorted

    bool trivial() const { return freeRank == 0 && torsion.empty(); }
    bool operator==(const GradedGroup&) const = default;
};

// Khovanov homology table with the [-n_-]{n_+ - 2 n_-} shifts applied to the
// (i, j) keys. Only nontrivial groups are stored.
struct GradedHomology {
    Coeff coeff = Coeff::Z;
    int shiftHomological = 0;
    int shiftQuantum = 0;
    std::map<std::pair<int, int>, GradedGroup> groups;

    bool operator==(const GradedHomology& o) const { return groups == o.groups; }
    std::string toJson() const;
};

// Validates the Frobenius parameters for matrix-level work: h must be 0 and
// t a constant 0 or 1. Returns the t value.
int cubeTValue(const FrobeniusSpec& spec);

GradedHomology homologyOfCube(const SignedCubeComplex& cube, Coeff coeff);
GradedHomology khovanovHomology(const VirtualLinkDiagram& d, Coeff coeff = Coeff::Z,
                                const CubeOptions& opts = {});

// P_K(t, q) = sum t^i q^j dim; field ranks (free part over Z).
TwoVar poincarePolynomial(const GradedHomology& h);

// Graded Euler characteristic; equals jonesJ(d) for every diagram.
Laurent eulerCharacteristicQ(const GradedHomology& h);

// Compares the homology table of d against its Z-move partner at one crossing
// (roles exchanged, sign kept); equality of ranks and torsion per bigrading.
bool zEquivalenceCheck(const VirtualLinkDiagram& d, int crossingId,
                       Coeff coeff = Coeff::Z);

// Rebuild with a permuted root order / an alternative spanning tree and
// compare graded homology tables.
bool rootOrderIndependence(const VirtualLinkDiagram& d,
                           const std::vector<int>& perm = {}, Coeff coeff = Coeff::Z);
bool spanningTreeIndependence(const VirtualLinkDiagram& d, TreeRule alt,
                              std::uint64_t seed = 0, Coeff coeff = Coeff::Z);

} // namespace vkh
