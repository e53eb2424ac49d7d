#include "vkh/homology.hpp"

#include <algorithm>
#include <sstream>

namespace vkh {

int cubeTValue(const FrobeniusSpec& spec) {
    if (!spec.hIsZero())
        throw DomainError("homology requires h = 0 (h != 0 admits no well-defined complex)");
    if (spec.t.isZero()) return 0;
    if (spec.t == HT::constant(Rat(1))) return 1;
    throw DomainError("matrix-level homology needs a numeric t of 0 or 1");
}

namespace {

// Per quantum grading j, the (i, j)-block bases and matrices between them.
struct JBlock {
    std::vector<std::vector<long long>> basis; // per degree: global basis indices
    std::vector<ZMat> mats;                    // mats[i]: block of d_i
};

std::map<int, JBlock> splitByJ(const SignedCubeComplex& cube) {
    const int n = cube.crossings();
    std::map<int, JBlock> blocks;
    // collect bases
    std::map<int, std::vector<std::map<long long, int>>> local; // j -> per i: global->local
    for (int i = 0; i <= n; ++i) {
        for (long long b = 0; b < cube.dim(i); ++b) {
            const int j = cube.jGrade(i, b);
            auto& blk = blocks[j];
            auto& loc = local[j];
            if (blk.basis.empty()) {
                blk.basis.resize(n + 1);
                loc.resize(n + 1);
            }
            loc[i][b] = static_cast<int>(blk.basis[i].size());
            blk.basis[i].push_back(b);
        }
    }
    for (auto& [j, blk] : blocks) {
        auto& loc = local[j];
        blk.mats.resize(n + 1);
        for (int i = 0; i < n; ++i)
            blk.mats[i] = ZMat(static_cast<int>(blk.basis[i + 1].size()),
                               static_cast<int>(blk.basis[i].size()));
    }
    for (int i = 0; i < n; ++i) {
        for (const Trip& t : cube.differential(i)) {
            const int j = cube.jGrade(i, t.col);
            if (cube.jGrade(i + 1, t.row) != j)
                throw InternalError("Khovanov differential does not preserve j at t=0");
            auto& blk = blocks[j];
            auto& loc = local[j];
            blk.mats[i].at(loc[i + 1].at(t.row), loc[i].at(t.col)) += t.coeff;
        }
    }
    return blocks;
}

} // namespace

GradedHomology homologyOfCube(const SignedCubeComplex& cube, Coeff coeff) {
    if (cube.options().t != 0)
        throw DomainError("graded homology is the t = 0 specialization");
    GradedHomology out;
    out.coeff = coeff;
    out.shiftHomological = cube.shiftHomological();
    out.shiftQuantum = cube.shiftQuantum();
    const int n = cube.crossings();

    auto blocks = splitByJ(cube);
    for (auto& [j, blk] : blocks) {
        // ranks of the block differentials
        std::vector<int> rank(n + 1, 0);
        std::vector<SmithDecomposition> snf(n + 1);
        for (int i = 0; i < n; ++i) {
            if (blk.mats[i].rows() == 0 || blk.mats[i].cols() == 0) continue;
            switch (coeff) {
            case Coeff::Z:
                snf[i] = smithNormalForm(blk.mats[i]);
                rank[i] = snf[i].rank;
                break;
            case Coeff::Q:
                rank[i] = rankQ(blk.mats[i]);
                break;
            case Coeff::Z2:
                rank[i] = rankZ2(blk.mats[i]);
                break;
            }
        }
        for (int i = 0; i <= n; ++i) {
            const int dim = static_cast<int>(blk.basis[i].size());
            if (dim == 0) continue;
            const int rankOut = i < n ? rank[i] : 0;
            const int rankIn = i > 0 ? rank[i - 1] : 0;
            GradedGroup g;
            g.freeRank = dim - rankOut - rankIn;
            if (coeff == Coeff::Z && i > 0) {
                for (const mpz_class& f : snf[i - 1].factors) {
                    if (f <= 1) continue;
                    for (auto& [p, e] : factorize(f))
                        g.torsion.push_back({p.get_si(), e});
                }
                std::sort(g.torsion.begin(), g.torsion.end());
            }
            if (!g.trivial())
                out.groups[{i + out.shiftHomological, j + out.shiftQuantum}] = g;
        }
    }
    return out;
}

GradedHomology khovanovHomology(const VirtualLinkDiagram& d, Coeff coeff,
                                const CubeOptions& opts) {
    CubeOptions o = opts;
    o.t = 0;
    return homologyOfCube(buildCube(d, o), coeff);
}

TwoVar poincarePolynomial(const GradedHomology& h) {
    TwoVar p;
    for (auto& [key, g] : h.groups) p.add(key.first, key.second, g.freeRank);
    return p;
}

Laurent eulerCharacteristicQ(const GradedHomology& h) {
    Laurent chi("q");
    for (auto& [key, g] : h.groups)
        chi.add(key.second, key.first % 2 == 0 ? g.freeRank : -g.freeRank);
    return chi;
}

bool zEquivalenceCheck(const VirtualLinkDiagram& d, int crossingId, Coeff coeff) {
    const GradedHomology a = khovanovHomology(d, coeff);
    const GradedHomology b = khovanovHomology(d.zPartner(crossingId), coeff);
    return a == b;
}

bool rootOrderIndependence(const VirtualLinkDiagram& d, const std::vector<int>& perm,
                           Coeff coeff) {
    CubeOptions base;
    const GradedHomology a = khovanovHomology(d, coeff, base);
    CubeOptions alt;
    if (perm.empty()) {
        const auto cycles = resolve(d, 0);
        alt.rootOrder.resize(cycles.size());
        for (std::size_t i = 0; i < cycles.size(); ++i)
            alt.rootOrder[i] = static_cast<int>(cycles.size() - 1 - i);
    } else {
        alt.rootOrder = perm;
    }
    const GradedHomology b = khovanovHomology(d, coeff, alt);
    return a == b;
}

bool spanningTreeIndependence(const VirtualLinkDiagram& d, TreeRule altRule,
                              std::uint64_t seed, Coeff coeff) {
    const GradedHomology a = khovanovHomology(d, coeff);
    CubeOptions alt;
    alt.tree = altRule;
    alt.treeSeed = seed;
    const GradedHomology b = khovanovHomology(d, coeff, alt);
    return a == b;
}

std::string GradedHomology::toJson() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto& [key, g] : groups) {
        if (!first) out << ",";
        first = false;
        out << "\"(" << key.first << "," << key.second << ")\":{\"free\":" << g.freeRank
            << ",\"torsion\":[";
        bool tf = true;
        for (auto& [p, e] : g.torsion) {
            if (!tf) out << ",";
            tf = false;
            out << "\"" << p << "^" << e << "\"";
        }
        out << "]}";
    }
    if (!first) out << ",";
    out << "\"shifts\":{\"homological\":" << shiftHomological
        << ",\"quantum\":" << shiftQuantum << "}}";
    return out.str();
}

} // namespace vkh
