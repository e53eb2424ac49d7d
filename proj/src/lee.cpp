#include "vkh/lee.hpp"

#include <algorithm>
#include <numeric>

#include "vkh/homology.hpp"
#include "vkh/linalg.hpp"
#include "vkh/orientation.hpp"

namespace vkh {

RedGreenReport redGreenProperties() {
    const FrobeniusSpec lee = FrobeniusSpec::lee();
    const AlgebraElement r = AlgebraElement::red();
    const AlgebraElement g = AlgebraElement::green();
    const AlgebraElement x = AlgebraElement::x();
    RedGreenReport rep;
    rep.projections = mul(r, r, lee) == r && mul(g, g, lee) == g;
    rep.complementary = r + g == AlgebraElement::one();
    rep.disjoint = mul(r, g, lee).isZero();
    rep.eigenprojections = mul(x, r, lee) == r && mul(x, g, lee) == g.scaled(HT::constant(Rat(-1)));
    rep.conjugates = bar(r, lee) == g && bar(g, lee) == r;
    // Delta(r) = 2 r(x)r, Delta(g) = 2 g(x)g
    auto tensorOf = [&](const AlgebraElement& a, const AlgebraElement& b, Rat scale) {
        TensorElement t;
        const HT s = HT::constant(scale);
        t.c11 = s * a.c1 * b.c1;
        t.c1X = s * a.c1 * b.cX;
        t.cX1 = s * a.cX * b.c1;
        t.cXX = s * a.cX * b.cX;
        return t;
    };
    rep.comultiplication = comul(r, lee) == tensorOf(r, r, Rat(2)) &&
                           comul(g, lee) == tensorOf(g, g, Rat(2));
    return rep;
}

StateMask orientedResolutionState(const VirtualLinkDiagram& d, unsigned reversedMask) {
    // Map each pass to its component.
    std::vector<int> comp(d.passCount());
    int g = 0;
    for (int ci = 0; ci < d.componentCount(); ++ci)
        for (std::size_t k = 0; k < d.components()[ci].size(); ++k) comp[g++] = ci;
    StateMask s = 0;
    for (std::size_t x = 0; x < d.crossings().size(); ++x) {
        const Crossing& cr = d.crossings()[x];
        const bool flip = (((reversedMask >> comp[cr.overPass]) ^
                            (reversedMask >> comp[cr.underPass])) &
                           1u) != 0;
        const int eff = flip ? -cr.sign : cr.sign;
        if (eff < 0) s |= StateMask(1) << x;
    }
    return s;
}

std::vector<CanonicalGenerator> canonicalGenerators(const VirtualLinkDiagram& d,
                                                    StarRule starRule) {
    const int c = d.componentCount();
    const CutLocusSet loci = cutLoci(d);
    std::vector<CanonicalGenerator> out;
    for (unsigned rev = 0; rev < (1u << c); ++rev) {
        CanonicalGenerator gen;
        gen.reversedMask = rev;
        gen.state = orientedResolutionState(d, rev);
        const auto cycles = resolve(d, gen.state);
        const auto stars = starMarkings(cycles, starRule);
        const int k = static_cast<int>(cycles.size());

        // Strand locations (cycle, point) per crossing, via the same rule the
        // cube uses: strand 0 holds the over-in slot.
        std::vector<std::array<int, 2>> strandCycle(d.crossingCount(), {-1, -1});
        std::vector<std::array<int, 2>> strandPoint(d.crossingCount(), {-1, -1});
        for (const auto& cyc : cycles) {
            const int m = static_cast<int>(cyc.segments.size());
            for (int j = 0; j < m; ++j) {
                const ArcStep& seg = cyc.segments[j];
                const SemiArc& sa = d.arcs()[seg.arc];
                if (sa.tailPass < 0) continue;
                const int pass = seg.forward ? sa.headPass : sa.tailPass;
                const int x = d.passCrossing(pass);
                const bool over = d.crossings()[x].overPass == pass;
                const bool oriented =
                    orientedSmoothing(d.crossings()[x], (gen.state >> x) & 1u);
                const int idx = oriented ? (seg.forward == over ? 0 : 1)
                                         : (seg.forward ? 0 : 1);
                strandCycle[x][idx] = cyc.cycle_id;
                strandPoint[x][idx] = j;
            }
        }

        // 2-coloring with parity constraints: color(cycle) ^ transportParity
        // must differ across the two strands of every site.
        // colorDiff[a][b] constraints as graph edges with parity.
        std::vector<std::vector<std::pair<int, int>>> adj(k); // (other, requiredXor)
        for (int x = 0; x < d.crossingCount(); ++x) {
            const int c1 = strandCycle[x][0], c2 = strandCycle[x][1];
            const int p1 = barParity(cycles[c1], loci, strandPoint[x][0], stars.starSegment[c1]);
            const int p2 = barParity(cycles[c2], loci, strandPoint[x][1], stars.starSegment[c2]);
            const int need = 1 ^ p1 ^ p2; // color(c1) ^ color(c2)
            if (c1 == c2) {
                if (need != 0)
                    throw InternalError(
                        "alternate coloring infeasible at a site (cut-locus parity bug)");
                continue;
            }
            adj[c1].push_back({c2, need});
            adj[c2].push_back({c1, need});
        }

        // Anchor each connected group at the cycle holding its smallest arc:
        // red when that arc's component keeps its direction, green otherwise.
        std::vector<int> color(k, -1);
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cycles[a].minArc() < cycles[b].minArc();
        });
        for (int seed : order) {
            if (color[seed] >= 0) continue;
            const int comp = d.arcs()[cycles[seed].minArc()].component;
            color[seed] = (rev >> comp) & 1u;
            std::vector<int> stack{seed};
            while (!stack.empty()) {
                const int cur = stack.back();
                stack.pop_back();
                for (auto& [nxt, need] : adj[cur]) {
                    const int want = color[cur] ^ need;
                    if (color[nxt] < 0) {
                        color[nxt] = want;
                        stack.push_back(nxt);
                    } else if (color[nxt] != want) {
                        throw InternalError(
                            "alternate coloring over-constrained (cut-locus parity bug)");
                    }
                }
            }
        }

        gen.cycleGreen.assign(k, 0);
        for (int i = 0; i < k; ++i) gen.cycleGreen[i] = static_cast<char>(color[i]);
        gen.segmentGreen.resize(k);
        for (int i = 0; i < k; ++i) {
            const auto& cyc = cycles[i];
            const int m = static_cast<int>(cyc.segments.size());
            gen.segmentGreen[i].assign(m, 0);
            for (int j = 0; j < m; ++j) {
                // color on the segment = star color xor loci between them
                const int par = barParity(cyc, loci, j == 0 ? m - 1 : j - 1,
                                          stars.starSegment[i]);
                gen.segmentGreen[i][j] = static_cast<char>(color[i] ^ par);
            }
        }
        out.push_back(std::move(gen));
    }
    // The orientation -> coloring map must be injective.
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (out[a].state == out[b].state && out[a].cycleGreen == out[b].cycleGreen)
                throw InternalError("canonical generators are not distinct");
    return out;
}

bool verifyGeneratorCycle(const CanonicalGenerator& gen, const SignedCubeComplex& leeCube) {
    if (leeCube.options().t != 1)
        throw DomainError("generator verification needs the Lee cube (t = 1)");
    const int i = stateI(gen.state);
    const int k = static_cast<int>(gen.cycleGreen.size());
    // Expansion of (x)_c (1 -+ X)/2 scaled by 2^k: coefficient of the label
    // mask L is (-1)^{|L & greenMask|}.
    std::uint32_t greenMask = 0;
    for (int cix = 0; cix < k; ++cix)
        if (gen.cycleGreen[cix]) greenMask |= 1u << cix;
    std::map<long long, std::int64_t> image;
    for (const Trip& t : leeCube.differential(i)) {
        const long long off = leeCube.basisIndex(gen.state, 0);
        if (t.col < off || t.col >= off + (1 << k)) continue;
        const std::uint32_t L = static_cast<std::uint32_t>(t.col - off);
        const std::int64_t sgn =
            __builtin_popcount(L & greenMask) % 2 == 0 ? 1 : -1;
        image[t.row] += sgn * t.coeff;
    }
    for (auto& [row, c] : image)
        if (c != 0) return false;
    return true;
}

std::pair<int, int> FilteredHomology::extremes() const {
    bool any = false;
    int lo = 0, hi = 0;
    for (auto& [i, lv] : levels)
        for (auto& [q, mult] : lv) {
            if (mult <= 0) continue;
            if (!any) {
                lo = hi = q;
                any = true;
            } else {
                lo = std::min(lo, q);
                hi = std::max(hi, q);
            }
        }
    if (!any) throw InternalError("empty Lee homology");
    return {lo, hi};
}

FilteredHomology leeFilteredHomology(const VirtualLinkDiagram& d, const CubeOptions& opts) {
    CubeOptions o = opts;
    o.t = 1;
    const SignedCubeComplex cube = buildCube(d, o);
    const int n = cube.crossings();
    FilteredHomology out;

    // Dense copies of the differentials.
    std::vector<ZMat> mats(n + 1);
    for (int i = 0; i < n; ++i) {
        mats[i] = ZMat(cube.dim(i + 1), cube.dim(i));
        for (const Trip& t : cube.differential(i))
            mats[i].at(static_cast<int>(t.row), static_cast<int>(t.col)) += t.coeff;
    }
    std::vector<int> rank(n + 1, 0);
    for (int i = 0; i < n; ++i)
        rank[i] = (mats[i].rows() && mats[i].cols()) ? rankQ(mats[i]) : 0;

    for (int i = 0; i <= n; ++i) {
        const int dim = cube.dim(i);
        if (dim == 0) continue;
        const int rankOut = i < n ? rank[i] : 0;
        const int rankIn = i > 0 ? rank[i - 1] : 0;
        const int h = dim - rankOut - rankIn;
        if (h == 0) continue;

        // distinct quantum grades at this degree, descending
        std::vector<int> qs;
        for (long long b = 0; b < dim; ++b) qs.push_back(cube.jGrade(i, b));
        std::sort(qs.begin(), qs.end());
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        std::reverse(qs.begin(), qs.end());

        const ZMat* dIn = i > 0 ? &mats[i - 1] : nullptr;
        auto levelDim = [&](int q) {
            // N(q) = dim of the image of H(C^{>=q}) -> H(C): columns with
            // grade >= q, kernel of d_i restricted there, modulo boundaries.
            std::vector<int> keep;
            for (long long b = 0; b < dim; ++b)
                if (cube.jGrade(i, b) >= q) keep.push_back(static_cast<int>(b));
            ZMat sub(i < n ? cube.dim(i + 1) : 0, static_cast<int>(keep.size()));
            if (i < n)
                for (std::size_t c = 0; c < keep.size(); ++c)
                    for (int r = 0; r < cube.dim(i + 1); ++r)
                        sub.at(r, static_cast<int>(c)) = mats[i].at(r, keep[c]);
            ZMat kerSub = i < n ? kernelBasisQ(sub)
                                : [&] {
                                      ZMat id(static_cast<int>(keep.size()),
                                              static_cast<int>(keep.size()));
                                      for (std::size_t c = 0; c < keep.size(); ++c)
                                          id.at(static_cast<int>(c), static_cast<int>(c)) = 1;
                                      return id;
                                  }();
            // embed into full coordinates
            ZMat ker(dim, kerSub.cols());
            for (int r = 0; r < kerSub.rows(); ++r)
                for (int cc = 0; cc < kerSub.cols(); ++cc)
                    ker.at(keep[r], cc) = kerSub.at(r, cc);
            if (!dIn) return kerSub.cols();
            return rankQJoined(ker, *dIn) - rankIn;
        };

        std::map<int, int> lv;
        int above = 0;
        for (int q : qs) {
            const int nq = levelDim(q);
            if (nq > above) lv[q + cube.shiftQuantum()] = nq - above;
            above = nq;
            if (nq == h) break;
        }
        if (above != h) throw InternalError("filtration levels do not exhaust homology");
        out.levels[i + cube.shiftHomological()] = std::move(lv);
        out.totalDim += h;
    }
    return out;
}

std::pair<int, int> sMinMax(const VirtualLinkDiagram& d) {
    if (d.componentCount() != 1)
        throw DomainError("s_min/s_max are defined for knots; links report raw levels");
    return leeFilteredHomology(d).extremes();
}

Rat seifertGenus(const VirtualLinkDiagram& d) {
    if (d.componentCount() != 1)
        throw DomainError("the Seifert genus formula here applies to knots");
    const StateMask s = orientedResolutionState(d, 0);
    const int r = cycleCount(d, s);
    return Rat(-r + d.crossingCount() + 1, 2);
}

int positiveSMin(const VirtualLinkDiagram& d) {
    if (!d.isPositive()) throw DomainError("positiveSMin requires an all-positive diagram");
    const int r = cycleCount(d, 0); // all-A is the oriented resolution
    return -r + d.crossingCount();
}

Rat positiveSliceGenus(const VirtualLinkDiagram& d) {
    if (!d.isPositive())
        throw DomainError("the exact slice genus path requires an all-positive diagram");
    return seifertGenus(d);
}

RasmussenResult rasmussen(const VirtualLinkDiagram& d) {
    if (d.componentCount() != 1)
        throw DomainError("the Rasmussen invariant is defined for knots");
    RasmussenResult res;
    auto [lo, hi] = sMinMax(d);
    res.s_min = lo;
    res.s_max = hi;
    if (hi != lo + 2) throw InternalError("Lee filtration violates s_max = s_min + 2");
    res.s_bar = lo + 1;
    res.lower_genus_bound = Rat(res.s_bar < 0 ? -res.s_bar : res.s_bar, 2);
    res.upper_genus_bound = seifertGenus(d);
    res.generators = 1 << d.componentCount();
    return res;
}

} // namespace vkh
