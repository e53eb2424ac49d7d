#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "vkh/catalog.hpp"
#include "vkh/cube.hpp"
#include "vkh/diagram.hpp"
#include "vkh/homology.hpp"
#include "vkh/lee.hpp"
#include "vkh/random.hpp"
#include "vkh/smoothing.hpp"

namespace {

using namespace vkh;

// FNV-1a over the canonical printed code: stable across runs and platforms.
std::string inputHash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string jsonEscape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

struct Options {
    bool json = false;
    int maxCrossings = kDefaultCrossingCap;
    std::string catalogFile;
    std::uint64_t seed = 0;
    std::string coeff = "z";
    bool positiveFast = false;
};

VirtualLinkDiagram resolveInput(const std::string& input, const Options& opt) {
    std::map<std::string, std::string> user;
    if (!opt.catalogFile.empty()) user = loadCatalogFile(opt.catalogFile);
    // catalog name?
    try {
        return catalogLookup(input, user);
    } catch (const DomainError&) {
    }
    if (!input.empty() && input[0] == '@') {
        std::ifstream in(input.substr(1));
        if (!in) throw DomainError("cannot open input file: " + input.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return VirtualLinkDiagram::parse(ss.str());
    }
    if (input.rfind("random:", 0) == 0) {
        const int n = std::stoi(input.substr(7));
        std::mt19937_64 rng(opt.seed);
        return randomDiagram(rng, n, 1);
    }
    return VirtualLinkDiagram::parse(input);
}

Coeff coeffOf(const std::string& s) {
    if (s == "z") return Coeff::Z;
    if (s == "q") return Coeff::Q;
    if (s == "z2") return Coeff::Z2;
    throw DomainError("--coeff must be one of z, q, z2");
}

class Report {
public:
    Report(std::string command, const VirtualLinkDiagram& d, bool json)
        : command_(std::move(command)), code_(d.print()), json_(json),
          start_(std::chrono::steady_clock::now()) {}

    void field(const std::string& key, const std::string& rawJson,
               const std::string& text) {
        jsonFields_.push_back({key, rawJson});
        textLines_.push_back(text);
    }
    void fieldString(const std::string& key, const std::string& value,
                     const std::string& text) {
        field(key, "\"" + jsonEscape(value) + "\"", text);
    }

    void emit(std::ostream& out) const {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        if (json_) {
            out << "{\"command\":\"" << jsonEscape(command_) << "\",\"input\":\""
                << jsonEscape(code_) << "\",\"input_hash\":\"" << inputHash(code_)
                << "\",\"results\":{";
            bool first = true;
            for (auto& [k, v] : jsonFields_) {
                if (!first) out << ",";
                first = false;
                out << "\"" << k << "\":" << v;
            }
            out << "},\"timing_ms\":" << ms << "}\n";
        } else {
            out << "# " << command_ << " " << code_ << " (hash " << inputHash(code_)
                << ")\n";
            for (auto& line : textLines_) out << line << "\n";
        }
    }

private:
    std::string command_;
    std::string code_;
    bool json_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::pair<std::string, std::string>> jsonFields_;
    std::vector<std::string> textLines_;
};

int cmdJones(const VirtualLinkDiagram& d, const Options& opt) {
    Report rep("jones", d, opt.json);
    const Laurent bA = bracketA(d, opt.maxCrossings);
    const Laurent bQ = bracketQ(d, opt.maxCrossings);
    const Laurent f = fPoly(d, opt.maxCrossings);
    const Laurent J = jonesJ(d, opt.maxCrossings);
    rep.field("bracket_A", bA.toJson(), "<K>_A = " + bA.toString());
    rep.field("bracket_q", bQ.toJson(), "<K>_q = " + bQ.toString());
    rep.field("f_A", f.toJson(), "f_K(A) = " + f.toString());
    rep.field("J_q", J.toJson(), "J_K(q) = " + J.toString());
    rep.emit(std::cout);
    return 0;
}

int cmdHomology(const VirtualLinkDiagram& d, const Options& opt) {
    Report rep("homology", d, opt.json);
    CubeOptions cubeOpts;
    cubeOpts.crossingCap = opt.maxCrossings;
    const GradedHomology h = khovanovHomology(d, coeffOf(opt.coeff), cubeOpts);
    const TwoVar p = poincarePolynomial(h);
    const Laurent chi = eulerCharacteristicQ(h);
    const Laurent J = jonesJ(d, opt.maxCrossings);
    const bool eulerOk = chi == J;
    rep.field("table", h.toJson(), "table " + h.toJson());
    rep.field("poincare", p.toJson(), "P(t,q) = " + p.toString());
    rep.field("euler", chi.toJson(), "chi_q = " + chi.toString());
    rep.field("euler_matches_jones", eulerOk ? "true" : "false",
              std::string("chi_q == J_K(q): ") + (eulerOk ? "yes" : "NO"));
    rep.emit(std::cout);
    if (!eulerOk) {
        std::cerr << "internal inconsistency: Euler characteristic differs from the "
                     "Jones polynomial\n";
        return 3;
    }
    return 0;
}

int cmdS(const VirtualLinkDiagram& d, const Options& opt) {
    Report rep("s", d, opt.json);
    CubeOptions cubeOpts;
    cubeOpts.crossingCap = opt.maxCrossings;
    if (d.componentCount() != 1) {
        const FilteredHomology f = leeFilteredHomology(d, cubeOpts);
        std::ostringstream js, tx;
        js << "[";
        bool first = true;
        for (auto& [i, lv] : f.levels)
            for (auto& [q, m] : lv) {
                if (!first) js << ",";
                first = false;
                js << "[" << i << "," << q << "," << m << "]";
                tx << " (i=" << i << ", level=" << q << ") x" << m;
            }
        js << "]";
        rep.field("levels", js.str(), "filtration levels:" + tx.str());
        rep.field("generators", std::to_string(1 << d.componentCount()),
                  "generators = " + std::to_string(1 << d.componentCount()));
        rep.emit(std::cout);
        return 0;
    }
    RasmussenResult r;
    if (opt.positiveFast) {
        if (!d.isPositive()) throw DomainError("--positive-fast requires an all-positive diagram");
        r.s_min = positiveSMin(d);
        r.s_max = r.s_min + 2;
        r.s_bar = r.s_min + 1;
        r.lower_genus_bound = Rat(r.s_bar < 0 ? -r.s_bar : r.s_bar, 2);
        r.upper_genus_bound = seifertGenus(d);
        r.generators = 2;
    } else {
        r = rasmussen(d);
    }
    rep.field("s_min", std::to_string(r.s_min), "s_min = " + std::to_string(r.s_min));
    rep.field("s_max", std::to_string(r.s_max), "s_max = " + std::to_string(r.s_max));
    rep.field("s_bar", std::to_string(r.s_bar), "s_bar = " + std::to_string(r.s_bar));
    rep.fieldString("genus_lower", r.lower_genus_bound.toString(),
                    "slice genus lower bound = " + r.lower_genus_bound.toString());
    rep.fieldString("genus_upper", r.upper_genus_bound.toString(),
                    "slice genus upper bound = " + r.upper_genus_bound.toString());
    rep.field("generators", std::to_string(r.generators),
              "generators = " + std::to_string(r.generators));
    rep.emit(std::cout);
    return 0;
}

int cmdCheck(const VirtualLinkDiagram& d, const Options& opt) {
    Report rep("check", d, opt.json);
    bool allOk = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        allOk = allOk && ok;
        rep.field(name, ok ? "true" : "false",
                  name + ": " + (ok ? "pass" : "FAIL") +
                      (detail.empty() ? "" : " (" + detail + ")"));
    };

    CubeOptions cubeOpts;
    cubeOpts.crossingCap = opt.maxCrossings;

    const SignedCubeComplex cube = buildCube(d, cubeOpts);
    const D2Report d2 = checkD2(cube);
    record("d_squared_zero", d2.ok, d2.ok ? "" : d2.failures.front().detail);

    // even cut loci on every cycle of every state
    bool evenOk = true;
    const CutLocusSet loci = cutLoci(d);
    for (StateMask s = 0; s < (StateMask(1) << d.crossingCount()) && evenOk; ++s)
        for (const Cycle& c : resolve(d, s))
            if (cycleCutCount(c, loci) % 2 != 0) evenOk = false;
    record("even_cut_loci", evenOk);

    // canonical generators: 2^c of them, each a Lee cycle
    bool genOk = true;
    std::string genDetail;
    try {
        const auto gens = canonicalGenerators(d);
        CubeOptions leeOpts = cubeOpts;
        leeOpts.t = 1;
        const SignedCubeComplex lee = buildCube(d, leeOpts);
        genOk = static_cast<int>(gens.size()) == (1 << d.componentCount());
        for (const auto& g : gens)
            if (!verifyGeneratorCycle(g, lee)) genOk = false;
    } catch (const std::exception& ex) {
        genOk = false;
        genDetail = ex.what();
    }
    record("canonical_generators", genOk, genDetail);

    record("root_order_independence", rootOrderIndependence(d));
    record("spanning_tree_independence",
           spanningTreeIndependence(d, TreeRule::HighestBit));
    {
        CubeOptions alt = cubeOpts;
        alt.star = StarRule::MaxArc;
        record("star_rule_independence",
               khovanovHomology(d, Coeff::Z, alt) == khovanovHomology(d, Coeff::Z, cubeOpts));
    }

    rep.emit(std::cout);
    return allOk ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot invariants from signed oriented Gauss codes"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON report on stdout");
    app.add_option("--max-crossings", opt.maxCrossings,
                   "crossing cap for the exponential state sums");
    app.add_option("--catalog", opt.catalogFile, "extra catalog file (name: code lines)");
    app.add_option("--seed", opt.seed, "seed for random:<n> inputs");

    std::string input;
    auto* jones = app.add_subcommand("jones", "bracket and Jones polynomials");
    jones->add_option("input", input)->required();
    auto* homology = app.add_subcommand("homology", "Khovanov homology table");
    homology->add_option("input", input)->required();
    homology->add_option("--coeff", opt.coeff, "coefficients: z, q or z2");
    auto* s = app.add_subcommand("s", "Lee filtration and the Rasmussen invariant");
    s->add_option("input", input)->required();
    s->add_flag("--positive-fast", opt.positiveFast,
                "use the positive-diagram shortcut for s_min");
    auto* check = app.add_subcommand("check", "structural self-checks");
    check->add_option("input", input)->required();
    auto* cat = app.add_subcommand("catalog", "list the built-in diagrams");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cat->parsed()) {
            for (const auto& e : vkh::builtinCatalog())
                std::cout << e.name << ": " << e.code << "\n";
            return 0;
        }
        const vkh::VirtualLinkDiagram d = resolveInput(input, opt);
        if (jones->parsed()) return cmdJones(d, opt);
        if (homology->parsed()) return cmdHomology(d, opt);
        if (s->parsed()) return cmdS(d, opt);
        if (check->parsed()) return cmdCheck(d, opt);
        return 2;
    } catch (const vkh::InternalError& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
