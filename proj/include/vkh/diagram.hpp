#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vkh/errors.hpp"

namespace vkh {

enum class Role : std::uint8_t { Over, Under };

struct Pass {
    int crossing_id = 0; // as written in the code, >= 1
    Role role = Role::Over;
    int sign = +1; // +1 or -1
    bool operator==(const Pass&) const = default;
};

// One classical crossing, resolved to internal indices.
struct Crossing {
    int id = 0;       // original id
    int overPass = -1;  // global pass index of the O pass
    int underPass = -1; // global pass index of the U pass
    int sign = +1;
};

// A semi-arc between consecutive passes of a component. For a diagram with
// passes, arc k runs from pass k to the next pass on the same component. A
// 0-crossing component contributes one closed arc with no endpoints.
struct SemiArc {
    int id = 0;
    int tailPass = -1; // -1 for the closed arc of an empty component
    int headPass = -1;
    int component = 0;
};

// Signed oriented Gauss code with components. Virtual crossings are not
// stored: every invariant computed here is a function of the code alone.
// Immutable after construction; all operations return new diagrams.
class VirtualLinkDiagram {
public:
    VirtualLinkDiagram() { rebuild({{}}); } // 0-crossing unknot

    explicit VirtualLinkDiagram(std::vector<std::vector<Pass>> components,
                                std::string name = {})
        : name_(std::move(name)) {
        rebuild(std::move(components));
    }

    // Grammar: code := component ("|" component)*; component := pass*;
    // pass := ("O"|"U") integer ("+"|"-"). Whitespace ignored.
    static VirtualLinkDiagram parse(std::string_view text, std::string name = {});
    std::string print() const;

    const std::string& name() const { return name_; }
    const std::vector<std::vector<Pass>>& components() const { return components_; }
    int componentCount() const { return static_cast<int>(components_.size()); }

    int crossingCount() const { return static_cast<int>(crossings_.size()); }
    int nPlus() const { return nPlus_; }
    int nMinus() const { return nMinus_; }
    int writhe() const { return nPlus_ - nMinus_; }
    bool isPositive() const { return nMinus_ == 0; }

    // Crossings sorted by original id; index into this vector is the internal
    // crossing index used for state bitmasks.
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<SemiArc>& arcs() const { return arcs_; }
    int arcCount() const { return static_cast<int>(arcs_.size()); }

    // Flattened pass tables, global index in (component, position) order.
    int passCount() const { return static_cast<int>(passes_.size()); }
    const Pass& pass(int g) const { return passes_[g]; }
    int passCrossing(int g) const { return passCrossing_[g]; }
    int arcIntoPass(int g) const { return arcIn_[g]; }
    int arcOutOfPass(int g) const { return g; } // arc id == its tail pass

    // Diagram transforms (§ operations). All preserve component order.
    VirtualLinkDiagram mirror() const;
    VirtualLinkDiagram switchCrossings(const std::set<int>& ids) const;
    VirtualLinkDiagram virtualize(const std::set<int>& ids) const;
    // Z-move partner at one crossing: switch then virtualize there (roles
    // exchanged, sign kept).
    VirtualLinkDiagram zPartner(int id) const;

    // Reidemeister moves used for invariance testing. `arc` is a semi-arc id;
    // the new passes are appended right after the arc's tail pass. overFirst
    // picks which role is met first along the travel direction.
    VirtualLinkDiagram applyR1(int arc, int sign, bool overFirst = true) const;
    VirtualLinkDiagram applyR2(int arcA, int arcB, int sign) const;

    bool operator==(const VirtualLinkDiagram& o) const {
        return components_ == o.components_;
    }

private:
    void rebuild(std::vector<std::vector<Pass>> components);
    void validate() const;
    int freshCrossingId() const;

    std::string name_;
    std::vector<std::vector<Pass>> components_;

    // Derived tables.
    std::vector<Pass> passes_;
    std::vector<int> passCrossing_;
    std::vector<int> arcIn_; // arc entering pass g
    std::vector<Crossing> crossings_;
    std::vector<SemiArc> arcs_;
    int nPlus_ = 0;
    int nMinus_ = 0;
};

} // namespace vkh
