#include "vkh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace vkh {

VirtualLinkDiagram VirtualLinkDiagram::parse(std::string_view text, std::string name) {
    std::vector<std::vector<Pass>> comps(1);
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skipWs = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skipWs();
    while (i < n) {
        const char c = text[i];
        if (c == '|') {
            comps.emplace_back();
            ++i;
            skipWs();
            continue;
        }
        Pass p;
        if (c == 'O' || c == 'o')
            p.role = Role::Over;
        else if (c == 'U' || c == 'u')
            p.role = Role::Under;
        else
            throw ParseError(std::string("expected 'O', 'U' or '|', got '") + c + "'", i);
        ++i;
        skipWs();
        std::size_t digits = 0;
        long id = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            id = id * 10 + (text[i] - '0');
            if (id > 1000000) throw ParseError("crossing id out of range", i);
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected crossing id", i);
        if (id < 1) throw ParseError("crossing id must be >= 1", i);
        p.crossing_id = static_cast<int>(id);
        skipWs();
        if (i >= n) throw ParseError("expected sign '+' or '-'", i);
        if (text[i] == '+')
            p.sign = +1;
        else if (text[i] == '-')
            p.sign = -1;
        else
            throw ParseError(std::string("expected sign '+' or '-', got '") + text[i] + "'", i);
        ++i;
        comps.back().push_back(p);
        skipWs();
    }
    return VirtualLinkDiagram(std::move(comps), std::move(name));
}

std::string VirtualLinkDiagram::print() const {
    std::ostringstream out;
    bool firstComp = true;
    for (const auto& comp : components_) {
        if (!firstComp) out << "|";
        firstComp = false;
        for (const auto& p : comp)
            out << (p.role == Role::Over ? 'O' : 'U') << p.crossing_id
                << (p.sign > 0 ? '+' : '-');
    }
    return out.str();
}

void VirtualLinkDiagram::rebuild(std::vector<std::vector<Pass>> components) {
    components_ = std::move(components);
    passes_.clear();
    passCrossing_.clear();
    arcIn_.clear();
    crossings_.clear();
    arcs_.clear();
    nPlus_ = nMinus_ = 0;

    validate();

    for (const auto& comp : components_)
        for (const auto& p : comp) passes_.push_back(p);

    // Crossings sorted by original id.
    std::map<int, Crossing> byId;
    int g = 0;
    for (const auto& comp : components_) {
        for (const auto& p : comp) {
            Crossing& x = byId[p.crossing_id];
            x.id = p.crossing_id;
            x.sign = p.sign;
            (p.role == Role::Over ? x.overPass : x.underPass) = g;
            ++g;
        }
    }
    for (auto& [id, x] : byId) {
        crossings_.push_back(x);
        if (x.sign > 0)
            ++nPlus_;
        else
            ++nMinus_;
    }

    passCrossing_.assign(passes_.size(), -1);
    for (std::size_t k = 0; k < crossings_.size(); ++k) {
        passCrossing_[crossings_[k].overPass] = static_cast<int>(k);
        passCrossing_[crossings_[k].underPass] = static_cast<int>(k);
    }

    // Semi-arcs. Nonempty components: arc k runs from pass k to the cyclically
    // next pass. All-empty diagrams: one closed arc per component.
    if (passes_.empty()) {
        for (int ci = 0; ci < componentCount(); ++ci)
            arcs_.push_back(SemiArc{ci, -1, -1, ci});
    } else {
        arcIn_.assign(passes_.size(), -1);
        int base = 0;
        for (int ci = 0; ci < componentCount(); ++ci) {
            const int m = static_cast<int>(components_[ci].size());
            for (int k = 0; k < m; ++k) {
                const int tail = base + k;
                const int head = base + (k + 1) % m;
                arcs_.push_back(SemiArc{tail, tail, head, ci});
                arcIn_[head] = tail;
            }
            base += m;
        }
    }
}

void VirtualLinkDiagram::validate() const {
    bool anyEmpty = false, anyNonEmpty = false;
    for (const auto& comp : components_) (comp.empty() ? anyEmpty : anyNonEmpty) = true;
    if (anyEmpty && anyNonEmpty)
        throw ValidationError(
            "empty components are only allowed in an all-empty unknot/unlink code");

    std::map<int, std::pair<int, int>> seen; // id -> (over count, under count)
    std::map<int, int> signs;
    for (const auto& comp : components_) {
        for (const auto& p : comp) {
            if (p.crossing_id < 1) throw ValidationError("crossing id must be >= 1");
            if (p.sign != 1 && p.sign != -1) throw ValidationError("sign must be +1 or -1");
            auto& cnt = seen[p.crossing_id];
            (p.role == Role::Over ? cnt.first : cnt.second) += 1;
            auto [it, inserted] = signs.emplace(p.crossing_id, p.sign);
            if (!inserted && it->second != p.sign)
                throw ValidationError("crossing " + std::to_string(p.crossing_id) +
                                      " has mismatched signs on its two passes");
        }
    }
    for (auto& [id, cnt] : seen) {
        if (cnt.first != 1 || cnt.second != 1)
            throw ValidationError(
                "crossing " + std::to_string(id) +
                " must appear exactly twice, once over and once under (got " +
                std::to_string(cnt.first) + " over, " + std::to_string(cnt.second) +
                " under)");
    }
}

VirtualLinkDiagram VirtualLinkDiagram::mirror() const {
    auto comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp) {
            p.sign = -p.sign;
            p.role = p.role == Role::Over ? Role::Under : Role::Over;
        }
    return VirtualLinkDiagram(std::move(comps), name_.empty() ? name_ : name_ + "!");
}

VirtualLinkDiagram VirtualLinkDiagram::switchCrossings(const std::set<int>& ids) const {
    for (int id : ids)
        if (!std::any_of(crossings_.begin(), crossings_.end(),
                         [&](const Crossing& x) { return x.id == id; }))
            throw DomainError("unknown crossing id " + std::to_string(id));
    auto comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp)
            if (ids.count(p.crossing_id)) {
                p.sign = -p.sign;
                p.role = p.role == Role::Over ? Role::Under : Role::Over;
            }
    return VirtualLinkDiagram(std::move(comps));
}

VirtualLinkDiagram VirtualLinkDiagram::virtualize(const std::set<int>& ids) const {
    for (int id : ids)
        if (!std::any_of(crossings_.begin(), crossings_.end(),
                         [&](const Crossing& x) { return x.id == id; }))
            throw DomainError("unknown crossing id " + std::to_string(id));
    auto comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp)
            if (ids.count(p.crossing_id)) p.sign = -p.sign;
    return VirtualLinkDiagram(std::move(comps));
}

VirtualLinkDiagram VirtualLinkDiagram::zPartner(int id) const {
    return switchCrossings({id}).virtualize({id});
}

int VirtualLinkDiagram::freshCrossingId() const {
    int maxId = 0;
    for (const auto& x : crossings_) maxId = std::max(maxId, x.id);
    return maxId + 1;
}

VirtualLinkDiagram VirtualLinkDiagram::applyR1(int arc, int sign, bool overFirst) const {
    if (arc < 0 || arc >= arcCount()) throw DomainError("invalid semi-arc id");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    auto comps = components_;
    const int id = freshCrossingId();
    Pass a{id, overFirst ? Role::Over : Role::Under, sign};
    Pass b{id, overFirst ? Role::Under : Role::Over, sign};
    if (passes_.empty()) {
        // kink on an unknotted component
        comps[arcs_[arc].component] = {a, b};
    } else {
        const SemiArc& sa = arcs_[arc];
        auto& comp = comps[sa.component];
        int pos = 0, base = 0;
        for (int ci = 0; ci < sa.component; ++ci) base += static_cast<int>(components_[ci].size());
        pos = sa.tailPass - base + 1; // insert right after the tail pass
        comp.insert(comp.begin() + pos, {a, b});
    }
    return VirtualLinkDiagram(std::move(comps));
}

VirtualLinkDiagram VirtualLinkDiagram::applyR2(int arcA, int arcB, int sign) const {
    if (arcA < 0 || arcA >= arcCount() || arcB < 0 || arcB >= arcCount())
        throw DomainError("invalid semi-arc id");
    if (arcA == arcB) throw DomainError("R2 needs two distinct semi-arcs");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    const int idX = freshCrossingId();
    const int idY = idX + 1;
    // Clasp: travel on arcA meets O(x) then O(y); on arcB it meets U(y) then
    // U(x). The two crossings carry opposite signs.
    std::vector<Pass> insA = {{idX, Role::Over, sign}, {idY, Role::Over, -sign}};
    std::vector<Pass> insB = {{idY, Role::Under, -sign}, {idX, Role::Under, sign}};

    auto comps = components_;
    if (passes_.empty()) {
        comps[arcs_[arcA].component] = insA;
        auto& cb = comps[arcs_[arcB].component];
        cb.insert(cb.end(), insB.begin(), insB.end());
        return VirtualLinkDiagram(std::move(comps));
    }
    struct Ins {
        int comp;
        int pos;
        std::vector<Pass> what;
    };
    auto posOf = [&](int arc) {
        const SemiArc& sa = arcs_[arc];
        int base = 0;
        for (int ci = 0; ci < sa.component; ++ci) base += static_cast<int>(components_[ci].size());
        return Ins{sa.component, sa.tailPass - base + 1, {}};
    };
    Ins ia = posOf(arcA), ib = posOf(arcB);
    ia.what = insA;
    ib.what = insB;
    // Later position first so earlier offsets stay valid.
    if (ia.comp == ib.comp && ia.pos < ib.pos) std::swap(ia, ib);
    comps[ia.comp].insert(comps[ia.comp].begin() + ia.pos, ia.what.begin(), ia.what.end());
    comps[ib.comp].insert(comps[ib.comp].begin() + ib.pos, ib.what.begin(), ib.what.end());
    return VirtualLinkDiagram(std::move(comps));
}

} // namespace vkh
