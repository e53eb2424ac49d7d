#include "vkh/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace vkh {

namespace {

// Exponent printer shared by Laurent and TwoVar. Quarter-unit exponents print
// as integers or as e/4 fractions ("3/4", "-1/2").
std::string expString(int e, int quarter) {
    if (quarter == 1) return std::to_string(e);
    int g = std::abs(e) % 4 == 0 ? 4 : (std::abs(e) % 2 == 0 ? 2 : 1);
    int num = e / g, den = 4 / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace

Laurent Laurent::dividedBy(const Laurent& divisor) const {
    requireSameVar(divisor);
    if (divisor.isZero()) throw DomainError("division by zero polynomial");
    Laurent rem = *this;
    Laurent quot(var_, quarter_);
    const int dTop = divisor.terms().rbegin()->first;
    const std::int64_t dLead = divisor.terms().rbegin()->second;
    while (!rem.isZero()) {
        const int rTop = rem.terms().rbegin()->first;
        const std::int64_t rLead = rem.terms().rbegin()->second;
        if (rLead % dLead != 0)
            throw InternalError("inexact Laurent division (leading coefficient)");
        const std::int64_t q = rLead / dLead;
        const int shift = rTop - dTop;
        quot.add(shift, q);
        rem -= divisor.shifted(shift).scaled(q);
        if (!rem.isZero() && rem.terms().rbegin()->first >= rTop)
            throw InternalError("inexact Laurent division (no progress)");
    }
    return quot;
}

std::string Laurent::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        out << a << "*" << var_ << "^" << expString(e, quarter_);
    }
    return out.str();
}

std::string Laurent::toJson() const {
    std::ostringstream out;
    out << "{\"var\":\"" << var_ << "\",\"terms\":[";
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) out << ",";
        first = false;
        if (quarter_ == 1)
            out << "[" << e << "," << c << "]";
        else
            out << "[\"" << expString(e, quarter_) << "\"," << c << "]";
    }
    out << "]}";
    return out.str();
}

Laurent TwoVar::evalT(std::int64_t t) const {
    Laurent r("q");
    for (auto& [key, c] : terms_) {
        auto [et, eq] = key;
        std::int64_t f = 1;
        for (int k = 0; k < std::abs(et); ++k) f *= t;
        if (et < 0) {
            if (t != 1 && t != -1) throw DomainError("evalT needs a unit for negative powers");
            // for t = +-1, t^{-n} == t^{n}
        }
        r.add(eq, c * f);
    }
    return r;
}

std::string TwoVar::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [key, c] : terms_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        out << a << "*t^" << key.first << "*q^" << key.second;
    }
    return out.str();
}

std::string TwoVar::toJson() const {
    std::ostringstream out;
    out << "{\"vars\":[\"t\",\"q\"],\"terms\":[";
    bool first = true;
    for (auto& [key, c] : terms_) {
        if (!first) out << ",";
        first = false;
        out << "[" << key.first << "," << key.second << "," << c << "]";
    }
    out << "]}";
    return out.str();
}

} // namespace vkh
