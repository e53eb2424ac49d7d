#include "vkh/algebra.hpp"

#include <numeric>
#include <sstream>

namespace vkh {

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
    if (num == 0) den = 1;
}

std::string Rat::toString() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string HT::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.toString();
        if (k.first) out << "*h^" << k.first;
        if (k.second) out << "*t^" << k.second;
    }
    return out.str();
}

std::string AlgebraElement::toString() const {
    if (isZero()) return "0";
    std::ostringstream out;
    if (!c1.isZero()) out << "(" << c1.toString() << ")*1";
    if (!cX.isZero()) {
        if (!c1.isZero()) out << " + ";
        out << "(" << cX.toString() << ")*X";
    }
    return out.str();
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b,
                   const FrobeniusSpec& spec) {
    // (a1 + aX X)(b1 + bX X) with X^2 = hX + t
    const HT xx = a.cX * b.cX;
    return {a.c1 * b.c1 + xx * spec.t, a.c1 * b.cX + a.cX * b.c1 + xx * spec.h};
}

AlgebraElement mul(const TensorElement& ab, const FrobeniusSpec& spec) {
    AlgebraElement r;
    r.c1 = ab.c11 + ab.cXX * spec.t;
    r.cX = ab.c1X + ab.cX1 + ab.cXX * spec.h;
    return r;
}

TensorElement comul(const AlgebraElement& a, const FrobeniusSpec& spec) {
    // Delta(1) = 1(x)X + X(x)1 - h 1(x)1; Delta(X) = X(x)X + t 1(x)1
    TensorElement r;
    r.c11 = a.c1 * (-spec.h) + a.cX * spec.t;
    r.c1X = a.c1;
    r.cX1 = a.c1;
    r.cXX = a.cX;
    return r;
}

HT counit(const AlgebraElement& a) { return a.cX; }

AlgebraElement unitMap(const HT& r) { return {r, HT{}}; }

AlgebraElement eta(const AlgebraElement&) { return AlgebraElement::zero(); }

AlgebraElement bar(const AlgebraElement& a, const FrobeniusSpec& spec) {
    if (!spec.hIsZero())
        throw DomainError("the bar operation is defined only for h = 0");
    return {a.c1, -a.cX};
}

TensorElement barSecond(const TensorElement& v) {
    return {v.c11, -v.c1X, v.cX1, -v.cXX};
}

std::pair<AlgebraElement, AlgebraElement> mulComulDiagnostic(const FrobeniusSpec& spec) {
    // Composite across the bar/order-corrected square: the comultiplied pair
    // has its second factor conjugated and the global order contributes one
    // transposition sign before the merge.
    auto composite = [&](const AlgebraElement& v) {
        return mul(-barSecond(comul(v, spec)), spec);
    };
    return {composite(AlgebraElement::one()), composite(AlgebraElement::x())};
}

} // namespace vkh
