#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "vkh/errors.hpp"

namespace vkh {

// Exact small rational, normalized with positive denominator.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n) {}
    Rat(std::int64_t n, std::int64_t d);

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator-(Rat a) { return Rat(-a.num, a.den); }
    bool operator==(const Rat&) const = default;
    bool isZero() const { return num == 0; }
    std::string toString() const;
};

// Polynomial in the formal parameters h, t with rational coefficients.
// Key = (degree in h, degree in t).
class HT {
public:
    HT() = default;
    static HT constant(Rat c) {
        HT p;
        p.add(0, 0, c);
        return p;
    }
    static HT h() {
        HT p;
        p.add(1, 0, Rat(1));
        return p;
    }
    static HT t() {
        HT p;
        p.add(0, 1, Rat(1));
        return p;
    }

    void add(int dh, int dt, Rat c) {
        if (c.isZero()) return;
        auto key = std::make_pair(dh, dt);
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }
    bool isZero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

    friend HT operator+(const HT& a, const HT& b) {
        HT r = a;
        for (auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend HT operator-(const HT& a, const HT& b) {
        HT r = a;
        for (auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
        return r;
    }
    friend HT operator*(const HT& a, const HT& b) {
        HT r;
        for (auto& [k1, c1] : a.terms_)
            for (auto& [k2, c2] : b.terms_)
                r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    friend HT operator-(const HT& a) { return HT() - a; }
    bool operator==(const HT&) const = default;
    std::string toString() const;

private:
    std::map<std::pair<int, int>, Rat> terms_;
};

// Which rank-2 system we are working in: the base ring tag plus the values of
// h and t (possibly formal). Homology construction requires h = 0; h != 0 is
// permitted only for the diagnostic computation below.
struct FrobeniusSpec {
    enum class Ring : std::uint8_t { Z, Q, Z2, Zt, Zht };
    Ring ring = Ring::Z;
    HT h;
    HT t;

    static FrobeniusSpec khovanov(Ring ring = Ring::Z) { return {ring, HT{}, HT{}}; }
    static FrobeniusSpec lee(Ring ring = Ring::Q) { return {ring, HT{}, HT::constant(Rat(1))}; }
    static FrobeniusSpec f3() { return {Ring::Zt, HT{}, HT::t()}; }
    static FrobeniusSpec f5() { return {Ring::Zht, HT::h(), HT::t()}; }

    bool hIsZero() const { return h.isZero(); }
};

// Element a = c1 * 1 + cX * X of A = R[X]/(X^2 - hX - t).
struct AlgebraElement {
    HT c1;
    HT cX;

    static AlgebraElement one() { return {HT::constant(Rat(1)), HT{}}; }
    static AlgebraElement x() { return {HT{}, HT::constant(Rat(1))}; }
    static AlgebraElement zero() { return {}; }
    static AlgebraElement red() { return {HT::constant(Rat(1, 2)), HT::constant(Rat(1, 2))}; }
    static AlgebraElement green() { return {HT::constant(Rat(1, 2)), HT::constant(Rat(-1, 2))}; }

    bool isZero() const { return c1.isZero() && cX.isZero(); }
    bool operator==(const AlgebraElement&) const = default;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        return {a.c1 + b.c1, a.cX + b.cX};
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        return {a.c1 - b.c1, a.cX - b.cX};
    }
    AlgebraElement scaled(const HT& k) const { return {k * c1, k * cX}; }
    std::string toString() const;
};

// Explicit rank-4 coefficient vector for V (x) V.
struct TensorElement {
    HT c11, c1X, cX1, cXX;

    bool isZero() const {
        return c11.isZero() && c1X.isZero() && cX1.isZero() && cXX.isZero();
    }
    bool operator==(const TensorElement&) const = default;
    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        return {a.c11 + b.c11, a.c1X + b.c1X, a.cX1 + b.cX1, a.cXX + b.cXX};
    }
    friend TensorElement operator-(const TensorElement& a) {
        return {-a.c11, -a.c1X, -a.cX1, -a.cXX};
    }
};

// m and Delta of the system: X^2 = hX + t,
// Delta(1) = 1(x)X + X(x)1 - h 1(x)1, Delta(X) = X(x)X + t 1(x)1.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b, const FrobeniusSpec& spec);
AlgebraElement mul(const TensorElement& ab, const FrobeniusSpec& spec);
TensorElement comul(const AlgebraElement& a, const FrobeniusSpec& spec);

HT counit(const AlgebraElement& a);               // eps(1) = 0, eps(X) = 1
AlgebraElement unitMap(const HT& r);              // iota(r) = r * 1
AlgebraElement eta(const AlgebraElement&);        // the single-cycle map: 0

// bar(a + bX) = a - bX. Defined only for h = 0; with h formal the operation
// is not part of the theory (see mulComulDiagnostic).
AlgebraElement bar(const AlgebraElement& a, const FrobeniusSpec& spec);
TensorElement barSecond(const TensorElement& v); // id (x) bar, used by the diagnostic

// The obstruction computation on the bar/order-corrected square over R[h,t]:
// returns (composite applied to 1, applied to X); equals (h, hX), and (0, 0)
// once h = 0.
std::pair<AlgebraElement, AlgebraElement> mulComulDiagnostic(const FrobeniusSpec& spec);

} // namespace vkh
