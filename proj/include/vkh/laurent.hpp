#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "vkh/errors.hpp"

namespace vkh {

// Exact Laurent polynomial in one variable with 64-bit integer coefficients.
// Exponents may be negative. For the Jones variable t^{1/4} the exponent is
// stored in quarter units (see Laurent::quarterUnits).
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(std::string var, int quarterUnits = 1)
        : var_(std::move(var)), quarter_(quarterUnits) {}

    static Laurent zero(const std::string& var) { return Laurent(var); }
    static Laurent constant(const std::string& var, std::int64_t c) {
        Laurent p(var);
        p.add(0, c);
        return p;
    }
    static Laurent monomial(const std::string& var, int exp, std::int64_t c) {
        Laurent p(var);
        p.add(exp, c);
        return p;
    }

    const std::string& var() const { return var_; }
    // 1 for integer exponents, 4 when exponents are stored as quarters.
    int quarterUnits() const { return quarter_; }

    bool isZero() const { return terms_.empty(); }
    std::int64_t coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    void add(int exp, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        requireSameVar(o);
        for (auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        requireSameVar(o);
        for (auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.requireSameVar(b);
        Laurent r(a.var_, a.quarter_);
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent scaled(std::int64_t k) const {
        Laurent r(var_, quarter_);
        if (k != 0)
            for (auto& [e, c] : terms_) r.add(e, c * k);
        return r;
    }
    Laurent shifted(int de) const {
        Laurent r(var_, quarter_);
        for (auto& [e, c] : terms_) r.add(e + de, c);
        return r;
    }
    // x^e -> x^{-e}
    Laurent inverted() const {
        Laurent r(var_, quarter_);
        for (auto& [e, c] : terms_) r.add(-e, c);
        return r;
    }

    bool operator==(const Laurent& o) const {
        return var_ == o.var_ && quarter_ == o.quarter_ && terms_ == o.terms_;
    }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Exact division, throws InternalError when the remainder is nonzero.
    Laurent dividedBy(const Laurent& divisor) const;

    // Sorted "c*v^e" terms joined by " + " / " - ", ascending exponent.
    std::string toString() const;
    // {"var":"q","terms":[[e,c],...]} with ascending exponents.
    std::string toJson() const;

private:
    void requireSameVar(const Laurent& o) const {
        if (var_ != o.var_ || quarter_ != o.quarter_)
            throw DomainError("Laurent variable mismatch: " + var_ + " vs " + o.var_);
    }

    std::string var_ = "q";
    int quarter_ = 1;
    std::map<int, std::int64_t> terms_;
};

// Exact two-variable polynomial (Poincare polynomial in t, q).
class TwoVar {
public:
    void add(int et, int eq, std::int64_t c) {
        if (c == 0) return;
        auto key = std::make_pair(et, eq);
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    const std::map<std::pair<int, int>, std::int64_t>& terms() const { return terms_; }
    bool operator==(const TwoVar& o) const { return terms_ == o.terms_; }

    // Evaluate t := -1 (or any small integer), collapsing to a Laurent in q.
    Laurent evalT(std::int64_t t) const;

    std::string toString() const;
    std::string toJson() const;

private:
    std::map<std::pair<int, int>, std::int64_t> terms_;
};

} // namespace vkh
