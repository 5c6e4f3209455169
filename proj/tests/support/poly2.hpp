#pragma once

// Test-only exact bivariate polynomials over the rationals: the independent
// rational-function oracle for the localized ring. An element written in
// x, y, u^{\pm 1} (u = xy - 1) is expanded as poly / u^m with m >= 0; two
// elements are equal iff p1 * u^{m2} == p2 * u^{m1}.

#include <map>
#include <utility>

#include "logcy/numeric.hpp"
#include "logcy/rings.hpp"

namespace testpoly {

using logcy::Int;
using logcy::Scalar;

struct Poly2 {
    // (x exponent, y exponent) -> coefficient
    std::map<std::pair<long, long>, Scalar> coeffs;

    void add(long xe, long ye, const Scalar& c) {
        if (c == 0) return;
        auto key = std::make_pair(xe, ye);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            coeffs.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 out = a;
        for (const auto& [k, c] : b.coeffs) out.add(k.first, k.second, c);
        return out;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 out;
        for (const auto& [ka, ca] : a.coeffs)
            for (const auto& [kb, cb] : b.coeffs)
                out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.coeffs == b.coeffs; }

    static Poly2 constant(const Scalar& c) {
        Poly2 p;
        p.add(0, 0, c);
        return p;
    }

    static Poly2 monomial(long xe, long ye, const Scalar& c) {
        Poly2 p;
        p.add(xe, ye, c);
        return p;
    }

    Poly2 pow(long e) const {
        Poly2 out = constant(Scalar(1));
        for (long i = 0; i < e; ++i) out = out * *this;
        return out;
    }
};

inline Poly2 u_poly() {
    Poly2 u;
    u.add(1, 1, Scalar(1));
    u.add(0, 0, Scalar(-1));
    return u;
}

// A rational function p / u^{denom_pow} with denom_pow >= 0.
struct LocalFraction {
    Poly2 numerator;
    long denom_pow = 0;

    friend bool operator==(const LocalFraction& a, const LocalFraction& b) {
        return a.numerator * u_poly().pow(b.denom_pow) == b.numerator * u_poly().pow(a.denom_pow);
    }

    friend LocalFraction operator*(const LocalFraction& a, const LocalFraction& b) {
        return LocalFraction{a.numerator * b.numerator, a.denom_pow + b.denom_pow};
    }

    friend LocalFraction operator+(const LocalFraction& a, const LocalFraction& b) {
        return LocalFraction{a.numerator * u_poly().pow(b.denom_pow) +
                                 b.numerator * u_poly().pow(a.denom_pow),
                             a.denom_pow + b.denom_pow};
    }
};

inline LocalFraction expand_monomial(const Scalar& coeff, long xe, long ye, long upow) {
    LocalFraction out{Poly2::monomial(xe, ye, coeff), 0};
    if (upow >= 0) {
        out.numerator = out.numerator * u_poly().pow(upow);
    } else {
        out.denom_pow = -upow;
    }
    return out;
}

inline LocalFraction expand(const logcy::LocalElement& e) {
    LocalFraction out{Poly2{}, 0};
    for (const auto& [idx, coeff] : e.terms()) {
        long exp = static_cast<long>(logcy::to_int64(idx.exp));
        long upow = static_cast<long>(logcy::to_int64(idx.upow));
        out = out + expand_monomial(coeff, idx.branch == 'x' ? exp : 0, idx.branch == 'y' ? exp : 0,
                                    upow);
    }
    return out;
}

inline LocalFraction expand(const logcy::FormalLocalExpr& expr) {
    LocalFraction out{Poly2{}, 0};
    for (const auto& mono : expr)
        out = out + expand_monomial(mono.coeff, static_cast<long>(logcy::to_int64(mono.xexp)),
                                    static_cast<long>(logcy::to_int64(mono.yexp)),
                                    static_cast<long>(logcy::to_int64(mono.upow)));
    return out;
}

}  // namespace testpoly
