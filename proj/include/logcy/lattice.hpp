#pragma once

// Exact 2D integer linear algebra: lattice vectors, unimodular 2x2 matrices,
// wedge products, primitivity. Rational companions (Vec2Q, covectors) live
// here as well since the chart geometry mixes both.

#include <utility>

#include "logcy/numeric.hpp"

namespace logcy {

struct Vec2Z {
    Int a{0};
    Int b{0};

    friend bool operator==(const Vec2Z&, const Vec2Z&) = default;
    Vec2Z operator+(const Vec2Z& o) const { return {a + o.a, b + o.b}; }
    Vec2Z operator-(const Vec2Z& o) const { return {a - o.a, b - o.b}; }
    Vec2Z operator-() const { return {-a, -b}; }
    Vec2Z operator*(const Int& s) const { return {a * s, b * s}; }
    bool is_zero() const { return a == 0 && b == 0; }
};

struct Vec2Q {
    Scalar a{0};
    Scalar b{0};

    friend bool operator==(const Vec2Q&, const Vec2Q&) = default;
    Vec2Q operator+(const Vec2Q& o) const { return {a + o.a, b + o.b}; }
    Vec2Q operator-(const Vec2Q& o) const { return {a - o.a, b - o.b}; }
    Vec2Q operator-() const { return {-a, -b}; }
    Vec2Q operator*(const Scalar& s) const { return {a * s, b * s}; }
};

inline Vec2Q to_rational(const Vec2Z& v) { return {Scalar(v.a), Scalar(v.b)}; }

// Row-major 2x2 integer matrix. When used as a chart transition the
// determinant is +1.
struct Mat2Z {
    Int m00{1}, m01{0}, m10{0}, m11{1};

    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;

    static Mat2Z identity() { return {}; }

    Int det() const { return m00 * m11 - m01 * m10; }
    Int trace() const { return m00 + m11; }
};

Int wedge(const Vec2Z& v, const Vec2Z& w);
Scalar wedge(const Vec2Q& v, const Vec2Q& w);

// v = d * u with u primitive, d >= 1. Throws ZeroVectorError on (0,0).
std::pair<Vec2Z, Int> primitive_part(const Vec2Z& v);

Vec2Z mat_apply(const Mat2Z& m, const Vec2Z& v);
Vec2Q mat_apply(const Mat2Z& m, const Vec2Q& v);

// Covectors transform by right multiplication: (row phi) * m.
Vec2Q covector_apply(const Vec2Q& phi, const Mat2Z& m);

Mat2Z mat_mul(const Mat2Z& m, const Mat2Z& n);

// Exact inverse; throws NotUnimodularError unless |det| = 1.
Mat2Z mat_inverse(const Mat2Z& m);

}  // namespace logcy
