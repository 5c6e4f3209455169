#include "logcy/lattice.hpp"

#include "logcy/errors.hpp"

namespace logcy {

Int wedge(const Vec2Z& v, const Vec2Z& w) { return v.a * w.b - v.b * w.a; }

Scalar wedge(const Vec2Q& v, const Vec2Q& w) { return v.a * w.b - v.b * w.a; }

std::pair<Vec2Z, Int> primitive_part(const Vec2Z& v) {
    if (v.is_zero()) throw ZeroVectorError();
    Int d = gcd(v.a, v.b);  // gmp gcd is non-negative
    return {Vec2Z{v.a / d, v.b / d}, d};
}

Vec2Z mat_apply(const Mat2Z& m, const Vec2Z& v) {
    return {m.m00 * v.a + m.m01 * v.b, m.m10 * v.a + m.m11 * v.b};
}

Vec2Q mat_apply(const Mat2Z& m, const Vec2Q& v) {
    return {Scalar(m.m00) * v.a + Scalar(m.m01) * v.b,
            Scalar(m.m10) * v.a + Scalar(m.m11) * v.b};
}

Vec2Q covector_apply(const Vec2Q& phi, const Mat2Z& m) {
    return {phi.a * Scalar(m.m00) + phi.b * Scalar(m.m10),
            phi.a * Scalar(m.m01) + phi.b * Scalar(m.m11)};
}

Mat2Z mat_mul(const Mat2Z& m, const Mat2Z& n) {
    return {m.m00 * n.m00 + m.m01 * n.m10, m.m00 * n.m01 + m.m01 * n.m11,
            m.m10 * n.m00 + m.m11 * n.m10, m.m10 * n.m01 + m.m11 * n.m11};
}

Mat2Z mat_inverse(const Mat2Z& m) {
    Int d = m.det();
    if (d == 1) return {m.m11, -m.m01, -m.m10, m.m00};
    if (d == -1) return {-m.m11, m.m01, m.m10, -m.m00};
    throw NotUnimodularError();
}

}  // namespace logcy
