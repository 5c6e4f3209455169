#pragma once

// Polygonal model of the Liouville class A(s): one dual corner per chart,
// synthesized from strictly positive ample coefficients. The corner of chart
// i pairs a_i with Gamma_z_i and a_{i-1} with Gamma_w_i, so along the segment
// from corner i to corner i+1 the pairing with the shared ray of D_i is the
// constant a_i. Contact (clockwise rotation about the origin) and discrete
// convexity are computed, never assumed.

#include <vector>

#include "logcy/manifold.hpp"

namespace logcy {

struct AmpleData {
    std::vector<Scalar> coefficients;  // a_i > 0, one per divisor
};

// Dual covector in a chart's (Gamma_z, Gamma_w) pairing coordinates.
struct Covector {
    int chart = 0;
    Vec2Q pairing;  // (⟨., Gamma_z⟩, ⟨., Gamma_w⟩)
};

struct LiouvillePath {
    TropManifold manifold;
    std::vector<Covector> corners;  // corner i lives in chart i
};

struct SegmentCheck {
    int segment = 0;       // from corner `segment` to the next corner
    Scalar wedge_value{0};
    bool pass = false;
};

struct PathCheckReport {
    bool pass = false;
    std::vector<SegmentCheck> items;
};

// Throws BadInputError unless the coefficients are strictly positive and
// match the number of divisors.
LiouvillePath synthesize(const TropManifold& m, const AmpleData& a);

// Corner of chart `corner` expressed in the dual frame of `chart` by
// transporting through transposed transitions along the shorter described
// route (counterclockwise developing).
Vec2Q corner_in_chart(const LiouvillePath& path, int corner, int chart);

// Contact: wedge(A, dA) < 0 on every segment.
PathCheckReport check_contact(const LiouvillePath& path);

// Discrete local convexity: consecutive segment displacements turn the same
// clockwise way, wedge(d1, d2) < 0 at every corner.
PathCheckReport check_convex(const LiouvillePath& path);

// Pairing of the corner covector of `chart` with a tangent vector given in
// that chart's coordinates.
Scalar corner_pairing(const LiouvillePath& path, int chart, const Vec2Z& v);
Scalar corner_pairing(const LiouvillePath& path, int chart, const Vec2Q& v);

// Reeb length of the orbit torus at p: the maximum of ⟨A, rho_p⟩ over the
// path, attained at p's own corner: l_p = a*a_i + b*a_{i-1}. Homogeneous of
// degree one. Throws OriginHasNoOrbitError at the origin.
Scalar orbit_length(const LiouvillePath& path, const TropPoint& p);

// All integral points with l_p < slope, plus the origin; sorted by
// (chart, a, b). Throws SlopeOnSpectrumError if the slope equals some l_p,
// BadInputError unless slope > 0.
std::vector<TropPoint> theta_below_slope(const LiouvillePath& path, const Scalar& slope);

}  // namespace logcy
