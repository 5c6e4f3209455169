#include "logcy/liouville.hpp"

#include <algorithm>

#include "logcy/errors.hpp"

namespace logcy {

LiouvillePath synthesize(const TropManifold& m, const AmpleData& a) {
    const int n = m.chart_count();
    if (static_cast<int>(a.coefficients.size()) != n)
        throw BadInputError("ample data length does not match the number of divisors");
    for (const Scalar& c : a.coefficients)
        if (c <= 0) throw BadInputError("ample coefficients must be strictly positive");
    LiouvillePath path{m, {}};
    path.corners.reserve(n);
    for (int i = 0; i < n; ++i) {
        int prev = m.prev_chart(i);
        path.corners.push_back(Covector{i, Vec2Q{a.coefficients[i], a.coefficients[prev]}});
    }
    return path;
}

Vec2Q corner_in_chart(const LiouvillePath& path, int corner, int chart) {
    const TropManifold& m = path.manifold;
    const int n = m.chart_count();
    int steps = (corner - chart + n) % n;
    Vec2Q row = path.corners.at(corner).pairing;
    int t = m.prev_chart(corner);
    for (int s = 0; s < steps; ++s) {
        row = covector_apply(row, m.transition(t));
        t = m.prev_chart(t);
    }
    return row;
}

PathCheckReport check_contact(const LiouvillePath& path) {
    const TropManifold& m = path.manifold;
    const int n = m.chart_count();
    PathCheckReport report{true, {}};
    for (int i = 0; i < n; ++i) {
        Vec2Q a = path.corners[i].pairing;
        Vec2Q b = covector_apply(path.corners[m.next_chart(i)].pairing, m.transition(i));
        Scalar w = wedge(a, b - a);
        bool pass = w < 0;
        report.items.push_back(SegmentCheck{i, w, pass});
        report.pass = report.pass && pass;
    }
    return report;
}

PathCheckReport check_convex(const LiouvillePath& path) {
    const TropManifold& m = path.manifold;
    const int n = m.chart_count();
    PathCheckReport report{true, {}};
    for (int j = 0; j < n; ++j) {
        int prev = m.prev_chart(j);
        // Everything in the dual frame of chart j.
        Vec2Q prev_corner = covector_apply(path.corners[prev].pairing, mat_inverse(m.transition(prev)));
        Vec2Q delta_in = path.corners[j].pairing - prev_corner;
        Vec2Q next_corner = covector_apply(path.corners[m.next_chart(j)].pairing, m.transition(j));
        Vec2Q delta_out = next_corner - path.corners[j].pairing;
        Scalar w = wedge(delta_in, delta_out);
        bool pass = w < 0;
        report.items.push_back(SegmentCheck{j, w, pass});
        report.pass = report.pass && pass;
    }
    return report;
}

Scalar corner_pairing(const LiouvillePath& path, int chart, const Vec2Q& v) {
    const Vec2Q& p = path.corners.at(chart).pairing;
    return p.a * v.a + p.b * v.b;
}

Scalar corner_pairing(const LiouvillePath& path, int chart, const Vec2Z& v) {
    return corner_pairing(path, chart, to_rational(v));
}

Scalar orbit_length(const LiouvillePath& path, const TropPoint& p) {
    TropPoint q = path.manifold.normalize(p);
    if (q.is_origin()) throw OriginHasNoOrbitError();
    return corner_pairing(path, q.chart, q.coords());
}

namespace {

// floor of a non-negative rational
Int floor_scalar(const Scalar& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace

std::vector<TropPoint> theta_below_slope(const LiouvillePath& path, const Scalar& slope) {
    if (slope <= 0) throw BadInputError("slope must be positive");
    const TropManifold& m = path.manifold;
    const int n = m.chart_count();
    for (const Covector& c : path.corners)
        if (c.pairing.a <= 0 || c.pairing.b <= 0)
            throw BadInputError("path corners must pair positively with the cone generators");

    std::vector<TropPoint> pts;
    pts.push_back(TropPoint{0, Scalar(0), Scalar(0)});
    for (int c = 0; c < n; ++c) {
        const Scalar alpha = path.corners[c].pairing.a;
        const Scalar beta = path.corners[c].pairing.b;
        // Ray of D_c: l = r * alpha.
        {
            Scalar q = slope / alpha;
            Int rmax = floor_scalar(q);
            if (Scalar(rmax) == q && rmax >= 1)
                throw SlopeOnSpectrumError("slope equals the length of a ray orbit in chart " +
                                           std::to_string(c + 1));
            for (Int r = 1; r <= rmax; ++r) pts.push_back(TropPoint{c, Scalar(r), Scalar(0)});
        }
        // Interior points: l = a*alpha + b*beta, a,b >= 1.
        for (Int a = 1; Scalar(a) * alpha + beta <= slope; ++a) {
            Scalar rest = (slope - Scalar(a) * alpha) / beta;
            Int bmax = floor_scalar(rest);
            if (Scalar(bmax) == rest) {
                if (bmax >= 1)
                    throw SlopeOnSpectrumError("slope equals an interior orbit length in chart " +
                                               std::to_string(c + 1));
                --bmax;  // rest integral but < 1: nothing excluded
            }
            for (Int b = 1; b <= bmax; ++b) pts.push_back(TropPoint{c, Scalar(a), Scalar(b)});
        }
    }
    std::sort(pts.begin(), pts.end(), trop_point_less);
    return pts;
}

}  // namespace logcy
