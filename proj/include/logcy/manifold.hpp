#pragma once

// The tropicalization U^trop of a log Calabi-Yau surface with boundary cycle
// D_1 + ... + D_n: one integral quadrant cone per node of D, glued along
// shared divisor rays by the transitions [[0,-1],[1,-k_i]].
//
// Chart i (0-based here, 1-based in all I/O) is the cone at the node joining
// D_{i-1} and D_i. Its coordinates (a,b) are taken in the basis
// (Gamma_z_i, Gamma_w_i): the a-axis is the ray of D_i (shared with chart
// i+1), the b-axis is the ray of D_{i-1} (shared with chart i-1).

#include <vector>

#include "logcy/lattice.hpp"

namespace logcy {

struct BoundaryData {
    int n = 0;                           // number of irreducible components
    std::vector<Int> self_intersections; // k_i = D_i^2, one per component
};

// A point of U^trop: chart index plus non-negative rational coordinates.
// The canonical form (see TropManifold::normalize) is unique per point.
struct TropPoint {
    int chart = 0;
    Scalar a{0};
    Scalar b{0};

    friend bool operator==(const TropPoint&, const TropPoint&) = default;
    bool is_origin() const { return a == 0 && b == 0; }
    Vec2Q coords() const { return {a, b}; }
};

// Deterministic order: (chart, a, b) lexicographic.
bool trop_point_less(const TropPoint& p, const TropPoint& q);

struct TangentVector {
    int chart = 0;
    Vec2Z vec;

    friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

// A global integral linear function, recorded by its values on the divisor
// rays: values[j] = f(primitive ray of D_j). Linearity is equivalent to
// values[i-1] + k_i * values[i] + values[i+1] = 0 for all i mod n.
struct LinearFunction {
    std::vector<Int> values;

    friend bool operator==(const LinearFunction&, const LinearFunction&) = default;
};

enum class Direction { Counterclockwise, Clockwise };

class TropManifold {
  public:
    // Throws BadInputError if n < 1 or the list length mismatches.
    static TropManifold build(BoundaryData data);

    int chart_count() const { return boundary_.n; }
    const BoundaryData& boundary() const { return boundary_; }
    const Int& self_intersection(int divisor) const;

    // Transition from chart i to chart i+1 (mod n); determinant +1.
    const Mat2Z& transition(int chart) const;

    int next_chart(int chart) const { return (chart + 1) % boundary_.n; }
    int prev_chart(int chart) const { return (chart + boundary_.n - 1) % boundary_.n; }

    // M_n * M_{n-1} * ... * M_1: transport of chart-1 vectors once around the
    // cycle through charts 2,...,n and back. Determinant +1; only the
    // conjugacy class (trace, det) is convention-independent.
    Mat2Z monodromy() const;

    // Canonical representative. Origin -> (chart 0, (0,0)); a point on the
    // ray of D_j -> (chart j, (r,0)); interior points are fixed. Idempotent.
    // Throws NegativeCoordsError.
    TropPoint normalize(const TropPoint& p) const;

    // Charts whose closed cone contains p: one chart for interior points,
    // two for ray points, all for the origin.
    std::vector<int> charts_containing(const TropPoint& p) const;

    // Coordinates of canonical point p in chart c, when p lies in the closed
    // cone of c; returns false otherwise.
    bool coords_in_chart(const TropPoint& p, int c, Vec2Q* out) const;

    // Stepwise transport of a tangent vector to to_chart. Counterclockwise
    // means increasing chart index (chart c -> c+1 applies the transition);
    // clockwise applies inverses. When to_chart == v.chart one full cycle is
    // performed, so a full counterclockwise loop equals the monodromy.
    TangentVector transport_vector(const TangentVector& v, int to_chart,
                                   Direction direction) const;

    // All integral points with canonical max(a,b) <= bound (origin included),
    // sorted by (chart, a, b).
    std::vector<TropPoint> integral_points(const Int& bound) const;

    // Integer basis, deterministically echelonized, of the solutions of the
    // orthogonality system values[i-1] + k_i*values[i] + values[i+1] = 0.
    std::vector<LinearFunction> linear_function_basis() const;

  private:
    BoundaryData boundary_;
    std::vector<Mat2Z> transitions_;
};

// Checks the linearity relation (throws NotLinearError), then evaluates
// f at p = (chart i, (a,b)) as a*values[i] + b*values[i-1].
Scalar evaluate(const TropManifold& m, const LinearFunction& f, const TropPoint& p);

bool satisfies_linearity(const TropManifold& m, const LinearFunction& f);

}  // namespace logcy
