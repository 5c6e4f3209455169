#pragma once

// Broken line diagrams: trees of straight segments and radial legs in
// U^trop, with integral tangents and weights. Validation checks sector
// containment, cross-chart tangent transport, balancing, leg geometry, and
// action monotonicity; homology classes are read off the ray crossings.

#include <optional>
#include <string>
#include <vector>

#include "logcy/liouville.hpp"
#include "logcy/manifold.hpp"

namespace logcy {

enum class LegKind { Input, Output };

struct DiagramEdge {
    int from = 0;
    int to = 0;
    int chart = 0;    // chart of the declared tangent (must contain `from`)
    Vec2Z tangent;    // primitive, oriented from -> to
    Int weight{1};
};

struct DiagramLeg {
    int vertex = 0;
    int chart = 0;    // chart of the class below
    Vec2Z cls;        // asymptotic class: multiplicity * primitive direction
    LegKind kind = LegKind::Input;
};

struct BrokenLineDiagram {
    std::vector<TropPoint> vertices;  // nonzero points
    std::vector<DiagramEdge> edges;
    std::vector<DiagramLeg> legs;
};

struct CheckFailure {
    std::string location;
    std::string detail;
};

struct DiagramCheck {
    bool pass = true;
    std::vector<CheckFailure> failures;
};

struct ValidationReport {
    DiagramCheck containment;    // segments stay in their cones, targets reached
    DiagramCheck transport;      // wedge data agrees across every ray crossing
    DiagramCheck balancing;      // weighted tangents + leg classes sum to zero
    DiagramCheck leg_geometry;   // inputs parallel, outputs anti-parallel radial
    DiagramCheck monotonicity;   // ⟨A, rho⟩ strictly increases along each piece
    bool pass() const {
        return containment.pass && transport.pass && balancing.pass && leg_geometry.pass &&
               monotonicity.pass;
    }
};

// Runs every check in order. Throws MalformedDiagramError when the diagram
// violates its type invariants (not a tree, non-primitive tangent, weight
// < 1, vertex at the origin or duplicated, bad indices); geometric failures
// are report data, not errors.
ValidationReport validate(const TropManifold& m, const LiouvillePath& path,
                          const BrokenLineDiagram& d);

// Coefficients of [D_1..D_n]: per transversal ray crossing, the divisibility
// |wedge(r_j, weight * tangent)|; crossings sitting exactly on a vertex are
// counted from either side. Throws NotValidatedError unless the
// path-independent checks pass (run validate for the full report).
std::vector<Int> homology_class(const TropManifold& m, const BrokenLineDiagram& d);

// Chart i (0-based) if the whole diagram lies in the closed cone Q_i, lowest
// index on ties; nullopt otherwise. Throws NotValidatedError as above.
std::optional<int> is_localized(const TropManifold& m, const BrokenLineDiagram& d);

namespace detail {

// One straight stretch inside a single closed cone.
struct TraceSegment {
    int chart = 0;
    Vec2Q start;
    std::optional<Vec2Q> end;  // nullopt: runs to infinity
    Vec2Z tangent;             // motion-oriented, full (weighted) class vector
    int crossings_before = 0;  // crossings recorded before this segment
};

struct TraceCrossing {
    int divisor = 0;     // crosses the ray of D_divisor (0-based)
    int from_chart = 0;
    int to_chart = 0;
    Vec2Q point;         // crossing point in from_chart coordinates
    Vec2Z tangent_from;
    Vec2Z tangent_to;
    bool at_endpoint = false;   // crossing exactly at the piece's start/end vertex
    bool via_a_axis = false;    // ray crossed is the a-axis of from_chart (else b-axis)
    // true when the trace continued through a transition matrix; false for
    // on-ray departure/arrival events at piece endpoints. (For n <= 2 the
    // chart indices alone cannot tell these apart.)
    bool transition = false;
};

enum class TraceEnd { ReachedTarget, Infinite, Origin, Failed };

struct TraceResult {
    TraceEnd end = TraceEnd::Failed;
    std::string error;
    std::vector<TraceSegment> segments;
    std::vector<TraceCrossing> crossings;
    int end_chart = 0;
    Vec2Z end_tangent;
};

enum class TraceMode { ToTarget, ToInfinity, ToOrigin };

// Straight-line trace from `start` (coordinates in chart `chart`) with the
// given tangent, through ray crossings, until the mode's stopping condition.
TraceResult trace_line(const TropManifold& m, int chart, const Vec2Q& start, const Vec2Z& tangent,
                       TraceMode mode, const TropPoint* target, int max_crossings);

// Initial direction of an input leg at its vertex, reconstructed by
// minimal-crossing search; nullopt when no straight trace from the vertex is
// asymptotic to the declared class.
std::optional<TangentVector> input_leg_initial_direction(const TropManifold& m,
                                                         const TropPoint& vertex,
                                                         const DiagramLeg& leg);

}  // namespace detail

}  // namespace logcy
