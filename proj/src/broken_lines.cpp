#include "logcy/broken_lines.hpp"

#include <algorithm>
#include <set>

#include "logcy/errors.hpp"

namespace logcy {

namespace detail {

namespace {

// Representations of a canonical point in the coordinates of `chart`;
// a ray point has one per closed cone it bounds (two coincide for n = 1).
std::vector<Vec2Q> point_reps_in_chart(const TropManifold& m, const TropPoint& canonical, int chart) {
    std::vector<Vec2Q> reps;
    if (canonical.is_origin()) {
        reps.push_back(Vec2Q{Scalar(0), Scalar(0)});
        return reps;
    }
    if (canonical.chart == chart) reps.push_back(canonical.coords());
    if (canonical.b == 0 && m.next_chart(canonical.chart) == chart)
        reps.push_back(Vec2Q{Scalar(0), canonical.a});
    return reps;
}

// Smallest t >= 0 with pos + t*dir == rep, if any.
std::optional<Scalar> hit_time(const Vec2Q& pos, const Vec2Z& dir, const Vec2Q& rep) {
    Scalar da(dir.a), db(dir.b);
    if (da != 0) {
        Scalar t = (rep.a - pos.a) / da;
        if (t >= 0 && pos.b + t * db == rep.b) return t;
        return std::nullopt;
    }
    if (rep.a != pos.a) return std::nullopt;
    if (db == 0) return std::nullopt;  // zero tangent is rejected upstream
    Scalar t = (rep.b - pos.b) / db;
    if (t >= 0) return t;
    return std::nullopt;
}

}  // namespace

TraceResult trace_line(const TropManifold& m, int chart, const Vec2Q& start, const Vec2Z& tangent,
                       TraceMode mode, const TropPoint* target, int max_crossings) {
    TraceResult res;
    if (tangent.is_zero()) {
        res.error = "zero tangent";
        return res;
    }
    int cur = chart;
    Vec2Q pos = start;
    Vec2Z dir = tangent;
    bool first = true;
    int crossings = 0;
    // Transversal departure from a ray into the cone interior counts from
    // either side, like arrivals. (Departures out of the cone are recorded
    // as zero-length crossings by the main loop.)
    if (pos.b == 0 && pos.a != 0 && dir.b > 0)
        res.crossings.push_back(TraceCrossing{cur, cur, cur, pos, dir, dir, true, true, false});
    else if (pos.a == 0 && pos.b != 0 && dir.a > 0)
        res.crossings.push_back(
            TraceCrossing{m.prev_chart(cur), cur, cur, pos, dir, dir, true, false, false});
    while (true) {
        // Exit time from the closed cone along each axis.
        bool a_escapes = dir.a < 0;
        bool b_escapes = dir.b < 0;
        std::optional<Scalar> ta, tb;
        if (a_escapes) ta = pos.a / Scalar(-dir.a);
        if (b_escapes) tb = pos.b / Scalar(-dir.b);
        std::optional<Scalar> tmax;
        if (ta && tb) tmax = std::min(*ta, *tb);
        else if (ta) tmax = ta;
        else if (tb) tmax = tb;

        if (mode == TraceMode::ToTarget) {
            std::optional<Scalar> best;
            Vec2Q best_rep;
            for (const Vec2Q& rep : point_reps_in_chart(m, *target, cur)) {
                auto t = hit_time(pos, dir, rep);
                if (!t) continue;
                if (tmax && *t > *tmax) continue;
                if (!best || *t < *best) { best = *t; best_rep = rep; }
            }
            if (best) {
                if (first && *best == 0) {
                    res.error = "edge endpoints coincide";
                    return res;
                }
                res.segments.push_back(TraceSegment{cur, pos, best_rep, dir, static_cast<int>(res.crossings.size())});
                // Arrival exactly on a ray, transversally, counts from either side.
                if (best_rep.b == 0 && best_rep.a != 0 && dir.b != 0)
                    res.crossings.push_back(
                        TraceCrossing{cur, cur, cur, best_rep, dir, dir, true, true, false});
                else if (best_rep.a == 0 && best_rep.b != 0 && dir.a != 0)
                    res.crossings.push_back(TraceCrossing{m.prev_chart(cur), cur, cur, best_rep,
                                                          dir, dir, true, false, false});
                res.end = TraceEnd::ReachedTarget;
                res.end_chart = cur;
                res.end_tangent = dir;
                return res;
            }
        }

        if (!tmax) {
            // dir lies in the closed cone: the ray runs to infinity.
            if (mode == TraceMode::ToInfinity) {
                res.segments.push_back(TraceSegment{cur, pos, std::nullopt, dir, static_cast<int>(res.crossings.size())});
                res.end = TraceEnd::Infinite;
                res.end_chart = cur;
                res.end_tangent = dir;
                return res;
            }
            res.error = mode == TraceMode::ToTarget ? "target not reached (trace escapes to infinity)"
                                                    : "leg does not reach the origin";
            return res;
        }

        Vec2Q exit{pos.a + *tmax * Scalar(dir.a), pos.b + *tmax * Scalar(dir.b)};
        if (exit.a == 0 && exit.b == 0) {
            if (mode == TraceMode::ToOrigin) {
                res.segments.push_back(TraceSegment{cur, pos, exit, dir, static_cast<int>(res.crossings.size())});
                res.end = TraceEnd::Origin;
                res.end_chart = cur;
                res.end_tangent = dir;
                return res;
            }
            res.error = "trace runs into the origin";
            return res;
        }

        int divisor, to_chart;
        Mat2Z t;
        bool via_a = tb && (!ta || *tb < *ta);
        if (via_a) {
            divisor = cur;  // exits through the a-axis, the ray of D_cur
            to_chart = m.next_chart(cur);
            t = m.transition(cur);
        } else {
            divisor = m.prev_chart(cur);  // exits through the b-axis
            to_chart = m.prev_chart(cur);
            t = mat_inverse(m.transition(divisor));
        }
        if (*tmax > 0) res.segments.push_back(TraceSegment{cur, pos, exit, dir, static_cast<int>(res.crossings.size())});
        Vec2Z new_dir = mat_apply(t, dir);
        res.crossings.push_back(TraceCrossing{divisor, cur, to_chart, exit, dir, new_dir,
                                              first && *tmax == 0, via_a, true});
        pos = mat_apply(t, exit);
        dir = new_dir;
        cur = to_chart;
        first = false;
        if (++crossings > max_crossings) {
            res.error = "crossing limit exceeded";
            return res;
        }
    }
}

namespace {

// Directions in closed cones, canonicalized the way ray points are.
struct CanonicalDirection {
    int chart;
    Vec2Z vec;
    friend bool operator==(const CanonicalDirection&, const CanonicalDirection&) = default;
};

std::optional<CanonicalDirection> canonical_direction(const TropManifold& m, int chart,
                                                      const Vec2Z& v) {
    if (v.is_zero() || v.a < 0 || v.b < 0) return std::nullopt;
    if (v.b == 0) return CanonicalDirection{chart, v};
    if (v.a == 0) return CanonicalDirection{m.prev_chart(chart), Vec2Z{v.b, Int(0)}};
    return CanonicalDirection{chart, v};
}

}  // namespace

std::optional<TangentVector> input_leg_initial_direction(const TropManifold& m,
                                                         const TropPoint& vertex,
                                                         const DiagramLeg& leg) {
    const int n = m.chart_count();
    const int cap = 4 * n + 8;
    auto declared = canonical_direction(m, leg.chart, leg.cls);
    if (!declared) return std::nullopt;
    TropPoint v = m.normalize(vertex);
    for (int winding = 0; winding <= 2; ++winding) {
        for (int sense = 0; sense < 2; ++sense) {  // 0: counterclockwise, 1: clockwise
            for (int s : m.charts_containing(v)) {
                int base = sense == 0 ? (leg.chart - s + n) % n : (s - leg.chart + n) % n;
                int steps = base + winding * n;
                if (steps == 0 && sense == 1) continue;  // same as the ccw zero-step candidate
                Vec2Z d = leg.cls;
                int c = leg.chart;
                for (int i = 0; i < steps; ++i) {
                    if (sense == 0) {
                        c = m.prev_chart(c);
                        d = mat_apply(mat_inverse(m.transition(c)), d);
                    } else {
                        d = mat_apply(m.transition(c), d);
                        c = m.next_chart(c);
                    }
                }
                Vec2Q start;
                if (!m.coords_in_chart(v, s, &start)) continue;
                TraceResult res = trace_line(m, s, start, d, TraceMode::ToInfinity, nullptr, cap);
                if (res.end != TraceEnd::Infinite) continue;
                int transitions = 0;
                for (const auto& x : res.crossings)
                    if (x.transition) ++transitions;
                if (transitions != steps) continue;
                auto got = canonical_direction(m, res.end_chart, res.end_tangent);
                if (got && *got == *declared) return TangentVector{s, d};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

namespace {

using detail::TraceEnd;
using detail::TraceMode;
using detail::TraceResult;

std::string point_str(const TropPoint& p) {
    return "(chart " + std::to_string(p.chart + 1) + ", (" + to_string(p.a) + ", " + to_string(p.b) +
           "))";
}

// Transport vec between two charts that share the point `at`.
Vec2Z transport_at_point(const TropManifold& m, const TropPoint& at, const Vec2Z& vec,
                         int from_chart, int to_chart) {
    if (from_chart == to_chart) return vec;
    TropPoint c = m.normalize(at);
    int j = c.chart;  // `at` lies on the ray of D_j
    if (from_chart == j && to_chart == m.next_chart(j)) return mat_apply(m.transition(j), vec);
    if (from_chart == m.next_chart(j) && to_chart == j)
        return mat_apply(mat_inverse(m.transition(j)), vec);
    throw Error("internal: transport between charts that do not share the point");
}

struct PieceTrace {
    std::string name;
    TraceResult trace;
    Int weight{1};
    // balancing bookkeeping
    int from_vertex = -1;               // contributes +weight*initial tangent there
    int to_vertex = -1;                 // contributes -weight*final tangent there
    int initial_chart = 0;
    Vec2Z initial_tangent;
};

struct Pipeline {
    std::vector<TropPoint> vertices;  // canonical
    std::vector<PieceTrace> pieces;
    ValidationReport report;
    bool traced_ok = true;
};

void well_formed_or_throw(const TropManifold& m, const BrokenLineDiagram& d,
                          std::vector<TropPoint>* canonical) {
    if (d.vertices.empty()) throw MalformedDiagramError("diagram has no vertices");
    canonical->clear();
    for (const TropPoint& v : d.vertices) {
        if (v.chart < 0 || v.chart >= m.chart_count())
            throw MalformedDiagramError("vertex chart index out of range");
        TropPoint c;
        try {
            c = m.normalize(v);
        } catch (const NegativeCoordsError&) {
            throw MalformedDiagramError("vertex has negative coordinates");
        }
        if (c.is_origin()) throw MalformedDiagramError("vertices at the origin are forbidden");
        canonical->push_back(c);
    }
    for (std::size_t i = 0; i < canonical->size(); ++i)
        for (std::size_t j = i + 1; j < canonical->size(); ++j)
            if ((*canonical)[i] == (*canonical)[j])
                throw MalformedDiagramError("duplicate vertex positions");

    const int nv = static_cast<int>(d.vertices.size());
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const DiagramEdge& e : d.edges) {
        if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv)
            throw MalformedDiagramError("edge vertex index out of range");
        if (e.from == e.to) throw MalformedDiagramError("edge endpoints coincide");
        if (e.chart < 0 || e.chart >= m.chart_count())
            throw MalformedDiagramError("edge chart index out of range");
        if (e.weight < 1) throw MalformedDiagramError("edge weight must be positive");
        if (e.tangent.is_zero()) throw MalformedDiagramError("edge tangent is zero");
        auto [prim, div] = primitive_part(e.tangent);
        if (div != 1) throw MalformedDiagramError("edge tangent must be primitive");
        int a = find(e.from), b = find(e.to);
        if (a == b) throw MalformedDiagramError("diagram graph contains a cycle");
        parent[a] = b;
    }
    int components = 0;
    for (int i = 0; i < nv; ++i)
        if (find(i) == i) ++components;
    if (components != 1) throw MalformedDiagramError("diagram graph is not connected");
    for (const DiagramLeg& leg : d.legs) {
        if (leg.vertex < 0 || leg.vertex >= nv)
            throw MalformedDiagramError("leg vertex index out of range");
        if (leg.chart < 0 || leg.chart >= m.chart_count())
            throw MalformedDiagramError("leg chart index out of range");
        if (leg.cls.is_zero()) throw MalformedDiagramError("leg class is zero");
    }
}

void check_transport_consistency(const PieceTrace& piece,
                                 DiagramCheck* transport) {
    for (std::size_t i = 0; i < piece.trace.crossings.size(); ++i) {
        const auto& x = piece.trace.crossings[i];
        if (!x.transition) continue;  // endpoint event, no transition applied
        Vec2Z ray_from = x.via_a_axis ? Vec2Z{1, 0} : Vec2Z{0, 1};
        Vec2Z ray_to = x.via_a_axis ? Vec2Z{0, 1} : Vec2Z{1, 0};
        Int wf = wedge(ray_from, x.tangent_from);
        Int wt = wedge(ray_to, x.tangent_to);
        if (wf != wt) {
            transport->pass = false;
            transport->failures.push_back(
                {piece.name + " crossing " + std::to_string(i),
                 "wedge with the ray of D_" + std::to_string(x.divisor + 1) +
                     " changes across the transition"});
        }
    }
}

Pipeline run_pipeline(const TropManifold& m, const LiouvillePath* path,
                      const BrokenLineDiagram& d) {
    Pipeline p;
    well_formed_or_throw(m, d, &p.vertices);
    const int cap = 4 * m.chart_count() + 8;

    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const DiagramEdge& e = d.edges[i];
        PieceTrace piece;
        piece.name = "edge " + std::to_string(i);
        piece.weight = e.weight;
        piece.from_vertex = e.from;
        piece.to_vertex = e.to;
        piece.initial_chart = e.chart;
        piece.initial_tangent = e.tangent;
        Vec2Q start;
        if (!m.coords_in_chart(p.vertices[e.from], e.chart, &start)) {
            p.report.containment.pass = false;
            p.report.containment.failures.push_back(
                {piece.name, "declared chart does not contain the source vertex"});
            p.traced_ok = false;
            continue;
        }
        piece.trace =
            detail::trace_line(m, e.chart, start, e.tangent, TraceMode::ToTarget,
                               &p.vertices[e.to], cap);
        if (piece.trace.end != TraceEnd::ReachedTarget) {
            p.report.containment.pass = false;
            p.report.containment.failures.push_back(
                {piece.name, piece.trace.error + " (target " + point_str(p.vertices[e.to]) + ")"});
            p.traced_ok = false;
            continue;
        }
        check_transport_consistency(piece, &p.report.transport);
        p.pieces.push_back(std::move(piece));
    }

    for (std::size_t i = 0; i < d.legs.size(); ++i) {
        const DiagramLeg& leg = d.legs[i];
        PieceTrace piece;
        piece.name = (leg.kind == LegKind::Input ? "input leg " : "output leg ") + std::to_string(i);
        piece.from_vertex = leg.vertex;
        const TropPoint& v = p.vertices[leg.vertex];
        if (leg.kind == LegKind::Input) {
            auto dir = detail::input_leg_initial_direction(m, v, leg);
            if (!dir) {
                p.report.leg_geometry.pass = false;
                p.report.leg_geometry.failures.push_back(
                    {piece.name, "no straight trace from " + point_str(v) +
                                     " is asymptotic to the declared class"});
                p.traced_ok = false;
                continue;
            }
            piece.initial_chart = dir->chart;
            piece.initial_tangent = dir->vec;
            Vec2Q start;
            m.coords_in_chart(v, dir->chart, &start);
            piece.trace =
                detail::trace_line(m, dir->chart, start, dir->vec, TraceMode::ToInfinity, nullptr, cap);
            check_transport_consistency(piece, &p.report.transport);
        } else {
            Vec2Q at;
            if (!m.coords_in_chart(v, leg.chart, &at)) {
                p.report.leg_geometry.pass = false;
                p.report.leg_geometry.failures.push_back(
                    {piece.name, "class chart does not contain the vertex"});
                p.traced_ok = false;
                continue;
            }
            Vec2Q cls = to_rational(leg.cls);
            if (leg.cls.a < 0 || leg.cls.b < 0 || wedge(at, cls) != 0 ||
                !(cls.a * at.a + cls.b * at.b > 0)) {
                p.report.leg_geometry.pass = false;
                p.report.leg_geometry.failures.push_back(
                    {piece.name, "output class is not positively radial at " + point_str(v)});
                p.traced_ok = false;
                continue;
            }
            piece.initial_chart = leg.chart;
            piece.initial_tangent = -leg.cls;  // motion toward the origin
            piece.trace = detail::trace_line(m, leg.chart, at, -leg.cls, TraceMode::ToOrigin,
                                             nullptr, cap);
            if (piece.trace.end != TraceEnd::Origin) {
                p.report.leg_geometry.pass = false;
                p.report.leg_geometry.failures.push_back({piece.name, piece.trace.error});
                p.traced_ok = false;
                continue;
            }
        }
        p.pieces.push_back(std::move(piece));
    }

    // Balancing: weighted away-oriented tangents plus leg contributions vanish
    // at every vertex, computed in the vertex's canonical chart.
    if (p.traced_ok) {
        std::vector<Vec2Z> sums(p.vertices.size(), Vec2Z{0, 0});
        for (const PieceTrace& piece : p.pieces) {
            Vec2Z initial = transport_at_point(m, p.vertices[piece.from_vertex],
                                               piece.initial_tangent, piece.initial_chart,
                                               p.vertices[piece.from_vertex].chart);
            sums[piece.from_vertex] = sums[piece.from_vertex] + initial * piece.weight;
            if (piece.to_vertex >= 0) {
                Vec2Z final = transport_at_point(m, p.vertices[piece.to_vertex],
                                                 piece.trace.end_tangent, piece.trace.end_chart,
                                                 p.vertices[piece.to_vertex].chart);
                sums[piece.to_vertex] = sums[piece.to_vertex] - final * piece.weight;
            }
        }
        for (std::size_t v = 0; v < sums.size(); ++v) {
            if (!sums[v].is_zero()) {
                p.report.balancing.pass = false;
                p.report.balancing.failures.push_back(
                    {"vertex " + std::to_string(v),
                     "residual (" + to_string(sums[v].a) + ", " + to_string(sums[v].b) + ") at " +
                         point_str(p.vertices[v])});
            }
        }
    } else {
        p.report.balancing.pass = false;
        p.report.balancing.failures.push_back(
            {"diagram", "skipped: containment or leg-geometry failures"});
    }

    // Monotonicity of ⟨A, rho⟩ along each piece, chart by chart.
    if (path) {
        for (const PieceTrace& piece : p.pieces) {
            const auto& segs = piece.trace.segments;
            for (std::size_t s = 0; s + 1 < segs.size(); ++s) {
                Scalar before = corner_pairing(*path, segs[s].chart, segs[s].tangent);
                Scalar after = corner_pairing(*path, segs[s + 1].chart, segs[s + 1].tangent);
                if (!(before < after)) {
                    p.report.monotonicity.pass = false;
                    p.report.monotonicity.failures.push_back(
                        {piece.name + " segment " + std::to_string(s),
                         "action pairing does not strictly increase (" + to_string(before) +
                             " then " + to_string(after) + ")"});
                }
            }
        }
        if (!p.traced_ok) {
            p.report.monotonicity.pass = false;
            p.report.monotonicity.failures.push_back(
                {"diagram", "skipped: containment or leg-geometry failures"});
        }
    }
    return p;
}

Pipeline validated_or_throw(const TropManifold& m, const BrokenLineDiagram& d) {
    Pipeline p = run_pipeline(m, nullptr, d);
    if (!(p.report.containment.pass && p.report.transport.pass && p.report.balancing.pass &&
          p.report.leg_geometry.pass))
        throw NotValidatedError("diagram fails validation; run validate() for the report");
    return p;
}

}  // namespace

ValidationReport validate(const TropManifold& m, const LiouvillePath& path,
                          const BrokenLineDiagram& d) {
    return run_pipeline(m, &path, d).report;
}

std::vector<Int> homology_class(const TropManifold& m, const BrokenLineDiagram& d) {
    Pipeline p = validated_or_throw(m, d);
    std::vector<Scalar> coeff(m.chart_count(), Scalar(0));
    for (const PieceTrace& piece : p.pieces) {
        for (const auto& x : piece.trace.crossings) {
            Vec2Z ray = x.via_a_axis ? Vec2Z{1, 0} : Vec2Z{0, 1};
            Int w = wedge(ray, x.tangent_from) * piece.weight;
            Scalar contribution(abs(w));
            if (x.at_endpoint) contribution /= 2;
            coeff[x.divisor] += contribution;
        }
    }
    std::vector<Int> out;
    out.reserve(coeff.size());
    for (const Scalar& c : coeff) {
        if (c.get_den() != 1) throw Error("internal: fractional crossing total on a balanced diagram");
        out.push_back(c.get_num());
    }
    return out;
}

std::optional<int> is_localized(const TropManifold& m, const BrokenLineDiagram& d) {
    Pipeline p = validated_or_throw(m, d);
    const int n = m.chart_count();
    std::set<int> common;
    for (int i = 0; i < n; ++i) common.insert(i);
    auto restrict_to = [&common](const std::set<int>& s) {
        std::set<int> inter;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                              std::inserter(inter, inter.begin()));
        common = inter;
    };
    for (const TropPoint& v : p.vertices) {
        auto charts = m.charts_containing(v);
        restrict_to(std::set<int>(charts.begin(), charts.end()));
    }
    for (const PieceTrace& piece : p.pieces) {
        for (const auto& seg : piece.trace.segments) {
            std::set<int> cones{seg.chart};
            bool on_b_axis = seg.start.a == 0 && (seg.end ? seg.end->a == 0 : seg.tangent.a == 0);
            bool on_a_axis = seg.start.b == 0 && (seg.end ? seg.end->b == 0 : seg.tangent.b == 0);
            if (on_b_axis) cones.insert(m.prev_chart(seg.chart));
            if (on_a_axis) cones.insert(m.next_chart(seg.chart));
            restrict_to(cones);
        }
    }
    if (common.empty()) return std::nullopt;
    return *common.begin();
}

}  // namespace logcy
