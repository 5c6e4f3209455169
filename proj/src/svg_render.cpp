#include "logcy/svg_render.hpp"

#include <sstream>
#include <vector>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

// Fixed-point decimal with 4 places, exact rounding toward zero; enough for
// a picture and byte-stable across platforms.
std::string fmt(const Scalar& q) {
    Int scaled_num = q.get_num() * 10000;
    Int v;
    mpz_tdiv_q(v.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    bool negative = v < 0;
    Int mag = abs(v);
    Int whole = mag / 10000;
    Int frac = mag % 10000;
    std::string fracs = frac.get_str();
    fracs.insert(fracs.begin(), 4 - fracs.size(), '0');
    while (fracs.size() > 1 && fracs.back() == '0') fracs.pop_back();
    std::string out = (negative ? "-" : "") + whole.get_str();
    if (fracs != "0") out += "." + fracs;
    return out;
}

struct Frame {
    Mat2Z to_plane;  // chart vector -> drawing plane (chart-0 frame)
};

// plane y axis flipped for SVG's downward y
std::string xy(const Vec2Q& plane, const Scalar& scale) {
    return fmt(plane.a * scale) + "," + fmt(-plane.b * scale);
}

class Painter {
  public:
    explicit Painter(const TropManifold& m) : m_(m) {
        frames_.resize(m.chart_count());
        Mat2Z f = Mat2Z::identity();
        for (int c = 0; c < m.chart_count(); ++c) {
            frames_[c].to_plane = f;
            f = mat_mul(f, mat_inverse(m.transition(c)));
        }
        closing_frame_ = f;  // chart-0 frame transported once around the cut
    }

    Vec2Q to_plane(int chart, const Vec2Q& v) const {
        return mat_apply(frames_[chart].to_plane, v);
    }

    Vec2Q closing_ray() const { return mat_apply(closing_frame_, Vec2Q{Scalar(0), Scalar(1)}); }

    const TropManifold& m_;
    std::vector<Frame> frames_;
    Mat2Z closing_frame_;
};

}  // namespace

std::string render_svg(const TropManifold& m, const BrokenLineDiagram* diagram,
                       const LiouvillePath* path, const RenderOptions& options) {
    if (options.point_bound < 0) throw BadInputError("point bound must be non-negative");
    Painter painter(m);
    const Scalar scale(40);
    const int n = m.chart_count();

    Scalar ray_len = Scalar(options.point_bound == 0 ? Int(2) : options.point_bound + 1);

    std::ostringstream body;
    body << "  <g id=\"rays\" stroke=\"#202020\" stroke-width=\"1.5\" fill=\"none\">\n";
    Scalar extent(0);
    auto stretch = [&extent](const Vec2Q& p) {
        Scalar r = abs(p.a) > abs(p.b) ? abs(p.a) : abs(p.b);
        if (r > extent) extent = r;
    };
    for (int j = 0; j < n; ++j) {
        // the ray of D_j is the a-axis of chart j
        Vec2Q tip = painter.to_plane(j, Vec2Q{ray_len, Scalar(0)});
        stretch(tip * scale);
        body << "    <line x1=\"0\" y1=\"0\" x2=\"" << fmt(tip.a * scale) << "\" y2=\""
             << fmt(-tip.b * scale) << "\"/>\n";
    }
    {
        Vec2Q tip = painter.closing_ray() * ray_len;
        stretch(tip * scale);
        body << "    <line x1=\"0\" y1=\"0\" x2=\"" << fmt(tip.a * scale) << "\" y2=\""
             << fmt(-tip.b * scale) << "\" stroke-dasharray=\"6,4\"/>\n";
    }
    body << "  </g>\n";

    body << "  <g id=\"ray-labels\" font-family=\"monospace\" font-size=\"13\" fill=\"#202020\">\n";
    for (int j = 0; j < n; ++j) {
        Vec2Q tip = painter.to_plane(j, Vec2Q{ray_len + Scalar(1, 4), Scalar(0)});
        body << "    <text x=\"" << fmt(tip.a * scale) << "\" y=\"" << fmt(-tip.b * scale)
             << "\">D_" << (j + 1) << "</text>\n";
        stretch(tip * scale);
    }
    body << "  </g>\n";

    body << "  <g id=\"integral-points\" fill=\"#8a8a8a\">\n";
    for (const TropPoint& p : m.integral_points(options.point_bound)) {
        Vec2Q plane = painter.to_plane(p.chart, p.coords());
        body << "    <circle cx=\"" << fmt(plane.a * scale) << "\" cy=\"" << fmt(-plane.b * scale)
             << "\" r=\"3\"" << (p.is_origin() ? " fill=\"#000000\" id=\"origin\"" : "") << "/>\n";
        stretch(plane * scale);
    }
    body << "  </g>\n";

    if (path) {
        body << "  <g id=\"liouville-path\" stroke=\"#b03030\" stroke-width=\"1.2\" fill=\"none\""
             << " stroke-dasharray=\"2,3\">\n";
        // dual-plane overlay: corners developed through transposed transitions
        std::ostringstream pts;
        for (int j = 0; j <= n; ++j) {
            Vec2Q corner = j < n ? corner_in_chart(*path, j, 0)
                                 : covector_apply(path->corners[0].pairing, path->manifold.monodromy());
            pts << (j ? " " : "") << xy(corner, scale);
            stretch(corner * scale);
        }
        body << "    <polyline points=\"" << pts.str() << "\"/>\n";
        body << "  </g>\n";
    }

    if (diagram) {
        body << "  <g id=\"diagram\" stroke=\"#1b4fa0\" stroke-width=\"2\" fill=\"none\">\n";
        const int cap = 4 * n + 8;
        std::vector<TropPoint> vertices;
        for (const TropPoint& v : diagram->vertices) vertices.push_back(m.normalize(v));

        auto draw_trace = [&](const detail::TraceResult& trace, int start_chart, const Int& weight) {
            // develop continuously: a running frame keeps pieces that wind
            // past the cut connected
            Mat2Z frame = painter.frames_[start_chart].to_plane;
            int applied = 0;
            bool labeled = false;
            for (const auto& seg : trace.segments) {
                while (applied < seg.crossings_before) {
                    const auto& x = trace.crossings[applied++];
                    if (!x.transition) continue;  // endpoint event, no transition applied
                    Mat2Z step = x.via_a_axis ? mat_inverse(m.transition(x.from_chart))
                                              : m.transition(x.divisor);
                    frame = mat_mul(frame, step);
                }
                Vec2Q a = mat_apply(frame, seg.start);
                Vec2Q b;
                if (seg.end) {
                    b = mat_apply(frame, *seg.end);
                } else {
                    Vec2Q far{seg.start.a + Scalar(seg.tangent.a) * ray_len,
                              seg.start.b + Scalar(seg.tangent.b) * ray_len};
                    b = mat_apply(frame, far);
                }
                stretch(a * scale);
                stretch(b * scale);
                body << "    <line x1=\"" << fmt(a.a * scale) << "\" y1=\"" << fmt(-a.b * scale)
                     << "\" x2=\"" << fmt(b.a * scale) << "\" y2=\"" << fmt(-b.b * scale) << "\"/>\n";
                if (!labeled && weight > 1) {
                    Vec2Q mid{(a.a + b.a) / 2, (a.b + b.b) / 2};
                    body << "    <text font-family=\"monospace\" font-size=\"12\" stroke=\"none\""
                         << " fill=\"#1b4fa0\" x=\"" << fmt(mid.a * scale + 4) << "\" y=\""
                         << fmt(-mid.b * scale - 4) << "\">" << weight.get_str() << "</text>\n";
                    labeled = true;
                }
            }
        };

        for (const DiagramEdge& e : diagram->edges) {
            Vec2Q start;
            if (!m.coords_in_chart(vertices[e.from], e.chart, &start)) continue;
            auto trace = detail::trace_line(m, e.chart, start, e.tangent, detail::TraceMode::ToTarget,
                                            &vertices[e.to], cap);
            draw_trace(trace, e.chart, e.weight);
        }
        for (const DiagramLeg& leg : diagram->legs) {
            const TropPoint& v = vertices[leg.vertex];
            if (leg.kind == LegKind::Input) {
                auto dir = detail::input_leg_initial_direction(m, v, leg);
                if (!dir) continue;
                Vec2Q start;
                m.coords_in_chart(v, dir->chart, &start);
                auto trace = detail::trace_line(m, dir->chart, start, dir->vec,
                                                detail::TraceMode::ToInfinity, nullptr, cap);
                auto [prim, mult] = primitive_part(leg.cls);
                draw_trace(trace, dir->chart, mult);
            } else {
                Vec2Q at;
                if (!m.coords_in_chart(v, leg.chart, &at)) continue;
                auto trace = detail::trace_line(m, leg.chart, at, -leg.cls,
                                                detail::TraceMode::ToOrigin, nullptr, cap);
                auto [prim, mult] = primitive_part(leg.cls);
                draw_trace(trace, leg.chart, mult);
            }
        }
        body << "  </g>\n";
        body << "  <g id=\"diagram-vertices\" fill=\"#1b4fa0\">\n";
        for (const TropPoint& v : vertices) {
            Vec2Q plane = painter.to_plane(v.chart, v.coords());
            body << "    <circle cx=\"" << fmt(plane.a * scale) << "\" cy=\""
                 << fmt(-plane.b * scale) << "\" r=\"4\"/>\n";
            stretch(plane * scale);
        }
        body << "  </g>\n";
    }

    Scalar margin(60);
    Scalar half = extent + margin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(-half)
        << " " << fmt(-half) << " " << fmt(half * 2) << " " << fmt(half * 2) << "\">\n";
    out << "  <rect x=\"" << fmt(-half) << "\" y=\"" << fmt(-half) << "\" width=\""
        << fmt(half * 2) << "\" height=\"" << fmt(half * 2) << "\" fill=\"#ffffff\"/>\n";
    out << body.str();
    out << "</svg>\n";
    return out.str();
}

}  // namespace logcy
