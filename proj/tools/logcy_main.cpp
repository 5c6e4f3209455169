// Command-line front end: JSON in, JSON/SVG out, deterministic and
// scriptable. Exit codes: 0 success, 1 a verification report failed,
// 2 malformed input or bad request (message on stderr).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "logcy/errors.hpp"
#include "logcy/json_io.hpp"
#include "logcy/svg_render.hpp"

namespace {

using logcy::Json;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json parse_arg_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw logcy::BadInputError("invalid JSON for " + what + ": " + e.what());
    }
}

struct Context {
    std::string input_path;
    logcy::ProjectFile project;
    logcy::TropManifold manifold;

    explicit Context(const std::string& path)
        : input_path(path),
          project(logcy::load_project(path)),
          manifold(logcy::TropManifold::build(project.boundary)) {}

    logcy::AmpleData ample_or_throw() const {
        if (!project.ample) throw logcy::BadInputError("project file lacks \"ample\" data");
        if (static_cast<int>(project.ample->coefficients.size()) != manifold.chart_count())
            throw logcy::BadInputError("ample data length does not match the boundary");
        return *project.ample;
    }

    const logcy::BrokenLineDiagram& diagram_or_throw(int index) const {
        if (project.diagrams.empty())
            throw logcy::BadInputError("project file has no \"diagram\"/\"diagrams\" entry");
        if (index < 0 || index >= static_cast<int>(project.diagrams.size()))
            throw logcy::BadInputError("diagram index out of range");
        return project.diagrams[index];
    }

    logcy::IntersectionLattice lattice() const {
        return logcy::IntersectionLattice::build(project.boundary, project.extra_classes);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropicalization and theta-ring engine for log Calabi-Yau surfaces"};
    app.require_subcommand(1);

    std::string input;
    std::string arg_class, arg_cert, arg_e1, arg_e2, arg_expr, arg_out, arg_vec, arg_direction;
    std::string arg_slope, arg_trunc;
    int arg_chart = 1, arg_to = 1, arg_divisor = 1, arg_diagram = 0;
    long long arg_bound = 3;
    bool arg_with_path = false;

    int exit_code = 0;

    auto* trop = app.add_subcommand("trop", "tropicalization of the boundary data");
    {
        auto* build = trop->add_subcommand("build", "chart transitions from boundary data");
        build->add_option("-i,--input", input)->required();
        build->callback([&] {
            Context ctx(input);
            Json out;
            out["n"] = ctx.manifold.chart_count();
            Json ks = Json::array();
            for (const logcy::Int& k : ctx.project.boundary.self_intersections)
                ks.push_back(logcy::int_to_json(k));
            out["self_intersections"] = ks;
            Json ts = Json::array();
            for (int i = 0; i < ctx.manifold.chart_count(); ++i)
                ts.push_back(logcy::matrix_to_json(ctx.manifold.transition(i)));
            out["transitions"] = ts;
            emit(out);
        });

        auto* points = trop->add_subcommand("points", "integral points up to a bound");
        points->add_option("-i,--input", input)->required();
        points->add_option("--bound", arg_bound)->required();
        points->callback([&] {
            Context ctx(input);
            auto pts = ctx.manifold.integral_points(logcy::Int(static_cast<long>(arg_bound)));
            Json out;
            out["count"] = pts.size();
            out["points"] = logcy::points_to_json(pts);
            emit(out);
        });

        auto* monodromy = trop->add_subcommand("monodromy", "holonomy around the singular origin");
        monodromy->add_option("-i,--input", input)->required();
        monodromy->callback([&] {
            Context ctx(input);
            logcy::Mat2Z mu = ctx.manifold.monodromy();
            Json out;
            out["matrix"] = logcy::matrix_to_json(mu);
            out["trace"] = logcy::int_to_json(mu.trace());
            emit(out);
        });

        auto* lf = trop->add_subcommand("linear-functions", "basis of global integral linear functions");
        lf->add_option("-i,--input", input)->required();
        lf->callback([&] {
            Context ctx(input);
            auto basis = ctx.manifold.linear_function_basis();
            Json out;
            out["rank"] = basis.size();
            Json arr = Json::array();
            for (const auto& f : basis) {
                Json v = Json::array();
                for (const logcy::Int& x : f.values) v.push_back(logcy::int_to_json(x));
                arr.push_back(v);
            }
            out["basis"] = arr;
            emit(out);
        });

        auto* transport = trop->add_subcommand("transport", "transport a tangent vector between charts");
        transport->add_option("-i,--input", input)->required();
        transport->add_option("--chart", arg_chart, "source chart (1-based)")->required();
        transport->add_option("--vec", arg_vec, "a,b integer components")->required();
        transport->add_option("--to", arg_to, "target chart (1-based)")->required();
        transport->add_option("--direction", arg_direction, "ccw or cw")->default_val("ccw");
        transport->callback([&] {
            Context ctx(input);
            auto comma = arg_vec.find(',');
            if (comma == std::string::npos)
                throw logcy::BadInputError("--vec expects two comma-separated integers");
            logcy::Vec2Z v{logcy::int_from_string(arg_vec.substr(0, comma)),
                           logcy::int_from_string(arg_vec.substr(comma + 1))};
            logcy::Direction dir;
            if (arg_direction == "ccw") dir = logcy::Direction::Counterclockwise;
            else if (arg_direction == "cw") dir = logcy::Direction::Clockwise;
            else throw logcy::BadInputError("--direction must be ccw or cw");
            auto moved = ctx.manifold.transport_vector(
                logcy::TangentVector{arg_chart - 1, v}, arg_to - 1, dir);
            Json out;
            out["chart"] = moved.chart + 1;
            out["vec"] = Json::array({logcy::int_to_json(moved.vec.a), logcy::int_to_json(moved.vec.b)});
            emit(out);
        });
    }

    auto* liouville = app.add_subcommand("liouville", "polygonal Liouville class");
    {
        auto* synth = liouville->add_subcommand("synth", "corners from ample coefficients");
        synth->add_option("-i,--input", input)->required();
        synth->callback([&] {
            Context ctx(input);
            auto path = logcy::synthesize(ctx.manifold, ctx.ample_or_throw());
            Json out;
            Json corners = Json::array();
            for (const auto& c : path.corners)
                corners.push_back(Json{{"chart", c.chart + 1},
                                       {"pairing", Json::array({logcy::scalar_to_json(c.pairing.a),
                                                                logcy::scalar_to_json(c.pairing.b)})}});
            out["corners"] = corners;
            emit(out);
        });

        auto* check = liouville->add_subcommand("check", "contact and convexity reports");
        check->add_option("-i,--input", input)->required();
        check->callback([&] {
            Context ctx(input);
            auto path = logcy::synthesize(ctx.manifold, ctx.ample_or_throw());
            auto contact = logcy::check_contact(path);
            auto convex = logcy::check_convex(path);
            Json out;
            out["pass"] = contact.pass && convex.pass;
            out["contact"] = logcy::path_check_to_json(contact);
            out["convex"] = logcy::path_check_to_json(convex);
            emit(out);
            if (!(contact.pass && convex.pass)) exit_code = 1;
        });

        auto* lengths = liouville->add_subcommand("lengths", "orbit lengths of integral points");
        lengths->add_option("-i,--input", input)->required();
        lengths->add_option("--bound", arg_bound)->default_val(3);
        lengths->callback([&] {
            Context ctx(input);
            auto path = logcy::synthesize(ctx.manifold, ctx.ample_or_throw());
            Json arr = Json::array();
            for (const auto& p : ctx.manifold.integral_points(logcy::Int(static_cast<long>(arg_bound)))) {
                if (p.is_origin()) continue;
                arr.push_back(Json{{"point", logcy::point_to_json(p)},
                                   {"length", logcy::scalar_to_json(logcy::orbit_length(path, p))}});
            }
            Json out;
            out["lengths"] = arr;
            emit(out);
        });

        auto* filter = liouville->add_subcommand("filter", "theta generators below a slope");
        filter->add_option("-i,--input", input)->required();
        filter->add_option("--slope", arg_slope)->required();
        filter->callback([&] {
            Context ctx(input);
            auto path = logcy::synthesize(ctx.manifold, ctx.ample_or_throw());
            auto pts = logcy::theta_below_slope(path, logcy::scalar_from_string(arg_slope));
            Json out;
            out["count"] = pts.size();
            out["points"] = logcy::points_to_json(pts);
            emit(out);
        });
    }

    auto* broken = app.add_subcommand("broken", "broken line diagrams");
    {
        auto* validate = broken->add_subcommand("validate", "full validation report");
        validate->add_option("-i,--input", input)->required();
        validate->add_option("--diagram", arg_diagram)->default_val(0);
        validate->callback([&] {
            Context ctx(input);
            auto path = logcy::synthesize(ctx.manifold, ctx.ample_or_throw());
            auto report = logcy::validate(ctx.manifold, path, ctx.diagram_or_throw(arg_diagram));
            emit(logcy::validation_report_to_json(report));
            if (!report.pass()) exit_code = 1;
        });

        auto* cls = broken->add_subcommand("class", "homology class of a validated diagram");
        cls->add_option("-i,--input", input)->required();
        cls->add_option("--diagram", arg_diagram)->default_val(0);
        cls->callback([&] {
            Context ctx(input);
            auto coeffs = logcy::homology_class(ctx.manifold, ctx.diagram_or_throw(arg_diagram));
            Json arr = Json::array();
            for (const logcy::Int& c : coeffs) arr.push_back(logcy::int_to_json(c));
            Json out;
            out["class"] = arr;
            auto where = logcy::is_localized(ctx.manifold, ctx.diagram_or_throw(arg_diagram));
            out["localized_chart"] = where ? Json(*where + 1) : Json(nullptr);
            emit(out);
        });

        auto* render = broken->add_subcommand("render", "SVG picture of the manifold and diagram");
        render->add_option("-i,--input", input)->required();
        render->add_option("--out", arg_out, "output SVG path")->required();
        render->add_option("--bound", arg_bound)->default_val(3);
        render->add_option("--diagram", arg_diagram)->default_val(0);
        render->add_flag("--with-path", arg_with_path, "overlay the dual Liouville path");
        render->callback([&] {
            Context ctx(input);
            const logcy::BrokenLineDiagram* diagram = nullptr;
            if (!ctx.project.diagrams.empty()) diagram = &ctx.diagram_or_throw(arg_diagram);
            std::optional<logcy::LiouvillePath> path;
            if (arg_with_path) path = logcy::synthesize(ctx.manifold, ctx.ample_or_throw());
            logcy::RenderOptions options;
            options.point_bound = logcy::Int(static_cast<long>(arg_bound));
            std::string svg = logcy::render_svg(ctx.manifold, diagram, path ? &*path : nullptr, options);
            std::ofstream file(arg_out, std::ios::binary);
            if (!file) throw logcy::BadInputError("cannot write " + arg_out);
            file << svg;
            Json out;
            out["out"] = arg_out;
            out["bytes"] = svg.size();
            emit(out);
        });
    }

    auto* homology = app.add_subcommand("homology", "intersection pairing and the cone P");
    {
        auto* pair = homology->add_subcommand("pair", "pair a class with a divisor");
        pair->add_option("-i,--input", input)->required();
        pair->add_option("--class", arg_class, "ClassExpr JSON")->required();
        pair->add_option("--divisor", arg_divisor, "1-based divisor index")->required();
        pair->callback([&] {
            Context ctx(input);
            auto lattice = ctx.lattice();
            auto cls = logcy::class_expr_from_json(parse_arg_json(arg_class, "--class"));
            Json out;
            out["value"] = logcy::int_to_json(lattice.pair(cls, arg_divisor - 1));
            emit(out);
        });

        auto* certify = homology->add_subcommand("certify", "verify a P-membership certificate");
        certify->add_option("-i,--input", input)->required();
        certify->add_option("--class", arg_class, "ClassExpr JSON")->required();
        certify->add_option("--cert", arg_cert, "certificate JSON")->required();
        certify->callback([&] {
            Context ctx(input);
            auto lattice = ctx.lattice();
            auto cls = logcy::class_expr_from_json(parse_arg_json(arg_class, "--class"));
            auto cert = logcy::certificate_from_json(parse_arg_json(arg_cert, "--cert"));
            auto report = logcy::verify_P_certificate(lattice, cls, cert);
            emit(logcy::cert_report_to_json(report));
            if (!report.pass) exit_code = 1;
        });

        auto* degree = homology->add_subcommand("degree", "ample degree of a class");
        degree->add_option("-i,--input", input)->required();
        degree->add_option("--class", arg_class, "ClassExpr JSON")->required();
        degree->callback([&] {
            Context ctx(input);
            auto lattice = ctx.lattice();
            auto cls = logcy::class_expr_from_json(parse_arg_json(arg_class, "--class"));
            Json out;
            out["degree"] = logcy::scalar_to_json(logcy::ample_degree(lattice, ctx.ample_or_throw(), cls));
            emit(out);
        });
    }

    auto* ring = app.add_subcommand("ring", "products in the explicit rings");
    {
        auto* vertex = ring->add_subcommand("vertex-mul", "product in the vertex ring V_n");
        vertex->add_option("-i,--input", input)->required();
        vertex->add_option("--e1", arg_e1)->required();
        vertex->add_option("--e2", arg_e2)->required();
        vertex->callback([&] {
            Context ctx(input);
            auto e1 = logcy::vertex_element_from_json(ctx.manifold, parse_arg_json(arg_e1, "--e1"));
            auto e2 = logcy::vertex_element_from_json(ctx.manifold, parse_arg_json(arg_e2, "--e2"));
            emit(logcy::vertex_element_to_json(logcy::vertex_mul(ctx.manifold, e1, e2)));
        });

        auto* local = ring->add_subcommand("local-mul", "product in K[x,y][(xy-1)^-1]");
        local->add_option("--e1", arg_e1)->required();
        local->add_option("--e2", arg_e2)->required();
        local->callback([&] {
            auto e1 = logcy::local_element_from_json(parse_arg_json(arg_e1, "--e1"));
            auto e2 = logcy::local_element_from_json(parse_arg_json(arg_e2, "--e2"));
            emit(logcy::local_element_to_json(logcy::local_mul(e1, e2)));
        });

        auto* normal = ring->add_subcommand("normal-form", "branch normal form of a formal expression");
        normal->add_option("--expr", arg_expr)->required();
        normal->callback([&] {
            auto expr = logcy::formal_expr_from_json(parse_arg_json(arg_expr, "--expr"));
            emit(logcy::local_element_to_json(logcy::local_normal_form(expr)));
        });

        auto* monoid = ring->add_subcommand("monoid-mul", "truncated product in K[P]");
        monoid->add_option("-i,--input", input)->required();
        monoid->add_option("--m1", arg_e1)->required();
        monoid->add_option("--m2", arg_e2)->required();
        monoid->add_option("--trunc", arg_trunc)->required();
        monoid->callback([&] {
            Context ctx(input);
            auto lattice = ctx.lattice();
            auto m1 = logcy::monoid_element_from_json(lattice, parse_arg_json(arg_e1, "--m1"));
            auto m2 = logcy::monoid_element_from_json(lattice, parse_arg_json(arg_e2, "--m2"));
            auto product = logcy::monoid_mul(lattice, m1, m2, ctx.ample_or_throw(),
                                             logcy::scalar_from_string(arg_trunc));
            emit(logcy::monoid_element_to_json(product));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const logcy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
