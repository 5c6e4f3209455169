#include "logcy/json_io.hpp"

#include <fstream>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw BadInputError(where + ": missing key '" + key + "'");
    return *it;
}

int small_int_from_json(const Json& j, const std::string& where) {
    Int z = int_from_json(j, where);
    long long v = to_int64(z);
    if (v < -(1ll << 30) || v > (1ll << 30)) throw BadInputError(where + ": index out of range");
    return static_cast<int>(v);
}

int chart_from_json(const Json& j, const std::string& where) {
    int c = small_int_from_json(j, where);
    if (c < 1) throw BadInputError(where + ": chart/divisor indices are 1-based");
    return c - 1;
}

Vec2Z vec2z_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw BadInputError(where + ": expected [a, b]");
    return Vec2Z{int_from_json(j[0], where), int_from_json(j[1], where)};
}

Json vec2z_to_json(const Vec2Z& v) { return Json::array({int_to_json(v.a), int_to_json(v.b)}); }

Json check_to_json(const DiagramCheck& check) {
    Json out;
    out["pass"] = check.pass;
    Json failures = Json::array();
    for (const CheckFailure& f : check.failures)
        failures.push_back(Json{{"location", f.location}, {"detail", f.detail}});
    out["failures"] = failures;
    return out;
}

}  // namespace

Json int_to_json(const Int& z) {
    if (fits_int64(z)) return Json(to_int64(z));
    return Json(to_string(z));
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<unsigned long long>()));
    if (j.is_string()) return int_from_string(j.get<std::string>());
    throw BadInputError(where + ": expected an integer (number or decimal string)");
}

Json scalar_to_json(const Scalar& q) { return Json(to_string(q)); }

Scalar scalar_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Scalar(int_from_json(j, where));
    if (j.is_string()) return scalar_from_string(j.get<std::string>());
    throw BadInputError(where + ": expected a rational as a string like \"3\", \"5/2\" or \"2.5\"");
}

Json point_to_json(const TropPoint& p) {
    Json out;
    out["chart"] = p.chart + 1;
    out["coords"] = Json::array({scalar_to_json(p.a), scalar_to_json(p.b)});
    return out;
}

TropPoint point_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw BadInputError(where + ": expected a point object");
    int chart = chart_from_json(require(j, "chart", where), where + ".chart");
    const Json& coords = require(j, "coords", where);
    if (!coords.is_array() || coords.size() != 2)
        throw BadInputError(where + ".coords: expected [a, b]");
    return TropPoint{chart, scalar_from_json(coords[0], where + ".coords[0]"),
                     scalar_from_json(coords[1], where + ".coords[1]")};
}

Json points_to_json(const std::vector<TropPoint>& pts) {
    Json arr = Json::array();
    for (const TropPoint& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

Json matrix_to_json(const Mat2Z& m) {
    return Json::array({Json::array({int_to_json(m.m00), int_to_json(m.m01)}),
                        Json::array({int_to_json(m.m10), int_to_json(m.m11)})});
}

ProjectFile parse_project(const Json& j) {
    if (!j.is_object()) throw BadInputError("project: expected a JSON object");
    ProjectFile project;
    project.boundary.n = small_int_from_json(require(j, "n", "project"), "project.n");
    const Json& ks = require(j, "self_intersections", "project");
    if (!ks.is_array()) throw BadInputError("project.self_intersections: expected an array");
    for (std::size_t i = 0; i < ks.size(); ++i)
        project.boundary.self_intersections.push_back(
            int_from_json(ks[i], "project.self_intersections[" + std::to_string(i) + "]"));
    if (auto it = j.find("ample"); it != j.end()) {
        AmpleData ample;
        if (!it->is_array()) throw BadInputError("project.ample: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            ample.coefficients.push_back(
                scalar_from_json((*it)[i], "project.ample[" + std::to_string(i) + "]"));
        project.ample = std::move(ample);
    }
    if (auto it = j.find("extra_classes"); it != j.end()) {
        if (!it->is_array()) throw BadInputError("project.extra_classes: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& e = (*it)[i];
            const std::string where = "project.extra_classes[" + std::to_string(i) + "]";
            ExtraClass cls;
            cls.name = require(e, "name", where).get<std::string>();
            const Json& pairings = require(e, "pairings", where);
            if (!pairings.is_array()) throw BadInputError(where + ".pairings: expected an array");
            for (std::size_t k = 0; k < pairings.size(); ++k)
                cls.pairings.push_back(
                    int_from_json(pairings[k], where + ".pairings[" + std::to_string(k) + "]"));
            project.extra_classes.push_back(std::move(cls));
        }
    }
    if (auto it = j.find("diagram"); it != j.end()) project.diagrams.push_back(diagram_from_json(*it));
    if (auto it = j.find("diagrams"); it != j.end()) {
        if (!it->is_array()) throw BadInputError("project.diagrams: expected an array");
        for (const Json& d : *it) project.diagrams.push_back(diagram_from_json(d));
    }
    return project;
}

ProjectFile load_project(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInputError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadInputError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_project(j);
}

Json diagram_to_json(const BrokenLineDiagram& d) {
    Json out;
    Json vertices = Json::array();
    for (const TropPoint& v : d.vertices) vertices.push_back(point_to_json(v));
    out["vertices"] = vertices;
    Json edges = Json::array();
    for (const DiagramEdge& e : d.edges) {
        Json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["chart"] = e.chart + 1;
        je["tangent"] = vec2z_to_json(e.tangent);
        je["weight"] = int_to_json(e.weight);
        edges.push_back(je);
    }
    out["edges"] = edges;
    Json legs = Json::array();
    for (const DiagramLeg& leg : d.legs) {
        Json jl;
        jl["vertex"] = leg.vertex;
        jl["chart"] = leg.chart + 1;
        jl["class"] = vec2z_to_json(leg.cls);
        jl["kind"] = leg.kind == LegKind::Input ? "input" : "output";
        legs.push_back(jl);
    }
    out["legs"] = legs;
    return out;
}

BrokenLineDiagram diagram_from_json(const Json& j) {
    if (!j.is_object()) throw BadInputError("diagram: expected a JSON object");
    BrokenLineDiagram d;
    const Json& vertices = require(j, "vertices", "diagram");
    if (!vertices.is_array()) throw BadInputError("diagram.vertices: expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i)
        d.vertices.push_back(point_from_json(vertices[i], "diagram.vertices[" + std::to_string(i) + "]"));
    if (auto it = j.find("edges"); it != j.end()) {
        if (!it->is_array()) throw BadInputError("diagram.edges: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& je = (*it)[i];
            const std::string where = "diagram.edges[" + std::to_string(i) + "]";
            DiagramEdge e;
            e.from = small_int_from_json(require(je, "from", where), where + ".from");
            e.to = small_int_from_json(require(je, "to", where), where + ".to");
            e.chart = chart_from_json(require(je, "chart", where), where + ".chart");
            e.tangent = vec2z_from_json(require(je, "tangent", where), where + ".tangent");
            if (auto w = je.find("weight"); w != je.end())
                e.weight = int_from_json(*w, where + ".weight");
            d.edges.push_back(std::move(e));
        }
    }
    if (auto it = j.find("legs"); it != j.end()) {
        if (!it->is_array()) throw BadInputError("diagram.legs: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& jl = (*it)[i];
            const std::string where = "diagram.legs[" + std::to_string(i) + "]";
            DiagramLeg leg;
            leg.vertex = small_int_from_json(require(jl, "vertex", where), where + ".vertex");
            leg.chart = chart_from_json(require(jl, "chart", where), where + ".chart");
            leg.cls = vec2z_from_json(require(jl, "class", where), where + ".class");
            std::string kind = require(jl, "kind", where).get<std::string>();
            if (kind == "input") leg.kind = LegKind::Input;
            else if (kind == "output") leg.kind = LegKind::Output;
            else throw BadInputError(where + ".kind: expected \"input\" or \"output\"");
            d.legs.push_back(std::move(leg));
        }
    }
    return d;
}

Json class_expr_to_json(const ClassExpr& c) {
    Json out;
    Json boundary = Json::array();
    for (const Int& x : c.boundary) boundary.push_back(int_to_json(x));
    out["boundary"] = boundary;
    if (!c.extras.empty()) {
        Json extras;
        for (const auto& [name, coeff] : c.extras) extras[name] = int_to_json(coeff);
        out["extras"] = extras;
    }
    return out;
}

ClassExpr class_expr_from_json(const Json& j) {
    if (!j.is_object()) throw BadInputError("class: expected a JSON object");
    ClassExpr c;
    if (auto it = j.find("boundary"); it != j.end()) {
        if (!it->is_array()) throw BadInputError("class.boundary: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            c.boundary.push_back(int_from_json((*it)[i], "class.boundary[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("extras"); it != j.end()) {
        if (!it->is_object()) throw BadInputError("class.extras: expected an object");
        for (auto kv = it->begin(); kv != it->end(); ++kv) {
            Int coeff = int_from_json(kv.value(), "class.extras." + kv.key());
            if (coeff != 0) c.extras[kv.key()] = coeff;
        }
    }
    return c;
}

Json certificate_to_json(const PCertificate& cert) {
    Json arr = Json::array();
    for (const CertSummand& s : cert.summands) {
        Json js;
        if (s.kind == CertSummand::Kind::BoundaryGenerator) {
            js["kind"] = "boundary";
            js["divisor"] = s.divisor + 1;
            js["multiplicity"] = int_to_json(s.multiplicity);
        } else {
            js["kind"] = "cone";
            js["class"] = class_expr_to_json(s.cls);
        }
        arr.push_back(js);
    }
    return arr;
}

PCertificate certificate_from_json(const Json& j) {
    if (!j.is_array()) throw BadInputError("certificate: expected an array of summands");
    PCertificate cert;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& js = j[i];
        const std::string where = "certificate[" + std::to_string(i) + "]";
        CertSummand s;
        std::string kind = require(js, "kind", where).get<std::string>();
        if (kind == "boundary") {
            s.kind = CertSummand::Kind::BoundaryGenerator;
            s.divisor = chart_from_json(require(js, "divisor", where), where + ".divisor");
            s.multiplicity = int_from_json(require(js, "multiplicity", where), where + ".multiplicity");
        } else if (kind == "cone") {
            s.kind = CertSummand::Kind::ConeGenerator;
            s.cls = class_expr_from_json(require(js, "class", where));
        } else {
            throw BadInputError(where + ".kind: expected \"boundary\" or \"cone\"");
        }
        cert.summands.push_back(std::move(s));
    }
    return cert;
}

Json vertex_element_to_json(const VertexElement& e) {
    Json out;
    Json terms = Json::array();
    for (const auto& [p, coeff] : e.terms())
        terms.push_back(Json{{"point", point_to_json(p)}, {"coeff", scalar_to_json(coeff)}});
    out["terms"] = terms;
    return out;
}

VertexElement vertex_element_from_json(const TropManifold& m, const Json& j) {
    if (!j.is_object()) throw BadInputError("element: expected a JSON object");
    VertexElement e;
    const Json& terms = require(j, "terms", "element");
    if (!terms.is_array()) throw BadInputError("element.terms: expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = "element.terms[" + std::to_string(i) + "]";
        TropPoint p = point_from_json(require(terms[i], "point", where), where + ".point");
        Scalar coeff = scalar_from_json(require(terms[i], "coeff", where), where + ".coeff");
        e.add_term(m, p, coeff);
    }
    return e;
}

Json local_element_to_json(const LocalElement& e) {
    Json out;
    Json terms = Json::array();
    for (const auto& [idx, coeff] : e.terms()) {
        Json t;
        t["branch"] = std::string(1, idx.branch);
        t["exp"] = int_to_json(idx.exp);
        t["upow"] = int_to_json(idx.upow);
        t["coeff"] = scalar_to_json(coeff);
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

LocalElement local_element_from_json(const Json& j) {
    if (!j.is_object()) throw BadInputError("element: expected a JSON object");
    LocalElement e;
    const Json& terms = require(j, "terms", "element");
    if (!terms.is_array()) throw BadInputError("element.terms: expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Json& t = terms[i];
        const std::string where = "element.terms[" + std::to_string(i) + "]";
        std::string branch = require(t, "branch", where).get<std::string>();
        if (branch != "x" && branch != "y")
            throw BadInputError(where + ".branch: expected \"x\" or \"y\"");
        LocalBasisIndex idx{branch[0], int_from_json(require(t, "exp", where), where + ".exp"),
                            int_from_json(require(t, "upow", where), where + ".upow")};
        e.add_term(idx, scalar_from_json(require(t, "coeff", where), where + ".coeff"));
    }
    return e;
}

FormalLocalExpr formal_expr_from_json(const Json& j) {
    const Json* terms = &j;
    if (j.is_object()) terms = &require(j, "terms", "expr");
    if (!terms->is_array()) throw BadInputError("expr: expected an array of monomials");
    FormalLocalExpr expr;
    for (std::size_t i = 0; i < terms->size(); ++i) {
        const Json& t = (*terms)[i];
        const std::string where = "expr[" + std::to_string(i) + "]";
        LocalMonomial mono;
        mono.coeff = scalar_from_json(require(t, "coeff", where), where + ".coeff");
        if (auto it = t.find("x"); it != t.end()) mono.xexp = int_from_json(*it, where + ".x");
        if (auto it = t.find("y"); it != t.end()) mono.yexp = int_from_json(*it, where + ".y");
        if (auto it = t.find("u"); it != t.end()) mono.upow = int_from_json(*it, where + ".u");
        expr.push_back(std::move(mono));
    }
    return expr;
}

Json monoid_element_to_json(const MonoidRingElement& e) {
    Json out;
    Json terms = Json::array();
    for (const auto& [cls, term] : e.terms()) {
        Json t;
        t["class"] = class_expr_to_json(cls);
        t["certificate"] = certificate_to_json(term.certificate);
        t["coeff"] = scalar_to_json(term.coeff);
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

MonoidRingElement monoid_element_from_json(const IntersectionLattice& lattice, const Json& j) {
    if (!j.is_object()) throw BadInputError("element: expected a JSON object");
    MonoidRingElement e;
    const Json& terms = require(j, "terms", "element");
    if (!terms.is_array()) throw BadInputError("element.terms: expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Json& t = terms[i];
        const std::string where = "element.terms[" + std::to_string(i) + "]";
        ClassExpr cls = class_expr_from_json(require(t, "class", where));
        PCertificate cert = certificate_from_json(require(t, "certificate", where));
        Scalar coeff = scalar_from_json(require(t, "coeff", where), where + ".coeff");
        e.add_term(lattice, cls, cert, coeff);
    }
    return e;
}

Json validation_report_to_json(const ValidationReport& report) {
    Json out;
    out["pass"] = report.pass();
    out["containment"] = check_to_json(report.containment);
    out["transport"] = check_to_json(report.transport);
    out["balancing"] = check_to_json(report.balancing);
    out["leg_geometry"] = check_to_json(report.leg_geometry);
    out["monotonicity"] = check_to_json(report.monotonicity);
    return out;
}

Json path_check_to_json(const PathCheckReport& report) {
    Json out;
    out["pass"] = report.pass;
    Json items = Json::array();
    for (const SegmentCheck& s : report.items)
        items.push_back(Json{{"index", s.segment},
                             {"wedge", scalar_to_json(s.wedge_value)},
                             {"pass", s.pass}});
    out["items"] = items;
    return out;
}

Json cert_report_to_json(const CertReport& report) {
    Json out;
    out["pass"] = report.pass;
    Json failures = Json::array();
    for (const std::string& f : report.failures) failures.push_back(f);
    out["failures"] = failures;
    return out;
}

}  // namespace logcy
