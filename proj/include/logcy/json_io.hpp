#pragma once

// JSON formats for the CLI: one flat project document (boundary data, ample
// data, extra classes, diagrams) plus element/report encodings. Charts and
// divisors are 1-based on the wire, rationals travel as strings ("p" or
// "p/q"); integers are JSON numbers when they fit in 64 bits and decimal
// strings otherwise. Parsers accept numbers or strings everywhere.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcy/broken_lines.hpp"
#include "logcy/homology.hpp"
#include "logcy/liouville.hpp"
#include "logcy/manifold.hpp"
#include "logcy/rings.hpp"

namespace logcy {

using Json = nlohmann::ordered_json;

struct ProjectFile {
    BoundaryData boundary;
    std::optional<AmpleData> ample;
    std::vector<ExtraClass> extra_classes;
    std::vector<BrokenLineDiagram> diagrams;
};

ProjectFile parse_project(const Json& j);
ProjectFile load_project(const std::string& path);

Json int_to_json(const Int& z);
Int int_from_json(const Json& j, const std::string& where);
Json scalar_to_json(const Scalar& q);
Scalar scalar_from_json(const Json& j, const std::string& where);

Json point_to_json(const TropPoint& p);
TropPoint point_from_json(const Json& j, const std::string& where);

Json points_to_json(const std::vector<TropPoint>& pts);

Json matrix_to_json(const Mat2Z& m);

Json diagram_to_json(const BrokenLineDiagram& d);
BrokenLineDiagram diagram_from_json(const Json& j);

Json class_expr_to_json(const ClassExpr& c);
ClassExpr class_expr_from_json(const Json& j);

Json certificate_to_json(const PCertificate& cert);
PCertificate certificate_from_json(const Json& j);

Json vertex_element_to_json(const VertexElement& e);
VertexElement vertex_element_from_json(const TropManifold& m, const Json& j);

Json local_element_to_json(const LocalElement& e);
LocalElement local_element_from_json(const Json& j);

FormalLocalExpr formal_expr_from_json(const Json& j);

Json monoid_element_to_json(const MonoidRingElement& e);
MonoidRingElement monoid_element_from_json(const IntersectionLattice& lattice, const Json& j);

Json validation_report_to_json(const ValidationReport& report);
Json path_check_to_json(const PathCheckReport& report);
Json cert_report_to_json(const CertReport& report);

}  // namespace logcy
