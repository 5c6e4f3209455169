#include "logcy/homology.hpp"

#include "logcy/errors.hpp"

namespace logcy {

bool ClassExpr::is_zero() const {
    for (const Int& c : boundary)
        if (c != 0) return false;
    for (const auto& [name, c] : extras)
        if (c != 0) return false;
    return true;
}

ClassExpr class_add(const ClassExpr& x, const ClassExpr& y) {
    ClassExpr out;
    std::size_t n = std::max(x.boundary.size(), y.boundary.size());
    out.boundary.assign(n, Int(0));
    for (std::size_t i = 0; i < x.boundary.size(); ++i) out.boundary[i] += x.boundary[i];
    for (std::size_t i = 0; i < y.boundary.size(); ++i) out.boundary[i] += y.boundary[i];
    out.extras = x.extras;
    for (const auto& [name, c] : y.extras) out.extras[name] += c;
    for (auto it = out.extras.begin(); it != out.extras.end();)
        it = (it->second == 0) ? out.extras.erase(it) : std::next(it);
    return out;
}

ClassExpr class_scale(const ClassExpr& x, const Int& s) {
    ClassExpr out = x;
    for (Int& c : out.boundary) c *= s;
    for (auto& [name, c] : out.extras) c *= s;
    if (s == 0) out.extras.clear();
    return out;
}

bool class_less(const ClassExpr& x, const ClassExpr& y) {
    if (x.boundary != y.boundary)
        return std::lexicographical_compare(x.boundary.begin(), x.boundary.end(),
                                            y.boundary.begin(), y.boundary.end());
    return x.extras < y.extras;
}

IntersectionLattice IntersectionLattice::build(const BoundaryData& boundary,
                                               std::vector<ExtraClass> extras) {
    const int n = boundary.n;
    if (n < 1) throw BadInputError("boundary needs at least one component");
    IntersectionLattice lattice;
    lattice.n_ = n;
    lattice.q_.assign(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) lattice.q_[i][i] = boundary.self_intersections.at(i);
    if (n == 1) {
        lattice.q_[0][0] += 2;  // the node counts against the normalization
    } else if (n == 2) {
        lattice.q_[0][1] = 2;
        lattice.q_[1][0] = 2;
    } else {
        for (int i = 0; i < n; ++i) {
            lattice.q_[i][(i + 1) % n] = 1;
            lattice.q_[(i + 1) % n][i] = 1;
        }
    }
    for (const ExtraClass& e : extras)
        if (static_cast<int>(e.pairings.size()) != n)
            throw BadInputError("extra class '" + e.name + "' pairing vector length mismatch");
    lattice.extras_ = std::move(extras);
    return lattice;
}

Int IntersectionLattice::pair(const ClassExpr& c, int divisor) const {
    if (divisor < 0 || divisor >= n_) throw BadInputError("divisor index out of range");
    if (static_cast<int>(c.boundary.size()) > n_)
        throw BadInputError("class boundary vector longer than the number of divisors");
    Int out = 0;
    for (std::size_t j = 0; j < c.boundary.size(); ++j)
        out += c.boundary[j] * q_[j][divisor];
    for (const auto& [name, coeff] : c.extras) {
        if (coeff == 0) continue;
        const ExtraClass* found = nullptr;
        for (const ExtraClass& e : extras_)
            if (e.name == name) { found = &e; break; }
        if (!found) throw UnknownClassNameError(name);
        out += coeff * found->pairings[divisor];
    }
    return out;
}

CertReport verify_P_certificate(const IntersectionLattice& lattice, const ClassExpr& c,
                                const PCertificate& cert) {
    CertReport report{true, {}};
    ClassExpr total;
    total.boundary.assign(lattice.divisor_count(), Int(0));
    for (std::size_t s = 0; s < cert.summands.size(); ++s) {
        const CertSummand& summand = cert.summands[s];
        const std::string where = "summand " + std::to_string(s);
        if (summand.kind == CertSummand::Kind::BoundaryGenerator) {
            if (summand.divisor < 0 || summand.divisor >= lattice.divisor_count()) {
                report.failures.push_back(where + ": divisor index out of range");
                report.pass = false;
                continue;
            }
            if (summand.multiplicity < 0) {
                report.failures.push_back(where + ": negative boundary multiple");
                report.pass = false;
            }
            ClassExpr d;
            d.boundary.assign(lattice.divisor_count(), Int(0));
            d.boundary[summand.divisor] = summand.multiplicity;
            total = class_add(total, d);
        } else {
            Int degree = 0;
            bool nonneg = true;
            for (int i = 0; i < lattice.divisor_count(); ++i) {
                Int p = lattice.pair(summand.cls, i);
                if (p < 0) nonneg = false;
                degree += p;
            }
            if (!nonneg) {
                report.failures.push_back(where + ": cone generator pairs negatively with some D_i");
                report.pass = false;
            }
            if (degree <= 0) {
                report.failures.push_back(where + ": cone generator must satisfy C.D > 0");
                report.pass = false;
            }
            total = class_add(total, summand.cls);
        }
    }
    ClassExpr target = c;
    target.boundary.resize(lattice.divisor_count(), Int(0));
    if (!(total == target)) {
        report.failures.push_back("summands do not total the certified class");
        report.pass = false;
    }
    return report;
}

Scalar ample_degree(const IntersectionLattice& lattice, const AmpleData& a, const ClassExpr& c) {
    if (static_cast<int>(a.coefficients.size()) != lattice.divisor_count())
        throw BadInputError("ample data length does not match the number of divisors");
    Scalar out(0);
    for (int i = 0; i < lattice.divisor_count(); ++i)
        out += a.coefficients[i] * Scalar(lattice.pair(c, i));
    return out;
}

PCertificate boundary_certificate(const ClassExpr& c) {
    if (!c.extras.empty())
        throw BadInputError("boundary certificate requires a boundary-supported class");
    PCertificate cert;
    for (std::size_t i = 0; i < c.boundary.size(); ++i) {
        if (c.boundary[i] == 0) continue;
        if (c.boundary[i] < 0) throw BadInputError("boundary certificate requires non-negative coefficients");
        cert.summands.push_back(CertSummand{CertSummand::Kind::BoundaryGenerator,
                                            static_cast<int>(i), c.boundary[i], {}});
    }
    return cert;
}

}  // namespace logcy
