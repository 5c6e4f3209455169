#include "logcy/rings.hpp"

#include <algorithm>
#include <optional>

#include "logcy/errors.hpp"

namespace logcy {

void VertexElement::add_canonical(const TropPoint& p, const Scalar& coeff) {
    if (coeff == 0) return;
    Scalar& slot = terms_[p];
    slot += coeff;
    if (slot == 0) terms_.erase(p);
}

void VertexElement::add_term(const TropManifold& m, const TropPoint& p, const Scalar& coeff) {
    TropPoint c = m.normalize(p);
    if (c.a.get_den() != 1 || c.b.get_den() != 1)
        throw BadInputError("theta classes are indexed by integral points");
    add_canonical(c, coeff);
}

VertexElement VertexElement::theta(const TropManifold& m, const TropPoint& p) {
    VertexElement e;
    e.add_term(m, p, Scalar(1));
    return e;
}

VertexElement VertexElement::unit(const TropManifold& m) {
    return theta(m, TropPoint{0, Scalar(0), Scalar(0)});
}

VertexElement vertex_add(const VertexElement& e1, const VertexElement& e2) {
    VertexElement out = e1;
    for (const auto& [p, c] : e2.terms()) out.add_canonical(p, c);
    return out;
}

namespace {

// Closed cones containing both points, if any; the product of their thetas
// is formed in the first shared chart (the result is chart-independent).
std::optional<TropPoint> cone_sum(const TropManifold& m, const TropPoint& p, const TropPoint& q) {
    for (int c : m.charts_containing(p)) {
        Vec2Q pc, qc;
        if (!m.coords_in_chart(p, c, &pc)) continue;
        if (!m.coords_in_chart(q, c, &qc)) continue;
        return m.normalize(TropPoint{c, pc.a + qc.a, pc.b + qc.b});
    }
    return std::nullopt;
}

}  // namespace

VertexElement vertex_mul(const TropManifold& m, const VertexElement& e1, const VertexElement& e2) {
    if (m.chart_count() <= 2)
        throw UnsupportedBoundaryLengthError(
            "the vertex ring needs a boundary cycle of length at least 3");
    VertexElement out;
    for (const auto& [p, cp] : e1.terms()) {
        for (const auto& [q, cq] : e2.terms()) {
            auto sum = cone_sum(m, p, q);
            if (!sum) continue;  // no shared cone: the product vanishes
            out.add_term(m, *sum, cp * cq);
        }
    }
    return out;
}

void MonoidRingElement::add_term(const IntersectionLattice& lattice, const ClassExpr& cls,
                                 const PCertificate& cert, const Scalar& coeff) {
    CertReport check = verify_P_certificate(lattice, cls, cert);
    if (!check.pass) {
        std::string why = "key is not certified in P";
        for (const std::string& f : check.failures) why += "; " + f;
        throw BadInputError(why);
    }
    if (coeff == 0) return;
    ClassExpr key = cls;
    key.boundary.resize(lattice.divisor_count(), Int(0));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, Term{coeff, cert});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff == 0) terms_.erase(it);
}

MonoidRingElement MonoidRingElement::unit(const IntersectionLattice& lattice) {
    MonoidRingElement e;
    ClassExpr zero;
    zero.boundary.assign(lattice.divisor_count(), Int(0));
    e.add_term(lattice, zero, PCertificate{}, Scalar(1));
    return e;
}

bool MonoidRingElement::same_coefficients(const MonoidRingElement& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second.coeff != jt->second.coeff) return false;
    return true;
}

MonoidRingElement monoid_mul(const IntersectionLattice& lattice, const MonoidRingElement& m1,
                             const MonoidRingElement& m2, const AmpleData& a, const Scalar& trunc) {
    if (trunc < 0) throw BadInputError("truncation degree must be non-negative");
    MonoidRingElement out;
    for (const auto& [c1, t1] : m1.terms()) {
        for (const auto& [c2, t2] : m2.terms()) {
            ClassExpr sum = class_add(c1, c2);
            if (ample_degree(lattice, a, sum) > trunc) continue;
            PCertificate cert = t1.certificate;
            cert.summands.insert(cert.summands.end(), t2.certificate.summands.begin(),
                                 t2.certificate.summands.end());
            out.add_term(lattice, sum, cert, t1.coeff * t2.coeff);
        }
    }
    return out;
}

void LocalElement::add_term(const LocalBasisIndex& index, const Scalar& coeff) {
    if (index.branch != 'x' && index.branch != 'y')
        throw BadInputError("local basis branch must be 'x' or 'y'");
    if (index.exp < 0) throw BadInputError("local basis exponent must be non-negative");
    if (index.branch == 'y' && index.exp < 1)
        throw BadInputError("y-branch indices need exponent >= 1 (use the x-branch for x^0)");
    if (coeff == 0) return;
    Scalar& slot = terms_[index];
    slot += coeff;
    if (slot == 0) terms_.erase(index);
}

LocalElement LocalElement::unit() {
    LocalElement e;
    e.add_term(LocalBasisIndex{'x', 0, 0}, Scalar(1));
    return e;
}

LocalElement local_normal_form(const FormalLocalExpr& expr) {
    LocalElement out;
    for (const LocalMonomial& mono : expr) {
        if (mono.xexp < 0 || mono.yexp < 0)
            throw BadInputError("formal monomials need non-negative x and y exponents");
        if (mono.coeff == 0) continue;
        Int reduce = std::min(mono.xexp, mono.yexp);
        // x^a y^b u^e = x^{a-m} y^{b-m} (u+1)^m u^e with m = min(a,b)
        Int a = mono.xexp - reduce;
        Int b = mono.yexp - reduce;
        Int binomial = 1;
        for (Int k = 0; k <= reduce; ++k) {
            if (k > 0) binomial = binomial * (reduce - k + 1) / k;
            LocalBasisIndex idx;
            if (b > 0) {
                idx = LocalBasisIndex{'y', b, mono.upow + k};
            } else {
                idx = LocalBasisIndex{'x', a, mono.upow + k};
            }
            out.add_term(idx, mono.coeff * Scalar(binomial));
        }
    }
    return out;
}

LocalElement local_add(const LocalElement& e1, const LocalElement& e2) {
    LocalElement out = e1;
    for (const auto& [idx, c] : e2.terms()) out.add_term(idx, c);
    return out;
}

LocalElement local_mul(const LocalElement& e1, const LocalElement& e2) {
    FormalLocalExpr expanded;
    for (const auto& [i1, c1] : e1.terms()) {
        for (const auto& [i2, c2] : e2.terms()) {
            LocalMonomial mono;
            mono.coeff = c1 * c2;
            mono.xexp = (i1.branch == 'x' ? i1.exp : Int(0)) + (i2.branch == 'x' ? i2.exp : Int(0));
            mono.yexp = (i1.branch == 'y' ? i1.exp : Int(0)) + (i2.branch == 'y' ? i2.exp : Int(0));
            mono.upow = i1.upow + i2.upow;
            expanded.push_back(std::move(mono));
        }
    }
    return local_normal_form(expanded);
}

std::pair<Int, Int> torus_product(const std::pair<Int, Int>& p, const std::pair<Int, Int>& q) {
    return {p.first + q.first, p.second + q.second};
}

}  // namespace logcy
