#pragma once

// The three explicitly known rings: the vertex V_n (theta basis of the
// central fiber), the monoid ring of the positive cone P (truncated by ample
// degree), and K[x,y][(xy-1)^-1] in branch normal form, plus the degree-zero
// torus product.

#include <map>
#include <vector>

#include "logcy/homology.hpp"
#include "logcy/manifold.hpp"

namespace logcy {

struct TropPointOrder {
    bool operator()(const TropPoint& p, const TropPoint& q) const { return trop_point_less(p, q); }
};

// Finite K-combination of theta classes indexed by canonical integral points
// (the origin key is the unit theta_0). Zero coefficients are never stored.
class VertexElement {
  public:
    VertexElement() = default;

    // Throws BadInputError unless p is integral; normalizes the key.
    void add_term(const TropManifold& m, const TropPoint& p, const Scalar& coeff);

    static VertexElement theta(const TropManifold& m, const TropPoint& p);
    static VertexElement unit(const TropManifold& m);

    const std::map<TropPoint, Scalar, TropPointOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const VertexElement&, const VertexElement&) = default;
    friend VertexElement vertex_add(const VertexElement&, const VertexElement&);

  private:
    void add_canonical(const TropPoint& p, const Scalar& coeff);

    std::map<TropPoint, Scalar, TropPointOrder> terms_;
};

// theta_p * theta_q = theta_{p+q} when some closed cone contains both p and
// q, and 0 otherwise; theta_origin is the unit. Throws
// UnsupportedBoundaryLengthError for n <= 2.
VertexElement vertex_mul(const TropManifold& m, const VertexElement& e1, const VertexElement& e2);

VertexElement vertex_add(const VertexElement& e1, const VertexElement& e2);

// Element of K[P] with certified keys; written q^c.
class MonoidRingElement {
  public:
    struct ClassOrder {
        bool operator()(const ClassExpr& x, const ClassExpr& y) const { return class_less(x, y); }
    };
    struct Term {
        Scalar coeff;
        PCertificate certificate;
    };

    MonoidRingElement() = default;

    // Throws BadInputError when the certificate does not verify.
    void add_term(const IntersectionLattice& lattice, const ClassExpr& cls,
                  const PCertificate& cert, const Scalar& coeff);

    static MonoidRingElement unit(const IntersectionLattice& lattice);

    const std::map<ClassExpr, Term, ClassOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool same_coefficients(const MonoidRingElement& other) const;

  private:
    std::map<ClassExpr, Term, ClassOrder> terms_;
};

// Convolution product q^c * q^d = q^{c+d}, dropping keys whose ample degree
// exceeds trunc. Certificates concatenate. Throws BadInputError for
// trunc < 0.
MonoidRingElement monoid_mul(const IntersectionLattice& lattice, const MonoidRingElement& m1,
                             const MonoidRingElement& m2, const AmpleData& a, const Scalar& trunc);

// Basis index of K[x,y][(xy-1)^-1] in branch normal form, with u = xy - 1:
// x^exp * u^upow (branch x, exp >= 0) or y^exp * u^upow (branch y, exp >= 1).
struct LocalBasisIndex {
    char branch = 'x';
    Int exp{0};
    Int upow{0};

    friend bool operator==(const LocalBasisIndex&, const LocalBasisIndex&) = default;
};

struct LocalBasisOrder {
    bool operator()(const LocalBasisIndex& i, const LocalBasisIndex& j) const {
        if (i.branch != j.branch) return i.branch < j.branch;
        if (i.exp != j.exp) return i.exp < j.exp;
        return i.upow < j.upow;
    }
};

class LocalElement {
  public:
    LocalElement() = default;

    // Throws BadInputError on indices violating the branch structure.
    void add_term(const LocalBasisIndex& index, const Scalar& coeff);

    static LocalElement unit();

    const std::map<LocalBasisIndex, Scalar, LocalBasisOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const LocalElement&, const LocalElement&) = default;

  private:
    std::map<LocalBasisIndex, Scalar, LocalBasisOrder> terms_;
};

// One monomial coeff * x^xexp * y^yexp * u^upow of a formal expression.
struct LocalMonomial {
    Scalar coeff;
    Int xexp{0};
    Int yexp{0};
    Int upow{0};
};

using FormalLocalExpr = std::vector<LocalMonomial>;

// Rewrites x*y -> u + 1 until every monomial has min(xexp, yexp) = 0; the
// result is unique and the rewrite terminates since each step reduces
// min(xexp, yexp). Throws BadInputError on negative x/y exponents.
LocalElement local_normal_form(const FormalLocalExpr& expr);

LocalElement local_mul(const LocalElement& e1, const LocalElement& e2);
LocalElement local_add(const LocalElement& e1, const LocalElement& e2);

// Degree-zero product on the torus: monomial exponents add.
std::pair<Int, Int> torus_product(const std::pair<Int, Int>& p, const std::pair<Int, Int>& q);

}  // namespace logcy
