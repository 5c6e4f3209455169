#pragma once

// Intersection pairing against the boundary components and certified
// membership in the positive cone P. Membership is verified, not decided:
// deciding it for arbitrary classes would need the full H_2(Y;Z) structure.

#include <map>
#include <string>
#include <vector>

#include "logcy/liouville.hpp"
#include "logcy/manifold.hpp"

namespace logcy {

struct ExtraClass {
    std::string name;
    std::vector<Int> pairings;  // (c.D_1, ..., c.D_n)
};

// Integer combination of boundary components and named extra classes.
struct ClassExpr {
    std::vector<Int> boundary;          // coefficients of D_1..D_n
    std::map<std::string, Int> extras;  // named-class coefficients

    friend bool operator==(const ClassExpr&, const ClassExpr&) = default;
    bool is_zero() const;
};

ClassExpr class_add(const ClassExpr& x, const ClassExpr& y);
ClassExpr class_scale(const ClassExpr& x, const Int& s);
bool class_less(const ClassExpr& x, const ClassExpr& y);  // deterministic order

class IntersectionLattice {
  public:
    // Cycle adjacency: 1 for consecutive components when n >= 3, 2 when
    // n = 2, and Q_11 = k_1 + 2 when n = 1 (the node counts toward the
    // self-intersection of the normalization).
    static IntersectionLattice build(const BoundaryData& boundary,
                                     std::vector<ExtraClass> extras = {});

    int divisor_count() const { return n_; }
    const Int& q(int i, int j) const { return q_.at(i).at(j); }
    const std::vector<ExtraClass>& extras() const { return extras_; }

    // c . D_i. Throws UnknownClassNameError for undeclared extras.
    Int pair(const ClassExpr& c, int divisor) const;

  private:
    int n_ = 0;
    std::vector<std::vector<Int>> q_;
    std::vector<ExtraClass> extras_;
};

struct CertSummand {
    enum class Kind { BoundaryGenerator, ConeGenerator };
    Kind kind = Kind::BoundaryGenerator;
    // BoundaryGenerator: multiplicity * D_divisor.
    int divisor = 0;
    Int multiplicity{0};
    // ConeGenerator: a class with all C.D_i >= 0 and sum > 0.
    ClassExpr cls;
};

struct PCertificate {
    std::vector<CertSummand> summands;
};

struct CertReport {
    bool pass = false;
    std::vector<std::string> failures;
};

// True iff the summands total c, boundary summands are non-negative single
// D_i multiples, and every cone generator pairs >= 0 with each D_i with a
// strictly positive total.
CertReport verify_P_certificate(const IntersectionLattice& lattice, const ClassExpr& c,
                                const PCertificate& cert);

// sum_i a_i * (c . D_i); strictly positive on certified nonzero classes when
// the coefficients come from an ample divisor supported on D.
Scalar ample_degree(const IntersectionLattice& lattice, const AmpleData& a, const ClassExpr& c);

// The certificate that writes a non-negative boundary class as a sum of
// boundary generators. Throws BadInputError on negative coefficients.
PCertificate boundary_certificate(const ClassExpr& c);

}  // namespace logcy
