#include "logcy/rings.hpp"

#include <doctest.h>

#include "logcy/errors.hpp"
#include "support/poly2.hpp"
#include "support/random_gen.hpp"

using namespace logcy;

namespace {

TropManifold make(std::vector<long> ks) {
    BoundaryData data;
    data.n = static_cast<int>(ks.size());
    for (long k : ks) data.self_intersections.push_back(Int(k));
    return TropManifold::build(std::move(data));
}

TropPoint ray(int chart, long r = 1) { return TropPoint{chart, Scalar(r), Scalar(0)}; }

VertexElement random_theta(testgen::Rng& rng, const TropManifold& m) {
    TropPoint p{static_cast<int>(rng.integer(0, m.chart_count() - 1)), Scalar(rng.big(0, 3)),
                Scalar(rng.big(0, 3))};
    return VertexElement::theta(m, p);
}

}  // namespace

TEST_CASE("vertex ring: unit, consecutive rays, distant rays") {
    auto m5 = make({-1, -1, -1, -1, -1});

    auto x1 = VertexElement::theta(m5, ray(0));
    auto x3 = VertexElement::theta(m5, ray(2));
    CHECK(vertex_mul(m5, x1, x3).is_zero());

    auto x2 = VertexElement::theta(m5, ray(1));
    auto prod = vertex_mul(m5, x1, x2);
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms().begin()->first == TropPoint{1, Scalar(1), Scalar(1)});
    CHECK(prod.terms().begin()->second == Scalar(1));

    auto e = vertex_add(x1, x2);
    CHECK(vertex_mul(m5, VertexElement::unit(m5), e) == e);

    CHECK_THROWS_AS(vertex_mul(make({4, 1}), VertexElement(), VertexElement()),
                    UnsupportedBoundaryLengthError);
}

TEST_CASE("vertex ring: full V_5 table on ray primitives") {
    auto m5 = make({-1, -1, -1, -1, -1});
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            auto prod = vertex_mul(m5, VertexElement::theta(m5, ray(i)), VertexElement::theta(m5, ray(j)));
            int gap = std::min((i - j + 5) % 5, (j - i + 5) % 5);
            if (gap >= 2) {
                CHECK(prod.is_zero());
            } else {
                REQUIRE(prod.terms().size() == 1);
                TropPoint key = prod.terms().begin()->first;
                if (i == j) {
                    CHECK(key == TropPoint{i, Scalar(2), Scalar(0)});
                } else {
                    // consecutive rays multiply freely into the shared cone
                    int later = (j == (i + 1) % 5) ? j : i;
                    CHECK(key == TropPoint{later, Scalar(1), Scalar(1)});
                }
            }
        }
    }
}

TEST_CASE("vertex ring: consecutive variables generate a polynomial algebra") {
    auto m5 = make({-1, -1, -1, -1, -1});
    // theta(r * ray_i) * theta(s * ray_{i+1}) = theta((s, r) in chart i+1): all distinct
    for (long r = 1; r <= 3; ++r) {
        for (long s = 1; s <= 3; ++s) {
            auto prod = vertex_mul(m5, VertexElement::theta(m5, ray(1, r)),
                                   VertexElement::theta(m5, ray(2, s)));
            REQUIRE(prod.terms().size() == 1);
            CHECK(prod.terms().begin()->first == TropPoint{2, Scalar(s), Scalar(r)});
        }
    }
}

TEST_CASE("vertex ring: products on shared rays agree from both adjacent charts") {
    auto m = make({1, 0, -2, 3});
    testgen::Rng rng(0x5a5a);
    for (int i = 0; i < 200; ++i) {
        int chart = static_cast<int>(rng.integer(0, 3));
        Int r = rng.big(1, 4), s = rng.big(1, 4);
        // same ray point presented in both adjacent charts
        TropPoint from_z{chart, Scalar(r), Scalar(0)};
        TropPoint from_w{(chart + 1) % 4, Scalar(0), Scalar(r)};
        TropPoint q{(chart + 1) % 4, Scalar(0), Scalar(s)};
        auto p1 = vertex_mul(m, VertexElement::theta(m, from_z), VertexElement::theta(m, q));
        auto p2 = vertex_mul(m, VertexElement::theta(m, from_w), VertexElement::theta(m, q));
        CHECK(p1 == p2);
        CHECK_FALSE(p1.is_zero());
    }
}

TEST_CASE("vertex ring: commutative and associative (fuzz over n in {3,4,5})") {
    testgen::Rng rng(0xa550c);
    std::vector<TropManifold> manifolds = {make({1, 1, 1}), make({0, -2, 3, 1}),
                                           make({-1, -1, -1, -1, -1})};
    for (int iter = 0; iter < 1000; ++iter) {
        const TropManifold& m = manifolds[iter % manifolds.size()];
        auto a = random_theta(rng, m), b = random_theta(rng, m), c = random_theta(rng, m);
        CHECK(vertex_mul(m, a, b) == vertex_mul(m, b, a));
        CHECK(vertex_mul(m, vertex_mul(m, a, b), c) == vertex_mul(m, a, vertex_mul(m, b, c)));
    }
}

TEST_CASE("nonzero theta products happen only inside a shared closed cone (fuzz)") {
    auto m = make({0, -2, 3, 1});
    testgen::Rng rng(0x10ca);
    for (int iter = 0; iter < 300; ++iter) {
        TropPoint p = m.normalize(TropPoint{static_cast<int>(rng.integer(0, 3)),
                                            Scalar(rng.big(0, 3)), Scalar(rng.big(0, 3))});
        TropPoint q = m.normalize(TropPoint{static_cast<int>(rng.integer(0, 3)),
                                            Scalar(rng.big(0, 3)), Scalar(rng.big(0, 3))});
        auto prod = vertex_mul(m, VertexElement::theta(m, p), VertexElement::theta(m, q));
        if (prod.is_zero()) continue;
        REQUIRE(prod.terms().size() == 1);
        const TropPoint& sum = prod.terms().begin()->first;
        // some chart's closed cone contains p, q, and the product key
        bool shared = false;
        for (int c = 0; c < m.chart_count() && !shared; ++c) {
            Vec2Q pc, qc, sc;
            shared = m.coords_in_chart(p, c, &pc) && m.coords_in_chart(q, c, &qc) &&
                     m.coords_in_chart(sum, c, &sc) && pc + qc == sc;
        }
        CHECK(shared);
    }
}

TEST_CASE("vertex products vanish exactly when no closed cone holds both factors") {
    auto m = make({0, 0, 0, 0});
    auto interior1 = VertexElement::theta(m, TropPoint{0, Scalar(1), Scalar(2)});
    auto interior2 = VertexElement::theta(m, TropPoint{1, Scalar(1), Scalar(1)});
    CHECK(vertex_mul(m, interior1, interior2).is_zero());
    auto shared = vertex_mul(m, interior1, VertexElement::theta(m, ray(0)));
    REQUIRE(shared.terms().size() == 1);
    CHECK(shared.terms().begin()->first == TropPoint{0, Scalar(2), Scalar(2)});
}

TEST_CASE("monoid ring: unit, convolution, truncation") {
    BoundaryData bd{3, {Int(1), Int(1), Int(1)}};
    auto lattice = IntersectionLattice::build(bd);
    AmpleData a;
    a.coefficients = {Scalar(1), Scalar(1), Scalar(1)};

    auto unit = MonoidRingElement::unit(lattice);
    CHECK(monoid_mul(lattice, unit, unit, a, Scalar(10)).same_coefficients(unit));

    ClassExpr d1{{Int(1), Int(0), Int(0)}, {}};
    ClassExpr d2{{Int(0), Int(1), Int(0)}, {}};
    MonoidRingElement q1, q2;
    q1.add_term(lattice, d1, boundary_certificate(d1), Scalar(1));
    q2.add_term(lattice, d2, boundary_certificate(d2), Scalar(1));

    // deg(D_1) = deg(D_2) = 3 with unit ample data
    auto prod = monoid_mul(lattice, q1, q2, a, Scalar(6));
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms().begin()->first == class_add(d1, d2));

    CHECK(monoid_mul(lattice, q1, q2, a, Scalar(5)).is_zero());
    CHECK_THROWS_AS(monoid_mul(lattice, q1, q2, a, Scalar(-1)), BadInputError);
}

TEST_CASE("monoid ring: degrees add; truncation bounds every output key (fuzz)") {
    BoundaryData bd{4, {Int(0), Int(-2), Int(3), Int(1)}};
    auto lattice = IntersectionLattice::build(bd);
    AmpleData a;
    a.coefficients = {Scalar(2), Scalar(3), Scalar(1), Scalar(5)};
    testgen::Rng rng(0x90aa);
    for (int iter = 0; iter < 100; ++iter) {
        ClassExpr c1, c2;
        for (int i = 0; i < 4; ++i) {
            c1.boundary.push_back(rng.big(0, 3));
            c2.boundary.push_back(rng.big(0, 3));
        }
        CHECK(ample_degree(lattice, a, class_add(c1, c2)) ==
              ample_degree(lattice, a, c1) + ample_degree(lattice, a, c2));
        MonoidRingElement e1, e2;
        e1.add_term(lattice, c1, boundary_certificate(c1), Scalar(rng.big(1, 5)));
        e2.add_term(lattice, c2, boundary_certificate(c2), Scalar(rng.big(1, 5)));
        Scalar trunc(rng.big(0, 200));
        auto prod = monoid_mul(lattice, e1, e2, a, trunc);
        for (const auto& [cls, term] : prod.terms())
            CHECK(ample_degree(lattice, a, cls) <= trunc);
    }
}

TEST_CASE("local normal form: defining rewrites") {
    // x*y -> u + 1
    auto xy = local_normal_form({LocalMonomial{Scalar(1), Int(1), Int(1), Int(0)}});
    LocalElement expected;
    expected.add_term(LocalBasisIndex{'x', 0, 1}, Scalar(1));
    expected.add_term(LocalBasisIndex{'x', 0, 0}, Scalar(1));
    CHECK(xy == expected);

    // x^2 y -> x u + x
    auto x2y = local_normal_form({LocalMonomial{Scalar(1), Int(2), Int(1), Int(0)}});
    LocalElement expected2;
    expected2.add_term(LocalBasisIndex{'x', 1, 1}, Scalar(1));
    expected2.add_term(LocalBasisIndex{'x', 1, 0}, Scalar(1));
    CHECK(x2y == expected2);

    // x^5 is already normal
    auto x5 = local_normal_form({LocalMonomial{Scalar(1), Int(5), Int(0), Int(0)}});
    REQUIRE(x5.terms().size() == 1);
    CHECK(x5.terms().begin()->first == LocalBasisIndex{'x', 5, 0});

    CHECK_THROWS_AS(local_normal_form({LocalMonomial{Scalar(1), Int(-1), Int(0), Int(0)}}),
                    BadInputError);
}

TEST_CASE("local normal form agrees with the rational-function oracle") {
    testgen::Rng rng(0x10ca1);
    for (int iter = 0; iter < 100; ++iter) {
        FormalLocalExpr expr;
        int terms = static_cast<int>(rng.integer(1, 4));
        for (int t = 0; t < terms; ++t)
            expr.push_back(LocalMonomial{Scalar(rng.big(-4, 4)), rng.big(0, 5), rng.big(0, 5),
                                         rng.big(-3, 3)});
        auto normal = local_normal_form(expr);
        CHECK(testpoly::expand(normal) == testpoly::expand(expr));
        // every index in branch normal form
        for (const auto& [idx, coeff] : normal.terms()) {
            CHECK((idx.branch == 'x' || idx.branch == 'y'));
            if (idx.branch == 'y') CHECK(idx.exp >= 1);
            CHECK(coeff != 0);
        }
    }
}

TEST_CASE("local products: worked examples") {
    LocalElement xu_inv, yu_inv;
    xu_inv.add_term(LocalBasisIndex{'x', 1, -1}, Scalar(1));
    yu_inv.add_term(LocalBasisIndex{'y', 1, -1}, Scalar(1));
    auto prod = local_mul(xu_inv, yu_inv);  // x y u^-2 = u^-1 + u^-2
    LocalElement expected;
    expected.add_term(LocalBasisIndex{'x', 0, -1}, Scalar(1));
    expected.add_term(LocalBasisIndex{'x', 0, -2}, Scalar(1));
    CHECK(prod == expected);

    LocalElement xu, y;
    xu.add_term(LocalBasisIndex{'x', 1, 1}, Scalar(1));
    y.add_term(LocalBasisIndex{'y', 1, 0}, Scalar(1));
    auto prod2 = local_mul(xu, y);  // x y u = u^2 + u
    LocalElement expected2;
    expected2.add_term(LocalBasisIndex{'x', 0, 2}, Scalar(1));
    expected2.add_term(LocalBasisIndex{'x', 0, 1}, Scalar(1));
    CHECK(prod2 == expected2);

    LocalElement e;
    e.add_term(LocalBasisIndex{'y', 3, -2}, Scalar(7, 2));
    CHECK(local_mul(LocalElement::unit(), e) == e);
}

TEST_CASE("local_mul matches the rational-function oracle on random pairs") {
    testgen::Rng rng(0x011c);
    for (int iter = 0; iter < 200; ++iter) {
        LocalElement e1, e2;
        int t1 = static_cast<int>(rng.integer(1, 3)), t2 = static_cast<int>(rng.integer(1, 3));
        for (int t = 0; t < t1; ++t) {
            LocalBasisIndex idx{rng.integer(0, 1) ? 'x' : 'y', rng.big(0, 4), rng.big(-2, 2)};
            if (idx.branch == 'y' && idx.exp == 0) idx.exp = 1;
            e1.add_term(idx, testgen::Rng::ratio(rng.big(-5, 5), rng.big(1, 3)));
        }
        for (int t = 0; t < t2; ++t) {
            LocalBasisIndex idx{rng.integer(0, 1) ? 'x' : 'y', rng.big(0, 4), rng.big(-2, 2)};
            if (idx.branch == 'y' && idx.exp == 0) idx.exp = 1;
            e2.add_term(idx, testgen::Rng::ratio(rng.big(-5, 5), rng.big(1, 3)));
        }
        auto prod = local_mul(e1, e2);
        CHECK(testpoly::expand(prod) == testpoly::expand(e1) * testpoly::expand(e2));
        // commutativity and unit
        CHECK(prod == local_mul(e2, e1));
    }
}

TEST_CASE("local basis: structure constants are non-negative integers") {
    testgen::Rng rng(0xb1a5);
    for (int iter = 0; iter < 100; ++iter) {
        LocalBasisIndex i1{rng.integer(0, 1) ? 'x' : 'y', rng.big(0, 5), rng.big(-3, 3)};
        if (i1.branch == 'y' && i1.exp == 0) i1.exp = 1;
        LocalBasisIndex i2{rng.integer(0, 1) ? 'x' : 'y', rng.big(0, 5), rng.big(-3, 3)};
        if (i2.branch == 'y' && i2.exp == 0) i2.exp = 1;
        LocalElement e1, e2;
        e1.add_term(i1, Scalar(1));
        e2.add_term(i2, Scalar(1));
        LocalElement prod = local_mul(e1, e2);
        for (const auto& [idx, coeff] : prod.terms()) {
            CHECK(coeff.get_den() == 1);
            CHECK(coeff > 0);
        }
    }
}

namespace {

// Row rank of an exact rational matrix by Gaussian elimination.
int rational_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            Scalar f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("local basis is linearly independent up to total degree 6") {
    // All indices with exp + |upow| <= 6, expanded against the monomial
    // oracle after clearing denominators by u^6.
    std::vector<testpoly::Poly2> rows_poly;
    for (int branch = 0; branch < 2; ++branch) {
        for (long e = branch == 0 ? 0 : 1; e <= 6; ++e) {
            for (long c = -(6 - e); c <= 6 - e; ++c) {
                testpoly::Poly2 p =
                    testpoly::Poly2::monomial(branch == 0 ? e : 0, branch == 0 ? 0 : e, Scalar(1));
                rows_poly.push_back(p * testpoly::u_poly().pow(c + 6));
            }
        }
    }
    REQUIRE(rows_poly.size() == 85);  // 49 x-branch + 36 y-branch indices
    std::map<std::pair<long, long>, std::size_t> columns;
    for (const auto& p : rows_poly)
        for (const auto& [key, coeff] : p.coeffs)
            columns.emplace(key, columns.size());
    std::vector<std::vector<Scalar>> matrix(rows_poly.size(),
                                            std::vector<Scalar>(columns.size(), Scalar(0)));
    for (std::size_t r = 0; r < rows_poly.size(); ++r)
        for (const auto& [key, coeff] : rows_poly[r].coeffs)
            matrix[r][columns.at(key)] = coeff;
    CHECK(rational_rank(std::move(matrix)) == 85);
}

TEST_CASE("torus product adds exponents") {
    CHECK(torus_product({Int(1), Int(0)}, {Int(0), Int(1)}) == std::pair<Int, Int>{Int(1), Int(1)});
    CHECK(torus_product({Int(3), Int(-7)}, {Int(0), Int(0)}) == std::pair<Int, Int>{Int(3), Int(-7)});
    CHECK(torus_product({Int(2), Int(-3)}, {Int(-2), Int(3)}) == std::pair<Int, Int>{Int(0), Int(0)});
}
