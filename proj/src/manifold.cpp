#include "logcy/manifold.hpp"

#include <algorithm>

#include "logcy/errors.hpp"

namespace logcy {

bool trop_point_less(const TropPoint& p, const TropPoint& q) {
    if (p.chart != q.chart) return p.chart < q.chart;
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
}

TropManifold TropManifold::build(BoundaryData data) {
    if (data.n < 1) throw BadInputError("boundary needs at least one component");
    if (static_cast<int>(data.self_intersections.size()) != data.n)
        throw BadInputError("self_intersections length does not match n");
    TropManifold m;
    m.boundary_ = std::move(data);
    m.transitions_.reserve(m.boundary_.n);
    for (int i = 0; i < m.boundary_.n; ++i) {
        const Int& k = m.boundary_.self_intersections[i];
        m.transitions_.push_back(Mat2Z{0, -1, 1, -k});
    }
    return m;
}

const Int& TropManifold::self_intersection(int divisor) const {
    return boundary_.self_intersections.at(divisor);
}

const Mat2Z& TropManifold::transition(int chart) const { return transitions_.at(chart); }

Mat2Z TropManifold::monodromy() const {
    Mat2Z mu = Mat2Z::identity();
    for (int i = 0; i < boundary_.n; ++i) mu = mat_mul(transitions_[i], mu);
    return mu;
}

TropPoint TropManifold::normalize(const TropPoint& p) const {
    if (p.chart < 0 || p.chart >= boundary_.n) throw BadInputError("chart index out of range");
    if (p.a < 0 || p.b < 0) throw NegativeCoordsError();
    if (p.a == 0 && p.b == 0) return TropPoint{0, Scalar(0), Scalar(0)};
    if (p.b == 0) return p;                                       // on the ray of D_chart
    if (p.a == 0) return TropPoint{prev_chart(p.chart), p.b, Scalar(0)};  // ray of D_{chart-1}
    return p;                                                     // interior
}

std::vector<int> TropManifold::charts_containing(const TropPoint& p) const {
    TropPoint c = normalize(p);
    std::vector<int> out;
    if (c.is_origin()) {
        for (int i = 0; i < boundary_.n; ++i) out.push_back(i);
        return out;
    }
    if (c.b == 0) {
        out.push_back(c.chart);
        if (next_chart(c.chart) != c.chart) out.push_back(next_chart(c.chart));
        return out;
    }
    out.push_back(c.chart);
    return out;
}

bool TropManifold::coords_in_chart(const TropPoint& p, int c, Vec2Q* out) const {
    TropPoint q = normalize(p);
    if (q.is_origin()) {
        *out = Vec2Q{Scalar(0), Scalar(0)};
        return true;
    }
    if (q.chart == c) {
        *out = q.coords();
        return true;
    }
    if (q.b == 0 && next_chart(q.chart) == c) {
        // The ray of D_j is the b-axis of chart j+1.
        *out = Vec2Q{Scalar(0), q.a};
        return true;
    }
    return false;
}

TangentVector TropManifold::transport_vector(const TangentVector& v, int to_chart,
                                             Direction direction) const {
    if (v.chart < 0 || v.chart >= boundary_.n || to_chart < 0 || to_chart >= boundary_.n)
        throw BadInputError("chart index out of range");
    const int n = boundary_.n;
    int steps;
    if (direction == Direction::Counterclockwise)
        steps = (to_chart - v.chart + n) % n;
    else
        steps = (v.chart - to_chart + n) % n;
    if (steps == 0) steps = n;  // full loop
    TangentVector cur = v;
    for (int s = 0; s < steps; ++s) {
        if (direction == Direction::Counterclockwise) {
            cur.vec = mat_apply(transitions_[cur.chart], cur.vec);
            cur.chart = next_chart(cur.chart);
        } else {
            int from = prev_chart(cur.chart);
            cur.vec = mat_apply(mat_inverse(transitions_[from]), cur.vec);
            cur.chart = from;
        }
    }
    return cur;
}

std::vector<TropPoint> TropManifold::integral_points(const Int& bound) const {
    if (bound < 0) throw BadInputError("bound must be non-negative");
    std::vector<TropPoint> pts;
    pts.push_back(TropPoint{0, Scalar(0), Scalar(0)});
    for (int c = 0; c < boundary_.n; ++c) {
        for (Int r = 1; r <= bound; ++r) pts.push_back(TropPoint{c, Scalar(r), Scalar(0)});
        for (Int a = 1; a <= bound; ++a)
            for (Int b = 1; b <= bound; ++b) pts.push_back(TropPoint{c, Scalar(a), Scalar(b)});
    }
    std::sort(pts.begin(), pts.end(), trop_point_less);
    return pts;
}

namespace {

// Rational kernel of an n x n integer matrix, returned as primitive integer
// vectors in reduced echelon shape (deterministic).
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Scalar>> m, int n) {
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = m[row][col];
        for (int c = 0; c < n; ++c) m[row][c] /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Scalar f = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
        Int lcm_den = 1;
        for (const Scalar& x : v) lcm_den = lcm(lcm_den, x.get_den());
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i) {
            Scalar scaled = v[i] * Scalar(lcm_den);
            w[i] = scaled.get_num();
        }
        Int g = 0;
        for (const Int& x : w) g = gcd(g, x);
        if (g > 1)
            for (Int& x : w) x /= g;
        for (const Int& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : w) y = -y;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace

std::vector<LinearFunction> TropManifold::linear_function_basis() const {
    const int n = boundary_.n;
    std::vector<std::vector<Scalar>> sys(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) {
        sys[i][prev_chart(i)] += 1;
        sys[i][i] += Scalar(boundary_.self_intersections[i]);
        sys[i][next_chart(i)] += 1;
    }
    std::vector<LinearFunction> out;
    for (auto& v : integer_kernel(std::move(sys), n)) out.push_back(LinearFunction{std::move(v)});
    return out;
}

bool satisfies_linearity(const TropManifold& m, const LinearFunction& f) {
    const int n = m.chart_count();
    if (static_cast<int>(f.values.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        Int lhs = f.values[m.prev_chart(i)] + m.self_intersection(i) * f.values[i] +
                  f.values[m.next_chart(i)];
        if (lhs != 0) return false;
    }
    return true;
}

Scalar evaluate(const TropManifold& m, const LinearFunction& f, const TropPoint& p) {
    if (!satisfies_linearity(m, f)) throw NotLinearError();
    TropPoint q = m.normalize(p);
    return q.a * Scalar(f.values[q.chart]) + q.b * Scalar(f.values[m.prev_chart(q.chart)]);
}

}  // namespace logcy
