#include "charcoords/dynamics.hpp"

#include "charcoords/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace charcoords {

namespace {

void require_nonzero(const Rational& v, const char* what) {
    if (v == 0)
        throw DegenerateOrbit(std::string(what) + " vanishes");
}

} // namespace

ChartPoint dx_map_e0(const ChartPoint& p) {
    require_nonzero(p.b, "b");
    require_nonzero(p.c, "c");
    Rational b = (1 - p.c) * (1 - p.c) / p.b;
    require_nonzero(b, "b'");
    Rational c = (1 - b) * (1 - b) / p.c;
    require_nonzero(c, "c'");
    return {b, c};
}

Rational conic_k_e0(const ChartPoint& p) {
    require_nonzero(p.b, "b");
    require_nonzero(p.c, "c");
    Rational s = p.b + p.c - 1;
    Rational bc = p.b * p.c;
    return s * s / bc - 2;
}

Rational quartic_k_e0(const ChartPoint& p) {
    require_nonzero(p.b, "b");
    require_nonzero(p.c, "c");
    Rational s = p.b + p.c;
    Rational t = s * (s - 1);
    Rational bc = p.b * p.c;
    return t * t / bc - 2;
}

ChartPoint sx_map_e0(const ChartPoint& p) {
    Rational s = p.b + p.c;
    require_nonzero(s, "b+c");
    Rational ss = s * s;
    return {p.b / ss, p.c / ss};
}

ChartPoint quartic_map_e0(const ChartPoint& p) { return sx_map_e0(dx_map_e0(sx_map_e0(p))); }

ChartPoint dx_map_e1(const ChartPoint& p) {
    require_nonzero(p.b, "b");
    require_nonzero(p.c, "c");
    Rational b = (p.c * p.c - 1) / p.b;
    require_nonzero(b, "b'");
    Rational c = (b * b - 1) / p.c;
    require_nonzero(c, "c'");
    return {b, c};
}

Rational conic_k_e1(const ChartPoint& p) {
    require_nonzero(p.b, "b");
    require_nonzero(p.c, "c");
    return (p.b * p.b + p.c * p.c - 1) / (p.b * p.c);
}

ChartPointY dy_map_e1(const ChartPointY& p) {
    require_nonzero(p.a, "a");
    require_nonzero(p.c, "c");
    Rational c = (p.a * p.a - 1) / p.c;
    require_nonzero(c, "c'");
    Rational a = (c * c - 1) / p.a;
    require_nonzero(a, "a'");
    return {a, c};
}

Rational conic_k_e1(const ChartPointY& p) {
    require_nonzero(p.a * p.c, "ac");
    return (p.a * p.a + p.c * p.c - 1) / (p.a * p.c);
}

ChartPoint chart_e0(const LengthsCoord& c) {
    if (euler_class(c) != 0 || special_axis(c.eps) != Axis::X)
        throw InputError("the Euler class 0 chart needs special axis x");
    PairTriple p = pair_quantities(c);
    return {p.y / p.x, p.z / p.x};
}

namespace {

int negative_triangle(const LengthsCoord& c) {
    if (euler_class(c) != 1)
        throw InputError("the Euler class 1 charts need exactly one negative triangle");
    for (int t = 0; t < kTriangles; ++t)
        if (c.eps[t] < 0)
            return t;
    throw InternalInconsistency("Euler class 1 without a negative triangle");
}

} // namespace

ChartPoint chart_x_e1(const LengthsCoord& c) {
    // Sheet signs on (b, c) indexed by the negative triangle.
    static constexpr int kSheet[4][2] = {{1, 1}, {-1, -1}, {-1, 1}, {1, -1}};
    int t = negative_triangle(c);
    PairTriple p = pair_quantities(c);
    return {kSheet[t][0] * p.y / p.x, kSheet[t][1] * p.z / p.x};
}

ChartPointY chart_y_e1(const LengthsCoord& c) {
    static constexpr int kSheet[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    int t = negative_triangle(c);
    PairTriple p = pair_quantities(c);
    return {kSheet[t][0] * p.x / p.y, kSheet[t][1] * p.z / p.y};
}

namespace {

struct CircleFrame {
    double k, b0, radius;
    double angle(const ChartPoint& p) const {
        double b = to_double(p.b) - b0, c = to_double(p.c) - b0;
        double u = std::sqrt(1 - k / 2) * (b + c) / std::sqrt(2.0) / radius;
        double v = std::sqrt(1 + k / 2) * (b - c) / std::sqrt(2.0) / radius;
        return std::atan2(v, u);
    }
};

// Both conics read b^2 + c^2 - k bc + (linear) = const; recentre and scale.
CircleFrame frame_for(Family f, double k) {
    if (f == Family::E1)
        return {k, 0.0, 1.0};
    double b0 = 2 / (2 - k);
    return {k, b0, std::sqrt((k + 2) / (2 - k))};
}

ChartPoint step(Family f, const ChartPoint& p) { return f == Family::E0 ? dx_map_e0(p) : dx_map_e1(p); }

Rational invariant(Family f, const ChartPoint& p) { return f == Family::E0 ? conic_k_e0(p) : conic_k_e1(p); }

} // namespace

RotationEstimate rotation_number(Family f, const Rational& k, const ChartPoint& start, std::size_t n_iters) {
    if (invariant(f, start) != k)
        throw InputError("start point is not on the conic of the given invariant");
    if (k <= -2 || k >= 2)
        throw InputError("rotation number needs an ellipse, |k| < 2");
    const double two_pi = 2 * std::numbers::pi;
    CircleFrame frame = frame_for(f, to_double(k));
    RotationEstimate est;
    ChartPoint p = start;
    est.angles.push_back(frame.angle(p));
    std::vector<double> inc;
    for (std::size_t i = 0; i < n_iters; ++i) {
        p = step(f, p);
        est.angles.push_back(frame.angle(p));
        double d = std::fmod(est.angles.back() - est.angles[est.angles.size() - 2], two_pi);
        if (d < 0)
            d += two_pi;
        inc.push_back(d);
    }
    if (inc.empty())
        return est;
    double mean = 0;
    for (double d : inc)
        mean += d;
    mean /= static_cast<double>(inc.size());
    double var = 0;
    for (double d : inc)
        var += (d - mean) * (d - mean);
    est.increment_variance = var / static_cast<double>(inc.size());
    est.rotation = mean / two_pi;
    return est;
}

std::array<double, 3> psi_cover(double s, double t) {
    if (s == 0 || t == 0 || s + t == 0)
        throw OffDomain("psi_cover needs s, t and s+t nonzero");
    double a = std::sinh(std::fabs(s)), b = std::sinh(std::fabs(t)), c = std::sinh(std::fabs(s + t));
    double sum = a + b + c;
    return {a / sum, b / sum, c / sum};
}

std::array<double, 3> switch_e1_float(const std::array<double, 3>& p, Axis a) {
    std::array<double, 3> q = p;
    int i = index(a);
    double u = p[(i + 1) % 3], v = p[(i + 2) % 3];
    q[i] = std::fabs(u * u - v * v) / p[i];
    double sum = q[0] + q[1] + q[2];
    for (double& x : q)
        x /= sum;
    return q;
}

Rational wp_density(const SimplexPoint& p) {
    if (p.x <= 0 || p.y <= 0 || p.z <= 0)
        throw InputError("density needs a point in the open simplex");
    return p.x * p.x / (p.y * p.z);
}

void write_orbit_csv(std::ostream& os, Family f, const ChartPoint& start, std::size_t n_iters,
                     bool with_float) {
    Rational k = invariant(f, start);
    bool ellipse = k > -2 && k < 2;
    CircleFrame frame = frame_for(f, to_double(k));
    os << "iter,b,c,k,angle_float" << (with_float ? ",b_float,c_float,k_float" : "") << '\n';
    char buf[128];
    ChartPoint p = start;
    for (std::size_t i = 0; i <= n_iters; ++i) {
        if (i > 0)
            p = step(f, p);
        os << i << ',' << to_string(p.b) << ',' << to_string(p.c) << ',' << to_string(invariant(f, p)) << ',';
        if (ellipse) {
            std::snprintf(buf, sizeof buf, "%.17g", frame.angle(p));
            os << buf;
        } else {
            os << "nan";
        }
        if (with_float) {
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g", to_double(p.b), to_double(p.c),
                          to_double(invariant(f, p)));
            os << buf;
        }
        os << '\n';
    }
}

} // namespace charcoords
