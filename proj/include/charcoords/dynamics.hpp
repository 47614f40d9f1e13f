#pragma once

// Twist dynamics in affine charts of the pair-quantity simplex.
//
// Euler class 0 uses the chart (1, b, c) with the special axis first.
// Euler class 1 uses signed charts, one sheet per negative triangle.

#include "charcoords/coords.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace charcoords {

struct ChartPoint {
    Rational b, c;
    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

// Y-chart point (a, 1, c).
struct ChartPointY {
    Rational a, c;
    friend bool operator==(const ChartPointY&, const ChartPointY&) = default;
};

// Euler class 0, special axis x. b' = (1-c)^2/b, then c' = (1-b')^2/c.
// Throws DegenerateOrbit when an intermediate coordinate vanishes.
ChartPoint dx_map_e0(const ChartPoint& p);
Rational conic_k_e0(const ChartPoint& p);   // (b+c-1)^2/(bc) - 2
Rational quartic_k_e0(const ChartPoint& p); // (b+c)^2 (b+c-1)^2/(bc) - 2
// The x-switch read in the chart: (b, c) -> (b, c)/(b+c)^2.
ChartPoint sx_map_e0(const ChartPoint& p);
// Twist pair that preserves the quartic: x-switch, dx_map_e0, x-switch.
ChartPoint quartic_map_e0(const ChartPoint& p);

// Euler class 1. b' = (c^2-1)/b, then c' = (b'^2-1)/c.
ChartPoint dx_map_e1(const ChartPoint& p);
Rational conic_k_e1(const ChartPoint& p); // (b^2+c^2-1)/(bc)

// Euler class 1 in the Y chart: c' = (a^2-1)/c, then a' = (c'^2-1)/a.
ChartPointY dy_map_e1(const ChartPointY& p);
Rational conic_k_e1(const ChartPointY& p); // (a^2+c^2-1)/(ac)

// Chart readings of a coordinate. Euler class 0 requires special axis x;
// Euler class 1 picks the sheet from the negative triangle.
ChartPoint chart_e0(const LengthsCoord& c);
ChartPoint chart_x_e1(const LengthsCoord& c);
ChartPointY chart_y_e1(const LengthsCoord& c);

enum class Family { E0, E1 };

struct RotationEstimate {
    double rotation = 0;        // mean increment / 2 pi, in [0, 1)
    double increment_variance = 0;
    std::vector<double> angles; // normalised angle of each orbit point
};

// Iterates dx_map of the family exactly from `start`, which must lie on
// the conic of invariant k with |k| < 2, and measures angles after an
// affine change making the conic a circle.
RotationEstimate rotation_number(Family f, const Rational& k, const ChartPoint& start, std::size_t n_iters);

// Normalised (sinh|s|, sinh|t|, sinh|s+t|). Throws OffDomain.
std::array<double, 3> psi_cover(double s, double t);

// Euler class 1 switch on normalised pair quantities:
// a' = |b^2 - c^2| / a on the switched axis.
std::array<double, 3> switch_e1_float(const std::array<double, 3>& p, Axis a);

// Weil-Petersson density 1/(uv), u = b/a, v = c/a.
Rational wp_density(const SimplexPoint& p);

// Header "iter,b,c,k" (+ ",angle_float" when with_float).
void write_orbit_csv(std::ostream& os, Family f, const ChartPoint& start, std::size_t n_iters,
                     bool with_float);

} // namespace charcoords
