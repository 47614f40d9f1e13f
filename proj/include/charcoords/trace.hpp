#pragma once

// Exact traces of curves from their crossing sequences, and a floating
// holonomy product used as an independent check.

#include "charcoords/coords.hpp"
#include "charcoords/switches.hpp"

#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

namespace charcoords {

enum class Turn : std::uint8_t { Left, Right };

// One passage through a triangle: in through `enter`, out through `exit`.
// A left turn leaves through the edge following `enter` in the face's
// oriented edge cycle.
struct TurnStep {
    Edge enter;
    int triangle;
    Edge exit;
    Edge third;
    Turn turn;
};

using CrossingSequence = std::vector<TurnStep>;

struct Mat2 {
    Rational a = 1, b = 0, c = 0, d = 1; // [[a, b], [c, d]]
    Rational trace() const { return a + d; }
};

Mat2 operator*(const Mat2& l, const Mat2& r);

// Derives the third edge and the turn. Throws InvalidStep.
TurnStep make_step(const TetraTriangulation& tri, Edge enter, int triangle, Edge exit);

// Left: [[l_enter, eps*l_third], [0, l_exit]];
// Right: [[l_exit, 0], [eps*l_third, l_enter]].
Mat2 turn_matrix(Turn turn, const Rational& l_enter, const Rational& l_exit,
                 const Rational& l_third, int eps);
// Validates the step against c.tri. Throws InvalidStep.
Mat2 turn_matrix(const TurnStep& step, const LengthsCoord& c);

// Throws NotClosed if the steps do not chain cyclically across edges.
void check_closed(const CrossingSequence& seq);

// Ordered product of the turn matrices (not normalised).
Mat2 turn_product(const LengthsCoord& c, const CrossingSequence& seq);

// |tr(prod M)| / prod lambda(enter), exact.
Rational curve_trace(const LengthsCoord& c, const CrossingSequence& seq);

enum class TraceClass { Elliptic, Parabolic, Hyperbolic };
TraceClass classify_trace(const Rational& abs_trace);
const char* class_name(TraceClass k);

// Four-step curve of color a, disjoint from the edges of pair a.
CrossingSequence distinguished_sequence(const TetraTriangulation& tri, Axis a);
// Three-step loop around a puncture, all turns left.
CrossingSequence peripheral_sequence(const TetraTriangulation& tri, int puncture);

Rational distinguished_trace(const LengthsCoord& c, Axis a);

// Crossing sequence of the curve of slope s on the base triangulation,
// obtained by following a straight line in the branched lattice cover.
CrossingSequence base_slope_sequence(const Slope& s);

struct ParabolicWitness {
    Slope slope;       // the distinguished curve the failed switch would create
    Axis axis;
    std::size_t step;  // 0-based position in the path
};

using SlopeTrace = std::variant<Rational, ParabolicWitness>;

// Transports c along farey_path(s) and reads the distinguished trace there.
// c must sit on the base triangulation.
SlopeTrace slope_trace(const LengthsCoord& c, const Slope& s);

// Product of shear and turn matrices in 512-bit floating point.
struct FloatMat2 {
    long double a, b, c, d;
};
FloatMat2 holonomy_oracle_matrix(const LengthsCoord& c, const CrossingSequence& seq);
double holonomy_oracle(const LengthsCoord& c, const CrossingSequence& seq);

struct SlopeCurve {
    Slope slope;
    CrossingSequence seq;
};
std::vector<SlopeCurve> base_slope_curves(int depth);

struct DominanceRow {
    Slope slope;
    Rational trace;
    Rational positive_trace; // same lambdas, all signs +1
    bool crosses_negative = false;
    bool holds = false;
};

struct DominanceReport {
    std::vector<DominanceRow> rows;
    bool ok = true;
};

// Requires Euler class other than +-2 and the base triangulation.
DominanceReport dominance_check(const LengthsCoord& c, int depth);
DominanceReport dominance_check(const LengthsCoord& c, const std::vector<SlopeCurve>& curves);

struct TraceRow {
    Slope slope;
    Rational abs_trace;
    // Set when the Farey transport hit an inadmissible switch; the trace is
    // then read from the base crossing sequence.
    std::optional<ParabolicWitness> witness;
};

std::vector<TraceRow> traces_to_depth(const LengthsCoord& c, int depth);

// Header "slope,abs_trace,class" (+ ",abs_trace_float" when with_float).
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows, bool with_float);

} // namespace charcoords
