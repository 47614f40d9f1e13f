#pragma once

#include "charcoords/coords.hpp"

#include <iosfwd>
#include <optional>
#include <variant>

namespace charcoords {

// A diagonal e between old triangles t1, t2. After the switch the new
// triangles are t1', t2'. Side e1 borders t1 and t1', e2 borders t1 and t2',
// e3 borders t2 and t2', e4 borders t2 and t1'.
struct QuadState {
    Rational diagonal;
    Rational e1, e2, e3, e4;
    int eps1 = 1, eps2 = 1;
};

struct SwitchOutcome {
    Rational diagonal;
    int eps1 = 1, eps2 = 1; // signs of t1', t2'
};

// nullopt when the signs differ and e1*e3 == e2*e4.
std::optional<SwitchOutcome> diagonal_switch(const QuadState& q);

struct NotAdmissible {
    Axis axis;
    std::size_t step = 0;
};

using SwitchResult = std::variant<LengthsCoord, NotAdmissible>;

inline bool admissible(const SwitchResult& r) { return std::holds_alternative<LengthsCoord>(r); }

// Switches both edges of the axis pair and relabels: the new edge joining
// v_i and v_j becomes e_ij, faces keep the label of the puncture they avoid.
SwitchResult simultaneous_switch(const LengthsCoord& c, Axis a);

// Left fold; the step in NotAdmissible is 0-based.
SwitchResult apply_word(const LengthsCoord& c, const SwitchWord& w);

// Strict: one pair quantity exceeds the sum of the other two.
bool anti_tri_check(const PairTriple& t);
std::optional<Axis> anti_tri_axis(const PairTriple& t);

// Triangle inequality for the square roots, decided exactly.
bool tri_check(const PairTriple& t);

// CSV with header "step,axis,x,y,z"; row 0 is the start.
void write_switch_csv(std::ostream& os, const LengthsCoord& c, const SwitchWord& w);

} // namespace charcoords
