#pragma once

// Lengths coordinates on the relative character variety: one positive
// rational per edge and one sign per triangle, attached to a triangulation.

#include "charcoords/rational.hpp"
#include "charcoords/surface.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>

namespace charcoords {

struct LengthsCoord {
    std::array<Rational, 6> lambda; // indexed by Edge
    std::array<int, 4> eps{1, 1, 1, 1}; // indexed by triangle, each +-1
    TetraTriangulation tri = TetraTriangulation::base();

    const Rational& length(Edge e) const { return lambda[index(e)]; }
    Rational& length(Edge e) { return lambda[index(e)]; }
};

// Validates positivity and signs. Throws InputError.
LengthsCoord make_coord(const std::array<Rational, 6>& lambda, const std::array<int, 4>& eps,
                        const TetraTriangulation& tri = TetraTriangulation::base());

// Sign vector with exactly the listed (0-based) triangles negative.
std::array<int, 4> signs_with_negative(std::initializer_list<int> negative);

int euler_class(const LengthsCoord& c);

struct PairTriple {
    Rational x, y, z;
    const Rational& operator[](Axis a) const { return a == Axis::X ? x : a == Axis::Y ? y : z; }
    Rational& operator[](Axis a) { return a == Axis::X ? x : a == Axis::Y ? y : z; }
    friend bool operator==(const PairTriple&, const PairTriple&) = default;
};

PairTriple pair_quantities(const LengthsCoord& c);

// Projective class of a PairTriple, normalised to sum 1.
using SimplexPoint = PairTriple;
SimplexPoint simplex_point(const LengthsCoord& c);
SimplexPoint normalize(const PairTriple& t);

// lambda(e_ij) *= mu_i * mu_j.
LengthsCoord rescale(const LengthsCoord& c, const std::array<Rational, 4>& mu);

// lambda12 = x, lambda13 = y, lambda14 = z, remaining edges 1.
LengthsCoord witness_embedding(const PairTriple& t, const std::array<int, 4>& eps);

// For Euler class 0: the axis whose two edges each border two triangles of
// equal sign.
std::optional<Axis> special_axis(const std::array<int, 4>& eps);

// Normalised off-diagonal entry of the parabolic holonomy at a puncture.
Rational peripheral_entry(const LengthsCoord& c, int puncture);

// Throws NotTypePreserving if any entry vanishes.
std::array<int, 4> puncture_signs(const LengthsCoord& c);
std::string sign_string(const std::array<int, 4>& s); // "+-++"

struct Component {
    int euler = 0;
    std::array<int, 4> signs{};
    std::string label; // e.g. "M1_s2", "M0_s34", "M-1_s-3", "M1_s+"
};

// Throws NotTypePreserving, InternalInconsistency.
Component classify_component(const LengthsCoord& c);

nlohmann::json to_json(const LengthsCoord& c);
// Reads {"lambda": {...}, "eps": {...}}; the triangulation is the base one.
LengthsCoord coord_from_json(const nlohmann::json& j);

std::string to_string(const PairTriple& t);

} // namespace charcoords
