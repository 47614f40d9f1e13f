#pragma once

// Combinatorics of tetrahedral triangulations of the four-punctured sphere
// and their position in the dual Farey tree.
//
// Punctures are 0..3 (printed v1..v4). Triangle t is the face avoiding
// puncture t. Edges are grouped into three opposite pairs (axes).

#include "charcoords/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charcoords {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };
using Color = Axis;

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};
inline constexpr int kPunctures = 4;
inline constexpr int kEdges = 6;
inline constexpr int kTriangles = 4;

inline int index(Axis a) { return static_cast<int>(a); }

// 'X', 'Y', 'Z'
char color_letter(Color c);
// "Sx", "Sy", "Sz"
std::string switch_name(Axis a);
Axis parse_switch_name(std::string_view s);

enum class Edge : std::uint8_t { E12 = 0, E13, E14, E23, E24, E34 };

inline constexpr std::array<Edge, 6> kAllEdges{Edge::E12, Edge::E13, Edge::E14,
                                               Edge::E23, Edge::E24, Edge::E34};

inline int index(Edge e) { return static_cast<int>(e); }

std::pair<int, int> endpoints(Edge e);
Edge edge_between(int a, int b);
Axis edge_axis(Edge e);
std::array<Edge, 2> axis_edges(Axis a);
// The two triangles containing e, in increasing label order.
std::array<int, 2> triangles_of(Edge e);
bool has_edge(int triangle, Edge e);
bool has_vertex(Edge e, int puncture);

std::string edge_name(Edge e);     // "e12"
Edge parse_edge_name(std::string_view s);
std::string triangle_name(int t);  // "t1"
int parse_triangle_name(std::string_view s);

// Reduced slope p/q: gcd 1, q > 0, or exactly 1/0.
class Slope {
public:
    Slope() : p_(1), q_(0) {}
    Slope(const Integer& p, const Integer& q);
    Slope(long p, long q) : Slope(Integer(p), Integer(q)) {}

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    Integer p_, q_;
};

std::string to_string(const Slope& s);
Slope parse_slope(std::string_view text);
Color slope_color(const Slope& s);

using SwitchWord = std::vector<Axis>;

// Cancels adjacent equal letters until none remain.
SwitchWord reduce(SwitchWord w);
std::string to_json_string(const SwitchWord& w);

// Reduced word from the base triangulation to the first triangulation in
// which s is distinguished.
SwitchWord farey_path(const Slope& s);

struct TwistLetter {
    Axis axis;
    bool inverse = false;
    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};
using MappingClassWord = std::vector<TwistLetter>;

TwistLetter parse_twist(std::string_view s); // "DX", "DY^-1"
std::string twist_name(const TwistLetter& t);
SwitchWord expand_mapping_class(const MappingClassWord& w);

// A labelled tetrahedral triangulation. The labelled complex is always the
// same; what changes is the orientation (odd() flips every face) and which
// slopes are distinguished.
class TetraTriangulation {
public:
    static TetraTriangulation base();

    bool odd() const { return odd_; }
    // Vertex order of face t as induced by the orientation.
    std::array<int, 3> vertex_cycle(int t) const;
    // Edges of t in boundary order: (ab, bc, ca) for vertex cycle (a, b, c).
    std::array<Edge, 3> edge_cycle(int t) const;
    Edge next_edge(int t, Edge e) const;

    const Slope& slope(Axis a) const { return slopes_[index(a)]; }
    const std::array<Slope, 3>& slopes() const { return slopes_; }

    TetraTriangulation switched(Axis a) const;

    friend bool operator==(const TetraTriangulation&, const TetraTriangulation&) = default;

private:
    bool odd_ = false;
    std::array<Slope, 3> slopes_{Slope(1, 0), Slope(0, 1), Slope(1, 1)};
};

TetraTriangulation neighbors(const TetraTriangulation& t, Axis a);

// The slope made distinguished by switching at axis a.
Slope switched_slope(const TetraTriangulation& t, Axis a);

struct SlopeAtDepth {
    Slope slope;
    SwitchWord path;
};

// All slopes of depth <= d in breadth-first order: the three base slopes,
// then one new slope per tree vertex. Exactly 3 * 2^d entries.
std::vector<SlopeAtDepth> slopes_to_depth(int d);

} // namespace charcoords
