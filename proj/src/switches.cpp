#include "charcoords/switches.hpp"

#include <ostream>

namespace charcoords {

std::optional<SwitchOutcome> diagonal_switch(const QuadState& q) {
    Rational p13 = q.e1 * q.e3;
    Rational p24 = q.e2 * q.e4;
    if (q.eps1 == q.eps2)
        return SwitchOutcome{(p13 + p24) / q.diagonal, q.eps1, q.eps2};
    if (p13 == p24)
        return std::nullopt;
    if (p13 < p24)
        return SwitchOutcome{(p24 - p13) / q.diagonal, q.eps1, q.eps2};
    return SwitchOutcome{(p13 - p24) / q.diagonal, q.eps2, q.eps1};
}

namespace {

struct EdgeSwitch {
    Edge replacement;
    int new1, new2; // labels of t1', t2'
    QuadState quad;
};

EdgeSwitch quad_around(const LengthsCoord& c, Edge e) {
    auto [t1, t2] = triangles_of(e);
    auto [a, b] = endpoints(e);
    // The new diagonal joins the two corners off e.
    int u = -1, w = -1;
    for (int v = 0; v < kPunctures; ++v) {
        if (v == a || v == b)
            continue;
        (u < 0 ? u : w) = v;
    }
    Edge fresh = edge_between(u, w);
    auto [n1, n2] = triangles_of(fresh);

    auto side = [&](int old_t, int new_t) {
        for (Edge s : kAllEdges)
            if (s != e && s != fresh && has_edge(old_t, s) && has_edge(new_t, s))
                return s;
        return e; // unreachable for a tetrahedron
    };
    EdgeSwitch sw{fresh, n1, n2, {}};
    sw.quad.diagonal = c.length(e);
    sw.quad.e1 = c.length(side(t1, n1));
    sw.quad.e2 = c.length(side(t1, n2));
    sw.quad.e3 = c.length(side(t2, n2));
    sw.quad.e4 = c.length(side(t2, n1));
    sw.quad.eps1 = c.eps[t1];
    sw.quad.eps2 = c.eps[t2];
    return sw;
}

} // namespace

SwitchResult simultaneous_switch(const LengthsCoord& c, Axis a) {
    LengthsCoord out = c;
    for (Edge e : axis_edges(a)) {
        EdgeSwitch sw = quad_around(c, e);
        std::optional<SwitchOutcome> r = diagonal_switch(sw.quad);
        if (!r)
            return NotAdmissible{a, 0};
        out.length(sw.replacement) = r->diagonal;
        out.eps[sw.new1] = r->eps1;
        out.eps[sw.new2] = r->eps2;
    }
    out.tri = c.tri.switched(a);
    return out;
}

SwitchResult apply_word(const LengthsCoord& c, const SwitchWord& w) {
    LengthsCoord cur = c;
    for (std::size_t i = 0; i < w.size(); ++i) {
        SwitchResult r = simultaneous_switch(cur, w[i]);
        if (!admissible(r))
            return NotAdmissible{w[i], i};
        cur = std::move(std::get<LengthsCoord>(r));
    }
    return cur;
}

std::optional<Axis> anti_tri_axis(const PairTriple& t) {
    for (Axis a : kAxes) {
        const Rational& big = t[a];
        const Rational& u = t[static_cast<Axis>((index(a) + 1) % 3)];
        const Rational& v = t[static_cast<Axis>((index(a) + 2) % 3)];
        if (big > u + v)
            return a;
    }
    return std::nullopt;
}

bool anti_tri_check(const PairTriple& t) { return anti_tri_axis(t).has_value(); }

namespace {

// sqrt(a) <= sqrt(b) + sqrt(c)
bool root_le_sum(const Rational& a, const Rational& b, const Rational& c) {
    Rational d = a - b - c;
    return d <= 0 || d * d <= 4 * b * c;
}

} // namespace

bool tri_check(const PairTriple& t) {
    return root_le_sum(t.x, t.y, t.z) && root_le_sum(t.y, t.x, t.z) && root_le_sum(t.z, t.x, t.y);
}

void write_switch_csv(std::ostream& os, const LengthsCoord& c, const SwitchWord& w) {
    os << "step,axis,x,y,z\n";
    auto row = [&](std::size_t step, const std::string& axis, const LengthsCoord& k) {
        PairTriple p = pair_quantities(k);
        os << step << ',' << axis << ',' << to_string(p.x) << ',' << to_string(p.y) << ','
           << to_string(p.z) << '\n';
    };
    row(0, "", c);
    LengthsCoord cur = c;
    for (std::size_t i = 0; i < w.size(); ++i) {
        SwitchResult r = simultaneous_switch(cur, w[i]);
        if (!admissible(r)) {
            os << i + 1 << ',' << switch_name(w[i]) << ",not admissible,,\n";
            return;
        }
        cur = std::get<LengthsCoord>(r);
        row(i + 1, switch_name(w[i]), cur);
    }
}

} // namespace charcoords
