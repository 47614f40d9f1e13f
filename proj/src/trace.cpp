#include "charcoords/trace.hpp"

#include "charcoords/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <ostream>

namespace charcoords {

Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
}

TurnStep make_step(const TetraTriangulation& tri, Edge enter, int t, Edge exit) {
    if (t < 0 || t >= kTriangles)
        throw InvalidStep("triangle index out of range");
    if (!has_edge(t, enter) || !has_edge(t, exit) || enter == exit)
        throw InvalidStep(edge_name(enter) + " -> " + edge_name(exit) + " is not a passage through " +
                          triangle_name(t));
    Edge third = enter;
    for (Edge e : tri.edge_cycle(t))
        if (e != enter && e != exit)
            third = e;
    Turn turn = tri.next_edge(t, enter) == exit ? Turn::Left : Turn::Right;
    return {enter, t, exit, third, turn};
}

Mat2 turn_matrix(Turn turn, const Rational& l_enter, const Rational& l_exit,
                 const Rational& l_third, int eps) {
    if (turn == Turn::Left)
        return {l_enter, eps * l_third, 0, l_exit};
    return {l_exit, 0, eps * l_third, l_enter};
}

namespace {

void validate(const TetraTriangulation& tri, const TurnStep& s) {
    TurnStep expect = make_step(tri, s.enter, s.triangle, s.exit);
    if (expect.third != s.third || expect.turn != s.turn)
        throw InvalidStep("turn data disagrees with the triangulation in " + triangle_name(s.triangle));
}

} // namespace

Mat2 turn_matrix(const TurnStep& s, const LengthsCoord& c) {
    validate(c.tri, s);
    return turn_matrix(s.turn, c.length(s.enter), c.length(s.exit), c.length(s.third),
                       c.eps[s.triangle]);
}

void check_closed(const CrossingSequence& seq) {
    if (seq.empty())
        throw NotClosed("empty crossing sequence");
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const TurnStep& cur = seq[k];
        const TurnStep& nxt = seq[(k + 1) % seq.size()];
        if (cur.exit != nxt.enter || cur.triangle == nxt.triangle)
            throw NotClosed("step " + std::to_string(k) + " does not lead into step " +
                            std::to_string((k + 1) % seq.size()));
    }
}

Mat2 turn_product(const LengthsCoord& c, const CrossingSequence& seq) {
    Mat2 p;
    for (const TurnStep& s : seq)
        p = p * turn_matrix(s, c);
    return p;
}

Rational curve_trace(const LengthsCoord& c, const CrossingSequence& seq) {
    for (const TurnStep& s : seq)
        validate(c.tri, s);
    check_closed(seq);

    // Each turn matrix is homogeneous of degree one in the lambdas, so the
    // ratio is unchanged by clearing denominators first.
    Integer scale = 1;
    for (const Rational& l : c.lambda)
        scale = lcm(scale, l.get_den());
    std::array<Integer, 6> len;
    for (int i = 0; i < kEdges; ++i)
        len[i] = c.lambda[i].get_num() * (scale / c.lambda[i].get_den());

    Integer a = 1, b = 0, cc = 0, d = 1, den = 1;
    Integer na, nb, nc, nd;
    for (const TurnStep& s : seq) {
        const Integer& in = len[index(s.enter)];
        const Integer& out = len[index(s.exit)];
        Integer th = c.eps[s.triangle] * len[index(s.third)];
        if (s.turn == Turn::Left) {
            // [[in, th], [0, out]]
            na = a * in;
            nb = a * th + b * out;
            nc = cc * in;
            nd = cc * th + d * out;
        } else {
            // [[out, 0], [th, in]]
            na = a * out + b * th;
            nb = b * in;
            nc = cc * out + d * th;
            nd = d * in;
        }
        std::swap(a, na);
        std::swap(b, nb);
        std::swap(cc, nc);
        std::swap(d, nd);
        den *= in;
    }
    Rational r(Integer(abs(a + d)), den);
    r.canonicalize();
    return r;
}

TraceClass classify_trace(const Rational& t) {
    if (t > 2) return TraceClass::Hyperbolic;
    if (t == 2) return TraceClass::Parabolic;
    return TraceClass::Elliptic;
}

const char* class_name(TraceClass k) {
    switch (k) {
    case TraceClass::Elliptic: return "elliptic";
    case TraceClass::Parabolic: return "parabolic";
    default: return "hyperbolic";
    }
}

namespace {

int other_triangle(Edge e, int t) {
    auto [s, u] = triangles_of(e);
    return s == t ? u : s;
}

} // namespace

CrossingSequence distinguished_sequence(const TetraTriangulation& tri, Axis a) {
    Edge start = *std::find_if(kAllEdges.begin(), kAllEdges.end(),
                               [&](Edge e) { return edge_axis(e) != a; });
    CrossingSequence seq;
    Edge e = start;
    int t = triangles_of(start)[0];
    for (int k = 0; k < 4; ++k) {
        Edge out = e;
        for (Edge f : tri.edge_cycle(t))
            if (f != e && edge_axis(f) != a)
                out = f;
        seq.push_back(make_step(tri, e, t, out));
        t = other_triangle(out, t);
        e = out;
    }
    if (e != start)
        throw InternalInconsistency("distinguished curve did not close");
    return seq;
}

CrossingSequence peripheral_sequence(const TetraTriangulation& tri, int v) {
    if (v < 0 || v >= kPunctures)
        throw InputError("puncture index out of range");
    Edge start = *std::find_if(kAllEdges.begin(), kAllEdges.end(),
                               [&](Edge e) { return has_vertex(e, v); });
    CrossingSequence seq;
    Edge e = start;
    int t = triangles_of(start)[0];
    for (int k = 0; k < 3; ++k) {
        Edge out = e;
        for (Edge f : tri.edge_cycle(t))
            if (f != e && has_vertex(f, v))
                out = f;
        seq.push_back(make_step(tri, e, t, out));
        t = other_triangle(out, t);
        e = out;
    }
    if (seq.front().turn == Turn::Right) {
        CrossingSequence rev;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
            rev.push_back(make_step(tri, it->exit, it->triangle, it->enter));
        seq = std::move(rev);
    }
    return seq;
}

Rational distinguished_trace(const LengthsCoord& c, Axis a) {
    return curve_trace(c, distinguished_sequence(c.tri, a));
}

namespace {

Integer floor_of(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f;
}

// Lattice point (a, b) covers puncture (a mod 2) + 2 (b mod 2).
int puncture_of(const Integer& a, const Integer& b) {
    return (mpz_odd_p(a.get_mpz_t()) ? 1 : 0) + (mpz_odd_p(b.get_mpz_t()) ? 2 : 0);
}

Edge lattice_edge(const Integer& a0, const Integer& b0, const Integer& a1, const Integer& b1) {
    return edge_between(puncture_of(a0, b0), puncture_of(a1, b1));
}

} // namespace

CrossingSequence base_slope_sequence(const Slope& s) {
    // The base triangulation lifts to the unit-square lattice cut by
    // diagonals of slope one; the curve of slope p/q lifts to a line with
    // direction (p, q). Translation by 2(p, q) closes it up.
    const Rational dp(s.p()), dq(s.q());
    Rational wx = 0, wy = 0;
    if (s.q() != 0)
        wx = Rational(1, 2) / dq; // keeps the line off lattice points
    else
        wy = Rational(-1, 2) / dp;

    struct Crossing {
        Rational t;
        int family; // 0: y = n, 1: x = n, 2: x - y = n
        Integer n;
    };
    std::vector<Crossing> hits;
    for (int fam = 0; fam < 3; ++fam) {
        Rational v0 = fam == 0 ? wy : fam == 1 ? wx : Rational(wx - wy);
        Rational dv = fam == 0 ? dq : fam == 1 ? dp : Rational(dp - dq);
        if (dv == 0)
            continue;
        Rational v2 = v0 + 2 * dv;
        Integer lo = floor_of(std::min(v0, v2)) - 1;
        Integer hi = floor_of(std::max(v0, v2)) + 1;
        for (Integer n = lo; n <= hi; ++n) {
            Rational t = (Rational(n) - v0) / dv;
            if (t > 0 && t <= 2)
                hits.push_back({t, fam, n});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });

    auto edge_of = [&](const Crossing& h) {
        Rational x = wx + h.t * dp, y = wy + h.t * dq;
        if (h.family == 0) {
            Integer a = floor_of(x);
            return lattice_edge(a, h.n, Integer(a + 1), h.n);
        }
        if (h.family == 1) {
            Integer b = floor_of(y);
            return lattice_edge(h.n, b, h.n, Integer(b + 1));
        }
        Integer a = floor_of(x);
        return lattice_edge(a, Integer(a - h.n), Integer(a + 1), Integer(a - h.n + 1));
    };

    const TetraTriangulation base = TetraTriangulation::base();
    CrossingSequence seq;
    const std::size_t n = hits.size();
    for (std::size_t k = 0; k < n; ++k) {
        Rational t0 = hits[k].t;
        Rational t1 = k + 1 < n ? hits[k + 1].t : Rational(hits[0].t + 2);
        Rational tm = (t0 + t1) / 2;
        Rational x = wx + tm * dp, y = wy + tm * dq;
        Integer i = floor_of(x), j = floor_of(y);
        // Lower-right half of the square misses the corner (i, j+1),
        // upper-left half misses (i+1, j).
        int tri = (x - i > y - j) ? puncture_of(i, Integer(j + 1)) : puncture_of(Integer(i + 1), j);
        seq.push_back(make_step(base, edge_of(hits[k]), tri, edge_of(hits[(k + 1) % n])));
    }
    return seq;
}

SlopeTrace slope_trace(const LengthsCoord& c, const Slope& s) {
    if (!(c.tri == TetraTriangulation::base()))
        throw InputError("slope_trace needs a coordinate on the base triangulation");
    SwitchWord path = farey_path(s);
    LengthsCoord cur = c;
    for (std::size_t i = 0; i < path.size(); ++i) {
        SwitchResult r = simultaneous_switch(cur, path[i]);
        if (!admissible(r))
            return ParabolicWitness{switched_slope(cur.tri, path[i]), path[i], i};
        cur = std::move(std::get<LengthsCoord>(r));
    }
    Color col = slope_color(s);
    if (!(cur.tri.slope(col) == s))
        throw InternalInconsistency("farey_path did not reach " + to_string(s));
    return distinguished_trace(cur, col);
}

namespace {

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<512>>;

BigFloat to_big(const Rational& r) {
    return BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str());
}

} // namespace

FloatMat2 holonomy_oracle_matrix(const LengthsCoord& c, const CrossingSequence& seq) {
    check_closed(seq);
    std::array<BigFloat, 6> len;
    for (int i = 0; i < kEdges; ++i)
        len[i] = to_big(c.lambda[i]);
    auto L = [&](Edge e) -> const BigFloat& { return len[index(e)]; };

    BigFloat a = 1, b = 0, cc = 0, d = 1;
    for (const TurnStep& s : seq) {
        validate(c.tri, s);
        // Shear across the entering edge.
        auto [t1, t2] = triangles_of(s.enter);
        Edge e1 = c.tri.next_edge(t1, s.enter), e2 = c.tri.next_edge(t1, e1);
        Edge e3 = c.tri.next_edge(t2, s.enter), e4 = c.tri.next_edge(t2, e3);
        BigFloat root = sqrt(L(e2) * L(e4) / (L(e1) * L(e3)));
        a *= root;
        cc *= root;
        b /= root;
        d /= root;
        BigFloat eps = c.eps[s.triangle];
        if (s.turn == Turn::Left) {
            b += a * eps;
            d += cc * eps;
        } else {
            a += b * eps;
            cc += d * eps;
        }
    }
    return {static_cast<long double>(a), static_cast<long double>(b), static_cast<long double>(cc),
            static_cast<long double>(d)};
}

double holonomy_oracle(const LengthsCoord& c, const CrossingSequence& seq) {
    FloatMat2 m = holonomy_oracle_matrix(c, seq);
    return static_cast<double>(std::fabs(m.a + m.d));
}

std::vector<SlopeCurve> base_slope_curves(int depth) {
    std::vector<SlopeCurve> out;
    for (const SlopeAtDepth& s : slopes_to_depth(depth))
        out.push_back({s.slope, base_slope_sequence(s.slope)});
    return out;
}

DominanceReport dominance_check(const LengthsCoord& c, const std::vector<SlopeCurve>& curves) {
    int e = euler_class(c);
    if (e == 2 || e == -2)
        throw InputError("dominance needs Euler class other than +-2");
    if (!(c.tri == TetraTriangulation::base()))
        throw InputError("dominance needs a coordinate on the base triangulation");
    LengthsCoord positive = c;
    positive.eps = {1, 1, 1, 1};
    DominanceReport rep;
    for (const SlopeCurve& sc : curves) {
        DominanceRow row{sc.slope, curve_trace(c, sc.seq), curve_trace(positive, sc.seq), false, false};
        for (const TurnStep& s : sc.seq)
            row.crosses_negative = row.crosses_negative || c.eps[s.triangle] < 0;
        row.holds = row.crosses_negative ? row.trace < row.positive_trace
                                         : row.trace <= row.positive_trace;
        rep.ok = rep.ok && row.holds;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

DominanceReport dominance_check(const LengthsCoord& c, int depth) {
    return dominance_check(c, base_slope_curves(depth));
}

std::vector<TraceRow> traces_to_depth(const LengthsCoord& c, int depth) {
    std::vector<TraceRow> rows;
    for (const SlopeAtDepth& s : slopes_to_depth(depth)) {
        SlopeTrace t = slope_trace(c, s.slope);
        if (auto* v = std::get_if<Rational>(&t)) {
            rows.push_back({s.slope, *v, std::nullopt});
        } else {
            Rational direct = curve_trace(c, base_slope_sequence(s.slope));
            rows.push_back({s.slope, direct, std::get<ParabolicWitness>(t)});
        }
    }
    return rows;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows, bool with_float) {
    os << "slope,abs_trace,class" << (with_float ? ",abs_trace_float" : "") << '\n';
    for (const TraceRow& r : rows) {
        os << to_string(r.slope) << ',' << to_string(r.abs_trace) << ','
           << class_name(classify_trace(r.abs_trace));
        if (with_float) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", to_double(r.abs_trace));
            os << ',' << buf;
        }
        os << '\n';
    }
}

} // namespace charcoords
