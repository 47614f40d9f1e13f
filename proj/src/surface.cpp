#include "charcoords/surface.hpp"

#include "charcoords/errors.hpp"

#include <deque>

namespace charcoords {

namespace {

constexpr std::array<std::pair<int, int>, 6> kEndpoints{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Face orientations of the even triangulation (boundary of the simplex 1234).
constexpr std::array<std::array<int, 3>, 4> kBaseCycle{
    {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};

int sgn_int(const Integer& z) { return sgn(z); }

// Cyclic order of three points of the projective line, as +-1.
int cyclic_order(const Slope& a, const Slope& b, const Slope& c) {
    auto det = [](const Slope& u, const Slope& v) {
        return Integer(u.p() * v.q() - u.q() * v.p());
    };
    return sgn_int(det(a, b)) * sgn_int(det(b, c)) * sgn_int(det(c, a));
}

} // namespace

char color_letter(Color c) { return "XYZ"[index(c)]; }

std::string switch_name(Axis a) { return std::string("S") + "xyz"[index(a)]; }

Axis parse_switch_name(std::string_view s) {
    if (s == "Sx") return Axis::X;
    if (s == "Sy") return Axis::Y;
    if (s == "Sz") return Axis::Z;
    throw InputError("unknown switch '" + std::string(s) + "'");
}

std::pair<int, int> endpoints(Edge e) { return kEndpoints[index(e)]; }

Edge edge_between(int a, int b) {
    if (a > b)
        std::swap(a, b);
    for (Edge e : kAllEdges)
        if (kEndpoints[index(e)] == std::pair{a, b})
            return e;
    throw InputError("no edge between v" + std::to_string(a + 1) + " and v" + std::to_string(b + 1));
}

Axis edge_axis(Edge e) {
    switch (e) {
    case Edge::E12:
    case Edge::E34: return Axis::X;
    case Edge::E13:
    case Edge::E24: return Axis::Y;
    default: return Axis::Z;
    }
}

std::array<Edge, 2> axis_edges(Axis a) {
    switch (a) {
    case Axis::X: return {Edge::E12, Edge::E34};
    case Axis::Y: return {Edge::E13, Edge::E24};
    default: return {Edge::E14, Edge::E23};
    }
}

bool has_vertex(Edge e, int v) {
    auto [a, b] = endpoints(e);
    return a == v || b == v;
}

bool has_edge(int t, Edge e) { return !has_vertex(e, t); }

std::array<int, 2> triangles_of(Edge e) {
    std::array<int, 2> out{};
    int n = 0;
    for (int t = 0; t < kTriangles; ++t)
        if (has_edge(t, e))
            out[n++] = t;
    return out;
}

std::string edge_name(Edge e) {
    auto [a, b] = endpoints(e);
    return "e" + std::to_string(a + 1) + std::to_string(b + 1);
}

Edge parse_edge_name(std::string_view s) {
    for (Edge e : kAllEdges)
        if (edge_name(e) == s)
            return e;
    throw InputError("unknown edge '" + std::string(s) + "'");
}

std::string triangle_name(int t) { return "t" + std::to_string(t + 1); }

int parse_triangle_name(std::string_view s) {
    for (int t = 0; t < kTriangles; ++t)
        if (triangle_name(t) == s)
            return t;
    throw InputError("unknown triangle '" + std::string(s) + "'");
}

Slope::Slope(const Integer& p, const Integer& q) : p_(p), q_(q) {
    if (p_ == 0 && q_ == 0)
        throw InputError("slope 0/0");
    Integer g = gcd(p_, q_);
    p_ /= g;
    q_ /= g;
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

std::string to_string(const Slope& s) { return s.p().get_str() + "/" + s.q().get_str(); }

Slope parse_slope(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw InputError("slope must be p/q: '" + std::string(text) + "'");
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (num.get_den() != 1 || den.get_den() != 1)
        throw InputError("slope must be p/q with integers: '" + std::string(text) + "'");
    Integer p = num.get_num(), q = den.get_num();
    if (gcd(p, q) != 1)
        throw InputError("slope not reduced: '" + std::string(text) + "'");
    return Slope(p, q);
}

Color slope_color(const Slope& s) {
    bool p_odd = mpz_odd_p(s.p().get_mpz_t());
    bool q_odd = mpz_odd_p(s.q().get_mpz_t());
    if (p_odd && !q_odd) return Axis::X;
    if (!p_odd && q_odd) return Axis::Y;
    return Axis::Z;
}

SwitchWord reduce(SwitchWord w) {
    SwitchWord out;
    out.reserve(w.size());
    for (Axis a : w) {
        if (!out.empty() && out.back() == a)
            out.pop_back();
        else
            out.push_back(a);
    }
    return out;
}

std::string to_json_string(const SwitchWord& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += "\"" + switch_name(w[i]) + "\"";
    }
    return s + "]";
}

Slope switched_slope(const TetraTriangulation& t, Axis a) {
    const Slope& u = t.slope(static_cast<Axis>((index(a) + 1) % 3));
    const Slope& v = t.slope(static_cast<Axis>((index(a) + 2) % 3));
    Slope sum(Integer(u.p() + v.p()), Integer(u.q() + v.q()));
    if (!(sum == t.slope(a)))
        return sum;
    return Slope(Integer(u.p() - v.p()), Integer(u.q() - v.q()));
}

SwitchWord farey_path(const Slope& s) {
    TetraTriangulation t = TetraTriangulation::base();
    SwitchWord word;
    auto distinguished = [&] {
        for (Axis a : kAxes)
            if (t.slope(a) == s)
                return true;
        return false;
    };
    while (!distinguished()) {
        // s lies beyond exactly one side of the current Farey triangle.
        bool moved = false;
        for (Axis a : kAxes) {
            const Slope& u = t.slope(static_cast<Axis>((index(a) + 1) % 3));
            const Slope& v = t.slope(static_cast<Axis>((index(a) + 2) % 3));
            if (cyclic_order(u, s, v) != cyclic_order(u, t.slope(a), v)) {
                t = t.switched(a);
                word.push_back(a);
                moved = true;
                break;
            }
        }
        if (!moved)
            throw InternalInconsistency("farey_path: no side separates " + to_string(s));
    }
    return word;
}

TwistLetter parse_twist(std::string_view s) {
    TwistLetter t{};
    std::string_view body = s;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
        t.inverse = true;
        body.remove_suffix(3);
    }
    if (body == "DX") t.axis = Axis::X;
    else if (body == "DY") t.axis = Axis::Y;
    else if (body == "DZ") t.axis = Axis::Z;
    else throw InputError("unknown twist '" + std::string(s) + "'");
    return t;
}

std::string twist_name(const TwistLetter& t) {
    return std::string("D") + color_letter(t.axis) + (t.inverse ? "^-1" : "");
}

SwitchWord expand_mapping_class(const MappingClassWord& w) {
    SwitchWord out;
    for (const TwistLetter& t : w) {
        // The twist about the curve of color A switches the other two axes
        // in cyclic order.
        Axis first = static_cast<Axis>((index(t.axis) + 1) % 3);
        Axis second = static_cast<Axis>((index(t.axis) + 2) % 3);
        if (t.inverse)
            std::swap(first, second);
        out.push_back(first);
        out.push_back(second);
    }
    return reduce(std::move(out));
}

TetraTriangulation TetraTriangulation::base() { return TetraTriangulation{}; }

std::array<int, 3> TetraTriangulation::vertex_cycle(int t) const {
    auto c = kBaseCycle[t];
    if (odd_)
        std::swap(c[1], c[2]);
    return c;
}

std::array<Edge, 3> TetraTriangulation::edge_cycle(int t) const {
    auto [a, b, c] = vertex_cycle(t);
    return {edge_between(a, b), edge_between(b, c), edge_between(c, a)};
}

Edge TetraTriangulation::next_edge(int t, Edge e) const {
    auto cyc = edge_cycle(t);
    for (int i = 0; i < 3; ++i)
        if (cyc[i] == e)
            return cyc[(i + 1) % 3];
    throw InvalidStep(edge_name(e) + " is not an edge of " + triangle_name(t));
}

TetraTriangulation TetraTriangulation::switched(Axis a) const {
    TetraTriangulation next = *this;
    next.slopes_[index(a)] = switched_slope(*this, a);
    next.odd_ = !odd_;
    return next;
}

TetraTriangulation neighbors(const TetraTriangulation& t, Axis a) { return t.switched(a); }

std::vector<SlopeAtDepth> slopes_to_depth(int d) {
    std::vector<SlopeAtDepth> out;
    TetraTriangulation base = TetraTriangulation::base();
    for (Axis a : kAxes)
        out.push_back({base.slope(a), {}});
    struct Node {
        TetraTriangulation tri;
        SwitchWord path;
    };
    std::deque<Node> frontier{{base, {}}};
    for (int depth = 1; depth <= d; ++depth) {
        std::deque<Node> next;
        for (const Node& n : frontier) {
            for (Axis a : kAxes) {
                if (!n.path.empty() && n.path.back() == a)
                    continue;
                Node child{n.tri.switched(a), n.path};
                child.path.push_back(a);
                out.push_back({child.tri.slope(a), child.path});
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace charcoords
