#include "charcoords/coords.hpp"

#include "charcoords/errors.hpp"

namespace charcoords {

LengthsCoord make_coord(const std::array<Rational, 6>& lambda, const std::array<int, 4>& eps,
                        const TetraTriangulation& tri) {
    for (Edge e : kAllEdges)
        if (lambda[index(e)] <= 0)
            throw InputError("lambda(" + edge_name(e) + ") must be positive");
    for (int t = 0; t < kTriangles; ++t)
        if (eps[t] != 1 && eps[t] != -1)
            throw InputError("eps(" + triangle_name(t) + ") must be +1 or -1");
    return LengthsCoord{lambda, eps, tri};
}

std::array<int, 4> signs_with_negative(std::initializer_list<int> negative) {
    std::array<int, 4> s{1, 1, 1, 1};
    for (int t : negative)
        s.at(t) = -1;
    return s;
}

int euler_class(const LengthsCoord& c) {
    return (c.eps[0] + c.eps[1] + c.eps[2] + c.eps[3]) / 2;
}

PairTriple pair_quantities(const LengthsCoord& c) {
    PairTriple t;
    for (Axis a : kAxes) {
        auto [e, f] = axis_edges(a);
        t[a] = c.length(e) * c.length(f);
    }
    return t;
}

SimplexPoint normalize(const PairTriple& t) {
    Rational s = t.x + t.y + t.z;
    return {t.x / s, t.y / s, t.z / s};
}

SimplexPoint simplex_point(const LengthsCoord& c) { return normalize(pair_quantities(c)); }

LengthsCoord rescale(const LengthsCoord& c, const std::array<Rational, 4>& mu) {
    for (const Rational& m : mu)
        if (m <= 0)
            throw InputError("rescale factors must be positive");
    LengthsCoord out = c;
    for (Edge e : kAllEdges) {
        auto [i, j] = endpoints(e);
        out.length(e) *= mu[i] * mu[j];
    }
    return out;
}

LengthsCoord witness_embedding(const PairTriple& t, const std::array<int, 4>& eps) {
    std::array<Rational, 6> lambda;
    lambda.fill(Rational(1));
    lambda[index(Edge::E12)] = t.x;
    lambda[index(Edge::E13)] = t.y;
    lambda[index(Edge::E14)] = t.z;
    return make_coord(lambda, eps);
}

std::optional<Axis> special_axis(const std::array<int, 4>& eps) {
    for (Axis a : kAxes) {
        bool same = true;
        for (Edge e : axis_edges(a)) {
            auto [s, t] = triangles_of(e);
            same = same && eps[s] == eps[t];
        }
        if (same)
            return a;
    }
    return std::nullopt;
}

Rational peripheral_entry(const LengthsCoord& c, int v) {
    if (v < 0 || v >= kPunctures)
        throw InputError("puncture index out of range");
    PairTriple p = pair_quantities(c);
    Rational sum = 0;
    // Triangle t_k around v contributes the pair through the edge v--k.
    for (int k = 0; k < kPunctures; ++k) {
        if (k == v)
            continue;
        sum += c.eps[k] * p[edge_axis(edge_between(v, k))];
    }
    return sum;
}

std::array<int, 4> puncture_signs(const LengthsCoord& c) {
    std::array<int, 4> s{};
    for (int v = 0; v < kPunctures; ++v) {
        int sg = sign(peripheral_entry(c, v));
        if (sg == 0)
            throw NotTypePreserving(v);
        s[v] = sg;
    }
    return s;
}

std::string sign_string(const std::array<int, 4>& s) {
    std::string out;
    for (int x : s)
        out += x > 0 ? '+' : '-';
    return out;
}

Component classify_component(const LengthsCoord& c) {
    Component comp;
    comp.euler = euler_class(c);
    comp.signs = puncture_signs(c);
    std::string minus, plus;
    for (int v = 0; v < kPunctures; ++v)
        (comp.signs[v] < 0 ? minus : plus) += std::to_string(v + 1);

    auto fail = [&] {
        throw InternalInconsistency("sign pattern " + sign_string(comp.signs) +
                                    " is forbidden for Euler class " + std::to_string(comp.euler));
    };
    switch (comp.euler) {
    case 2:
        if (!minus.empty()) fail();
        comp.label = "M2_s+";
        break;
    case -2:
        if (!plus.empty()) fail();
        comp.label = "M-2_s-";
        break;
    case 1:
        if (minus.size() > 1) fail();
        comp.label = "M1_s" + (minus.empty() ? std::string("+") : minus);
        break;
    case -1:
        if (plus.size() > 1) fail();
        comp.label = "M-1_s-" + plus;
        break;
    default:
        if (minus.size() != 2) fail();
        comp.label = "M0_s" + minus;
        break;
    }
    return comp;
}

nlohmann::json to_json(const LengthsCoord& c) {
    nlohmann::json lam = nlohmann::json::object();
    for (Edge e : kAllEdges)
        lam[edge_name(e)] = to_string(c.length(e));
    nlohmann::json eps = nlohmann::json::object();
    for (int t = 0; t < kTriangles; ++t)
        eps[triangle_name(t)] = c.eps[t];
    return {{"lambda", lam}, {"eps", eps}};
}

LengthsCoord coord_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("eps"))
        throw InputError("coordinate JSON needs \"lambda\" and \"eps\"");
    const auto& lam = j.at("lambda");
    const auto& eps = j.at("eps");
    if (!lam.is_object() || !eps.is_object() || lam.size() != 6 || eps.size() != 4)
        throw InputError("coordinate JSON needs six lambdas and four signs");
    std::array<Rational, 6> lambda;
    std::array<int, 4> signs{};
    for (auto it = lam.begin(); it != lam.end(); ++it) {
        Edge e = parse_edge_name(it.key());
        if (it->is_string())
            lambda[index(e)] = parse_rational(it->get<std::string>());
        else if (it->is_number_integer())
            lambda[index(e)] = Rational(it->get<long>());
        else
            throw InputError("lambda(" + it.key() + ") must be a \"p/q\" string");
    }
    for (auto it = eps.begin(); it != eps.end(); ++it) {
        int t = parse_triangle_name(it.key());
        if (!it->is_number_integer())
            throw InputError("eps(" + it.key() + ") must be +1 or -1");
        signs[t] = it->get<int>();
    }
    return make_coord(lambda, signs);
}

std::string to_string(const PairTriple& t) {
    return "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) + ")";
}

} // namespace charcoords
