#include "charcoords/algorithms.hpp"

#include "charcoords/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdlib>
#include <future>
#include <random>
#include <sstream>

namespace charcoords {

std::string describe(const Witness& w) {
    std::ostringstream os;
    os << (w.kind == WitnessKind::Elliptic ? "elliptic" : "parabolic") << ' ' << color_letter(w.color)
       << " curve " << to_string(w.slope) << " |tr| = " << to_string(w.abs_trace);
    return os.str();
}

const char* case_name(ReductionCase c) {
    switch (c) {
    case ReductionCase::Case1: return "Case1";
    case ReductionCase::Case2: return "Case2";
    case ReductionCase::StopTri: return "Stop-tri";
    default: return "Stop-inadmissible";
    }
}

std::size_t default_max_steps() {
    if (const char* env = std::getenv("CHARCOORDS_MAX_STEPS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
        throw InputError("CHARCOORDS_MAX_STEPS must be a positive integer");
    }
    return 1000000;
}

namespace {

Axis next_axis(Axis a, int k) { return static_cast<Axis>((index(a) + k) % 3); }

double k_value(const PairTriple& s) {
    double a = std::sqrt(to_double(s.x)), b = std::sqrt(to_double(s.y)), c = std::sqrt(to_double(s.z));
    return std::max({a - b - c, b - a - c, c - a - b});
}

// First distinguished curve (X, Y, Z order) with |trace| <= 2.
std::optional<Witness> short_distinguished(const LengthsCoord& c) {
    for (Axis a : kAxes) {
        Rational t = distinguished_trace(c, a);
        if (t <= 2)
            return Witness{t < 2 ? WitnessKind::Elliptic : WitnessKind::Parabolic, c.tri.slope(a), a, t};
    }
    return std::nullopt;
}

Witness inadmissible_witness(const LengthsCoord& c, Axis a) {
    return Witness{WitnessKind::Parabolic, switched_slope(c.tri, a), a, Rational(2)};
}

} // namespace

ReductionResult trace_reduction(const LengthsCoord& c, std::optional<std::size_t> max_steps) {
    if (euler_class(c) != 0)
        throw InputError("trace reduction needs Euler class 0");
    std::optional<Axis> special = special_axis(c.eps);
    if (!special)
        throw InternalInconsistency("Euler class 0 without a special axis");
    puncture_signs(c);
    const std::size_t limit = max_steps ? *max_steps : default_max_steps();

    ReductionResult res{Witness{WitnessKind::Elliptic, Slope(), Axis::X, 0}, 0, {}, c};
    LengthsCoord cur = c;
    for (std::size_t n = 0;; ++n) {
        PairTriple p = pair_quantities(cur);
        SimplexPoint s = normalize(p);
        ReductionLogEntry entry{n, std::nullopt, p, s.x, s.y, s.z, k_value(s), ReductionCase::StopTri};

        std::optional<Axis> top;
        for (Axis a : kAxes)
            if (p[a] > p[next_axis(a, 1)] && p[a] > p[next_axis(a, 2)])
                top = a;

        if (tri_check(p) || !top) {
            std::optional<Witness> w = short_distinguished(cur);
            if (!w)
                throw InternalInconsistency("triangle inequality holds but no distinguished trace <= 2");
            res.log.push_back(entry);
            res.witness = *w;
            res.steps = n;
            res.final_coord = cur;
            return res;
        }
        if (n >= limit)
            throw MaxStepsExceeded(limit);

        entry.axis = top;
        entry.tag = *top == *special ? ReductionCase::Case1 : ReductionCase::Case2;
        SwitchResult r = simultaneous_switch(cur, *top);
        if (!admissible(r)) {
            entry.tag = ReductionCase::StopInadmissible;
            res.log.push_back(entry);
            res.witness = inadmissible_witness(cur, *top);
            res.steps = n;
            res.final_coord = cur;
            return res;
        }
        res.log.push_back(entry);
        cur = std::move(std::get<LengthsCoord>(r));
    }
}

namespace {

using Float256 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256>>;

Float256 to_f256(const Rational& r) {
    return Float256(r.get_num().get_str()) / Float256(r.get_den().get_str());
}

Float256 k_precise(const ReductionLogEntry& e) {
    Float256 a = sqrt(to_f256(e.a)), b = sqrt(to_f256(e.b)), c = sqrt(to_f256(e.c));
    Float256 k1 = a - b - c, k2 = b - a - c, k3 = c - a - b;
    return std::max({k1, k2, k3});
}

} // namespace

AuditResult reduction_monotonicity_audit(const std::vector<ReductionLogEntry>& log) {
    AuditResult out;
    for (std::size_t i = 0; i + 1 < log.size(); ++i) {
        const ReductionLogEntry& cur = log[i];
        if (cur.tag != ReductionCase::Case1 && cur.tag != ReductionCase::Case2)
            continue;
        Float256 k0 = k_precise(cur), k1 = k_precise(log[i + 1]);
        if (!(k1 < k0))
            out.failures.push_back("k did not decrease at n=" + std::to_string(cur.n));
        if (cur.tag == ReductionCase::Case1) {
            Rational m = std::min({cur.a, cur.b, cur.c});
            if (!(k0 - k1 > 2 * to_f256(m)))
                out.failures.push_back("Case1 gap below 2 min(a,b,c) at n=" + std::to_string(cur.n));
        }
    }
    out.ok = out.failures.empty();
    return out;
}

namespace {

struct SubtreeResult {
    std::vector<std::vector<VisitedTriangulation>> levels;
    std::optional<Witness> failure;
    std::size_t failure_level = 0;
    std::optional<std::pair<Rational, Slope>> best;
};

void offer_minimum(std::optional<std::pair<Rational, Slope>>& best, const LengthsCoord& c) {
    for (Axis a : kAxes) {
        Rational t = distinguished_trace(c, a);
        if (!best || t < best->first)
            best = std::pair{t, c.tri.slope(a)};
    }
}

// Breadth-first search below the child of the root reached by `first`.
SubtreeResult explore(const LengthsCoord& root, Axis first, int depth) {
    SubtreeResult res;
    struct Node {
        LengthsCoord coord;
        Axis last;
    };
    std::vector<Node> frontier;
    auto visit = [&](const LengthsCoord& parent, Axis a, std::size_t level,
                     std::vector<Node>& into) -> bool {
        SwitchResult r = simultaneous_switch(parent, a);
        if (!admissible(r)) {
            res.failure = inadmissible_witness(parent, a);
            res.failure_level = level;
            return false;
        }
        LengthsCoord& child = std::get<LengthsCoord>(r);
        PairTriple p = pair_quantities(child);
        if (!anti_tri_check(p)) {
            std::optional<Witness> w = short_distinguished(child);
            if (!w)
                throw InternalInconsistency("triangle inequality without a short distinguished curve");
            res.failure = w;
            res.failure_level = level;
            return false;
        }
        if (res.levels.size() <= level)
            res.levels.resize(level + 1);
        res.levels[level].push_back({child.tri.slopes(), p});
        offer_minimum(res.best, child);
        into.push_back({std::move(child), a});
        return true;
    };
    if (!visit(root, first, 0, frontier))
        return res;
    for (int level = 1; level < depth; ++level) {
        std::vector<Node> next;
        for (const Node& n : frontier)
            for (int k = 1; k <= 2; ++k)
                if (!visit(n.coord, next_axis(n.last, k), level, next))
                    return res;
        frontier = std::move(next);
    }
    return res;
}

} // namespace

CertifyResult certify_hyperbolic(const LengthsCoord& c, int depth, int jobs) {
    int e = euler_class(c);
    if (e != 1 && e != -1)
        throw InputError("certification needs Euler class +1 or -1");
    if (depth < 0)
        throw InputError("depth must be non-negative");
    puncture_signs(c);
    PairTriple p = pair_quantities(c);
    if (!anti_tri_check(p)) {
        std::optional<Witness> w = short_distinguished(c);
        if (!w)
            throw InternalInconsistency("triangle inequality without a short distinguished curve");
        return *w;
    }
    Certificate cert;
    cert.depth = depth;
    cert.base_anti_tri = true;
    cert.triangulations.push_back({c.tri.slopes(), p});
    std::optional<std::pair<Rational, Slope>> best;
    offer_minimum(best, c);

    std::vector<SubtreeResult> parts(3);
    if (depth > 0) {
        if (jobs > 1) {
            std::vector<std::future<SubtreeResult>> futs;
            for (Axis a : kAxes)
                futs.push_back(std::async(std::launch::async, explore, std::cref(c), a, depth));
            for (int i = 0; i < 3; ++i)
                parts[i] = futs[i].get();
        } else {
            for (Axis a : kAxes)
                parts[index(a)] = explore(c, a, depth);
        }
    }
    // Earliest failure in breadth-first order: lowest level, then subtree order.
    const SubtreeResult* failed = nullptr;
    for (const SubtreeResult& r : parts)
        if (r.failure && (!failed || r.failure_level < failed->failure_level))
            failed = &r;
    if (failed)
        return *failed->failure;

    for (int level = 0; level < depth; ++level)
        for (const SubtreeResult& r : parts)
            if (static_cast<std::size_t>(level) < r.levels.size())
                for (const VisitedTriangulation& v : r.levels[level])
                    cert.triangulations.push_back(v);
    for (const SubtreeResult& r : parts)
        if (r.best && r.best->first < best->first)
            best = r.best;
    cert.visited = cert.triangulations.size();
    cert.min_trace = best->first;
    cert.min_slope = best->second;
    return cert;
}

Sample sample_counterexample(std::uint64_t seed, int depth, const SampleOptions& opt) {
    std::mt19937_64 rng(seed);
    const std::array<int, 4> eps = signs_with_negative({0});
    for (std::size_t attempt = 0; attempt <= opt.max_retries; ++attempt) {
        PairTriple t;
        if (attempt == 0 && opt.first_candidate) {
            t = *opt.first_candidate;
        } else {
            t.y = random_rational(rng, opt.bound);
            t.z = random_rational(rng, opt.bound);
            t.x = t.y + t.z + opt.delta + random_rational(rng, opt.bound);
        }
        LengthsCoord c = witness_embedding(t, eps);
        CertifyResult r = certify_hyperbolic(c, depth);
        if (auto* cert = std::get_if<Certificate>(&r))
            return Sample{c, t, *cert, attempt};
    }
    throw RetryLimitExceeded("no certified sample after " + std::to_string(opt.max_retries) + " retries");
}

SignedTraces signed_traces(const LengthsCoord& c) {
    int e = euler_class(c);
    if (e != 1 && e != -1)
        throw InputError("signed traces need Euler class +1 or -1");
    PairTriple p = pair_quantities(c);
    const Rational &x = p.x, &y = p.y, &z = p.z;
    return {(y * y + z * z - x * x) / (y * z), (x * x + z * z - y * y) / (x * z),
            (x * x + y * y - z * z) / (x * y)};
}

Rational markov_residual(const LengthsCoord& c) {
    SignedTraces t = signed_traces(c);
    return t.x * t.x + t.y * t.y + t.z * t.z + t.x * t.y * t.z - 4;
}

} // namespace charcoords
