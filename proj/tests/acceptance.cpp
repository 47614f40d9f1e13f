// Acceptance suite: one PASS/FAIL line per criterion. Sample sizes,
// bounds and tolerances are fixed here.

#include "charcoords/algorithms.hpp"
#include "charcoords/dynamics.hpp"
#include "charcoords/errors.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace charcoords;

namespace {

constexpr long kBound = 1 << 16;           // numerator/denominator bound for random rationals
constexpr long kTraceBound = 1 << 10;      // smaller bound where long matrix products dominate
constexpr int kSwitchSamplesPerAxis = 10000;
constexpr int kInvolutionSamples = 10000;
constexpr int kOracleSamples = 1000;
constexpr int kOracleDepth = 5;
constexpr double kOracleRelTol = 1e-9;
constexpr int kClosedFormSamples = 10000;
constexpr int kPeripheralSamples = 10000;
constexpr int kCertifyDepth = 8;
constexpr double kCertifySeconds = 30;
constexpr double kSwitchSeconds = 10;
constexpr int kCounterexamples = 100;
constexpr int kReductionSamples = 10000;
constexpr std::size_t kReductionMaxSteps = 1000000;
constexpr unsigned kReductionSecondsPerRun = 20;
constexpr int kPreserveSamplesPerAxis = 10000;
constexpr int kMarkovSamples = 10000;
constexpr int kOrbitStarts = 100;
constexpr int kOrbitIters = 10000;
constexpr int kTransportSamples = 1000;
constexpr int kRotationIters = 1000;
constexpr double kRotationVariance = 1e-18;
constexpr int kEquivarianceSamples = 1000;
constexpr double kEquivarianceTol = 1e-6;
constexpr double kEquivarianceMargin = 1e-3;
constexpr int kCensusSamples = 100000;
constexpr int kDominanceSamples = 1000;
constexpr int kDominanceDepth = 6;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

LengthsCoord from_pairs(const Rational& x, const Rational& y, const Rational& z, std::initializer_list<int> neg) {
    return witness_embedding({x, y, z}, signs_with_negative(neg));
}

std::array<int, 4> pattern_with_euler_in(std::mt19937_64& rng, std::initializer_list<int> classes) {
    std::vector<std::array<int, 4>> all;
    for (int e : classes)
        for (const auto& p : oracle::patterns(e))
            all.push_back(p);
    return all[rng() % all.size()];
}

Outcome ac01_switch_oracle() {
    std::mt19937_64 rng(101);
    auto t0 = Clock::now();
    long mismatches = 0, checked = 0, inadmissible = 0;
    for (Axis a : kAxes) {
        for (int k = 0; k < kSwitchSamplesPerAxis; ++k) {
            auto eps = pattern_with_euler_in(rng, {1, -1, 0});
            // Every fourth sample draws from a tiny range so that equal pair
            // quantities, and with them inadmissible switches, do occur.
            auto c = oracle::rand_coord(rng, eps, k % 4 == 0 ? 3 : kBound);
            auto p = pair_quantities(c);
            auto expect = oracle::switched_pairs(p, eps, a);
            auto r = simultaneous_switch(c, a);
            ++checked;
            if (admissible(r) != expect.has_value()) {
                ++mismatches;
                continue;
            }
            if (!expect) {
                ++inadmissible;
                continue;
            }
            if (pair_quantities(std::get<LengthsCoord>(r)) != *expect)
                ++mismatches;
        }
    }
    double s = seconds_since(t0);
    return {mismatches == 0 && s < kSwitchSeconds,
            std::to_string(checked) + " switches, " + std::to_string(inadmissible) + " inadmissible, " +
                std::to_string(mismatches) + " mismatches, " + fmt("%.2f s", s)};
}

Outcome ac02_involution() {
    std::mt19937_64 rng(102);
    long bad = 0, admissible_count = 0;
    for (int k = 0; k < kInvolutionSamples; ++k) {
        auto c = oracle::rand_coord(rng, oracle::signs_from_mask(rng() % 16), k % 4 == 0 ? 3 : kBound);
        Axis a = kAxes[rng() % 3];
        auto r = simultaneous_switch(c, a);
        if (!admissible(r))
            continue;
        ++admissible_count;
        const auto& d = std::get<LengthsCoord>(r);
        if (euler_class(d) != euler_class(c))
            ++bad;
        auto back = simultaneous_switch(d, a);
        if (!admissible(back)) {
            ++bad;
            continue;
        }
        const auto& e = std::get<LengthsCoord>(back);
        if (e.lambda != c.lambda || e.eps != c.eps || !(e.tri == c.tri))
            ++bad;
    }
    return {bad == 0 && admissible_count > 0,
            std::to_string(admissible_count) + " admissible of " + std::to_string(kInvolutionSamples) + ", " +
                std::to_string(bad) + " failures"};
}

Outcome ac03_trace_oracle() {
    std::mt19937_64 rng(103);
    auto curves = base_slope_curves(kOracleDepth);
    double worst = 0;
    for (int k = 0; k < kOracleSamples; ++k) {
        auto c = oracle::rand_coord(rng, oracle::signs_from_mask(rng() % 16), kTraceBound);
        const auto& sc = curves[rng() % curves.size()];
        double exact = to_double(curve_trace(c, sc.seq));
        double approx = holonomy_oracle(c, sc.seq);
        worst = std::max(worst, std::abs(approx - exact) / std::max(exact, 1e-300));
    }
    return {worst <= kOracleRelTol, std::to_string(kOracleSamples) + " pairs, max rel err " + fmt("%.3g", worst)};
}

Outcome ac04_closed_forms() {
    std::mt19937_64 rng(104);
    long bad = 0;
    for (int k = 0; k < kClosedFormSamples; ++k) {
        auto eps = pattern_with_euler_in(rng, {1, -1, 0});
        auto c = oracle::rand_coord(rng, eps, kBound);
        auto expect = oracle::distinguished_traces(pair_quantities(c), eps);
        for (Axis a : kAxes)
            if (distinguished_trace(c, a) != expect[index(a)])
                ++bad;
    }
    Rational boundary = distinguished_trace(from_pairs(4, 1, 1, {0, 1}), Axis::X);
    return {bad == 0 && boundary == 2, std::to_string(kClosedFormSamples) + " coords, " + std::to_string(bad) +
                                           " mismatches, boundary |tr X| = " + to_string(boundary)};
}

Outcome ac05_peripheral() {
    std::mt19937_64 rng(105);
    long bad = 0;
    for (int k = 0; k < kPeripheralSamples; ++k) {
        auto eps = oracle::signs_from_mask(static_cast<unsigned>(k % 16));
        auto c = oracle::rand_coord(rng, eps, kBound);
        LengthsCoord plus = c;
        plus.eps = {1, 1, 1, 1};
        auto p = pair_quantities(c);
        for (int v = 0; v < 4; ++v) {
            auto seq = peripheral_sequence(c.tri, v);
            Rational table = oracle::peripheral_table(p, eps, v);
            Mat2 m = turn_product(c, seq), mp = turn_product(plus, seq);
            bool ok = curve_trace(c, seq) == 2 && m.c == 0 && m.a == m.d &&
                      m.b * (p.x + p.y + p.z) == table * mp.b && peripheral_entry(c, v) == table;
            bad += !ok;
        }
    }
    return {bad == 0, std::to_string(kPeripheralSamples) + " coords x 4 punctures, " + std::to_string(bad) + " failures"};
}

Outcome ac06_certify() {
    auto c = from_pairs(13, 4, 2, {0});
    auto t0 = Clock::now();
    auto r = certify_hyperbolic(c, kCertifyDepth);
    double s = seconds_since(t0);
    if (!std::holds_alternative<Certificate>(r))
        return {false, "(13,4,2) did not certify: " + describe(std::get<Witness>(r))};
    const auto& cert = std::get<Certificate>(r);
    // Independent route: lattice crossing sequences for every slope.
    Rational least = -1;
    bool all_hyperbolic = true;
    for (const auto& sd : slopes_to_depth(kCertifyDepth)) {
        Rational t = curve_trace(c, base_slope_sequence(sd.slope));
        all_hyperbolic = all_hyperbolic && t > 2;
        if (least < 0 || t < least)
            least = t;
    }
    std::size_t retries = 0, certified = 0;
    for (int seed = 1; seed <= kCounterexamples; ++seed) {
        Sample smp = sample_counterexample(static_cast<std::uint64_t>(seed), kCertifyDepth);
        retries += smp.retries;
        certified += smp.certificate.visited == cert.visited && smp.certificate.min_trace > 2;
    }
    bool pass = s < kCertifySeconds && cert.min_trace > 2 && all_hyperbolic && least == cert.min_trace &&
                certified == static_cast<std::size_t>(kCounterexamples);
    return {pass, std::to_string(cert.visited) + " triangulations, min trace " + fmt("%.6g", to_double(cert.min_trace)) +
                      " at " + to_string(cert.min_slope) + ", " + fmt("%.2f s", s) + "; " + std::to_string(certified) +
                      "/" + std::to_string(kCounterexamples) + " samples certified, " + std::to_string(retries) +
                      " retries"};
}

// Step count of the greedy reduction on the pair quantities in long double.
// Only used to report how long a run that ran out of budget would have been.
long estimated_steps(const PairTriple& p, const std::array<int, 4>& eps) {
    int s = index(oracle::special(eps));
    long double v[3] = {to_double(p.x), to_double(p.y), to_double(p.z)};
    for (long n = 0; n < 100000000; ++n) {
        long double sum = v[0] + v[1] + v[2];
        for (auto& x : v)
            x /= sum;
        long double r[3] = {std::sqrt(v[0]), std::sqrt(v[1]), std::sqrt(v[2])};
        if (r[0] <= r[1] + r[2] && r[1] <= r[0] + r[2] && r[2] <= r[0] + r[1])
            return n;
        int a = 0;
        for (int i = 1; i < 3; ++i)
            if (v[i] > v[a])
                a = i;
        int u = (a + 1) % 3, w = (a + 2) % 3;
        if (a == s) {
            v[a] = (v[u] + v[w]) * (v[u] + v[w]) / v[a];
        } else {
            int o = u == s ? w : u;
            v[a] = (v[o] - v[s]) * (v[o] - v[s]) / v[a];
        }
    }
    return -1;
}

struct RunReport {
    int status = 0; // 0 ok, 1 check failed, 2 not type-preserving
    std::size_t steps = 0;
};

// Runs one reduction in a child process so that a run exceeding the wall
// clock budget can be stopped. nullopt on timeout or crash.
std::optional<RunReport> reduce_in_child(const LengthsCoord& c) {
    int fd[2];
    if (pipe(fd) != 0)
        return std::nullopt;
    pid_t pid = fork();
    if (pid == 0) {
        close(fd[0]);
        alarm(kReductionSecondsPerRun);
        RunReport rep;
        try {
            ReductionResult r = trace_reduction(c, kReductionMaxSteps);
            const Witness& w = r.witness;
            bool ok = w.abs_trace <= 2 && (w.kind == WitnessKind::Parabolic) == (w.abs_trace == 2) &&
                      reduction_monotonicity_audit(r.log).ok;
            rep = {ok ? 0 : 1, r.steps};
        } catch (const NotTypePreserving&) {
            rep.status = 2;
        } catch (...) {
            rep.status = 1;
        }
        ssize_t n = write(fd[1], &rep, sizeof rep);
        _exit(n == sizeof rep ? 0 : 1);
    }
    close(fd[1]);
    RunReport rep;
    ssize_t got = read(fd[0], &rep, sizeof rep);
    close(fd[0]);
    int wstatus = 0;
    waitpid(pid, &wstatus, 0);
    if (got != sizeof rep || !WIFEXITED(wstatus) || WEXITSTATUS(wstatus) != 0)
        return std::nullopt;
    return rep;
}

Outcome ac07_reduction() {
    std::mt19937_64 rng(107);
    long bad = 0, skipped = 0, over_budget = 0, longest_estimate = 0;
    std::size_t max_steps = 0, total_steps = 0;
    std::map<int, long> histogram; // decade of the step count
    for (int k = 0; k < kReductionSamples; ++k) {
        auto eps = oracle::rand_pattern(rng, 0);
        auto c = oracle::rand_coord(rng, eps, kBound);
        auto rep = reduce_in_child(c);
        if (!rep) {
            ++over_budget;
            longest_estimate = std::max(longest_estimate, estimated_steps(pair_quantities(c), eps));
            continue;
        }
        if (rep->status == 2) {
            ++skipped;
            continue;
        }
        bad += rep->status != 0;
        max_steps = std::max(max_steps, rep->steps);
        total_steps += rep->steps;
        histogram[rep->steps == 0 ? 0 : static_cast<int>(std::log10(static_cast<double>(rep->steps))) + 1]++;
    }
    auto worked = trace_reduction(from_pairs(16, 8, 1, {0, 1}));
    bool pass = bad == 0 && over_budget == 0 && worked.steps == 1 && reduction_monotonicity_audit(worked.log).ok;
    long done = kReductionSamples - skipped - over_budget;
    std::string hist;
    for (const auto& [d, n] : histogram)
        hist += (hist.empty() ? "" : " ") + std::string("<1e") + std::to_string(d) + ":" + std::to_string(n);
    return {pass, std::to_string(done) + " completed, " + std::to_string(bad) + " failures, " +
                      std::to_string(over_budget) + " over the " + std::to_string(kReductionSecondsPerRun) +
                      " s budget (longest estimated at " + std::to_string(longest_estimate) + " steps); steps " + hist +
                      ", max " + std::to_string(max_steps) + ", mean " +
                      fmt("%.2f", static_cast<double>(total_steps) / std::max<long>(1, done)) +
                      "; (16,8,1) stops after " + std::to_string(worked.steps)};
}

Outcome ac08_preserve() {
    std::mt19937_64 rng(108);
    long violations = 0, admissible_count = 0;
    for (Axis a : kAxes) {
        for (int k = 0; k < kPreserveSamplesPerAxis; ++k) {
            auto c = oracle::rand_coord(rng, oracle::rand_pattern(rng, k % 2 ? 1 : -1), k % 4 == 0 ? 4 : kBound);
            auto r = simultaneous_switch(c, a);
            if (!admissible(r))
                continue;
            ++admissible_count;
            if (anti_tri_check(pair_quantities(c)) != anti_tri_check(pair_quantities(std::get<LengthsCoord>(r))))
                ++violations;
        }
    }
    return {violations == 0, std::to_string(admissible_count) + " admissible switches, " + std::to_string(violations) +
                                 " violations"};
}

Outcome ac09_markov() {
    std::mt19937_64 rng(109);
    long bad = 0;
    for (int k = 0; k < kMarkovSamples; ++k) {
        auto c = oracle::rand_coord(rng, oracle::rand_pattern(rng, k % 2 ? 1 : -1), kBound);
        bad += markov_residual(c) != 0;
    }
    Rational worked = markov_residual(from_pairs(4, 2, 1, {0}));
    return {bad == 0 && worked == 0, std::to_string(kMarkovSamples) + " coords, " + std::to_string(bad) +
                                         " nonzero residuals; (4,2,1) residual " + to_string(worked)};
}

Rational half(long j) {
    Rational k(j, 2);
    k.canonicalize();
    return k;
}

// Random start on the Euler class 0 conic through (1, k + 2): the second
// intersection with a line of small rational slope through that point.
std::optional<ChartPoint> e0_start(std::mt19937_64& rng, const Rational& k) {
    Rational m = oracle::rand_rat(rng, 4) * (rng() % 2 ? 1 : -1);
    // (b + c - 1)^2 = (k+2) b c with b = 1 + u, c = k + 2 + m u; the
    // quadratic in u has the root 0, the other root is -B/A.
    Rational s = k + 2;
    Rational A = (1 + m) * (1 + m) - s * m;
    Rational B = 2 * (1 + m) * s - s * (m + s);
    if (A == 0)
        return std::nullopt;
    Rational u = -B / A;
    ChartPoint p{1 + u, s + m * u};
    if (p.b <= 0 || p.c <= 0 || p.b + p.c == 1 || conic_k_e0(p) != k)
        return std::nullopt;
    return p;
}

// Same for the Euler class 1 conic b^2 + c^2 - k b c = 1 through (1, k).
std::optional<ChartPoint> e1_start(std::mt19937_64& rng, const Rational& k) {
    Rational m = oracle::rand_rat(rng, 4) * (rng() % 2 ? 1 : -1);
    // b = 1 + u, c = k + m u.
    Rational A = 1 + m * m - k * m;
    Rational B = 2 + 2 * k * m - k * (m + k);
    if (A == 0)
        return std::nullopt;
    Rational u = -B / A;
    ChartPoint p{1 + u, k + m * u};
    if (p.b == 0 || p.c == 0 || conic_k_e1(p) != k)
        return std::nullopt;
    return p;
}

Outcome ac10_dynamics() {
    std::mt19937_64 rng(110);
    long broken = 0, resampled = 0, iterations = 0;
    auto t0 = Clock::now();
    // Runs one orbit of n steps, counting invariant breaks. nullopt when the
    // orbit leaves the chart; such starts are redrawn.
    auto orbit = [&](auto map, auto inv, ChartPoint p) -> std::optional<long> {
        Rational k = inv(p);
        long bad = 0;
        try {
            for (int i = 0; i < kOrbitIters; ++i) {
                p = map(p);
                bad += inv(p) != k;
            }
        } catch (const DegenerateOrbit&) {
            return std::nullopt;
        }
        return bad;
    };
    for (int family = 0; family < 3; ++family) {
        for (int n = 0; n < kOrbitStarts;) {
            Rational k = half(static_cast<long>(rng() % 7) - 3);
            std::optional<long> r;
            if (family == 0) {
                if (auto p = e0_start(rng, k))
                    r = orbit(dx_map_e0, conic_k_e0, *p);
            } else if (family == 1) {
                if (auto p = e0_start(rng, k))
                    r = orbit(quartic_map_e0, quartic_k_e0, sx_map_e0(*p));
            } else {
                if (auto p = e1_start(rng, k))
                    r = orbit(dx_map_e1, [](const ChartPoint& q) { return conic_k_e1(q); }, *p);
            }
            if (!r) {
                ++resampled;
                continue;
            }
            broken += *r;
            iterations += kOrbitIters;
            ++n;
        }
    }
    double orbit_s = seconds_since(t0);

    long transport_bad = 0, transport_checked = 0;
    for (int n = 0; n < kTransportSamples; ++n) {
        auto c = oracle::rand_coord(rng, signs_with_negative({n % 4}), kBound);
        auto r1 = simultaneous_switch(c, Axis::Y);
        if (!admissible(r1))
            continue;
        auto r2 = simultaneous_switch(std::get<LengthsCoord>(r1), Axis::Z);
        if (!admissible(r2))
            continue;
        ++transport_checked;
        transport_bad += chart_x_e1(std::get<LengthsCoord>(r2)) != dx_map_e1(chart_x_e1(c));
    }

    double worst_var = 0;
    for (int n = 0; n < 20; ++n) {
        Rational k = half(static_cast<long>(rng() % 7) - 3);
        std::optional<ChartPoint> p0, p1;
        while (!(p0 = e0_start(rng, k))) {
        }
        while (!(p1 = e1_start(rng, k))) {
        }
        try {
            worst_var = std::max(worst_var, rotation_number(Family::E0, k, *p0, kRotationIters).increment_variance);
            worst_var = std::max(worst_var, rotation_number(Family::E1, k, *p1, kRotationIters).increment_variance);
        } catch (const DegenerateOrbit&) {
        }
    }

    std::uniform_real_distribution<double> u(-3, 3);
    double worst_eq = 0;
    for (int n = 0; n < kEquivarianceSamples;) {
        double s = u(rng), t = u(rng);
        bool near = false;
        for (double l : {s, t, s + t, s + 2 * t, s + 3 * t, 2 * s + t, 3 * s + t})
            near = near || std::abs(l) < kEquivarianceMargin;
        if (near)
            continue;
        ++n;
        auto base = psi_cover(s, t);
        auto a1 = psi_cover(s + 2 * t, t);
        auto a2 = switch_e1_float(switch_e1_float(base, Axis::X), Axis::Z);
        auto b1 = psi_cover(s, 2 * s + t);
        auto b2 = switch_e1_float(switch_e1_float(base, Axis::Y), Axis::Z);
        for (int i = 0; i < 3; ++i)
            worst_eq = std::max({worst_eq, std::abs(a1[i] - a2[i]), std::abs(b1[i] - b2[i])});
    }

    bool pass = broken == 0 && transport_bad == 0 && transport_checked > 0 && worst_var < kRotationVariance &&
                worst_eq < kEquivarianceTol;
    return {pass, std::to_string(iterations) + " orbit steps (" + std::to_string(resampled) + " starts redrawn), " +
                      std::to_string(broken) + " invariant breaks, " + fmt("%.1f s", orbit_s) + "; transport " +
                      std::to_string(transport_bad) + "/" + std::to_string(transport_checked) +
                      " mismatches; max increment variance " + fmt("%.3g", worst_var) + "; max equivariance residual " +
                      fmt("%.3g", worst_eq)};
}

Outcome ac11_census() {
    std::mt19937_64 rng(111);
    // Allowed (Euler class, minus set) pairs.
    std::set<std::pair<int, std::string>> allowed;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            allowed.insert({0, std::to_string(i) + std::to_string(j)});
    allowed.insert({1, ""});
    allowed.insert({-1, "1234"});
    for (int i = 1; i <= 4; ++i) {
        allowed.insert({1, std::to_string(i)});
        std::string rest;
        for (int j = 1; j <= 4; ++j)
            if (j != i)
                rest += std::to_string(j);
        allowed.insert({-1, rest});
    }
    std::set<std::pair<int, std::string>> seen;
    long forbidden = 0, degenerate = 0;
    for (int k = 0; k < kCensusSamples; ++k) {
        auto eps = pattern_with_euler_in(rng, {1, 0, -1});
        auto c = oracle::rand_coord(rng, eps, 1 << 8);
        std::array<int, 4> s{};
        try {
            s = puncture_signs(c);
        } catch (const NotTypePreserving&) {
            ++degenerate;
            continue;
        }
        std::string minus;
        for (int v = 0; v < 4; ++v)
            if (s[v] < 0)
                minus += std::to_string(v + 1);
        std::pair<int, std::string> key{euler_class(c), minus};
        if (!allowed.count(key))
            ++forbidden;
        seen.insert(key);
    }
    int m0 = 0, m1 = 0, mm1 = 0;
    for (const auto& [e, m] : seen)
        (e == 0 ? m0 : e == 1 ? m1 : mm1)++;
    return {forbidden == 0 && m0 == 6 && m1 == 5 && mm1 == 5,
            std::to_string(m0) + " M0, " + std::to_string(m1) + " M1, " + std::to_string(mm1) + " M-1 patterns; " +
                std::to_string(forbidden) + " forbidden; " + std::to_string(degenerate) + " degenerate draws"};
}

Outcome ac12_dominance() {
    std::mt19937_64 rng(112);
    auto curves = base_slope_curves(kDominanceDepth);
    long violations = 0, strict_checked = 0;
    auto t0 = Clock::now();
    for (int k = 0; k < kDominanceSamples; ++k) {
        auto c = oracle::rand_coord(rng, pattern_with_euler_in(rng, {1, 0, -1}), kTraceBound);
        auto rep = dominance_check(c, curves);
        for (const auto& row : rep.rows) {
            violations += !row.holds;
            strict_checked += row.crosses_negative;
        }
    }
    return {violations == 0, std::to_string(kDominanceSamples) + " coords x " + std::to_string(curves.size()) +
                                 " slopes, " + std::to_string(strict_checked) + " strict cases, " +
                                 std::to_string(violations) + " violations, " + fmt("%.1f s", seconds_since(t0))};
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"AC01 switch engine vs closed forms", ac01_switch_oracle},
        {"AC02 involution and Euler class", ac02_involution},
        {"AC03 exact trace vs holonomy oracle", ac03_trace_oracle},
        {"AC04 closed-form distinguished traces", ac04_closed_forms},
        {"AC05 peripheral parabolicity", ac05_peripheral},
        {"AC06 hyperbolic certificate and samples", ac06_certify},
        {"AC07 trace reduction", ac07_reduction},
        {"AC08 anti-triangular preservation", ac08_preserve},
        {"AC09 Markov identity", ac09_markov},
        {"AC10 twist dynamics", ac10_dynamics},
        {"AC11 component census", ac11_census},
        {"AC12 dominance", ac12_dominance},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, fn] = criteria[i];
        if (!only.empty() && !only.count(static_cast<int>(i + 1)))
            continue;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
