#pragma once

#include "charcoords/coords.hpp"
#include "charcoords/switches.hpp"
#include "charcoords/trace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace charcoords {

enum class WitnessKind { Elliptic, Parabolic };

// A simple closed curve with |trace| <= 2.
struct Witness {
    WitnessKind kind;
    Slope slope;
    Color color;
    Rational abs_trace;
};

std::string describe(const Witness& w);

enum class ReductionCase { Case1, Case2, StopTri, StopInadmissible };
const char* case_name(ReductionCase c);

struct ReductionLogEntry {
    std::size_t n = 0;
    std::optional<Axis> axis; // axis switched (or attempted) at this step
    PairTriple pairs;         // before the step
    Rational a, b, c;         // the same, normalised to sum 1
    double k = 0;             // max(sqrt a - sqrt b - sqrt c, ...)
    ReductionCase tag = ReductionCase::StopTri;
};

struct ReductionResult {
    Witness witness;
    std::size_t steps = 0;
    std::vector<ReductionLogEntry> log;
    LengthsCoord final_coord;
};

// Reads CHARCOORDS_MAX_STEPS, default 10^6.
std::size_t default_max_steps();

// Euler class 0 only. Throws InputError, NotTypePreserving, MaxStepsExceeded.
ReductionResult trace_reduction(const LengthsCoord& c, std::optional<std::size_t> max_steps = {});

struct AuditResult {
    bool ok = true;
    std::vector<std::string> failures;
};

// Strict decrease of k, and the gap bound 2 min(a, b, c) on Case1 steps,
// both evaluated in 256-bit floating point.
AuditResult reduction_monotonicity_audit(const std::vector<ReductionLogEntry>& log);

struct VisitedTriangulation {
    std::array<Slope, 3> slopes;
    PairTriple pairs;
};

struct Certificate {
    int depth = 0;
    bool base_anti_tri = false;
    std::size_t visited = 0;
    Rational min_trace;
    Slope min_slope;
    std::vector<VisitedTriangulation> triangulations; // breadth-first order
};

using CertifyResult = std::variant<Certificate, Witness>;

// Euler class +-1 only. Searches the dual tree to the given radius; jobs > 1
// splits the three root subtrees across threads with a deterministic merge.
// Throws InputError, NotTypePreserving.
CertifyResult certify_hyperbolic(const LengthsCoord& c, int depth, int jobs = 1);

struct SampleOptions {
    std::uint64_t bound = 1u << 16;
    Rational delta = Rational(1, 1000);
    std::size_t max_retries = 1000;
    std::optional<PairTriple> first_candidate; // tried before any random draw
};

struct Sample {
    LengthsCoord coord;
    PairTriple pairs;
    Certificate certificate;
    std::size_t retries = 0;
};

// Draws x > y + z + delta, embeds with t1 negative and certifies.
// Throws RetryLimitExceeded.
Sample sample_counterexample(std::uint64_t seed, int depth, const SampleOptions& opt = {});

struct SignedTraces {
    Rational x, y, z;
};

// (y^2 + z^2 - x^2)/(yz) and its cyclic images. Euler class +-1 only.
SignedTraces signed_traces(const LengthsCoord& c);
Rational markov_residual(const LengthsCoord& c);

} // namespace charcoords
