#include "commands.hpp"

#include "charcoords/algorithms.hpp"
#include "charcoords/dynamics.hpp"
#include "charcoords/errors.hpp"
#include "charcoords/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

namespace charcoords::cli {
namespace {

using ojson = nlohmann::ordered_json;

LengthsCoord read_coord(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return coord_from_json(j);
}

const char* kind_name(WitnessKind k) {
    return k == WitnessKind::Elliptic ? "Elliptic" : "Parabolic";
}

ojson witness_json(const Witness& w) {
    return {{"kind", kind_name(w.kind)},
            {"slope", to_string(w.slope)},
            {"color", std::string(1, color_letter(w.color))},
            {"abs_trace", to_string(w.abs_trace)}};
}

std::string fmt_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ChartPoint parse_start(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw InputError("--start expects \"b,c\"");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

int cmd_classify(const std::string& file, std::ostream& out) {
    Component comp = classify_component(read_coord(file));
    ojson j = {{"euler", comp.euler}, {"signs", sign_string(comp.signs)}, {"component", comp.label}};
    out << j.dump() << '\n';
    return kExitOk;
}

int cmd_trace(const std::string& file, const std::string& slope, int depth, bool with_float,
              std::ostream& out) {
    LengthsCoord c = read_coord(file);
    std::vector<TraceRow> rows;
    if (!slope.empty()) {
        Slope s = parse_slope(slope);
        SlopeTrace st = slope_trace(c, s);
        if (auto* t = std::get_if<Rational>(&st))
            rows.push_back({s, *t, std::nullopt});
        else
            rows.push_back({s, curve_trace(c, base_slope_sequence(s)), std::get<ParabolicWitness>(st)});
    } else {
        if (depth < 0)
            throw InputError("--depth must be non-negative");
        rows = traces_to_depth(c, depth);
    }
    write_trace_csv(out, rows, with_float);
    return kExitOk;
}

int cmd_reduce(const std::string& file, std::ostream& out) {
    ReductionResult r = trace_reduction(read_coord(file));
    out << "n,axis,a,b,c,k_float,case\n";
    for (const auto& e : r.log) {
        out << e.n << ',' << (e.axis ? switch_name(*e.axis) : "") << ',' << to_string(e.a) << ','
            << to_string(e.b) << ',' << to_string(e.c) << ',' << fmt_float(e.k) << ','
            << case_name(e.tag) << '\n';
    }
    ojson w = witness_json(r.witness);
    w["steps"] = r.steps;
    out << w.dump() << '\n';
    return kExitOk;
}

int cmd_certify(const std::string& file, int depth, int jobs, bool full, std::ostream& out) {
    if (depth < 0 || jobs < 1)
        throw InputError("--depth must be >= 0 and --jobs >= 1");
    CertifyResult r = certify_hyperbolic(read_coord(file), depth, jobs);
    if (auto* w = std::get_if<Witness>(&r)) {
        ojson j = {{"certified", false}, {"depth", depth}, {"witness", witness_json(*w)}};
        out << j.dump() << '\n';
        return kExitWitness;
    }
    const auto& cert = std::get<Certificate>(r);
    ojson j = {{"certified", true},
               {"depth", cert.depth},
               {"base_anti_tri", cert.base_anti_tri},
               {"visited", cert.visited},
               {"min_trace", to_string(cert.min_trace)},
               {"min_slope", to_string(cert.min_slope)}};
    if (full) {
        ojson list = ojson::array();
        for (const auto& v : cert.triangulations) {
            list.push_back({{"slopes", {to_string(v.slopes[0]), to_string(v.slopes[1]), to_string(v.slopes[2])}},
                            {"pairs", {to_string(v.pairs.x), to_string(v.pairs.y), to_string(v.pairs.z)}}});
        }
        j["triangulations"] = list;
    }
    out << j.dump() << '\n';
    return kExitOk;
}

std::string sample_line(std::uint64_t seed, int depth) {
    Sample s = sample_counterexample(seed, depth);
    nlohmann::json j = to_json(s.coord);
    j["seed"] = seed;
    j["retries"] = s.retries;
    j["certificate"] = {{"depth", s.certificate.depth},
                        {"visited", s.certificate.visited},
                        {"min_trace", to_string(s.certificate.min_trace)}};
    return j.dump();
}

int cmd_sample(std::uint64_t seed, int depth, int count, int jobs, std::ostream& out) {
    if (depth < 0 || count < 0 || jobs < 1)
        throw InputError("--depth, --count must be >= 0 and --jobs >= 1");
    std::vector<std::string> lines(count);
    auto work = [&](int first) {
        for (int i = first; i < count; i += jobs)
            lines[i] = sample_line(seed + static_cast<std::uint64_t>(i), depth);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::future<void>> fs;
        for (int w = 0; w < jobs; ++w)
            fs.push_back(std::async(std::launch::async, work, w));
        for (auto& f : fs)
            f.get();
    }
    for (const auto& l : lines)
        out << l << '\n';
    return kExitOk;
}

int cmd_orbit(const std::string& family, const std::string& start, long iters, bool with_float,
              std::ostream& out) {
    if (iters < 0)
        throw InputError("--iters must be non-negative");
    Family f;
    if (family == "e0")
        f = Family::E0;
    else if (family == "e1")
        f = Family::E1;
    else
        throw InputError("--family must be e0 or e1");
    ChartPoint p = parse_start(start);
    if (p.b <= 0 || p.c <= 0)
        throw InputError("--start coordinates must be positive");
    // Buffer so a degenerate orbit leaves no partial CSV behind.
    std::ostringstream buf;
    write_orbit_csv(buf, f, p, static_cast<std::size_t>(iters), with_float);
    out << buf.str();
    return kExitOk;
}

int cmd_markov(const std::string& file, std::ostream& out) {
    Rational r = markov_residual(read_coord(file));
    out << to_string(r) << '\n';
    return r == 0 ? kExitOk : kExitWitness;
}

int cmd_dominance(const std::string& file, int depth, std::ostream& out) {
    if (depth < 0)
        throw InputError("--depth must be non-negative");
    DominanceReport rep = dominance_check(read_coord(file), depth);
    out << "slope,abs_trace,fuchsian_abs_trace,crosses_negative,holds\n";
    for (const auto& row : rep.rows) {
        out << to_string(row.slope) << ',' << to_string(row.trace) << ',' << to_string(row.positive_trace)
            << ',' << (row.crosses_negative ? 1 : 0) << ',' << (row.holds ? 1 : 0) << '\n';
    }
    return rep.ok ? kExitOk : kExitWitness;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with lengths coordinates on the four-punctured sphere"};
    app.name("charcoords");
    app.require_subcommand(1);

    std::function<int()> action;
    std::string file, slope, family, start;
    int depth = 0, jobs = 1, count = 1;
    long iters = 0;
    std::uint64_t seed = 1;
    bool with_float = false, full = false;

    auto* classify = app.add_subcommand("classify", "Euler class, puncture signs and component");
    classify->add_option("coord-file", file, "coordinate JSON, - for stdin")->required();
    classify->callback([&] { action = [&] { return cmd_classify(file, out); }; });

    auto* trace = app.add_subcommand("trace", "Traces of simple closed curves");
    trace->add_option("coord-file", file)->required();
    auto* slope_opt = trace->add_option("--slope", slope, "single slope p/q");
    auto* depth_opt = trace->add_option("--depth", depth, "all slopes to this Farey depth");
    slope_opt->excludes(depth_opt);
    trace->add_flag("--float", with_float, "add a decimal column");
    trace->callback([&] {
        if (slope.empty() && depth_opt->count() == 0)
            throw CLI::ValidationError("trace", "one of --slope or --depth is required");
        action = [&] { return cmd_trace(file, slope, depth, with_float, out); };
    });

    auto* reduce = app.add_subcommand("reduce", "Run the trace reduction (Euler class 0)");
    reduce->add_option("coord-file", file)->required();
    reduce->callback([&] { action = [&] { return cmd_reduce(file, out); }; });

    auto* certify = app.add_subcommand("certify", "Certify hyperbolicity to a Farey depth (Euler class +-1)");
    certify->add_option("coord-file", file)->required();
    certify->add_option("--depth", depth)->default_val(8);
    certify->add_option("--jobs", jobs)->default_val(1);
    certify->add_flag("--full", full, "list every visited triangulation");
    certify->callback([&] { action = [&] { return cmd_certify(file, depth, jobs, full, out); }; });

    auto* sample = app.add_subcommand("sample", "Sample certified counterexamples as NDJSON");
    sample->add_option("--seed", seed)->default_val(1);
    sample->add_option("--depth", depth)->default_val(8);
    sample->add_option("--count", count)->default_val(1);
    sample->add_option("--jobs", jobs)->default_val(1);
    sample->callback([&] { action = [&] { return cmd_sample(seed, depth, count, jobs, out); }; });

    auto* orbit = app.add_subcommand("orbit", "Iterate the twist map in an affine chart");
    orbit->add_option("--family", family)->required();
    orbit->add_option("--start", start, "\"b,c\" with exact rationals")->required();
    orbit->add_option("--iters", iters)->default_val(100);
    orbit->add_flag("--float", with_float);
    orbit->callback([&] { action = [&] { return cmd_orbit(family, start, iters, with_float, out); }; });

    auto* markov = app.add_subcommand("markov", "Markov residual of the signed traces (Euler class +-1)");
    markov->add_option("coord-file", file)->required();
    markov->callback([&] { action = [&] { return cmd_markov(file, out); }; });

    auto* dominance = app.add_subcommand("dominance", "Compare traces with the all-positive coordinate");
    dominance->add_option("coord-file", file)->required();
    dominance->add_option("--depth", depth)->default_val(6);
    dominance->callback([&] { action = [&] { return cmd_dominance(file, depth, out); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return action();
    } catch (const NotTypePreserving& e) {
        err << "error: not type-preserving: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegenerateOrbit& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const RetryLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace charcoords::cli
