#include "noderel/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "noderel/constructor.hpp"
#include "noderel/dsl.hpp"
#include "noderel/errors.hpp"
#include "noderel/graph_io.hpp"
#include "noderel/json_io.hpp"
#include "noderel/reliability.hpp"
#include "noderel/shape.hpp"

namespace noderel {

namespace {

enum class Format { Pretty, Json, Csv };

struct RunConfig {
    std::string precision_text = "1e-6";
    Rational precision = default_precision();
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    std::uint64_t realization_cap = kDefaultRealizationCap;
    std::uint64_t seed = 7;
    Format format = Format::Pretty;
};

struct InputSpec {
    std::string file;
    std::string dsl;
};

// An explicit graph (from a file) or an expression (from --dsl).
struct Input {
    std::optional<Graph> graph;
    std::optional<GraphExpr> expr;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Input load(const InputSpec& spec) {
    if (spec.file.empty() == spec.dsl.empty()) {
        throw UsageError("give exactly one of an input file or --dsl");
    }
    if (!spec.dsl.empty()) {
        return {std::nullopt, parse_dsl(spec.dsl)};
    }
    const std::filesystem::path file(spec.file);
    if (file.extension() == ".g6") {
        std::ifstream in(file);
        if (!in) {
            throw std::runtime_error("cannot open " + spec.file);
        }
        std::string line;
        std::getline(in, line);
        return {from_graph6(line), std::nullopt};
    }
    return {read_edge_list_file(file), std::nullopt};
}

ReliabilityPolynomial reliability_of(const Input& input, const RunConfig& cfg) {
    return input.graph ? rel_enumerate(*input.graph, cfg.enumeration_cap)
                       : rel_algebra(*input.expr, cfg.enumeration_cap);
}

Graph explicit_graph(const Input& input, const RunConfig& cfg) {
    return input.graph ? *input.graph : realize(*input.expr, cfg.realization_cap);
}

std::string interval_text(const IsolatingInterval& i) {
    return "(" + to_string(i.lo) + ", " + to_string(i.hi) + ") ~ " + to_decimal(i.midpoint(), 6);
}

void print_shape(std::ostream& out, const ShapeReport& report) {
    out << "extrema: " << report.extrema.size() << '\n';
    for (const auto& e : report.extrema) {
        out << "  " << (e.kind == ExtremumKind::Max ? "max " : "min ") << interval_text(e.location)
            << '\n';
    }
    out << "decrease intervals: " << report.num_decrease_intervals() << '\n';
    for (const auto& d : report.decrease_intervals) {
        out << "  from " << (d.start ? interval_text(*d.start) : std::string("0")) << " to "
            << (d.end ? interval_text(*d.end) : std::string("1")) << '\n';
    }
    out << "inflections: " << report.num_inflections() << '\n';
    for (const auto& i : report.inflections) {
        out << "  " << interval_text(i) << '\n';
    }
}

std::string fixed12(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

int cmd_rel(const Input& input, const RunConfig& cfg, std::ostream& out) {
    const auto r = reliability_of(input, cfg);
    switch (cfg.format) {
        case Format::Pretty:
            out << to_pretty(r.poly()) << '\n';
            break;
        case Format::Json:
            out << to_json(r).dump() << '\n';
            break;
        case Format::Csv:
            out << "power,coefficient\n";
            for (std::size_t k = 0; k < r.poly().coeffs().size(); ++k) {
                out << k << ',' << r.poly().coeffs()[k].get_str() << '\n';
            }
            break;
    }
    return kExitOk;
}

int cmd_shape(const Input& input, const RunConfig& cfg, std::ostream& out) {
    const auto r = reliability_of(input, cfg);
    const auto report = analyze(r, cfg.precision);
    if (cfg.format == Format::Json) {
        out << to_json(report).dump() << '\n';
    } else {
        print_shape(out, report);
    }
    return kExitOk;
}

int cmd_plot(const Input& input, const RunConfig& cfg, std::size_t samples,
             const std::string& out_file, std::ostream& out) {
    if (samples < 2) {
        throw UsageError("plot needs at least 2 samples");
    }
    const auto r = reliability_of(input, cfg);
    std::ofstream file;
    if (!out_file.empty()) {
        file.open(out_file);
        if (!file) {
            throw std::runtime_error("cannot write " + out_file);
        }
    }
    std::ostream& sink = out_file.empty() ? out : file;
    for (std::size_t k = 0; k < samples; ++k) {
        Rational p(static_cast<unsigned long>(k), static_cast<unsigned long>(samples - 1));
        p.canonicalize();
        sink << to_decimal(p, 12) << ',' << to_decimal(evaluate(r.poly(), p), 12) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Input& input, const RunConfig& cfg, const std::vector<std::string>& points,
               std::uint64_t trials, std::ostream& out) {
    if (points.empty()) {
        throw UsageError("verify needs at least one -p value");
    }
    const auto r = reliability_of(input, cfg);
    const Graph g = explicit_graph(input, cfg);
    bool ok = true;
    Json rows = Json::array();
    if (cfg.format == Format::Csv) {
        out << "p,exact,estimate,stderr,z\n";
    } else if (cfg.format == Format::Pretty) {
        out << std::left << std::setw(10) << "p" << std::setw(16) << "exact" << std::setw(16)
            << "estimate" << std::setw(16) << "stderr" << "z\n";
    }
    for (const auto& text : points) {
        const Rational p = parse_rational(text);
        if (p < 0 || p > 1) {
            throw DomainError("probability " + text + " is outside [0, 1]");
        }
        const Rational exact = evaluate(r.poly(), p);
        const auto mc = mc_estimate(g, p, trials, cfg.seed);
        const double diff = mc.estimate - exact.get_d();
        double z = 0;
        if (mc.std_error > 0) {
            z = diff / mc.std_error;
        } else if (diff != 0) {
            z = std::numeric_limits<double>::infinity();
        }
        ok = ok && std::fabs(z) <= 4;
        switch (cfg.format) {
            case Format::Pretty:
                out << std::left << std::setw(10) << to_decimal(p) << std::setw(16)
                    << to_decimal(exact) << std::setw(16) << fixed12(mc.estimate) << std::setw(16)
                    << fixed12(mc.std_error) << fixed12(z) << '\n';
                break;
            case Format::Csv:
                out << to_decimal(p) << ',' << to_decimal(exact) << ',' << fixed12(mc.estimate)
                    << ',' << fixed12(mc.std_error) << ',' << fixed12(z) << '\n';
                break;
            case Format::Json:
                rows.push_back({{"p", to_string(p)},
                                {"exact", to_string(exact)},
                                {"estimate", mc.estimate},
                                {"stderr", mc.std_error},
                                {"z", std::isfinite(z) ? Json(z) : Json("inf")}});
                break;
        }
    }
    if (cfg.format == Format::Json) {
        out << Json{{"trials", trials}, {"seed", cfg.seed}, {"rows", rows}, {"pass", ok}}.dump()
            << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_expand(const Input& input, const RunConfig& cfg, const std::string& as,
               const std::string& out_file, std::ostream& out) {
    const Graph g = explicit_graph(input, cfg);
    std::ostringstream text;
    if (as == "g6") {
        text << to_graph6(g) << '\n';
    } else {
        write_edge_list(text, g);
    }
    if (out_file.empty()) {
        out << text.str();
    } else {
        std::ofstream file(out_file);
        if (!file) {
            throw std::runtime_error("cannot write " + out_file);
        }
        file << text.str();
    }
    return kExitOk;
}

Json bundle_json(const Construction& c, std::size_t k, const RunConfig& cfg, bool timings) {
    Json bundle;
    bundle["k"] = k;
    bundle["expression"] = to_dsl(c.certificate.expr);
    bundle["polynomial"] = to_json(c.certificate.rel);
    bundle["shape"] = to_json(c.certificate.shape);
    bundle["trace"] = to_json(c.trace, timings);
    if (c.certificate.rel.order() <= cfg.realization_cap) {
        bundle["graph6"] = to_graph6(realize(c.certificate.expr, cfg.realization_cap));
    }
    return bundle;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    file << text;
}

int cmd_construct(std::size_t k, const RunConfig& cfg, const SearchPolicy& policy,
                  const std::string& out_dir, bool timings, std::ostream& out, std::ostream& err) {
    if (k == 0) {
        throw UsageError("-k must be at least 1");
    }
    ConstructionConfig config{policy, cfg.precision, cfg.enumeration_cap};
    Construction c = [&] {
        try {
            return construct_k_intervals(k, config);
        } catch (const SearchExhaustedError& e) {
            out << to_json(e.trace(), timings).dump(2) << '\n';
            throw;
        }
    }();
    const Json bundle = bundle_json(c, k, cfg, timings);
    if (!out_dir.empty()) {
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "expression.dsl", bundle["expression"].get<std::string>() + "\n");
        write_file(dir / "polynomial.json", bundle["polynomial"].dump(2) + "\n");
        write_file(dir / "shape.json", bundle["shape"].dump(2) + "\n");
        write_file(dir / "trace.json", bundle["trace"].dump(2) + "\n");
        if (bundle.contains("graph6")) {
            write_file(dir / "certificate.g6", bundle["graph6"].get<std::string>() + "\n");
        }
    }
    if (cfg.format == Format::Json) {
        out << bundle.dump(2) << '\n';
    } else {
        out << "expression: " << bundle["expression"].get<std::string>() << '\n';
        out << "order: " << c.certificate.rel.order() << '\n';
        out << "degree: " << c.certificate.rel.poly().degree() << '\n';
        for (const auto& s : c.trace.steps) {
            out << "step " << s.index << ": " << to_string(s.kind) << " l=" << s.l
                << " order=" << s.order << " decrease_intervals=" << s.num_decrease_intervals
                << '\n';
        }
        print_shape(out, c.certificate.shape);
    }
    const bool certified = c.certificate.rel.connected() &&
                           c.certificate.shape.num_decrease_intervals() >= k;
    if (!certified) {
        err << "error: construction did not certify " << k << " intervals of decrease\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact node-reliability polynomials: compute, analyze, construct."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunConfig cfg;
    std::string format = "pretty";
    app.add_option("--precision", cfg.precision_text, "Width of root enclosures (e.g. 1e-6, 1/1024)")
        ->capture_default_str();
    app.add_option("--enum-cap", cfg.enumeration_cap, "Largest graph order enumerated exhaustively")
        ->check(CLI::Range(1, 63))
        ->capture_default_str();
    app.add_option("--realize-cap", cfg.realization_cap, "Largest explicit graph order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Monte-Carlo seed")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();

    InputSpec input;
    auto add_input = [&input](CLI::App* sub) {
        sub->add_option("input", input.file, "Edge-list file (.g6 for graph6)");
        sub->add_option("--dsl", input.dsl, "Graph expression, e.g. \"P5 | sub 3 | addIso\"");
        sub->fallthrough();
    };

    auto* rel = app.add_subcommand("rel", "Print the reliability polynomial");
    add_input(rel);
    auto* shape = app.add_subcommand("shape", "Certified extrema, decrease intervals, inflections");
    add_input(shape);

    std::size_t samples = 101;
    std::string out_file;
    auto* plot = app.add_subcommand("plot", "CSV rows p,rel at evenly spaced p in [0, 1]");
    add_input(plot);
    plot->add_option("-n,--samples", samples, "Number of rows")->capture_default_str();
    plot->add_option("-o,--out", out_file, "Output file (default stdout)");

    std::vector<std::string> points;
    std::uint64_t trials = 1'000'000;
    auto* verify = app.add_subcommand("verify", "Compare exact values with Monte-Carlo estimates");
    add_input(verify);
    verify->add_option("-p", points, "Probabilities to check")->required();
    verify->add_option("-t,--trials", trials, "Trials per probability")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string as = "edges";
    auto* expand = app.add_subcommand("expand", "Realize an expression as an explicit graph");
    add_input(expand);
    expand->add_option("--as", as, "Output encoding")
        ->check(CLI::IsMember({"edges", "g6"}))
        ->capture_default_str();
    expand->add_option("-o,--out", out_file, "Output file (default stdout)");

    std::size_t k = 1;
    SearchPolicy policy;
    std::string out_dir;
    bool timings = false;
    auto* construct = app.add_subcommand("construct", "Build a graph with k intervals of decrease");
    construct->fallthrough();
    construct->add_option("-k", k, "Number of maximal intervals of decrease")->required();
    construct->add_option("--soft-cap", policy.soft_cap, "Linear l-search limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    construct->add_option("--hard-cap", policy.hard_cap, "Doubling l-search limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    construct->add_option("--out", out_dir, "Directory for the certificate bundle files");
    construct->add_flag("--timings", timings, "Include wall-clock times in the trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Pretty;
        cfg.precision = parse_rational(cfg.precision_text);
        if (cfg.precision <= 0 || cfg.precision >= 1) {
            throw UsageError("--precision must lie in (0, 1)");
        }
        if (*construct) {
            return cmd_construct(k, cfg, policy, out_dir, timings, out, err);
        }
        const Input in = load(input);
        if (*rel) {
            return cmd_rel(in, cfg, out);
        }
        if (*shape) {
            return cmd_shape(in, cfg, out);
        }
        if (*plot) {
            return cmd_plot(in, cfg, samples, out_file, out);
        }
        if (*verify) {
            return cmd_verify(in, cfg, points, trials, out);
        }
        if (*expand) {
            return cmd_expand(in, cfg, as, out_file, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SearchExhaustedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace noderel
