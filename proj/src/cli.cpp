#include "qwhitney/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "qwhitney/lah.hpp"
#include "qwhitney/serialize.hpp"
#include "qwhitney/triangle.hpp"
#include "qwhitney/verify.hpp"
#include "qwhitney/whitney_first.hpp"
#include "qwhitney/whitney_second.hpp"

namespace qwhitney {

namespace {

struct GenOptions {
    std::string kind = "w1";
    long long m = 1;
    std::string alpha = "zero";
    int n = 4;
    std::string format = "json";
    std::string out_path;
};

struct VerifyOptions {
    std::vector<std::string> checks;
    std::uint64_t seed = kDefaultSeed;
    int samples = 25;
    int max_n = 12;
    std::string out_path;
};

struct ReduceOptions {
    std::string family;
    long long r = 0;
    long long m = 1;
    std::string alpha;  // carries beta for the q-Comtet families
    int n = 5;
    std::string format = "json";
    std::string out_path;
};

struct SeriesOptions {
    int k = 0;
    int order = 8;
    long long m = 1;
    std::string alpha = "zero";
    std::string out_path;
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw DomainError("cannot open output file '" + out_path + "'");
    }
    f << text;
}

bool is_q1_kind(const std::string& kind) { return kind == "w1-q1" || kind == "w2-q1"; }

std::string render_triangle(const std::string& kind, const ParameterSet& p,
                            const std::string& format) {
    const auto choose_poly = [&]() -> Triangle<QLaurentPoly> {
        if (kind == "w1") {
            return whitney_first::build_by_recurrence(p, p.capacity());
        }
        return whitney_second::build_by_recurrence(p, p.capacity());
    };
    std::optional<Triangle<QLaurentPoly>> poly_t;
    std::optional<IntTriangle> int_t;
    if (kind == "w1" || kind == "w2") {
        poly_t = choose_poly();
    } else if (kind == "w1-q1") {
        int_t = q1_limit(whitney_first::build_by_recurrence(p, p.capacity()));
    } else if (kind == "w2-q1") {
        int_t = q1_limit(whitney_second::build_by_recurrence(p, p.capacity()));
    } else if (kind == "lah") {
        int_t = lah::build_by_recurrence(p, p.capacity());
    } else {
        throw DomainError("unknown triangle kind '" + kind + "'");
    }
    if (format == "json") {
        const Json j = poly_t ? triangle_to_json(kind, p, *poly_t) : triangle_to_json(kind, p, *int_t);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        return poly_t ? triangle_to_csv(*poly_t) : triangle_to_csv(*int_t);
    }
    if (format == "latex") {
        return poly_t ? triangle_to_latex(*poly_t) : triangle_to_latex(*int_t);
    }
    throw DomainError("unknown format '" + format + "'");
}

int run_gen(const GenOptions& opt, std::ostream& out) {
    const Mode mode = opt.kind == "lah" ? Mode::IntegerMode : Mode::QMode;
    const ParameterSet p(opt.m, parse_alpha_spec(opt.alpha), opt.n, mode);
    emit(render_triangle(opt.kind, p, opt.format), opt.out_path, out);
    return kExitOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    VerifyPlan plan;
    plan.checks = opt.checks;
    plan.seed = opt.seed;
    plan.samples = opt.samples;
    plan.max_n = opt.max_n;
    const VerifyReport report = run_verify_plan(plan);
    emit(report.to_json().dump(2) + "\n", opt.out_path, out);
    return report.ok ? kExitOk : kExitIdentityFailure;
}

struct Family {
    std::string kind;      // which triangle to emit
    ParameterSet params;
};

Family resolve_family(const ReduceOptions& opt) {
    const std::string& f = opt.family;
    const int n = opt.n;
    const auto constant = [&](long long m, long long r, Mode mode) {
        return ParameterSet(m, Preset::constant(r), n, mode);
    };
    const auto zero = [&](long long m, Mode mode) { return ParameterSet(m, Preset::zero(), n, mode); };
    const auto affine = [&](Mode mode) {
        if (opt.alpha.empty()) {
            throw DomainError("family '" + f + "' needs --alpha affine:b0,b1,...");
        }
        const Preset preset = parse_alpha_spec(opt.alpha);
        if (preset.kind != Preset::Kind::Affine) {
            throw DomainError("family '" + f + "' needs an affine alpha spec");
        }
        return ParameterSet(1, preset, n, mode);
    };
    if (f == "q-stirling-1") return {"w1", zero(1, Mode::QMode)};
    if (f == "q-stirling-2") return {"w2", zero(1, Mode::QMode)};
    if (f == "noncentral-q-stirling-1") return {"w1", constant(1, opt.r, Mode::QMode)};
    if (f == "noncentral-q-stirling-2") return {"w2", constant(1, opt.r, Mode::QMode)};
    if (f == "q-comtet-1") return {"w1", affine(Mode::QMode)};
    if (f == "q-comtet-2") return {"w2", affine(Mode::QMode)};
    if (f == "stirling-1") return {"w1-q1", zero(1, Mode::QMode)};
    if (f == "stirling-2") return {"w2-q1", zero(1, Mode::QMode)};
    if (f == "r-whitney-1") return {"w1-q1", constant(opt.m, opt.r, Mode::QMode)};
    if (f == "r-whitney-2") return {"w2-q1", constant(opt.m, opt.r, Mode::QMode)};
    if (f == "lah") return {"lah", zero(1, Mode::IntegerMode)};
    if (f == "r-lah") return {"lah", constant(1, opt.r, Mode::IntegerMode)};
    if (f == "r-whitney-lah") return {"lah", constant(opt.m, opt.r, Mode::IntegerMode)};
    throw UnknownPreset("unknown family '" + f + "'");
}

int run_reduce(const ReduceOptions& opt, std::ostream& out) {
    const Family fam = resolve_family(opt);
    std::string text = render_triangle(fam.kind, fam.params, opt.format);
    if (opt.format == "json") {
        // record the family -> parameter mapping in the header
        Json j = Json::parse(text);
        Json wrapped = Json::object();
        wrapped["family"] = opt.family;
        for (auto& [key, value] : j.items()) {
            wrapped[key] = value;
        }
        text = wrapped.dump(2) + "\n";
    } else {
        text = "# family=" + opt.family + " m=" + std::to_string(fam.params.m()) +
               " alpha=" + alpha_spec_string(fam.params.preset()) + "\n" + text;
    }
    emit(text, opt.out_path, out);
    return kExitOk;
}

int run_series(const SeriesOptions& opt, std::ostream& out) {
    const ParameterSet p(opt.m, parse_alpha_spec(opt.alpha), opt.k + 1, Mode::QMode);
    const auto series = whitney_second::ogf_column(p, opt.k, opt.order);
    emit(series_to_json(opt.k, series).dump(2) + "\n", opt.out_path, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact (q,alpha)-Whitney, Stirling and Lah triangle calculator"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a triangle");
    gen_cmd->add_option("--kind", gen.kind, "Triangle kind: w1|w2|lah|w1-q1|w2-q1");
    gen_cmd->add_option("--m", gen.m, "Modulus m (nonnegative)");
    gen_cmd->add_option("--alpha", gen.alpha,
                        "Alpha spec: zero|constant:R|affine:b0,b1,...|explicit:a0,a1,...");
    gen_cmd->add_option("--n", gen.n, "Number of rows");
    gen_cmd->add_option("--format", gen.format, "Output format: json|csv|latex");
    gen_cmd->add_option("--out", gen.out_path, "Output path (default: stdout)");

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity verification sweeps");
    verify_cmd->add_option("--checks", ver.checks,
                           "Checks: routes|defining|orthogonality|inverse|ogf|lah-matrix|cheon-jung")
        ->delimiter(',');
    verify_cmd->add_option("--seed", ver.seed, "RNG seed");
    verify_cmd->add_option("--samples", ver.samples, "Random parameter sets per check");
    verify_cmd->add_option("--max-n", ver.max_n, "Largest triangle size");
    verify_cmd->add_option("--out", ver.out_path, "Output path (default: stdout)");

    ReduceOptions red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Emit a classical special-case triangle");
    reduce_cmd->add_option("--family", red.family,
                           "q-stirling-1|q-stirling-2|noncentral-q-stirling-1|noncentral-q-stirling-2|"
                           "q-comtet-1|q-comtet-2|stirling-1|stirling-2|r-whitney-1|r-whitney-2|"
                           "lah|r-lah|r-whitney-lah")
        ->required();
    reduce_cmd->add_option("--r", red.r, "Shift parameter r");
    reduce_cmd->add_option("--m", red.m, "Modulus m for the r-Whitney families");
    reduce_cmd->add_option("--alpha", red.alpha, "affine:b0,b1,... for the q-Comtet families");
    reduce_cmd->add_option("--n", red.n, "Number of rows");
    reduce_cmd->add_option("--format", red.format, "Output format: json|csv|latex");
    reduce_cmd->add_option("--out", red.out_path, "Output path (default: stdout)");

    SeriesOptions ser;
    auto* series_cmd = app.add_subcommand("series", "Column ordinary generating function");
    series_cmd->add_option("--k", ser.k, "Column index");
    series_cmd->add_option("--order", ser.order, "Truncation order (>= k)");
    series_cmd->add_option("--m", ser.m, "Modulus m");
    series_cmd->add_option("--alpha", ser.alpha, "Alpha spec");
    series_cmd->add_option("--out", ser.out_path, "Output path (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return run_gen(gen, out);
        }
        if (verify_cmd->parsed()) {
            return run_verify(ver, out);
        }
        if (reduce_cmd->parsed()) {
            return run_reduce(red, out);
        }
        return run_series(ser, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qwhitney
