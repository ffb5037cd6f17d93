#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "relog/audit.hpp"
#include "relog/csv.hpp"
#include "relog/formula.hpp"
#include "relog/interpret.hpp"
#include "relog/logbase.hpp"
#include "relog/regress.hpp"
#include "relog/report.hpp"
#include "relog/zeros.hpp"

namespace {

using namespace relog;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + out_path);
    }
    out << text;
}

std::string prop_line(const char* name, double v) {
    std::ostringstream ss;
    ss << name << ": " << v << "  (" << format_fixed(v * 100.0, 2) << "%)\n";
    return ss.str();
}

struct TransformArgs {
    std::string input, column, kind, output;
    double p = 0.0;
    bool has_p = false;
};

int cmd_transform(const TransformArgs& args) {
    Dataset data = read_csv_file(args.input);
    if (!data.has_column(args.column)) {
        throw std::invalid_argument("no such column: " + args.column);
    }

    TransformSpec spec;
    std::string suffix;
    if (args.kind == "log") {
        if (args.has_p) {
            spec = TransformSpec::rescaled_log(LogBase::from_p(args.p));
            std::ostringstream ss;
            ss << "log_" << spec.base->base();
            suffix = ss.str();
        } else {
            spec = TransformSpec::natural_log();
            suffix = "log_e";
        }
    } else if (args.kind == "log1p") {
        LogBase b = args.has_p ? LogBase::from_p(args.p) : LogBase::natural();
        spec = TransformSpec::rescaled_log1p(b);
        if (args.has_p) {
            std::ostringstream ss;
            ss << "log1p_" << b.base();
            suffix = ss.str();
        } else {
            suffix = "log1p_e";
        }
    } else if (args.kind == "asinh") {
        spec = TransformSpec::asinh();
        suffix = "asinh";
    } else if (args.kind == "identity") {
        spec = TransformSpec::identity();
        suffix = "identity";
    } else {
        throw CLI::ValidationError("--kind", "unknown kind: " + args.kind);
    }

    const auto& raw = data.column(args.column);
    std::vector<double> transformed(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        try {
            transformed[i] = spec.apply(raw[i]);
        } catch (const std::invalid_argument& e) {
            std::ostringstream ss;
            ss << "column " << args.column << ", row " << i + 1 << ": " << e.what();
            if (spec.kind == TransformKind::natural_log ||
                spec.kind == TransformKind::rescaled_log) {
                ss << " (consider --kind log1p)";
            }
            throw std::invalid_argument(ss.str());
        }
    }
    data.add_column(args.column + "__" + suffix, std::move(transformed));

    std::ostringstream out;
    write_csv(out, data);
    write_output(args.output, out.str());
    return 0;
}

struct InterpretArgs {
    double beta = 0.0;
    double base_p = 0.0;
    bool has_base_p = false;
    bool natural = false;
    std::string side = "rhs";
    double to_p = 0.0;
    bool has_to_p = false;
    double units = 1.0;
};

int cmd_interpret(const InterpretArgs& args) {
    if (args.natural == args.has_base_p) {
        throw CLI::ValidationError("interpret",
                                   "give exactly one of --base-p and --natural");
    }
    LogBase base = args.natural ? LogBase::natural() : LogBase::from_p(args.base_p);

    std::ostringstream out;
    if (args.side == "rhs") {
        double beta = args.beta;
        LogBase reporting_base = base;
        if (args.has_to_p) {
            reporting_base = LogBase::from_p(args.to_p);
            beta = rescale_coefficient(args.beta, base, reporting_base);
            out << "rescaled coefficient: " << format_fixed(beta, 4) << "\n";
        }
        out << "exact: a " << format_fixed(reporting_base.p() * 100.0, 2)
            << "% increase in X is associated with a " << format_fixed(beta, 4)
            << " change in Y\n";
        double approx_beta = args.beta * (args.has_to_p ? args.to_p : base.p());
        out << "traditional approximation for the same change: "
            << format_fixed(approx_beta, 4) << "  (error "
            << format_fixed(approx_beta - beta, 4) << ")\n";
    } else if (args.side == "lhs") {
        double change = args.beta * args.units;
        double exact = exact_percent_change(base, change);
        double approx = change * base.p();
        out << prop_line("exact_prop", exact);
        out << prop_line("approx_prop", approx);
        out << prop_line("error", approx - exact);
    } else {
        throw CLI::ValidationError("--side", "expected lhs or rhs");
    }
    write_output("", out.str());
    return 0;
}

struct ErrorCurveArgs {
    std::vector<double> bases;
    double p_max = 0.5;
    double step = 0.005;
    std::string output;
};

int cmd_error_curve(const ErrorCurveArgs& args) {
    std::vector<ErrorMethod> methods;
    methods.push_back(traditional_method());
    if (args.bases.empty()) {
        methods.push_back(rescaled_method(LogBase::from_p(0.1)));
        methods.push_back(rescaled_method(LogBase::from_p(0.4)));
    } else {
        for (double b : args.bases) {
            methods.push_back(generic_method(b));
        }
    }
    std::vector<ErrorCurve> curves;
    for (const auto& m : methods) {
        curves.push_back(error_curve(m, 0.0, args.p_max, args.step));
    }
    write_output(args.output, render_error_csv(curves));
    return 0;
}

struct FitArgs {
    std::string input, model, format = "markdown", output;
    bool log_labels = false;
};

int cmd_fit(const FitArgs& args) {
    ModelSpec model = parse_model(args.model);
    Dataset data = read_csv_file(args.input);
    FitResult fit = fit_model(data, model);

    TableSpec table;
    table.label_style = args.log_labels ? LabelStyle::log_notation
                                        : LabelStyle::percent_suffix;
    table.columns.push_back({fit, column_label(fit, table.label_style)});
    table.notes.push_back("Data from " + args.input + ".");

    TableFormat fmt;
    if (args.format == "markdown" || args.format == "md") fmt = TableFormat::markdown;
    else if (args.format == "latex") fmt = TableFormat::latex;
    else if (args.format == "csv") fmt = TableFormat::csv;
    else throw CLI::ValidationError("--format", "expected markdown, latex, or csv");

    write_output(args.output, render_table(table, fmt));
    return 0;
}

struct AuditArgs {
    std::string scenario;
};

int cmd_audit(const AuditArgs& args) {
    std::vector<AuditResult> results;
    if (args.scenario.empty()) {
        for (const auto& s : builtin_scenarios()) results.push_back(run_audit(s));
    } else {
        results.push_back(run_audit(args.scenario));
    }
    write_output("", render_audit(results));
    return 0;
}

struct ElasticityArgs {
    double beta = 0.0, se = 0.0;
    double px = 0.0, py = 0.0, x0 = 0.0, y0 = 0.0;
    bool has_py = false, has_y0 = false;
};

int cmd_elasticity(const ElasticityArgs& args) {
    auto factor_line = [](const char* name, double factor) {
        std::ostringstream ss;
        ss << name << ": " << factor << "  (a "
           << format_fixed((factor - 1.0) * 100.0, 2) << "% change)\n";
        return ss.str();
    };
    std::ostringstream out;
    out << factor_line("prop_change_x", exact_prop_change_x(args.px, args.x0));
    if (args.has_py || args.has_y0) {
        if (!(args.has_py && args.has_y0)) {
            throw CLI::ValidationError("elasticity", "--py and --y0 go together");
        }
        ZeroContext ctx{args.px, args.x0, args.py, args.y0};
        ElasticityReading reading = elasticity_recovery(args.beta, args.se, ctx);
        out << factor_line("prop_change_y", reading.prop_change_y);
        out << "se_prop_change_y: " << reading.se_prop_change_y << "\n";
        out << "note: " << reading.note << "\n";
    }
    write_output("", out.str());
    return 0;
}

struct SimulateArgs {
    std::uint64_t seed = 1;
    long n = 1000;
    std::string dgp = "linear-log";
    SimParams params;
    std::string output;
};

int cmd_simulate(const SimulateArgs& args) {
    Dataset data = simulate_dataset(args.seed, args.n, parse_dgp(args.dgp), args.params);
    std::ostringstream out;
    write_csv(out, data);
    write_output(args.output, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"base-(1+p) logarithms for regression interpretation"};
    app.require_subcommand(1);

    TransformArgs t;
    auto* transform = app.add_subcommand("transform", "append a transformed column to a CSV");
    transform->add_option("input", t.input, "input CSV file")->required();
    transform->add_option("--column", t.column, "column to transform")->required();
    transform->add_option("--kind", t.kind, "log, log1p, asinh, or identity")->required();
    auto* t_p = transform->add_option("--p", t.p, "proportional change of the base");
    transform->add_option("--out", t.output, "output CSV file (default stdout)");

    InterpretArgs i;
    auto* interpret = app.add_subcommand("interpret", "interpret a log coefficient");
    interpret->add_option("--beta", i.beta, "coefficient")->required();
    auto* i_bp = interpret->add_option("--base-p", i.base_p, "base proportional change");
    interpret->add_flag("--natural", i.natural, "natural log base");
    interpret->add_option("--side", i.side, "lhs or rhs (default rhs)");
    auto* i_tp = interpret->add_option("--to-p", i.to_p, "rescale to this base");
    interpret->add_option("--units", i.units, "log units of change (lhs, default 1)");

    ErrorCurveArgs e;
    auto* errc = app.add_subcommand("error-curve", "tabulate approximation error");
    errc->add_option("--bases", e.bases, "generic bases to scan (default: rescaled 1.1 and 1.4)");
    errc->add_option("--p-max", e.p_max, "grid upper bound (default 0.5)");
    errc->add_option("--step", e.step, "grid step (default 0.005)");
    errc->add_option("--out", e.output, "output CSV file (default stdout)");

    FitArgs f;
    auto* fit = app.add_subcommand("fit", "fit an OLS model and render a table");
    fit->add_option("input", f.input, "input CSV file")->required();
    fit->add_option("model", f.model, "model, e.g. \"y ~ log(x, p=0.1)\"")->required();
    fit->add_option("--format", f.format, "markdown, latex, or csv");
    fit->add_flag("--log-labels", f.log_labels, "use log_b(x) style row labels");
    fit->add_option("--out", f.output, "output file (default stdout)");

    AuditArgs a;
    auto* audit = app.add_subcommand("audit", "recompute published case-study numbers");
    audit->add_option("--scenario", a.scenario, "scenario id (default: all)");

    ElasticityArgs el;
    auto* elasticity = app.add_subcommand("elasticity", "exact elasticity recovery with zeroes");
    elasticity->add_option("--beta", el.beta, "log-log coefficient");
    elasticity->add_option("--se", el.se, "standard error of beta");
    elasticity->add_option("--px", el.px, "base proportional change for X")->required();
    elasticity->add_option("--x0", el.x0, "evaluation point X0")->required();
    auto* el_py = elasticity->add_option("--py", el.py, "base proportional change for Y");
    auto* el_y0 = elasticity->add_option("--y0", el.y0, "evaluation point Y0");

    SimulateArgs s;
    auto* simulate = app.add_subcommand("simulate", "generate a seeded synthetic dataset");
    simulate->add_option("--seed", s.seed, "RNG seed (default 1)");
    simulate->add_option("--n", s.n, "observations (default 1000)");
    simulate->add_option("--dgp", s.dgp, "linear-log, log-linear, or log-log");
    simulate->add_option("--beta0", s.params.beta0, "intercept");
    simulate->add_option("--beta1", s.params.beta1, "slope");
    simulate->add_option("--noise", s.params.noise_sd, "noise sd on the transformed scale");
    simulate->add_option("--base-p", s.params.base_p, "base proportional change (0 = natural)");
    simulate->add_option("--x-log-mean", s.params.x_log_mean, "mean of ln(X)");
    simulate->add_option("--x-log-sd", s.params.x_log_sd, "sd of ln(X)");
    simulate->add_option("--out", s.output, "output CSV file (default stdout)");

    try {
        app.parse(argc, argv);
        t.has_p = t_p->count() > 0;
        i.has_base_p = i_bp->count() > 0;
        i.has_to_p = i_tp->count() > 0;
        el.has_py = el_py->count() > 0;
        el.has_y0 = el_y0->count() > 0;

        if (transform->parsed()) return cmd_transform(t);
        if (interpret->parsed()) return cmd_interpret(i);
        if (errc->parsed()) return cmd_error_curve(e);
        if (fit->parsed()) return cmd_fit(f);
        if (audit->parsed()) return cmd_audit(a);
        if (elasticity->parsed()) return cmd_elasticity(el);
        if (simulate->parsed()) return cmd_simulate(s);
        return 1;
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : 1;
    } catch (const relog::parse_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
