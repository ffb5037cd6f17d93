#include "relog/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace relog {

namespace {

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string percent_text(const LogBase& b) {
    return format_g(b.p() * 100.0) + "%";
}

}  // namespace

StarRule StarRule::table_default() {
    return {{{0.1, "*"}, {0.05, "**"}, {0.01, "***"}}};
}

std::string StarRule::stars(double p_value) const {
    std::string out;
    double prev = std::numeric_limits<double>::infinity();
    std::set<std::string> seen;
    for (const auto& [cutoff, marker] : thresholds) {
        if (!(cutoff < prev)) {
            throw std::invalid_argument("star rule: cutoffs must be strictly decreasing");
        }
        if (!seen.insert(marker).second) {
            throw std::invalid_argument("star rule: markers must be unique");
        }
        prev = cutoff;
        if (p_value < cutoff) out = marker;  // strict "<"
    }
    return out;
}

std::string StarRule::footer_line() const {
    std::string out;
    for (const auto& [cutoff, marker] : thresholds) {
        if (!out.empty()) out += ", ";
        out += marker + " p < " + format_g(cutoff);
    }
    return out;
}

std::string format_fixed(double value, int decimals) {
    if (decimals < 0 || decimals > 17) {
        throw std::invalid_argument("format_fixed: decimals out of range");
    }
    long long scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    double scaled = value * static_cast<double>(scale);
    if (std::fabs(scaled) >= 9.0e18) {
        throw std::invalid_argument("format_fixed: value out of range");
    }
    // nearbyint under the default rounding mode is round-half-even
    long long units = static_cast<long long>(std::nearbyint(scaled));
    bool neg = units < 0;
    unsigned long long mag = neg ? static_cast<unsigned long long>(-units)
                                 : static_cast<unsigned long long>(units);
    std::string digits = std::to_string(mag % static_cast<unsigned long long>(scale));
    while (digits.size() < static_cast<size_t>(decimals)) digits.insert(0, "0");
    std::string out = neg && mag != 0 ? "-" : "";
    out += std::to_string(mag / static_cast<unsigned long long>(scale));
    if (decimals > 0) out += "." + digits;
    return out;
}

std::string term_label(const std::string& name, const TransformSpec& spec,
                       LabelStyle style) {
    if (spec.kind != TransformKind::rescaled_log &&
        spec.kind != TransformKind::rescaled_log1p) {
        return name;
    }
    const LogBase& b = *spec.base;
    if (style == LabelStyle::percent_suffix) {
        return name + " (" + percent_text(b) + " Increase)";
    }
    std::string arg = spec.kind == TransformKind::rescaled_log1p ? "1+" + name : name;
    return "log_" + format_g(b.base()) + "(" + arg + ") (" + percent_text(b) +
           " increase)";
}

std::string column_label(const FitResult& fit, LabelStyle style) {
    return term_label(fit.outcome_name, fit.outcome_transform, style);
}

std::string base_note(const TableSpec& spec) {
    std::set<std::pair<std::string, std::string>> bases;  // (percent, base text)
    for (const auto& col : spec.columns) {
        auto collect = [&](const TransformSpec& t) {
            if (t.kind == TransformKind::rescaled_log ||
                t.kind == TransformKind::rescaled_log1p) {
                bases.insert({percent_text(*t.base), format_g(t.base->base())});
            }
        };
        collect(col.fit.outcome_transform);
        for (const auto& t : col.fit.term_transforms) collect(t);
    }
    std::string out;
    for (const auto& [pct, base] : bases) {
        if (!out.empty()) out += " ";
        out += "Variables marked with " + pct + " increase use a base-" + base +
               " logarithm transformation.";
    }
    return out;
}

namespace {

struct TableGrid {
    std::vector<std::string> header;            // first cell empty
    std::vector<std::vector<std::string>> body; // coefficient/SE line pairs
    std::vector<std::vector<std::string>> tail; // Num.Obs. etc.
    std::vector<std::string> notes;
};

TableGrid build_grid(const TableSpec& spec) {
    if (spec.columns.empty()) {
        throw std::invalid_argument("render_table: no columns");
    }

    // row identity is the display label, so the same variable under two
    // transforms gets two rows
    auto label_for = [&](const FitResult& fit, size_t j) {
        const std::string& name = fit.term_names[j];
        auto it = spec.row_labels.find(name);
        if (it != spec.row_labels.end()) return it->second;
        return term_label(name, fit.term_transforms[j], spec.label_style);
    };

    for (const auto& [key, unused] : spec.row_labels) {
        bool known = false;
        for (const auto& col : spec.columns) {
            if (col.fit.term_index(key) >= 0) known = true;
        }
        if (!known) {
            throw std::invalid_argument("render_table: unknown term name in row labels: " + key);
        }
    }

    std::vector<std::string> row_order;
    for (const auto& col : spec.columns) {
        for (size_t j = 0; j < col.fit.term_names.size(); ++j) {
            if (!spec.show_intercept && col.fit.term_names[j] == "(Intercept)") continue;
            std::string label = label_for(col.fit, j);
            bool seen = false;
            for (const auto& r : row_order) {
                if (r == label) seen = true;
            }
            if (!seen) row_order.push_back(label);
        }
    }

    TableGrid grid;
    grid.header.push_back("");
    for (const auto& col : spec.columns) grid.header.push_back(col.label);

    for (const auto& label : row_order) {
        std::vector<std::string> coef_row{label};
        std::vector<std::string> se_row{""};
        for (const auto& col : spec.columns) {
            std::string coef_cell, se_cell;
            for (size_t j = 0; j < col.fit.term_names.size(); ++j) {
                if (!spec.show_intercept && col.fit.term_names[j] == "(Intercept)") continue;
                if (label_for(col.fit, j) != label) continue;
                coef_cell = format_fixed(col.fit.coefficients(j), spec.coef_decimals) +
                            spec.star_rule.stars(col.fit.p_values(j));
                se_cell = "(" + format_fixed(col.fit.standard_errors(j),
                                             spec.coef_decimals) + ")";
            }
            coef_row.push_back(coef_cell);
            se_row.push_back(se_cell);
        }
        grid.body.push_back(coef_row);
        grid.body.push_back(se_row);
    }

    std::vector<std::string> nobs{"Num.Obs."};
    for (const auto& col : spec.columns) nobs.push_back(std::to_string(col.fit.n));
    grid.tail.push_back(nobs);

    grid.notes.push_back(spec.star_rule.footer_line());
    std::string bn = base_note(spec);
    if (!bn.empty()) grid.notes.push_back(bn);
    for (const auto& note : spec.notes) grid.notes.push_back(note);
    return grid;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '%' || c == '&' || c == '_' || c == '#') out += '\\';
        if (c == '<') {
            out += "$<$";
            continue;
        }
        out += c;
    }
    return out;
}

std::string render_markdown(const TableGrid& grid) {
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        out << "|";
        for (const auto& cell : row) out << " " << cell << " |";
        out << "\n";
    };
    emit_row(grid.header);
    out << "|";
    for (size_t i = 0; i < grid.header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : grid.body) emit_row(row);
    for (const auto& row : grid.tail) emit_row(row);
    out << "\n";
    for (const auto& note : grid.notes) out << note << "\n";
    return out.str();
}

std::string render_latex(const TableGrid& grid) {
    size_t ncols = grid.header.size();
    std::ostringstream out;
    out << "\\begin{tabular}[t]{l";
    for (size_t i = 1; i < ncols; ++i) out << "c";
    out << "}\n\\toprule\n";
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << " & ";
            out << latex_escape(row[i]);
        }
        out << "\\\\\n";
    };
    emit_row(grid.header);
    out << "\\midrule\n";
    for (const auto& row : grid.body) emit_row(row);
    out << "\\midrule\n";
    for (const auto& row : grid.tail) emit_row(row);
    out << "\\bottomrule\n";
    for (const auto& note : grid.notes) {
        out << "\\multicolumn{" << ncols << "}{l}{" << latex_escape(note) << "}\\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

std::string render_csv_table(const TableGrid& grid) {
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << csv_cell(row[i]);
        }
        out << "\n";
    };
    emit_row(grid.header);
    for (const auto& row : grid.body) emit_row(row);
    for (const auto& row : grid.tail) emit_row(row);
    for (const auto& note : grid.notes) emit_row({csv_cell(note)});
    return out.str();
}

}  // namespace

std::string render_table(const TableSpec& spec, TableFormat format) {
    TableGrid grid = build_grid(spec);
    switch (format) {
        case TableFormat::markdown: return render_markdown(grid);
        case TableFormat::latex: return render_latex(grid);
        case TableFormat::csv: return render_csv_table(grid);
    }
    throw std::logic_error("unreachable table format");
}

std::string render_error_csv(const std::vector<ErrorCurve>& curves) {
    if (curves.empty()) {
        throw std::invalid_argument("render_error_csv: no curves");
    }
    const auto& grid0 = curves.front().grid;
    for (const auto& curve : curves) {
        if (curve.grid.size() != grid0.size()) {
            throw std::invalid_argument("render_error_csv: curves have mismatched grids");
        }
        for (size_t i = 0; i < grid0.size(); ++i) {
            if (std::fabs(curve.grid[i].first - grid0[i].first) > 1e-12) {
                throw std::invalid_argument("render_error_csv: curves have mismatched grids");
            }
        }
    }
    std::ostringstream out;
    out << "p";
    for (const auto& curve : curves) {
        std::string label = curve.method_label;
        for (char& c : label) {
            if (c == '.' || c == ' ') c = '_';
        }
        out << ",error_" << label;
    }
    out << "\n";
    for (size_t i = 0; i < grid0.size(); ++i) {
        out << format_fixed(grid0[i].first, 6);
        for (const auto& curve : curves) {
            out << "," << format_fixed(curve.grid[i].second, 6);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_audit(const std::vector<AuditResult>& results) {
    std::ostringstream out;
    for (const auto& result : results) {
        out << "Scenario: " << result.id << "\n";
        out << "  " << result.description << "\n";
        for (const auto& f : result.findings) {
            out << "  - " << f.quantity << " [" << f.method << "]\n";
            out << "      recomputed: " << format_fixed(f.recomputed, 4);
            if (f.claimed) {
                double pp = (*f.claimed - f.recomputed) * 100.0;
                out << "  published: " << format_g(*f.claimed)
                    << "  discrepancy: " << format_fixed(pp, 2) << " pp";
            }
            out << "\n";
            if (!f.flag.empty()) {
                out << "      flag: " << f.flag << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace relog
