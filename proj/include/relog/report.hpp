#pragma once

#include <map>
#include <string>
#include <vector>

#include "relog/audit.hpp"
#include "relog/interpret.hpp"
#include "relog/regress.hpp"

namespace relog {

struct StarRule {
    // (p cutoff, marker), strictly decreasing cutoffs; strict "<" comparison
    std::vector<std::pair<double, std::string>> thresholds;

    static StarRule table_default();  // * p < 0.1, ** p < 0.05, *** p < 0.01
    std::string stars(double p_value) const;
    std::string footer_line() const;
};

enum class LabelStyle { percent_suffix, log_notation };

struct TableColumn {
    FitResult fit;
    std::string label;
};

struct TableSpec {
    std::vector<TableColumn> columns;
    std::map<std::string, std::string> row_labels;  // overrides auto labels
    StarRule star_rule = StarRule::table_default();
    std::vector<std::string> notes;
    LabelStyle label_style = LabelStyle::percent_suffix;
    int coef_decimals = 3;
    bool show_intercept = false;
};

enum class TableFormat { markdown, latex, csv };

// Fixed-decimal formatting with round-half-even.
std::string format_fixed(double value, int decimals);

// Auto row label, e.g. "x (10% Increase)" or "log_1.1(x) (10% increase)".
std::string term_label(const std::string& name, const TransformSpec& spec,
                       LabelStyle style);

// Auto column label from the fitted outcome, e.g. "y (10% Increase)".
std::string column_label(const FitResult& fit, LabelStyle style);

// Footer note naming the bases in use, or "" if no rescaled terms appear.
std::string base_note(const TableSpec& spec);

std::string render_table(const TableSpec& spec, TableFormat format);

// Shared p-grid required; one p column plus one error column per method,
// fixed 6-decimal values.
std::string render_error_csv(const std::vector<ErrorCurve>& curves);

std::string render_audit(const std::vector<AuditResult>& results);

}  // namespace relog
