#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relog/logbase.hpp"

namespace relog {

/// A published coefficient plus the interpretation its authors gave it.
struct AuditScenario {
    std::string id;
    std::string description;
    double published_beta = 0.0;
    std::optional<double> base_p;      // empty = natural log
    double claimed_change = 0.0;       // proportional change under discussion
    std::optional<double> claimed_effect;
    std::optional<double> reference_mean;
    std::string notes;
};

struct AuditFinding {
    std::string quantity;
    std::optional<double> claimed;
    double recomputed = 0.0;
    std::string method;  // traditional approx / traditional exact / rescaled
    std::string flag;
};

struct AuditResult {
    std::string id;
    std::string description;
    std::vector<AuditFinding> findings;
};

std::vector<AuditScenario> builtin_scenarios();
const AuditScenario& find_scenario(const std::string& id);

AuditResult run_audit(const AuditScenario& scenario);
AuditResult run_audit(const std::string& id);

}  // namespace relog
