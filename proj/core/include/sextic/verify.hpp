#pragma once

#include <string>
#include <vector>

namespace sextic {

enum class VerifyScope { All, Cohomology, Chern, Classify };

VerifyScope parse_scope(std::string_view s);  // "all" | "cohomology" | "chern" | "classify"

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool overall = false;
};

/// Deterministic self-check suite: ring laws and closed-form identities,
/// cohomology dualities and censuses, the Riemann-Roch oracle, and the full
/// classification tables.  Chow-ring checks run under the chern scope.
VerifyReport run_verify(VerifyScope scope);

/// One "name: pass|fail" line per check plus a summary line.
std::string render_verify_text(const VerifyReport& report);
std::string render_verify_json(const VerifyReport& report);

}  // namespace sextic
