#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace aperylab {

struct RunConfig {
    long digits = 50;
    long terms = 400;
    std::filesystem::path cache_dir;
    bool json_output = false;
    unsigned long seed = 20240901;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs the full verification matrix: the zeta(3) cross-oracle, the five
// Apery constants, denominator/growth bounds, the modular identities and
// closed-form L(F,3), the Grassmannian limits by both routes, the sine
// formula, the integrality probe, the monodromy layer, and the quantum
// Lefschetz cross-checks. One line per criterion is written to `progress`
// as it completes (pass nullptr to silence).
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream* progress);

} // namespace aperylab
