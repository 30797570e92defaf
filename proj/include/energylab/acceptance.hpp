#pragma once

#include <string>
#include <vector>

namespace energylab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full verification battery (exact-identity, certificate, and
/// trend checks over the generated corpus). Shared by the acceptance test
/// binary and the CLI `verify-all` subcommand.
std::vector<CriterionResult> run_acceptance(bool verbose);

}  // namespace energylab
