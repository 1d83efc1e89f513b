#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qladder/check.hpp"

namespace qladder {

/// Parameters of a verification or emission run. Negative / INT_MIN fields
/// mean "use the target's default". Identical configs give byte-identical
/// output: nothing downstream depends on wall clock or addresses.
struct RunConfig {
    int n = -1;            // columns (lattice, quotient, complex), or k for splits
    int m = -1;            // rows of the m-leg ladder
    int q_max = -1;        // series truncation order
    int w_max = -1;        // Fock weight bound
    int t_min = INT_MIN;   // charge window
    int t_max = INT_MIN;
    int samples = -1;      // randomized checks per size
    unsigned seed = 20260801u;
    int threads = 1;
    bool force = false;    // lift the size caps below
};

/// Thrown when a config exceeds the built-in size caps (n <= 9 for quotients
/// and complexes, w_max <= 12, q_max <= 60) without force set.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One verification run: the named identity suites, each section a
/// CheckReport with every comparison recorded.
struct VerifyReport {
    std::string target;
    std::vector<CheckReport> sections;

    bool ok() const;
    long long line_count() const;
};

/// The accepted target names, "all" last.
const std::vector<std::string>& verify_targets();

/// Run one named suite. Throws std::invalid_argument for an unknown name
/// and CapError when cfg exceeds the caps without force.
VerifyReport verify_target(const std::string& target, const RunConfig& cfg);

}  // namespace qladder
