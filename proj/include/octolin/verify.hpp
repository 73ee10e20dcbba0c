#ifndef OCTOLIN_VERIFY_HPP
#define OCTOLIN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace octolin {

struct PropertyResult {
    std::string name;
    double max_residual;
    double tolerance; // infinity marks informational entries
    bool pass;
};

/// Runs every library property suite with the given seed. `trials` scales
/// the randomized checks; trials = 0 restricts to the deterministic fixed
/// cases. `inject_fault` appends a synthetic failing entry so harnesses can
/// exercise the failure path.
std::vector<PropertyResult> run_verification(std::uint64_t seed, int trials,
                                             bool inject_fault = false);

} // namespace octolin

#endif // OCTOLIN_VERIFY_HPP
