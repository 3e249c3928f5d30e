#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icdof/inequalities.hpp"
#include "icdof/rng.hpp"

namespace icdof {

/// Seeded randomized suite over one inequality verifier.  Instance i is
/// generated from the (seed, i) substream, so reruns are byte-reproducible
/// regardless of worker count.
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int instances = 0;
    int violations = 0;
    int premise_passing = 0;  // balancing suite only
    std::vector<InequalityReport> checks;
};

// Names: subadditivity, max_lower_bound, pr_sum, wu_thm14, wu_lem18, delta,
// balancing.  Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, int instances, std::uint64_t seed,
                      int workers = 1);

std::vector<std::string> suite_names();

}  // namespace icdof
