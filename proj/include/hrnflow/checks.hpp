#pragma once

// Brute-force oracles and the property suite shared by the acceptance
// tests and `hrnflow check`. Nothing in the library proper depends on this.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hrnflow/persistence.hpp"

namespace hrnflow::checks {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
};

// Deficit indexes walked one integer at a time from the smallest to the
// largest; each takes the first still-available surplus in a candidate list
// that passes the pairing test.
ErrorDiagram literal_p_intervals(std::span<const ErrorEvent> deficits,
                                 std::span<const ErrorEvent> surpluses, const MatchPolicy& policy);

// Minimum over every bijection of the diagonally augmented diagrams of the
// largest L-infinity displacement. Factorial time; keep inputs tiny.
Distance brute_force_bottleneck(const ErrorDiagram& a, const ErrorDiagram& b);

struct RawPoint {
    std::int64_t birth = 0;
    ExtendedInt death = 0;
    Dim multiplicity = 1;
};

// Direct summation of multiplicities over a raw (unmerged) point list.
Dim summed_persistent_dim(std::span<const RawPoint> points, std::int64_t i, std::int64_t j);

CheckResult check_hrn_shapes();
CheckResult check_flow_closed_forms();
CheckResult check_flow_cap_dominance();
CheckResult check_zero_absorption(std::size_t scenarios, std::uint64_t seed);
CheckResult check_cone_detection_absolute();
CheckResult check_cone_detection_incremental();
CheckResult check_chain_locality();
CheckResult check_p_interval_oracle();
CheckResult check_bottleneck_oracle(std::size_t pairs, std::uint64_t seed);
CheckResult check_bottleneck_pseudometric(std::size_t triples, std::uint64_t seed);
CheckResult check_persistent_dim(std::size_t diagrams, std::uint64_t seed);

std::vector<CheckResult> run_all(std::uint64_t seed = 20261016);

} // namespace hrnflow::checks
