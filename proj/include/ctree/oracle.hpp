#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ctree/itinerary.hpp"

namespace ctree {

/// Raw orbit under x -> x/2, 3x+1. values.front() == start; for start == 1
/// the orbit runs once around the cycle: [1, 4, 2, 1].
struct Orbit {
    Nat start;
    std::vector<Nat> values;
    bool reached_one = false;
    std::uint64_t steps = 0;
};

Orbit orbit(const Nat& x, std::uint64_t budget = kDefaultStepBudget);

enum class Check {
    Classification,
    HubImage,
    PreimageFormulas,
    CanonicalRelation,
    PrimitiveDecomposition,
    PumpPeriodicity,
    Coverage,
};

const std::vector<Check>& all_checks();
std::string check_name(Check c);
/// Throws ParseError for an unknown name.
Check parse_check(const std::string& name);

struct VerificationFailure {
    Nat value;
    std::string check;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    Nat lo;
    Nat hi;
    std::map<std::string, std::uint64_t> checks_run;
    std::vector<VerificationFailure> failures;
    std::vector<Nat> trivial_cycle_excluded;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

struct SweepOptions {
    unsigned partitions = 1;
    std::uint64_t budget = kDefaultStepBudget;
    unsigned max_depth = kDefaultBackwardDepth;
};

/// Runs the selected checks on every odd x in [lo, hi). The range is split
/// into contiguous partitions run on separate threads; results are merged
/// in range order, so the report does not depend on the partition count.
VerificationReport sweep(const Nat& lo, const Nat& hi, const std::set<Check>& checks,
                         const SweepOptions& options = {});

}  // namespace ctree
