#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "indep/util.hpp"

namespace indep::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double millis;
};

/// Runs the full verification battery (one entry per criterion), printing
/// one pass/fail line per criterion to `out`. Returns the results; the
/// suite passes iff every entry does.
std::vector<CriterionResult> run_all(std::ostream& out, std::uint64_t seed = kDefaultSeed);

}  // namespace indep::acceptance
