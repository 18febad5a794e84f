#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indep::cli {

/// Runs one CLI command (args exclude the program name). Exit status 0:
/// all verdicts pass; 1: a verification failure was reported; 2: usage or
/// input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indep::cli
