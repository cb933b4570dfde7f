#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace angcalc::cli {

/// Exit codes: 0 ok, 1 domain error (error JSON on `err`) or failed
/// verification, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace angcalc::cli
