#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arthur::cli {

// args excludes the program name. Exit codes: 0 success, 1 violations,
// 2 usage, parse or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arthur::cli
