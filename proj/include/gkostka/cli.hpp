#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkostka::cli {

/// Exit codes: 0 success, 1 property failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gkostka::cli
