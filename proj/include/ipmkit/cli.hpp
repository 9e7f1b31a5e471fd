#pragma once

#include <iosfwd>

namespace ipmkit::cli {

// Runs one toolkit command. Returns the process exit status:
//   0 success, 1 validation error, 2 numerical failure, 3 I/O error.
// Every non-zero return is accompanied by one diagnostic line on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipmkit::cli
