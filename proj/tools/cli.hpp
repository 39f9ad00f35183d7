#pragma once

#include <ostream>

namespace equinet::cli {

// Exit codes: 0 success, 1 validation error, 2 internal error, 3 some
// verify-paper check failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equinet::cli
