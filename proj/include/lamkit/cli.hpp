#pragma once

#include <ostream>

namespace lamkit {

/// Runs the command line. Exit codes: 0 success or member, 1 domain error or
/// non-member, 2 inconclusive, 64 usage error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lamkit
