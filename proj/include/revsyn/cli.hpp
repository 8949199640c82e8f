#pragma once

#include <ostream>

namespace revsyn {

/// Entry point of the `revsyn` tool. Returns 0 on success, 1 when a
/// verification fails and 2 on input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace revsyn
