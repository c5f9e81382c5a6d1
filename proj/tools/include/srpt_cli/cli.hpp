#pragma once

#include <iosfwd>

namespace srpt::cli {

// Exit codes: 0 success, 1 domain error (stable srpt error code printed on
// stderr), 2 usage error or unreadable input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srpt::cli
