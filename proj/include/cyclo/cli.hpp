#pragma once

#include <iosfwd>

namespace cyclo {

// Exit codes: 0 success, 1 verification or bound failure, 2 invalid input.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cyclo
