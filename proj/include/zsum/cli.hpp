#pragma once

#include <iosfwd>

namespace zsum::cli {

// Exit codes: 0 success, 1 malformed input, 2 violations found,
// 3 scale refused or budget exceeded. JSON goes to `out` (or --output);
// diagnostics and --pretty summaries go to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace zsum::cli
