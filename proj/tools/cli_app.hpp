#pragma once

namespace smdedge::cli {

// Parses argv and runs one of the subcommands: detect, compare, sweep.
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 malformed image.
int run(int argc, const char* const* argv);

}  // namespace smdedge::cli
