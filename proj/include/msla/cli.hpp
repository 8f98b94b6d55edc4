#pragma once

namespace msla {

// Entry point of the command line tool; returns the process exit code:
//   0  success (for verify: all trials passed or were unknown)
//   1  verify ran and found failing trials
//   2  usage errors, unknown suite names, unreadable or malformed input
//      documents
//   3  precondition violations (mismatched dimensions, out-of-range
//      depths, degenerate forms)
int run_cli(int argc, const char* const* argv);

}  // namespace msla
