#pragma once

namespace latticestop {

// Full command-line entry point; returns the process exit status.
// 0 = success, 1 = runtime/validation error, 3 = --assert verdict failed;
// argument parsing errors return CLI-parser codes (nonzero).
int run_cli(int argc, const char* const* argv);

}  // namespace latticestop
