#pragma once

namespace bstir {

// Full command-line driver. Returns the process exit code:
//   0 success, 1 verification failure, 2 usage or domain error.
int run_cli(int argc, const char* const* argv);

}  // namespace bstir
