#pragma once

// Command-line surface: count / verify / render / bijection. Kept as a
// library entry point so the test-suite can drive it in-process.

namespace tilt {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;    // bad parameters or parse failure
inline constexpr int kExitMismatch = 3;   // formula/oracle disagreement
inline constexpr int kExitResource = 4;   // region too wide for the oracle guard
inline constexpr int kExitIndex = 5;      // tiling index out of range

int run_cli(int argc, const char* const* argv);

}  // namespace tilt
