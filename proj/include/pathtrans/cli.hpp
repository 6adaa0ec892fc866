#pragma once

namespace pathtrans::cli {

/// Entry point shared by the binary and the tests.
/// Exit codes: 0 all checks pass, 1 law failure, 2 bad config, 3 numerical
/// failure.
int run_main(int argc, const char* const* argv);

}  // namespace pathtrans::cli
