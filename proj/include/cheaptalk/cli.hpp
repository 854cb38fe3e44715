#pragma once

namespace cheaptalk {

/// Command-line entry point. Exit codes: 0 success, 1 negative verdict,
/// 2 input error, 3 internal assertion failure.
int cli_main(int argc, const char* const* argv);

}  // namespace cheaptalk
