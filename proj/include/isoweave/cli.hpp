#pragma once

namespace isoweave {

// Exit codes: 0 success, 1 domain rejection, 2 malformed input/usage.
int cli_main(int argc, char** argv);

}  // namespace isoweave
