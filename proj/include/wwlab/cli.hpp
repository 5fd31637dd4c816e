#pragma once

#include <string>
#include <vector>

namespace wwlab {

/// Entry point behind the wwlab binary. Exit codes: 0 success, 2 usage or
/// unknown subcommand, 3 invalid model/dims/config, 4 width out of range for
/// the requested decomposition, 1 internal error.
int run(const std::vector<std::string>& args);

}  // namespace wwlab
