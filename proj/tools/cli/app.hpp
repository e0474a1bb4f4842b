#pragma once

#include <ostream>

namespace geab::cli {

/// Environment variable naming a key=value config file; --config wins.
inline constexpr const char* config_env_var = "GEAB_CONFIG";

/// Entry point of the geab tool. Exit codes: 0 success, 1 computation
/// error or failed verification, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geab::cli
