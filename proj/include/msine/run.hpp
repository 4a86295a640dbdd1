#pragma once

#include <ostream>

#include "msine/config.hpp"

namespace msine {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitReproductionFailure = 2;

/// Executes config.command, writing CSV (or SVG for emit-circle with svg = true) to
/// config.output when set and to out otherwise. Errors go to err. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace msine
