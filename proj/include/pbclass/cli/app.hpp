#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitReferenceMismatch = 4;

/// Entry point of the `pbclass` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pbclass::cli
