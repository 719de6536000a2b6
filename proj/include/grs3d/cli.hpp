#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "grs3d/algebra_catalog.hpp"

namespace grs3d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// "A=1,B=-0.5" -> {A: 1, B: -0.5}. Throws ValidationError on malformed input.
ParamMap parse_params(const std::string& text);
/// "x1,x2,x3". Throws ValidationError.
Vec3 parse_vec3(const std::string& text);

/// Runs one command; args exclude the program name. Reports go to out (or
/// the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grs3d::cli
