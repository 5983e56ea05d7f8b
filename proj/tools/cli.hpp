#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sagt/operators.hpp"

namespace sagt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Runs one `sagt` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a unitary from a text file: one matrix row per line, cells separated
/// by commas, each cell "re im". Throws std::runtime_error on parse failure or
/// when ||U^dagger U - I||_F exceeds 1e-8.
Operator load_unitary(const std::string& path);

/// Parses "re:im,re:im,..." into an amplitude vector (not normalized).
StateVector parse_amplitudes(const std::string& text);

}  // namespace sagt::cli
