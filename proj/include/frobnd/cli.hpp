#ifndef FROBND_CLI_HPP
#define FROBND_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frobnd/types.hpp"

namespace frobnd {

/// Contents of a vector-set JSON file: {"dim": s, "vectors": [[...], ...], "label": "..."}.
struct VectorSetFile {
  std::size_t dim = 0;
  std::vector<IntVector> vectors;
  std::optional<std::string> label;
};

/// Parses the JSON text; errors are ParseError with a line number.
VectorSetFile parse_vector_set(const std::string& text);

/// Canonical form: sorted keys, no whitespace.
std::string canonical_json(const VectorSetFile& file);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Exit status for an error kind: 3 for numerical failures, 2 otherwise.
int exit_code(ErrorKind kind);

/// Entry point behind the frobnd executable. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobnd

#endif  // FROBND_CLI_HPP
