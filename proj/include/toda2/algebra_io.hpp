#pragma once

#include "toda2/algebra.hpp"

#include <string>

namespace toda2 {

/// JSON algebra-spec document. Matrices are nested row arrays; every number is
/// written with 17 significant digits so a reload is bit-identical.
std::string serialize_spec(const Algebra& alg);

/// Parses and validates a spec document. Throws ParseError on malformed input
/// and ValidationError when an algebra invariant fails.
Algebra parse_spec(const std::string& document);

void save_spec(const Algebra& alg, const std::string& path);
Algebra load_spec(const std::string& path);

}  // namespace toda2
