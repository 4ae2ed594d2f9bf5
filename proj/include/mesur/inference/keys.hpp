#pragma once

#include <string>
#include <string_view>

#include "mesur/rdf/term.hpp"

namespace mesur::inference {

/// Lowercase hex SHA-256 of the input.
std::string sha256_hex(std::string_view data);

/// Deterministic blank node for an aggregate context, derived from its key
/// (rule name, participants, windows). Labels live in the reserved generated
/// space so they never collide with user data or counter-minted nodes.
rdf::Term keyed_blank(std::string_view key);

}  // namespace mesur::inference
