#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "monogamy/states.hpp"

namespace monogamy {

/// Parses `[[re, im], ...]` with exactly eight entries ordered |abc>, a most
/// significant. Throws ValidationError on malformed text or an invalid state.
PureState3Q parse_state(std::string_view text);
PureState3Q read_state_file(const std::filesystem::path& path);

/// Inverse of parse_state; numbers use 17 significant digits.
std::string format_state(const PureState3Q& psi);

}  // namespace monogamy
