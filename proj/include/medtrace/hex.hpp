#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace medtrace {

/// Lowercase hex encoding, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Decodes an even-length hex string (either case). Throws MalformedDataError
/// on odd length or a non-hex digit.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace medtrace
