#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cryptosent {

/// Seconds since the UNIX epoch, always UTC.
using UtcSeconds = std::int64_t;

/// Parses "YYYY-MM-DDTHH:MM:SS" (optional ".frac", optional "Z" or "+/-HH:MM"
/// offset, 'T' or space separator) or a plain integer of epoch seconds.
/// Inputs without zone info are treated as UTC. Returns nullopt on malformed
/// input or out-of-range field values.
std::optional<UtcSeconds> parse_timestamp(std::string_view text);

/// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(UtcSeconds t);

/// Start of the minute containing t.
UtcSeconds floor_to_minute(UtcSeconds t);

/// Start of the minute strictly after t. A timestamp already on a minute
/// boundary still advances: ceil_to_next_minute(12:05:00) == 12:06:00.
UtcSeconds ceil_to_next_minute(UtcSeconds t);

}  // namespace cryptosent
