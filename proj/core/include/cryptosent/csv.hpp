#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cryptosent {

/// Shortest round-trip decimal representation (std::to_chars). Deterministic,
/// so repeated runs produce byte-identical files.
std::string format_double(double v);

std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);

/// Quotes a field per RFC 4180 when it contains a comma, quote, or newline.
std::string csv_quote(std::string_view field);

std::string csv_join(const std::vector<std::string>& fields);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
};

/// Parses RFC 4180 CSV (quoted fields may contain commas, quotes, and
/// newlines). The first record is the header. Throws DataError when the file
/// cannot be opened.
CsvTable read_csv(const std::string& path);

/// Parses CSV from an in-memory buffer.
CsvTable parse_csv(std::string_view content);

}  // namespace cryptosent
