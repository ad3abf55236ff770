#pragma once

#include <string>
#include <vector>

#include "cryptosent/types.hpp"

namespace cryptosent {

struct TweetParseResult {
  std::vector<TweetRecord> tweets;
  IngestReport report;
};

struct PriceParseResult {
  std::vector<PriceBar> bars;
  IngestReport report;
};

struct JoinResult {
  std::vector<JoinedRow> rows;
  std::size_t dropped = 0;
};

/// Parses a JSONL tweet file (one object per line, nested "user" object
/// flattened). Malformed lines and duplicate ids are counted, not fatal;
/// an unreadable file throws DataError. Both "favourite_count" and
/// "favorite_count" spellings are accepted, first match wins.
TweetParseResult parse_tweets(const std::string& path);

/// Parses tweets from an in-memory JSONL buffer.
TweetParseResult parse_tweets_text(std::string_view content);

/// Serializes records back to JSONL in the ingest shape (user fields nested).
/// parse(serialize(x)) reproduces every field of x exactly.
std::string tweets_to_jsonl(const std::vector<TweetRecord>& tweets);

/// Parses a CryptoCompare-shaped minute-history CSV. Requires the columns
/// time,high,low,open,volumefrom,volumeto,close (a missing column throws
/// DataError). Rows violating the OHLC invariants are skipped and counted;
/// output is sorted ascending by time with duplicate minutes dropped
/// (first kept).
PriceParseResult parse_price_bars(const std::string& path, const std::string& coin);

PriceParseResult parse_price_bars_text(std::string_view content, const std::string& coin);

/// Joins each tweet at hh:mm:ss to the bar at hh:(mm+1):00 — unconditionally
/// the next minute, even when ss == 0. Tweets whose target minute has no bar
/// are dropped and counted. Output is sorted by (created_at, id), so the
/// result does not depend on input order.
JoinResult join_tweets_prices(const std::vector<TweetRecord>& tweets,
                              const std::vector<PriceBar>& bars);

}  // namespace cryptosent
