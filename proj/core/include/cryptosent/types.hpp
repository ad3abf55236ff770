#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cryptosent/time_util.hpp"

namespace cryptosent {

/// One raw tweet with engagement counts and the user fields the pipeline
/// consumes. Unrecognized keys of the nested "user" object are kept verbatim
/// (as compact JSON strings) in user_extra so nothing is lost on round-trip.
struct TweetRecord {
  std::uint64_t id = 0;
  std::string text;
  std::int64_t favourite_count = 0;
  std::int64_t retweet_count = 0;
  UtcSeconds created_at = 0;
  std::uint64_t user_id = 0;
  std::int64_t user_followers_count = 0;
  std::int64_t user_friends_count = 0;
  std::int64_t user_favourites_count = 0;
  bool user_verified = false;
  std::string user_screen_name;
  std::optional<std::string> place;
  std::map<std::string, std::string> user_extra;

  bool operator==(const TweetRecord&) const = default;
};

/// One minute-resolution OHLCV record for one coin. time is truncated to the
/// minute (seconds component zero).
struct PriceBar {
  UtcSeconds time = 0;
  double high = 0.0;
  double low = 0.0;
  double open = 0.0;
  double close = 0.0;
  double volume_from = 0.0;
  double volume_to = 0.0;
  std::string coin;

  bool operator==(const PriceBar&) const = default;
};

/// A tweet joined to the price bar of the strictly-next minute.
struct JoinedRow {
  TweetRecord tweet;
  PriceBar bar;
  double target_close = 0.0;

  bool operator==(const JoinedRow&) const = default;
};

struct IngestReport {
  std::size_t parsed = 0;
  std::size_t skipped = 0;
  std::size_t duplicates = 0;
};

}  // namespace cryptosent
