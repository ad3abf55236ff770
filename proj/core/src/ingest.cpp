#include "cryptosent/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "cryptosent/csv.hpp"
#include "cryptosent/error.hpp"

namespace cryptosent {
namespace {

using nlohmann::json;

// Fields of the nested "user" object that are lifted into typed columns.
// Everything else goes to the user_extra passthrough.
bool is_known_user_key(const std::string& key) {
  return key == "id" || key == "screen_name" || key == "followers_count" ||
         key == "friends_count" || key == "favourites_count" ||
         key == "favorites_count" || key == "verified";
}

std::optional<std::int64_t> get_count(const json& obj, const char* primary,
                                      const char* alternate) {
  // First match wins between the two accepted spellings.
  const json* node = nullptr;
  if (auto it = obj.find(primary); it != obj.end()) {
    node = &*it;
  } else if (alternate != nullptr) {
    if (auto it = obj.find(alternate); it != obj.end()) node = &*it;
  }
  if (node == nullptr) return 0;  // absent counts default to zero
  if (!node->is_number_integer()) return std::nullopt;
  auto v = node->get<std::int64_t>();
  if (v < 0) return std::nullopt;
  return v;
}

std::optional<TweetRecord> tweet_from_json(const json& j) {
  if (!j.is_object()) return std::nullopt;
  TweetRecord t;

  auto id_it = j.find("id");
  if (id_it == j.end() || !id_it->is_number_unsigned()) {
    if (id_it == j.end() || !id_it->is_number_integer() || id_it->get<std::int64_t>() < 0)
      return std::nullopt;
  }
  t.id = id_it->get<std::uint64_t>();

  auto text_it = j.find("text");
  if (text_it == j.end() || !text_it->is_string()) return std::nullopt;
  t.text = text_it->get<std::string>();

  auto created_it = j.find("created_at");
  if (created_it == j.end()) return std::nullopt;
  std::optional<UtcSeconds> created;
  if (created_it->is_string()) {
    created = parse_timestamp(created_it->get<std::string>());
  } else if (created_it->is_number_integer()) {
    created = created_it->get<std::int64_t>();
  }
  if (!created) return std::nullopt;
  t.created_at = *created;

  auto fav = get_count(j, "favourite_count", "favorite_count");
  auto rt = get_count(j, "retweet_count", nullptr);
  if (!fav || !rt) return std::nullopt;
  t.favourite_count = *fav;
  t.retweet_count = *rt;

  if (auto place_it = j.find("place"); place_it != j.end() && place_it->is_string())
    t.place = place_it->get<std::string>();

  if (auto user_it = j.find("user"); user_it != j.end() && user_it->is_object()) {
    const json& u = *user_it;
    if (auto it = u.find("id"); it != u.end() && it->is_number_integer())
      t.user_id = it->get<std::uint64_t>();
    if (auto it = u.find("screen_name"); it != u.end() && it->is_string())
      t.user_screen_name = it->get<std::string>();
    auto followers = get_count(u, "followers_count", nullptr);
    auto friends = get_count(u, "friends_count", nullptr);
    auto favourites = get_count(u, "favourites_count", "favorites_count");
    if (!followers || !friends || !favourites) return std::nullopt;
    t.user_followers_count = *followers;
    t.user_friends_count = *friends;
    t.user_favourites_count = *favourites;
    if (auto it = u.find("verified"); it != u.end() && it->is_boolean())
      t.user_verified = it->get<bool>();
    for (auto it = u.begin(); it != u.end(); ++it) {
      if (!is_known_user_key(it.key())) t.user_extra[it.key()] = it.value().dump();
    }
  }
  return t;
}

}  // namespace

TweetParseResult parse_tweets_text(std::string_view content) {
  TweetParseResult result;
  std::unordered_set<std::uint64_t> seen;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    start = end + 1;
    if (end == content.size() && line.empty()) break;

    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;

    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
      ++result.report.skipped;
      continue;
    }
    auto tweet = tweet_from_json(j);
    if (!tweet) {
      ++result.report.skipped;
      continue;
    }
    if (!seen.insert(tweet->id).second) {
      ++result.report.duplicates;  // keep first occurrence
      continue;
    }
    result.tweets.push_back(std::move(*tweet));
    ++result.report.parsed;
  }
  return result;
}

TweetParseResult parse_tweets(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open tweet file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tweets_text(ss.str());
}

std::string tweets_to_jsonl(const std::vector<TweetRecord>& tweets) {
  std::string out;
  for (const TweetRecord& t : tweets) {
    json u;
    u["id"] = t.user_id;
    u["screen_name"] = t.user_screen_name;
    u["followers_count"] = t.user_followers_count;
    u["friends_count"] = t.user_friends_count;
    u["favourites_count"] = t.user_favourites_count;
    u["verified"] = t.user_verified;
    for (const auto& [key, raw] : t.user_extra)
      u[key] = json::parse(raw, nullptr, false);

    json j;
    j["id"] = t.id;
    j["text"] = t.text;
    j["favourite_count"] = t.favourite_count;
    j["retweet_count"] = t.retweet_count;
    j["created_at"] = format_timestamp(t.created_at);
    j["user"] = std::move(u);
    if (t.place) j["place"] = *t.place;

    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

PriceParseResult parse_price_bars_text(std::string_view content, const std::string& coin) {
  CsvTable table = parse_csv(content);
  const char* required[] = {"time", "high", "low", "open",
                            "volumefrom", "volumeto", "close"};
  std::unordered_map<std::string, std::size_t> cols;
  for (const char* name : required) {
    auto idx = table.column(name);
    if (!idx) throw DataError(std::string("price CSV missing column: ") + name);
    cols[name] = *idx;
  }

  PriceParseResult result;
  for (const auto& row : table.rows) {
    if (row.size() < table.header.size()) {
      ++result.report.skipped;
      continue;
    }
    auto time = parse_timestamp(row[cols["time"]]);
    auto high = parse_double(row[cols["high"]]);
    auto low = parse_double(row[cols["low"]]);
    auto open = parse_double(row[cols["open"]]);
    auto close = parse_double(row[cols["close"]]);
    auto vfrom = parse_double(row[cols["volumefrom"]]);
    auto vto = parse_double(row[cols["volumeto"]]);
    if (!time || !high || !low || !open || !close || !vfrom || !vto) {
      ++result.report.skipped;
      continue;
    }
    PriceBar bar;
    bar.time = floor_to_minute(*time);
    bar.high = *high;
    bar.low = *low;
    bar.open = *open;
    bar.close = *close;
    bar.volume_from = *vfrom;
    bar.volume_to = *vto;
    bar.coin = coin;

    bool valid = bar.low <= bar.high && bar.low <= bar.open && bar.open <= bar.high &&
                 bar.low <= bar.close && bar.close <= bar.high && bar.low > 0.0 &&
                 bar.volume_from >= 0.0 && bar.volume_to >= 0.0;
    if (!valid) {
      ++result.report.skipped;
      continue;
    }
    result.bars.push_back(std::move(bar));
  }

  std::stable_sort(result.bars.begin(), result.bars.end(),
                   [](const PriceBar& a, const PriceBar& b) { return a.time < b.time; });
  // Duplicate minutes: keep the first seen in input order.
  std::vector<PriceBar> unique;
  unique.reserve(result.bars.size());
  for (auto& bar : result.bars) {
    if (!unique.empty() && unique.back().time == bar.time) {
      ++result.report.duplicates;
      continue;
    }
    unique.push_back(std::move(bar));
  }
  result.bars = std::move(unique);
  result.report.parsed = result.bars.size();
  return result;
}

PriceParseResult parse_price_bars(const std::string& path, const std::string& coin) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open price file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_price_bars_text(ss.str(), coin);
}

JoinResult join_tweets_prices(const std::vector<TweetRecord>& tweets,
                              const std::vector<PriceBar>& bars) {
  std::unordered_map<UtcSeconds, std::size_t> by_minute;
  by_minute.reserve(bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) by_minute.emplace(bars[i].time, i);

  JoinResult result;
  result.rows.reserve(tweets.size());
  for (const TweetRecord& tweet : tweets) {
    UtcSeconds target = ceil_to_next_minute(tweet.created_at);
    auto it = by_minute.find(target);
    if (it == by_minute.end()) {
      ++result.dropped;
      continue;
    }
    const PriceBar& bar = bars[it->second];
    result.rows.push_back(JoinedRow{tweet, bar, bar.close});
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const JoinedRow& a, const JoinedRow& b) {
              if (a.tweet.created_at != b.tweet.created_at)
                return a.tweet.created_at < b.tweet.created_at;
              return a.tweet.id < b.tweet.id;
            });
  return result;
}

}  // namespace cryptosent
