#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cryptosent/types.hpp"

namespace cryptosent {

/// Preprocessed tweet text. clean_text carries no mentions, URLs, '#'
/// characters, ASCII punctuation (underscores from alias tokens excepted) or
/// uppercase letters; hashtags are kept separately, lowercased, without '#'.
struct CleanTweet {
  std::uint64_t tweet_id = 0;
  std::string clean_text;
  std::vector<std::string> hashtags;
  bool is_crypto_relevant = true;
  std::size_t token_count = 0;

  bool operator==(const CleanTweet&) const = default;
};

/// Pattern -> alias replacement table for emoticons or emoji. Longest
/// pattern wins at each position.
struct TokenMap {
  std::vector<std::pair<std::string, std::string>> entries;

  /// Sorts entries longest-pattern-first (ties lexicographic).
  void normalize();
};

/// Embedded defaults. The emoticon table covers ~45 ASCII emoticons, the
/// emoji table ~230 common emoji; both may be overridden by TSV files.
const TokenMap& default_emoticon_table();
const TokenMap& default_emoji_table();

/// TSV resource file: pattern TAB alias, one per line, '#' comments.
TokenMap load_token_map(const std::string& path);

/// Whole-token term list used to keep only crypto-context tweets for coins
/// with ambiguous names.
class CryptoLexicon {
 public:
  static CryptoLexicon default_lexicon();
  /// Plain-text file, one term per line, '#' comments.
  static CryptoLexicon from_file(const std::string& path);
  static CryptoLexicon from_terms(std::vector<std::string> terms);

  bool contains(std::string_view term) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::unordered_set<std::string> terms_;
};

enum class RelevanceMode { filter_off, filter_on };

/// Replaces every emoticon/emoji found in the tables by " alias " (spaces
/// around, no whitespace collapse here); deletes unmapped emoji codepoints.
std::string map_emoticons(std::string_view text, const TokenMap& emoticons,
                          const TokenMap& emojis);
std::string map_emoticons(std::string_view text);

/// Full cleaning pipeline in fixed order: strip leading "RT @name:", remove
/// @mentions, remove URLs, extract hashtags, alias emoticons/emoji,
/// lowercase, strip ASCII punctuation, collapse whitespace. Stopwords are
/// kept. Text that cleans to empty is kept with token_count 0.
CleanTweet clean_tweet(const TweetRecord& raw, const CryptoLexicon& lexicon,
                       RelevanceMode mode = RelevanceMode::filter_off);

/// True iff mode is filter_off or any lexicon term appears as a whole token
/// of clean_text or among the hashtags.
bool crypto_relevance(const CleanTweet& clean, const CryptoLexicon& lexicon,
                      RelevanceMode mode);

/// Whitespace tokenization of cleaned text.
std::vector<std::string_view> split_tokens(std::string_view text);

/// Unicode simple case folding over UTF-8 (ASCII, Latin-1/Extended-A, Greek,
/// Cyrillic); other codepoints pass through.
std::string fold_lowercase(std::string_view text);

}  // namespace cryptosent
