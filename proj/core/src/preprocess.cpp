#include "cryptosent/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "cryptosent/error.hpp"
#include "emoticon_data.hpp"

namespace cryptosent {
namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c + 32) : c; }

// Decodes one UTF-8 codepoint at pos; returns its byte length (1 on invalid
// bytes, which are passed through as-is).
std::size_t decode_utf8(std::string_view s, std::size_t pos, char32_t& cp) {
  unsigned char c0 = static_cast<unsigned char>(s[pos]);
  if (c0 < 0x80) {
    cp = c0;
    return 1;
  }
  auto cont = [&](std::size_t i) {
    return pos + i < s.size() &&
           (static_cast<unsigned char>(s[pos + i]) & 0xC0) == 0x80;
  };
  if ((c0 & 0xE0) == 0xC0 && cont(1)) {
    cp = (char32_t(c0 & 0x1F) << 6) | (s[pos + 1] & 0x3F);
    return 2;
  }
  if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    cp = (char32_t(c0 & 0x0F) << 12) | (char32_t(s[pos + 1] & 0x3F) << 6) |
         (s[pos + 2] & 0x3F);
    return 3;
  }
  if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    cp = (char32_t(c0 & 0x07) << 18) | (char32_t(s[pos + 1] & 0x3F) << 12) |
         (char32_t(s[pos + 2] & 0x3F) << 6) | (s[pos + 3] & 0x3F);
    return 4;
  }
  cp = c0;
  return 1;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(char(cp));
  } else if (cp < 0x800) {
    out.push_back(char(0xC0 | (cp >> 6)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(char(0xE0 | (cp >> 12)));
    out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(char(0xF0 | (cp >> 18)));
    out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  }
}

bool is_emoji_codepoint(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // emoji & symbol planes
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         (cp >= 0x2B00 && cp <= 0x2BFF) ||    // arrows, stars
         (cp >= 0x2190 && cp <= 0x21FF) ||    // arrow block
         (cp >= 0xFE00 && cp <= 0xFE0F) ||    // variation selectors
         cp == 0x200D || cp == 0x20E3;        // ZWJ, combining keycap
}

char32_t fold_codepoint(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 32;  // Latin-1
  if (cp == 0x0130) return 'i';                                      // dotted I
  if (cp == 0x0178) return 0x00FF;                                   // Y diaeresis
  if ((cp >= 0x0100 && cp <= 0x0137) || (cp >= 0x014A && cp <= 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;  // Latin Extended-A even/odd pairs
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 32;  // Greek
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 32;                  // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 80;
  return cp;
}

// Strips a leading retweet marker "RT @name:" (including trailing spaces).
std::string_view strip_retweet_prefix(std::string_view text) {
  if (!text.starts_with("RT @")) return text;
  std::size_t pos = 4;
  while (pos < text.size() && is_word_char(text[pos])) ++pos;
  if (pos == 4 || pos >= text.size() || text[pos] != ':') return text;
  ++pos;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return text.substr(pos);
}

std::string remove_mentions(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '@' && i + 1 < text.size() && is_word_char(text[i + 1])) {
      i += 2;
      while (i < text.size() && is_word_char(text[i])) ++i;
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

bool is_url_token(std::string_view token) {
  return token.starts_with("http://") || token.starts_with("https://") ||
         token.starts_with("www.") || token.starts_with("bit.ly/") ||
         token.starts_with("t.co/");
}

std::string remove_urls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(i, end - i);
    if (!is_url_token(token)) out.append(token);
    i = end;
  }
  return out;
}

std::string extract_hashtags(std::string_view text, std::vector<std::string>& hashtags) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '#' && i + 1 < text.size() && is_word_char(text[i + 1])) {
      std::size_t end = i + 1;
      while (end < text.size() && is_word_char(text[end])) ++end;
      std::string tag(text.substr(i + 1, end - i - 1));
      std::transform(tag.begin(), tag.end(), tag.begin(), ascii_lower);
      hashtags.push_back(std::move(tag));
      i = end;
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

std::string strip_punctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc < 0x80 && std::ispunct(uc) && c != '_') {
      if (c != '\'') out.push_back(' ');  // apostrophes vanish, "don't" -> "dont"
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void TokenMap::normalize() {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
}

const TokenMap& default_emoticon_table() {
  static const TokenMap table = [] {
    TokenMap t;
    for (std::size_t i = 0; i < detail::emoticon_count(); ++i)
      t.entries.emplace_back(detail::kEmoticons[i].first, detail::kEmoticons[i].second);
    t.normalize();
    return t;
  }();
  return table;
}

const TokenMap& default_emoji_table() {
  static const TokenMap table = [] {
    TokenMap t;
    for (std::size_t i = 0; i < detail::emoji_count(); ++i)
      t.entries.emplace_back(detail::kEmoji[i].first, detail::kEmoji[i].second);
    t.normalize();
    return t;
  }();
  return table;
}

TokenMap load_token_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open token map: " + path);
  TokenMap map;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) continue;
    map.entries.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  map.normalize();
  return map;
}

CryptoLexicon CryptoLexicon::default_lexicon() {
  std::vector<std::string> terms;
  terms.reserve(detail::lexicon_count());
  for (std::size_t i = 0; i < detail::lexicon_count(); ++i)
    terms.emplace_back(detail::kLexiconTerms[i]);
  return from_terms(std::move(terms));
}

CryptoLexicon CryptoLexicon::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open lexicon: " + path);
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    while (!line.empty() && is_space(line.back())) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    line = line.substr(start);
    if (line.empty() || line[0] == '#') continue;
    terms.push_back(std::move(line));
  }
  return from_terms(std::move(terms));
}

CryptoLexicon CryptoLexicon::from_terms(std::vector<std::string> terms) {
  CryptoLexicon lex;
  for (std::string& term : terms) {
    std::transform(term.begin(), term.end(), term.begin(), ascii_lower);
    lex.terms_.insert(std::move(term));
  }
  return lex;
}

bool CryptoLexicon::contains(std::string_view term) const {
  return terms_.count(std::string(term)) > 0;
}

std::string map_emoticons(std::string_view text, const TokenMap& emoticons,
                          const TokenMap& emojis) {
  // Pass 1: ASCII emoticon patterns, longest first at each position. A match
  // followed directly by a letter or digit is rejected, so ":3" does not fire
  // inside "12:30" nor ":D" inside ":Doge".
  auto alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  };
  std::string pass1;
  pass1.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const std::string* alias = nullptr;
    std::size_t matched = 0;
    for (const auto& [pattern, name] : emoticons.entries) {
      if (text.substr(i).starts_with(pattern)) {
        std::size_t after = i + pattern.size();
        if (after < text.size() && alnum(text[after])) continue;
        alias = &name;
        matched = pattern.size();
        break;  // entries are longest-first
      }
    }
    if (alias) {
      pass1.push_back(' ');
      pass1.append(*alias);
      pass1.push_back(' ');
      i += matched;
    } else {
      pass1.push_back(text[i]);
      ++i;
    }
  }

  // Pass 2: emoji; table hits become aliases, unmapped emoji are deleted.
  std::string out;
  out.reserve(pass1.size());
  std::string_view src = pass1;
  for (std::size_t i = 0; i < src.size();) {
    const std::string* alias = nullptr;
    std::size_t matched = 0;
    for (const auto& [pattern, name] : emojis.entries) {
      if (src.substr(i).starts_with(pattern)) {
        alias = &name;
        matched = pattern.size();
        break;
      }
    }
    if (alias) {
      out.push_back(' ');
      out.append(*alias);
      out.push_back(' ');
      i += matched;
      continue;
    }
    char32_t cp;
    std::size_t len = decode_utf8(src, i, cp);
    if (!is_emoji_codepoint(cp)) out.append(src.substr(i, len));
    i += len;
  }
  return out;
}

std::string map_emoticons(std::string_view text) {
  return map_emoticons(text, default_emoticon_table(), default_emoji_table());
}

std::string fold_lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    char32_t cp;
    std::size_t len = decode_utf8(text, i, cp);
    encode_utf8(fold_codepoint(cp), out);
    i += len;
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

CleanTweet clean_tweet(const TweetRecord& raw, const CryptoLexicon& lexicon,
                       RelevanceMode mode) {
  CleanTweet clean;
  clean.tweet_id = raw.id;

  std::string_view text = strip_retweet_prefix(raw.text);
  std::string stage = remove_mentions(text);
  stage = remove_urls(stage);
  stage = extract_hashtags(stage, clean.hashtags);
  stage = map_emoticons(stage);
  stage = fold_lowercase(stage);
  stage = strip_punctuation(stage);
  clean.clean_text = collapse_whitespace(stage);
  clean.token_count = split_tokens(clean.clean_text).size();
  clean.is_crypto_relevant = crypto_relevance(clean, lexicon, mode);
  return clean;
}

bool crypto_relevance(const CleanTweet& clean, const CryptoLexicon& lexicon,
                      RelevanceMode mode) {
  if (mode == RelevanceMode::filter_off) return true;
  if (lexicon.empty()) throw ConfigError("crypto relevance filter requires a non-empty lexicon");
  for (std::string_view token : split_tokens(clean.clean_text)) {
    if (lexicon.contains(token)) return true;
  }
  for (const std::string& tag : clean.hashtags) {
    if (lexicon.contains(tag)) return true;
  }
  return false;
}

}  // namespace cryptosent
