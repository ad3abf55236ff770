#pragma once

#include <cstddef>
#include <utility>

// Internal: embedded default tables, defined in emoticon_data.cpp.
namespace cryptosent::detail {

extern const std::pair<const char*, const char*> kEmoticons[];
extern const std::pair<const char*, const char*> kEmoji[];
extern const char* kLexiconTerms[];

std::size_t emoticon_count();
std::size_t emoji_count();
std::size_t lexicon_count();

}  // namespace cryptosent::detail
