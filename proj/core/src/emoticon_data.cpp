#include "emoticon_data.hpp"

namespace cryptosent {
namespace detail {

// Emoticon patterns are matched before lowercasing and punctuation removal,
// so uppercase and symbol characters are significant here.
const std::pair<const char*, const char*> kEmoticons[] = {
    {":-))", "very_happy"}, {":))", "very_happy"},
    {":-)", "happy"},       {":)", "happy"},
    {"=)", "happy"},        {"^_^", "happy"},
    {"^-^", "happy"},       {":')", "happy_tears"},
    {":'-)", "happy_tears"},
    {":-D", "laughing"},    {":D", "laughing"},
    {"xD", "laughing"},     {"XD", "laughing"},
    {"=D", "laughing"},
    {":-((", "very_sad"},   {":((", "very_sad"},
    {":-(", "sad"},         {":(", "sad"},
    {"=(", "sad"},
    {":'(", "crying"},      {":'-(", "crying"},
    {"T_T", "crying"},      {";_;", "crying"},
    {";-)", "wink"},        {";)", "wink"},
    {":-P", "tongue"},      {":P", "tongue"},
    {":-p", "tongue"},      {":p", "tongue"},
    {":-O", "surprised"},   {":O", "surprised"},
    {":-o", "surprised"},   {":o", "surprised"},
    {":-/", "skeptical"},   {":/", "skeptical"},
    {":-\\", "skeptical"},  {":\\", "skeptical"},
    {":-|", "neutral_face"},{":|", "neutral_face"},
    {"</3", "broken_heart"},{"<3", "heart"},
    {":-*", "kiss"},        {":*", "kiss"},
    {"-_-", "annoyed"},
    {"o_O", "confused"},    {"O_o", "confused"},
    {"o_o", "confused"},    {"O_O", "confused"},
    {"\\o/", "cheer"},
    {">:-(", "angry"},      {">:(", "angry"},
    {"8-)", "cool"},
    {"D:", "dismay"},
    {":3", "cute"},
};

const std::pair<const char*, const char*> kEmoji[] = {
    {"\U0001F600", "grinning_face"}, {"\U0001F603", "smiley"},
    {"\U0001F604", "smile"}, {"\U0001F601", "grin"},
    {"\U0001F606", "laughing"}, {"\U0001F605", "sweat_smile"},
    {"\U0001F923", "rofl"}, {"\U0001F602", "joy"},
    {"\U0001F642", "slightly_smiling"}, {"\U0001F643", "upside_down"},
    {"\U0001F609", "wink"}, {"\U0001F60A", "blush"},
    {"\U0001F607", "innocent"}, {"\U0001F970", "smiling_hearts"},
    {"\U0001F60D", "heart_eyes"}, {"\U0001F929", "star_struck"},
    {"\U0001F618", "kissing_heart"}, {"\U0001F617", "kissing"},
    {"\U0001F61A", "kissing_closed_eyes"}, {"\U0001F619", "kissing_smiling"},
    {"\U0001F60B", "yum"}, {"\U0001F61B", "tongue_out"},
    {"\U0001F61C", "winking_tongue"}, {"\U0001F92A", "zany"},
    {"\U0001F61D", "squinting_tongue"}, {"\U0001F911", "money_mouth"},
    {"\U0001F917", "hugging"}, {"\U0001F92D", "hand_over_mouth"},
    {"\U0001F92B", "shushing"}, {"\U0001F914", "thinking"},
    {"\U0001F910", "zipper_mouth"}, {"\U0001F928", "raised_eyebrow"},
    {"\U0001F610", "neutral_face"}, {"\U0001F611", "expressionless"},
    {"\U0001F636", "no_mouth"}, {"\U0001F60F", "smirk"},
    {"\U0001F612", "unamused"}, {"\U0001F644", "eye_roll"},
    {"\U0001F62C", "grimacing"}, {"\U0001F925", "lying"},
    {"\U0001F60C", "relieved"}, {"\U0001F614", "pensive"},
    {"\U0001F62A", "sleepy"}, {"\U0001F924", "drooling"},
    {"\U0001F634", "sleeping"}, {"\U0001F637", "mask"},
    {"\U0001F912", "thermometer_face"}, {"\U0001F915", "bandage_face"},
    {"\U0001F922", "nauseated"}, {"\U0001F92E", "vomiting"},
    {"\U0001F927", "sneezing"}, {"\U0001F975", "hot_face"},
    {"\U0001F976", "cold_face"}, {"\U0001F974", "woozy"},
    {"\U0001F635", "dizzy_face"}, {"\U0001F92F", "exploding_head"},
    {"\U0001F920", "cowboy"}, {"\U0001F973", "partying"},
    {"\U0001F60E", "sunglasses"}, {"\U0001F913", "nerd"},
    {"\U0001F9D0", "monocle"}, {"\U0001F615", "confused"},
    {"\U0001F61F", "worried"}, {"\U0001F641", "slightly_frowning"},
    {"\u2639", "frowning"}, {"\U0001F62E", "open_mouth"},
    {"\U0001F62F", "hushed"}, {"\U0001F632", "astonished"},
    {"\U0001F633", "flushed"}, {"\U0001F97A", "pleading"},
    {"\U0001F626", "frowning_open_mouth"}, {"\U0001F627", "anguished"},
    {"\U0001F628", "fearful"}, {"\U0001F630", "anxious_sweat"},
    {"\U0001F625", "sad_relieved"}, {"\U0001F622", "cry"},
    {"\U0001F62D", "loudly_crying"}, {"\U0001F631", "screaming"},
    {"\U0001F616", "confounded"}, {"\U0001F623", "persevering"},
    {"\U0001F61E", "disappointed"}, {"\U0001F613", "downcast_sweat"},
    {"\U0001F629", "weary"}, {"\U0001F62B", "tired"},
    {"\U0001F971", "yawning"}, {"\U0001F624", "triumph"},
    {"\U0001F621", "pouting"}, {"\U0001F620", "angry"},
    {"\U0001F92C", "cursing"}, {"\U0001F608", "smiling_imp"},
    {"\U0001F47F", "imp"}, {"\U0001F480", "skull"},
    {"\u2620", "skull_crossbones"}, {"\U0001F4A9", "poop"},
    {"\U0001F921", "clown"}, {"\U0001F479", "ogre"},
    {"\U0001F47A", "goblin"}, {"\U0001F47B", "ghost"},
    {"\U0001F47D", "alien"}, {"\U0001F916", "robot"},
    {"\U0001F63A", "smiley_cat"}, {"\U0001F638", "smile_cat"},
    {"\U0001F639", "joy_cat"}, {"\U0001F63B", "heart_eyes_cat"},
    {"\U0001F63C", "smirk_cat"}, {"\U0001F63D", "kissing_cat"},
    {"\U0001F640", "scream_cat"}, {"\U0001F63F", "crying_cat"},
    {"\U0001F63E", "pouting_cat"}, {"\U0001F648", "see_no_evil"},
    {"\U0001F649", "hear_no_evil"}, {"\U0001F64A", "speak_no_evil"},
    {"\U0001F48B", "kiss_mark"}, {"\U0001F48C", "love_letter"},
    {"\U0001F498", "cupid"}, {"\U0001F49D", "heart_ribbon"},
    {"\U0001F496", "sparkling_heart"}, {"\U0001F497", "growing_heart"},
    {"\U0001F493", "beating_heart"}, {"\U0001F49E", "revolving_hearts"},
    {"\U0001F495", "two_hearts"}, {"\U0001F49F", "heart_decoration"},
    {"\u2763", "heart_exclamation"}, {"\U0001F494", "broken_heart"},
    {"\u2764", "red_heart"}, {"\U0001F9E1", "orange_heart"},
    {"\U0001F49B", "yellow_heart"}, {"\U0001F49A", "green_heart"},
    {"\U0001F499", "blue_heart"}, {"\U0001F49C", "purple_heart"},
    {"\U0001F90E", "brown_heart"}, {"\U0001F5A4", "black_heart"},
    {"\U0001F90D", "white_heart"}, {"\U0001F4AF", "hundred"},
    {"\U0001F4A2", "anger"}, {"\U0001F4A5", "collision"},
    {"\U0001F4AB", "dizzy"}, {"\U0001F4A6", "sweat_drops"},
    {"\U0001F4A8", "dash"}, {"\U0001F4A3", "bomb"},
    {"\U0001F4AC", "speech_balloon"}, {"\U0001F4AD", "thought_balloon"},
    {"\U0001F4A4", "zzz"}, {"\U0001F44B", "wave"},
    {"\U0001F91A", "raised_back_hand"}, {"\u270B", "raised_hand"},
    {"\U0001F596", "vulcan"}, {"\U0001F44C", "ok_hand"},
    {"\U0001F90F", "pinching"}, {"\u270C", "victory"},
    {"\U0001F91E", "crossed_fingers"}, {"\U0001F91F", "love_you_gesture"},
    {"\U0001F918", "horns"}, {"\U0001F919", "call_me"},
    {"\U0001F448", "point_left"}, {"\U0001F449", "point_right"},
    {"\U0001F446", "point_up"}, {"\U0001F595", "middle_finger"},
    {"\U0001F447", "point_down"}, {"\u261D", "point_up_index"},
    {"\U0001F44D", "thumbs_up"}, {"\U0001F44E", "thumbs_down"},
    {"\u270A", "raised_fist"}, {"\U0001F44A", "fist"},
    {"\U0001F91B", "left_fist"}, {"\U0001F91C", "right_fist"},
    {"\U0001F44F", "clap"}, {"\U0001F64C", "raised_hands"},
    {"\U0001F450", "open_hands"}, {"\U0001F932", "palms_up"},
    {"\U0001F91D", "handshake"}, {"\U0001F64F", "folded_hands"},
    {"\U0001F4AA", "flexed_biceps"}, {"\U0001F440", "eyes"},
    {"\U0001F9E0", "brain"}, {"\U0001F525", "fire"},
    {"\u2728", "sparkles"}, {"\U0001F319", "crescent_moon"},
    {"\U0001F315", "full_moon"}, {"\U0001F31B", "moon_face"},
    {"\u2600", "sun"}, {"\u2B50", "star"},
    {"\U0001F31F", "glowing_star"}, {"\u26A1", "zap"},
    {"\u2604", "comet"}, {"\U0001F4B0", "money_bag"},
    {"\U0001F4B4", "yen"}, {"\U0001F4B5", "dollar"},
    {"\U0001F4B6", "euro"}, {"\U0001F4B7", "pound"},
    {"\U0001F4B8", "money_wings"}, {"\U0001F4B3", "credit_card"},
    {"\U0001F48E", "gem"}, {"\u2696", "scales"},
    {"\U0001F4C8", "chart_up"}, {"\U0001F4C9", "chart_down"},
    {"\U0001F4CA", "bar_chart"}, {"\U0001F680", "rocket"},
    {"\U0001F6F8", "ufo"}, {"\U0001F6A8", "siren"},
    {"\u23F0", "alarm"}, {"\u231B", "hourglass"},
    {"\u23F3", "hourglass_flowing"}, {"\U0001F389", "party_popper"},
    {"\U0001F38A", "confetti"}, {"\U0001F3C6", "trophy"},
    {"\U0001F947", "gold_medal"}, {"\U0001F3AF", "direct_hit"},
    {"\U0001F3B0", "slot_machine"}, {"\U0001F3B2", "die"},
    {"\U0001F9E8", "firecracker"}, {"\U0001F514", "bell"},
    {"\U0001F4E2", "loudspeaker"}, {"\U0001F4E3", "megaphone"},
    {"\U0001F4CC", "pushpin"}, {"\U0001F4CD", "round_pushpin"},
    {"\U0001F512", "locked"}, {"\U0001F513", "unlocked"},
    {"\U0001F511", "key"}, {"\U0001F5DD", "old_key"},
    {"\U0001F528", "hammer"}, {"\u26CF", "pick"},
    {"\u2692", "hammer_pick"}, {"\U0001F6E0", "hammer_wrench"},
    {"\U0001F9F2", "magnet"}, {"\U0001F4BB", "laptop"},
    {"\U0001F5A5", "desktop"}, {"\U0001F4F1", "mobile_phone"},
    {"\u260E", "telephone"}, {"\U0001F4DE", "receiver"},
    {"\U0001F310", "globe_meridians"}, {"\U0001F30E", "globe_americas"},
    {"\U0001F30D", "globe_europe_africa"}, {"\U0001F30F", "globe_asia"},
    {"\U0001F402", "ox"}, {"\U0001F403", "water_buffalo"},
    {"\U0001F43B", "bear"}, {"\U0001F43C", "panda"},
    {"\U0001F415", "dog"}, {"\U0001F436", "dog_face"},
    {"\U0001F431", "cat_face"}, {"\U0001F98A", "fox"},
    {"\U0001F981", "lion"}, {"\U0001F438", "frog"},
    {"\U0001F40B", "whale"}, {"\U0001F433", "spouting_whale"},
    {"\U0001F988", "shark"}, {"\U0001F40D", "snake"},
    {"\U0001F409", "dragon"}, {"\U0001F985", "eagle"},
    {"\U0001F989", "owl"}, {"\U0001F41D", "bee"},
    {"\U0001F98B", "butterfly"}, {"\u2705", "check_mark"},
    {"\u274C", "cross_mark"}, {"\u2757", "exclamation"},
    {"\u2753", "question"}, {"\u26A0", "warning"},
    {"\u267B", "recycle"}, {"\U0001F534", "red_circle"},
    {"\U0001F7E2", "green_circle"}, {"\U0001F53A", "red_triangle_up"},
    {"\U0001F53B", "red_triangle_down"}, {"\U0001F7E5", "red_square"},
    {"\U0001F7E9", "green_square"}, {"\u27A1", "right_arrow"},
    {"\u2B06", "up_arrow"}, {"\u2B07", "down_arrow"},
    {"\u2197", "up_right_arrow"}, {"\u2198", "down_right_arrow"},
    {"\U0001F199", "up_button"}, {"\U0001F195", "new_button"},
    {"\U0001F193", "free_button"}, {"\U0001F3E6", "bank"},
    {"\U0001F3E7", "atm"}, {"\u26FD", "fuel_pump"},
    {"\U0001F9FE", "receipt"}, {"\U0001F4C5", "calendar"},
    {"\U0001F4C6", "tear_calendar"}, {"\U0001F5D3", "spiral_calendar"},
    {"\U0001F4F0", "newspaper"}, {"\U0001F5DE", "rolled_newspaper"},
};

const char* kLexiconTerms[] = {
    "crypto", "cryptocurrency", "cryptocurrencies", "blockchain", "bitcoin",
    "btc", "ethereum", "eth", "dogecoin", "doge", "shiba", "shib", "matic",
    "polygon", "solana", "sol", "avax", "ripple", "xrp", "binance", "bnb",
    "coinbase", "kraken", "tether", "usdt", "usdc", "stablecoin", "altcoin",
    "token", "tokens", "coin", "coins", "wallet", "hodl", "defi", "nft",
    "mining", "miner", "miners", "satoshi", "ledger", "staking", "stake",
    "airdrop", "whale", "halving", "dex", "web3", "metaverse", "bullish",
    "bearish", "pump", "dump", "moon", "mooning", "fomo", "rekt", "dip",
    "rally", "trading", "trader", "exchange", "market", "price", "invest",
    "investment", "buy", "sell",
};

std::size_t emoticon_count() { return sizeof(kEmoticons) / sizeof(kEmoticons[0]); }
std::size_t emoji_count() { return sizeof(kEmoji) / sizeof(kEmoji[0]); }
std::size_t lexicon_count() { return sizeof(kLexiconTerms) / sizeof(kLexiconTerms[0]); }

}  // namespace detail
}  // namespace cryptosent
