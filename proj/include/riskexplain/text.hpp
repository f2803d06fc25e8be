#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace riskexplain::text {

// "448" for integral values, two decimals otherwise. Used for metric values
// in prompts and reports.
std::string format_value(double v);

// Always two decimals ("11.10"). Used for baseline figures.
std::string format_two_decimals(double v);

// One decimal with an explicit '+' on positive values: "+19.4", "-0.3".
// Values that round to zero render as "0.0" with no sign.
std::string format_z_signed(double z);

// One decimal, no sign: "19.4". Used where direction is already in words.
std::string format_z_unsigned(double z);

std::string to_lower(std::string_view s);

// True when `needle` occurs in `haystack` ignoring ASCII case.
bool icontains(std::string_view haystack, std::string_view needle);

// True when `word` occurs with non-alphanumeric characters (or string ends)
// on both sides, ignoring ASCII case.
bool contains_word(std::string_view haystack, std::string_view word);

struct Sentence {
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Splits on '.', '!', '?' followed by whitespace/end, and on newlines, so
// figures like "19.4" and names like "Exchange.java" stay intact.
std::vector<Sentence> split_sentences(std::string_view text);

// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view name);

// Splits on `sep`, trims surrounding whitespace, drops empty items.
std::vector<std::string> split_list(std::string_view s, char sep = ',');

// Lowercase, alphanumerics and ".-_" kept, runs of anything else become '-'.
std::string slugify(std::string_view s);

// Comparison form used by the prompt golden tests: drops all whitespace and
// the TeX typesetting characters $ \ { } * so source-formatting differences
// cannot mask or cause a mismatch.
std::string normalize_for_comparison(std::string_view s);

}  // namespace riskexplain::text
