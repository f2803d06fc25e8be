#include "riskexplain/text.hpp"

#include <fmt/core.h>

#include <cctype>
#include <cmath>

namespace riskexplain::text {

namespace {

bool is_boundary_char(char c) {
  return c == '.' || c == '!' || c == '?';
}

unsigned char uc(char c) { return static_cast<unsigned char>(c); }

}  // namespace

std::string format_value(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 1e15) {
    return fmt::format("{}", static_cast<long long>(v));
  }
  return fmt::format("{:.2f}", v);
}

std::string format_two_decimals(double v) {
  return fmt::format("{:.2f}", v);
}

std::string format_z_signed(double z) {
  double rounded = std::round(z * 10.0) / 10.0;
  if (rounded == 0.0) return "0.0";  // never "-0.0" or "+0.0"
  return fmt::format("{:+.1f}", rounded);
}

std::string format_z_unsigned(double z) {
  double rounded = std::round(std::fabs(z) * 10.0) / 10.0;
  return fmt::format("{:.1f}", rounded);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(uc(c)));
  return out;
}

bool icontains(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    std::size_t j = 0;
    while (j < needle.size() &&
           std::tolower(uc(haystack[i + j])) == std::tolower(uc(needle[j]))) {
      ++j;
    }
    if (j == needle.size()) return true;
  }
  return false;
}

bool contains_word(std::string_view haystack, std::string_view word) {
  if (word.empty()) return false;
  for (std::size_t i = 0; i + word.size() <= haystack.size(); ++i) {
    std::size_t j = 0;
    while (j < word.size() &&
           std::tolower(uc(haystack[i + j])) == std::tolower(uc(word[j]))) {
      ++j;
    }
    if (j != word.size()) continue;
    bool left_ok = i == 0 || !std::isalnum(uc(haystack[i - 1]));
    std::size_t end = i + word.size();
    bool right_ok = end == haystack.size() || !std::isalnum(uc(haystack[end]));
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> out;
  auto emit = [&](std::size_t start, std::size_t end) {
    while (start < end && std::isspace(uc(text[start]))) ++start;
    while (end > start && std::isspace(uc(text[end - 1]))) --end;
    if (end > start) out.push_back({start, end - start});
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool boundary = false;
    if (c == '\n') {
      boundary = true;
    } else if (is_boundary_char(c)) {
      // a period inside "19.4" or "Exchange.java" is not a boundary
      boundary = i + 1 == text.size() || std::isspace(uc(text[i + 1]));
    }
    if (!boundary) continue;
    emit(start, i + (c == '\n' ? 0 : 1));
    start = i + 1;
  }
  emit(start, text.size());
  return out;
}

bool glob_match(std::string_view pattern, std::string_view name) {
  std::size_t p = 0, n = 0;
  std::size_t star = std::string_view::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(sep, start);
    std::string_view item = end == std::string_view::npos ? s.substr(start)
                                                          : s.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    if (!item.empty()) out.emplace_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string slugify(std::string_view s) {
  std::string out;
  bool pending_dash = false;
  for (char c : s) {
    if (std::isalnum(uc(c)) || c == '.' || c == '-' || c == '_') {
      if (pending_dash && !out.empty()) out.push_back('-');
      pending_dash = false;
      out.push_back(static_cast<char>(std::tolower(uc(c))));
    } else {
      pending_dash = true;
    }
  }
  return out;
}

std::string normalize_for_comparison(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (std::isspace(uc(c))) continue;
    if (c == '$' || c == '\\' || c == '{' || c == '}' || c == '*') continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace riskexplain::text
