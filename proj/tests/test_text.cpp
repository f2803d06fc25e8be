#include <doctest.h>

#include <string>
#include <vector>

#include "riskexplain/text.hpp"

using namespace riskexplain;

TEST_CASE("format_value renders integral doubles without decimals") {
  CHECK(text::format_value(448.0) == "448");
  CHECK(text::format_value(0.0) == "0");
  CHECK(text::format_value(-3.0) == "-3");
  CHECK(text::format_value(3.25) == "3.25");
  CHECK(text::format_value(3.5) == "3.50");
}

TEST_CASE("format_two_decimals keeps trailing zeros") {
  CHECK(text::format_two_decimals(11.1) == "11.10");
  CHECK(text::format_two_decimals(22.52) == "22.52");
  CHECK(text::format_two_decimals(523.748) == "523.75");
  CHECK(text::format_two_decimals(0.0) == "0.00");
}

TEST_CASE("signed z formatting carries direction") {
  CHECK(text::format_z_signed(19.4005) == "+19.4");
  CHECK(text::format_z_signed(-0.31) == "-0.3");
  CHECK(text::format_z_signed(0.192) == "+0.2");
  // values that round to one-decimal zero lose the sign
  CHECK(text::format_z_signed(0.04) == "0.0");
  CHECK(text::format_z_signed(-0.04) == "0.0");
}

TEST_CASE("unsigned z formatting drops direction") {
  CHECK(text::format_z_unsigned(19.4005) == "19.4");
  CHECK(text::format_z_unsigned(1.55) == "1.6");
}

TEST_CASE("case-insensitive containment") {
  CHECK(text::icontains("Refactor the class", "refactor"));
  CHECK(text::icontains("ABCdef", "CDE"));
  CHECK_FALSE(text::icontains("short", "longer than haystack"));
  CHECK(text::icontains("anything", ""));
}

TEST_CASE("word containment respects boundaries") {
  CHECK(text::contains_word("CBO = 448 is high", "cbo"));
  CHECK(text::contains_word("the WMC.", "wmc"));
  CHECK_FALSE(text::contains_word("subwmc metrics", "wmc"));
  CHECK_FALSE(text::contains_word("wmcx", "wmc"));
  CHECK(text::contains_word("WMC", "wmc"));
}

TEST_CASE("sentence splitting keeps decimals and dotted names intact") {
  std::string body = "CBO = 448 sits ~19.4 sigma out. Exchange.java is large! Is that bad? yes";
  auto sentences = text::split_sentences(body);
  REQUIRE(sentences.size() == 4);
  auto piece = [&](std::size_t i) {
    return body.substr(sentences[i].offset, sentences[i].length);
  };
  CHECK(piece(0) == "CBO = 448 sits ~19.4 sigma out.");
  CHECK(piece(1) == "Exchange.java is large!");
  CHECK(piece(2) == "Is that bad?");
  CHECK(piece(3) == "yes");
}

TEST_CASE("sentence splitting treats newlines as boundaries") {
  std::string body = "- first bullet\n- second bullet\n";
  auto sentences = text::split_sentences(body);
  REQUIRE(sentences.size() == 2);
  CHECK(body.substr(sentences[0].offset, sentences[0].length) == "- first bullet");
  CHECK(body.substr(sentences[1].offset, sentences[1].length) == "- second bullet");
}

TEST_CASE("sentence spans index the original text") {
  std::string body = "One. Two.  Three.";
  for (const auto& s : text::split_sentences(body)) {
    REQUIRE(s.offset + s.length <= body.size());
    CHECK(s.length > 0);
  }
}

TEST_CASE("glob matching") {
  CHECK(text::glob_match("*.java", "Exchange.java"));
  CHECK(text::glob_match("org.apache.*", "org.apache.camel.Exchange"));
  CHECK(text::glob_match("?BO", "CBO"));
  CHECK_FALSE(text::glob_match("*.java", "Exchange.cpp"));
  CHECK(text::glob_match("*", ""));
  CHECK_FALSE(text::glob_match("?", ""));
}

TEST_CASE("split_list trims and drops empties") {
  auto items = text::split_list(" cbo, rfc ,,wmc ");
  REQUIRE(items.size() == 3);
  CHECK(items[0] == "cbo");
  CHECK(items[1] == "rfc");
  CHECK(items[2] == "wmc");
  CHECK(text::split_list("").empty());
}

TEST_CASE("slugify collapses non-name characters") {
  CHECK(text::slugify("Apache Camel") == "apache-camel");
  CHECK(text::slugify("ant17") == "ant17");
  CHECK(text::slugify("a//b  c") == "a-b-c");
}

TEST_CASE("comparison normalization strips whitespace and TeX noise") {
  CHECK(text::normalize_for_comparison("a b\tc\nd") == "abcd");
  CHECK(text::normalize_for_comparison("{a}*$b$\\") == "ab");
  // Same prompt, one wrapped and asterisk-emphasized: identical after normalization.
  CHECK(text::normalize_for_comparison("CBO: μ=11.10,\n  σ=22.52") ==
        text::normalize_for_comparison("**CBO: μ=11.10, σ=22.52**"));
  // Multi-byte characters survive untouched.
  CHECK(text::normalize_for_comparison("μσ") == "μσ");
}
