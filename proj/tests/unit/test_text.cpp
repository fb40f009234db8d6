#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace misinfo;
using Catch::Matchers::Equals;

TEST_CASE("tokenize lowercases, folds and splits on non-word characters", "[text]") {
  CHECK_THAT(text::tokenize("Hello, WORLD! Café-au-lait"),
             Equals(std::vector<std::string>{"hello", "world", "cafe", "au", "lait"}));
}

TEST_CASE("tokenize drops urls and mentions and strips hashtag marks", "[text]") {
  CHECK_THAT(text::tokenize("@WHO says https://t.co/abc #COVID19 is www.example.com serious"),
             Equals(std::vector<std::string>{"says", "covid19", "is", "serious"}));
}

TEST_CASE("apostrophes inside words are removed", "[text]") {
  CHECK_THAT(text::tokenize("don't can’t 'quoted'"),
             Equals(std::vector<std::string>{"dont", "cant", "quoted"}));
}

TEST_CASE("punctuation marks are emitted on request", "[text]") {
  const auto toks = text::tokenize_marks("Stop; now \u2014 please \u201cok\u201d", true);
  std::vector<std::string> got;
  for (const auto& t : toks) got.push_back((t.is_word ? "w:" : "p:") + t.text);
  CHECK_THAT(got, Equals(std::vector<std::string>{"w:stop", "p:;", "w:now", "p:-", "w:please", "p:\"", "w:ok",
                                                  "p:\""}));
}

TEST_CASE("hashtags are extracted lowercased without the mark", "[text]") {
  CHECK_THAT(text::extract_hashtags("#Covid_19 and #StayHome, not # alone"),
             Equals(std::vector<std::string>{"covid_19", "stayhome"}));
}

TEST_CASE("content tokens remove stopwords and keep order", "[text]") {
  const auto& sw = default_stopwords();
  CHECK_THAT(text::content_tokens("The virus is in the air and the water", sw),
             Equals(std::vector<std::string>{"virus", "air", "water"}));
}

TEST_CASE("claim text normalization collapses whitespace and case", "[text]") {
  CHECK(text::normalize_claim_text("  Garlic\tCURES\n  covid ") == "garlic cures covid");
  CHECK(text::normalize_claim_text("garlic cures covid") == text::normalize_claim_text("GARLIC  cures COVID"));
}

TEST_CASE("url normalization", "[text]") {
  CHECK(text::normalize_url("HTTPS://WWW.Example.com/Path/?q=1#frag") == "example.com/Path?q=1");
  CHECK(text::normalize_url("http://example.com/a/") == "example.com/a");
  CHECK(text::normalize_url("example.com/a") == "example.com/a");
  CHECK(text::looks_like_url("https://poynter.org/x"));
  CHECK_FALSE(text::looks_like_url("not a url"));
}

TEST_CASE("utf8 decoding survives invalid bytes", "[text]") {
  const std::string bad = std::string("ab") + char(0xC3) + "c";
  const auto cps = utf8::decode(bad);
  REQUIRE(cps.size() == 4);
  CHECK(cps[2] == utf8::kReplacement);
}

TEST_CASE("timestamps parse in the accepted layouts", "[text]") {
  using timeutil::format_timestamp;
  using timeutil::parse_timestamp;
  CHECK(format_timestamp(*parse_timestamp("2020-03-04T12:00:00Z")) == "2020-03-04T12:00:00Z");
  CHECK(format_timestamp(*parse_timestamp("2020-03-04 12:00:00")) == "2020-03-04T12:00:00Z");
  CHECK(format_timestamp(*parse_timestamp("2020-03-04T14:00:00+02:00")) == "2020-03-04T12:00:00Z");
  CHECK(format_timestamp(*parse_timestamp("2020-03-04T12:00:00.250Z")) == "2020-03-04T12:00:00Z");
  CHECK(format_timestamp(*parse_timestamp("Wed Mar 04 12:00:00 +0000 2020")) == "2020-03-04T12:00:00Z");
  CHECK(format_timestamp(*parse_timestamp("2020-03-04")) == "2020-03-04T00:00:00Z");
  CHECK_FALSE(parse_timestamp("yesterday"));
  CHECK_FALSE(timeutil::parse_date("2020-02-30"));
  CHECK_FALSE(timeutil::parse_date("2020-2-3"));
}

TEST_CASE("enum names round trip and tolerate case and spacing", "[text]") {
  for (auto l : kAllLabels) CHECK(parse_label(to_string(l)) == l);
  for (auto s : kAllLiveStatuses) CHECK(parse_live_status(to_string(s)) == s);
  for (auto t : kAllTopics) CHECK(parse_topic(to_string(t)) == t);
  CHECK(parse_label("misinformation") == Label::kMisinformation);
  CHECK(parse_live_status("account suspended") == LiveStatus::kAccountSuspended);
  CHECK_FALSE(parse_label("maybe"));
}
