#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "misinfo/error.hpp"

namespace misinfo {

namespace detail {

// Uppercase and map ' ', '-' to '_' so "conspiracy theory" == "CONSPIRACY_THEORY".
inline std::string enum_key(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ' ' || c == '-') {
      out.push_back('_');
    } else if (c >= 'a' && c <= 'z') {
      out.push_back(static_cast<char>(c - 'a' + 'A'));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table,
                        std::string_view s) {
  const std::string key = enum_key(s);
  for (const auto& [value, name] : table) {
    if (name == key) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E v) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "UNKNOWN";
}

}  // namespace detail

enum class Label { kMisinformation, kDebunk, kIrrelevant };

inline constexpr std::array<std::pair<Label, std::string_view>, 3> kLabelNames{{
    {Label::kMisinformation, "MISINFORMATION"},
    {Label::kDebunk, "DEBUNK"},
    {Label::kIrrelevant, "IRRELEVANT"},
}};

inline constexpr std::array<Label, 3> kAllLabels{Label::kMisinformation, Label::kDebunk,
                                                 Label::kIrrelevant};

inline std::string_view to_string(Label l) { return detail::name_of(kLabelNames, l); }
inline std::optional<Label> parse_label(std::string_view s) {
  return detail::lookup(kLabelNames, s);
}
inline std::size_t label_index(Label l) { return static_cast<std::size_t>(l); }

enum class TweetKind { kSource, kRetweet, kReply, kQuote };

inline constexpr std::array<std::pair<TweetKind, std::string_view>, 4> kTweetKindNames{{
    {TweetKind::kSource, "SOURCE"},
    {TweetKind::kRetweet, "RETWEET"},
    {TweetKind::kReply, "REPLY"},
    {TweetKind::kQuote, "QUOTE"},
}};

inline std::string_view to_string(TweetKind k) { return detail::name_of(kTweetKindNames, k); }
inline std::optional<TweetKind> parse_tweet_kind(std::string_view s) {
  return detail::lookup(kTweetKindNames, s);
}

enum class LiveStatus { kLive, kAccountSuspended, kAccountDeleted, kTweetDeleted, kOther };

inline constexpr std::array<std::pair<LiveStatus, std::string_view>, 5> kLiveStatusNames{{
    {LiveStatus::kLive, "LIVE"},
    {LiveStatus::kAccountSuspended, "ACCOUNT_SUSPENDED"},
    {LiveStatus::kAccountDeleted, "ACCOUNT_DELETED"},
    {LiveStatus::kTweetDeleted, "TWEET_DELETED"},
    {LiveStatus::kOther, "OTHER"},
}};

inline constexpr std::array<LiveStatus, 5> kAllLiveStatuses{
    LiveStatus::kLive, LiveStatus::kAccountSuspended, LiveStatus::kAccountDeleted,
    LiveStatus::kTweetDeleted, LiveStatus::kOther};

inline std::string_view to_string(LiveStatus s) { return detail::name_of(kLiveStatusNames, s); }
inline std::optional<LiveStatus> parse_live_status(std::string_view s) {
  return detail::lookup(kLiveStatusNames, s);
}
inline std::size_t status_index(LiveStatus s) { return static_cast<std::size_t>(s); }

// Closed claim topic taxonomy.
enum class Topic {
  kConspiracyTheory,
  kGeneralMedicalAdvice,
  kProminentActors,
  kCommunitySpreadAndImpact,
  kPublicAuthorityAction,
  kVirusOrigin,
  kPublicPreparation,
  kOther,
};

inline constexpr std::array<std::pair<Topic, std::string_view>, 8> kTopicNames{{
    {Topic::kConspiracyTheory, "CONSPIRACY_THEORY"},
    {Topic::kGeneralMedicalAdvice, "GENERAL_MEDICAL_ADVICE"},
    {Topic::kProminentActors, "PROMINENT_ACTORS"},
    {Topic::kCommunitySpreadAndImpact, "COMMUNITY_SPREAD_AND_IMPACT"},
    {Topic::kPublicAuthorityAction, "PUBLIC_AUTHORITY_ACTION"},
    {Topic::kVirusOrigin, "VIRUS_ORIGIN"},
    {Topic::kPublicPreparation, "PUBLIC_PREPARATION"},
    {Topic::kOther, "OTHER"},
}};

inline constexpr std::array<Topic, 8> kAllTopics{
    Topic::kConspiracyTheory,        Topic::kGeneralMedicalAdvice,
    Topic::kProminentActors,         Topic::kCommunitySpreadAndImpact,
    Topic::kPublicAuthorityAction,   Topic::kVirusOrigin,
    Topic::kPublicPreparation,       Topic::kOther};

inline std::string_view to_string(Topic t) { return detail::name_of(kTopicNames, t); }
inline std::optional<Topic> parse_topic(std::string_view s) {
  if (auto t = detail::lookup(kTopicNames, s)) return t;
  // Short aliases seen in fact-checker exports.
  const std::string key = detail::enum_key(s);
  if (key == "CONSPIRACY") return Topic::kConspiracyTheory;
  if (key == "MEDICAL_ADVICE" || key == "GENERAL_MEDICAL") return Topic::kGeneralMedicalAdvice;
  if (key == "PROMINENT_ACTOR") return Topic::kProminentActors;
  if (key == "COMMUNITY_SPREAD") return Topic::kCommunitySpreadAndImpact;
  if (key == "PUBLIC_AUTHORITY" || key == "PUBLIC_AUTHORITY_ACTIONS")
    return Topic::kPublicAuthorityAction;
  if (key == "PUBLIC_PREPARATIONS") return Topic::kPublicPreparation;
  return std::nullopt;
}
inline std::size_t topic_index(Topic t) { return static_cast<std::size_t>(t); }

enum class SpreadKind { kRetweet, kQuote };

inline constexpr std::array<std::pair<SpreadKind, std::string_view>, 2> kSpreadKindNames{{
    {SpreadKind::kRetweet, "RETWEET"},
    {SpreadKind::kQuote, "QUOTE"},
}};

inline std::string_view to_string(SpreadKind k) { return detail::name_of(kSpreadKindNames, k); }
inline std::optional<SpreadKind> parse_spread_kind(std::string_view s) {
  return detail::lookup(kSpreadKindNames, s);
}

template <typename T, typename Parser>
T parse_or_throw(std::string_view s, Parser parser, std::string_view what) {
  if (auto v = parser(s)) return *v;
  throw Error(ErrorCode::kParse, "unknown " + std::string(what) + " '" + std::string(s) + "'");
}

}  // namespace misinfo
