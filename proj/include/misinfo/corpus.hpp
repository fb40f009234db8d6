#pragma once

// Tweet corpus, claim set, live-status snapshot and spread-event log.
//
// Input formats (UTF-8, one JSON object per line unless noted) are described
// in docs/formats.md.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "misinfo/error.hpp"
#include "misinfo/jsonl.hpp"
#include "misinfo/lexicons.hpp"
#include "misinfo/text.hpp"
#include "misinfo/timeutil.hpp"
#include "misinfo/types.hpp"

namespace misinfo {

struct Tweet {
  std::string id;
  std::string text;
  std::string author_id;
  std::string author_handle;
  Timestamp created_at{};
  TweetKind kind = TweetKind::kSource;
  std::vector<std::string> urls;      // normalized, see text::normalize_url
  std::vector<std::string> hashtags;  // lowercased bodies without '#'
  std::string referenced_id;          // target of a RETWEET / REPLY / QUOTE
};

struct Claim {
  std::string id;
  std::string text;
  Date debunk_date{};
  Topic topic = Topic::kOther;
  std::string fact_checker;
  std::string debunk_url;  // normalized
};

struct SpreadEvent {
  std::string source_tweet_id;
  SpreadKind kind = SpreadKind::kRetweet;
  Timestamp event_time{};
};

// Case-insensitive substring on text plus exact match on hashtag bodies.
class KeywordFilter {
 public:
  explicit KeywordFilter(const std::vector<std::string>& keywords) {
    for (const auto& k : keywords) {
      std::string key = text::fold(text::trim(k));
      if (key.empty()) continue;
      substrings_.push_back(key);
      hashtags_.insert(key.front() == '#' ? key.substr(1) : key);
    }
  }

  static KeywordFilter defaults() { return KeywordFilter(to_vector(lists::kDefaultKeywords)); }

  bool matches(const Tweet& t) const {
    for (const auto& h : t.hashtags) {
      if (hashtags_.contains(h)) return true;
    }
    const std::string lowered = text::fold(t.text);
    return std::any_of(substrings_.begin(), substrings_.end(),
                       [&](const std::string& k) { return lowered.find(k) != std::string::npos; });
  }

  std::size_t size() const { return substrings_.size(); }

 private:
  std::vector<std::string> substrings_;
  text::WordSet hashtags_;
};

struct IngestOptions {
  std::optional<KeywordFilter> keyword_filter;
  std::optional<Timestamp> window_start;  // inclusive
  std::optional<Timestamp> window_end;    // inclusive
};

struct IngestReport {
  std::size_t read = 0;
  std::size_t retained = 0;
  std::size_t rejected_by_kind = 0;
  std::size_t rejected_by_keyword = 0;
  std::size_t malformed = 0;
  std::vector<jsonl::LineError> malformed_lines;

  ordered_json to_json() const {
    ordered_json j;
    j["read"] = read;
    j["retained"] = retained;
    j["rejected_by_kind"] = rejected_by_kind;
    j["rejected_by_keyword"] = rejected_by_keyword;
    j["malformed"] = malformed;
    j["malformed_lines"] = ordered_json::array();
    for (const auto& e : malformed_lines) j["malformed_lines"].push_back({{"line", e.line}, {"reason", e.reason}});
    return j;
  }
};

// Immutable view over the retained SOURCE tweets, sorted by id. Document
// index i in every derived structure refers to tweets()[i].
class CorpusHandle {
 public:
  CorpusHandle() = default;

  explicit CorpusHandle(std::vector<Tweet> tweets, std::vector<SpreadEvent> derived_events = {})
      : tweets_(std::move(tweets)), derived_events_(std::move(derived_events)) {
    std::sort(tweets_.begin(), tweets_.end(), [](const Tweet& a, const Tweet& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < tweets_.size(); ++i) {
      if (tweets_[i].kind != TweetKind::kSource) {
        throw Error(ErrorCode::kInvalidArgument, "corpus tweet " + tweets_[i].id + " is not SOURCE");
      }
      if (!index_.emplace(tweets_[i].id, i).second) {
        throw Error(ErrorCode::kDuplicateId, "duplicate tweet id " + tweets_[i].id);
      }
      const std::size_t n = text::tokenize(tweets_[i].text).size();
      token_counts_.push_back(n);
      total_tokens_ += n;
    }
  }

  std::size_t size() const { return tweets_.size(); }
  bool empty() const { return tweets_.empty(); }
  const std::vector<Tweet>& tweets() const { return tweets_; }
  const Tweet& at(std::size_t doc) const { return tweets_.at(doc); }

  const Tweet* find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &tweets_[it->second];
  }
  std::optional<std::size_t> doc_index(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t token_count(std::size_t doc) const { return token_counts_.at(doc); }
  std::size_t total_tokens() const { return total_tokens_; }

  // RETWEET / QUOTE records seen during ingestion whose target is in the corpus.
  const std::vector<SpreadEvent>& derived_spread_events() const { return derived_events_; }

 private:
  std::vector<Tweet> tweets_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> token_counts_;
  std::size_t total_tokens_ = 0;
  std::vector<SpreadEvent> derived_events_;
};

namespace detail {

inline TweetKind kind_from_record(const json& j) {
  if (auto k = get_string(j, "kind")) return parse_or_throw<TweetKind>(*k, parse_tweet_kind, "tweet kind");
  if (j.contains("retweeted_status")) return TweetKind::kRetweet;
  if (j.contains("quoted_status")) return TweetKind::kQuote;
  if (get_string(j, "in_reply_to_status_id_str")) return TweetKind::kReply;
  if (auto it = j.find("referenced_tweets"); it != j.end() && it->is_array()) {
    for (const auto& ref : *it) {
      const auto type = get_string(ref, "type").value_or("");
      if (type == "retweeted") return TweetKind::kRetweet;
      if (type == "replied_to") return TweetKind::kReply;
      if (type == "quoted") return TweetKind::kQuote;
    }
  }
  return TweetKind::kSource;
}

inline std::string referenced_id(const json& j) {
  if (auto r = get_string(j, "referenced_id")) return *r;
  if (auto it = j.find("referenced_tweets"); it != j.end() && it->is_array() && !it->empty()) {
    return get_string((*it)[0], "id").value_or("");
  }
  for (const char* key : {"retweeted_status", "quoted_status"}) {
    if (auto it = j.find(key); it != j.end() && it->is_object()) {
      if (auto id = get_string(*it, "id_str")) return *id;
      return get_string(*it, "id").value_or("");
    }
  }
  return get_string(j, "in_reply_to_status_id_str").value_or("");
}

inline std::vector<std::string> string_list(const json& j, const char* key, const char* inner_key) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) return out;
  for (const auto& v : *it) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_object()) {
      if (auto s = get_string(v, inner_key)) out.push_back(*s);
    }
  }
  return out;
}

inline Tweet tweet_from_record(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "record is not an object");
  Tweet t;
  t.id = get_string(j, "id").value_or(get_string(j, "id_str").value_or(""));
  if (t.id.empty()) throw Error(ErrorCode::kParse, "missing field 'id'");
  t.text = get_string(j, "text").value_or(get_string(j, "full_text").value_or(""));
  t.author_id = get_string(j, "author_id").value_or("");
  t.author_handle = get_string(j, "author_handle").value_or("");
  if (auto user = j.find("user"); user != j.end() && user->is_object()) {
    if (t.author_id.empty()) t.author_id = get_string(*user, "id_str").value_or(get_string(*user, "id").value_or(""));
    if (t.author_handle.empty()) t.author_handle = get_string(*user, "screen_name").value_or("");
  }
  const std::string created = require_string(j, "created_at");
  const auto ts = timeutil::parse_timestamp(created);
  if (!ts) throw Error(ErrorCode::kParse, "unparseable created_at '" + created + "'");
  t.created_at = *ts;
  t.kind = kind_from_record(j);
  t.referenced_id = referenced_id(j);

  std::vector<std::string> urls = string_list(j, "urls", "expanded_url");
  std::vector<std::string> tags = string_list(j, "hashtags", "tag");
  if (auto ent = j.find("entities"); ent != j.end() && ent->is_object()) {
    if (urls.empty()) {
      urls = string_list(*ent, "urls", "expanded_url");
      if (urls.empty()) urls = string_list(*ent, "urls", "url");
    }
    if (tags.empty()) {
      tags = string_list(*ent, "hashtags", "tag");
      if (tags.empty()) tags = string_list(*ent, "hashtags", "text");
    }
  }
  if (tags.empty()) tags = text::extract_hashtags(t.text);
  for (const auto& u : urls) t.urls.push_back(text::normalize_url(u));
  for (const auto& h : tags) {
    std::string body = text::fold(h);
    if (!body.empty() && body.front() == '#') body.erase(0, 1);
    if (!body.empty()) t.hashtags.push_back(std::move(body));
  }
  return t;
}

}  // namespace detail

struct IngestResult {
  CorpusHandle corpus;
  IngestReport report;
};

// Retains SOURCE tweets (optionally keyword-filtered). Malformed lines are
// skipped and reported with their line numbers; an unreadable file throws.
inline IngestResult ingest_tweets(const std::filesystem::path& path, const IngestOptions& options = {}) {
  IngestReport report;
  std::vector<Tweet> kept;
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<SpreadEvent> pending;

  auto reject_malformed = [&](std::size_t line_no, std::string reason) {
    ++report.malformed;
    report.malformed_lines.push_back({line_no, std::move(reason)});
  };

  const auto parse_errors = jsonl::for_each(path, [&](const json& j, std::size_t line_no) {
    ++report.read;
    Tweet t;
    try {
      t = detail::tweet_from_record(j);
    } catch (const Error& e) {
      reject_malformed(line_no, e.what());
      return;
    }
    if ((options.window_start && t.created_at < *options.window_start) ||
        (options.window_end && t.created_at > *options.window_end)) {
      reject_malformed(line_no, "created_at outside collection window");
      return;
    }
    if (t.kind != TweetKind::kSource) {
      ++report.rejected_by_kind;
      if ((t.kind == TweetKind::kRetweet || t.kind == TweetKind::kQuote) && !t.referenced_id.empty()) {
        pending.push_back({t.referenced_id,
                           t.kind == TweetKind::kQuote ? SpreadKind::kQuote : SpreadKind::kRetweet,
                           t.created_at});
      }
      return;
    }
    if (t.text.empty()) {
      reject_malformed(line_no, "empty text on SOURCE tweet");
      return;
    }
    if (seen.contains(t.id)) {
      reject_malformed(line_no, "duplicate tweet id " + t.id);
      return;
    }
    if (options.keyword_filter && !options.keyword_filter->matches(t)) {
      ++report.rejected_by_keyword;
      return;
    }
    seen.emplace(t.id, kept.size());
    kept.push_back(std::move(t));
  });
  for (const auto& e : parse_errors) {
    ++report.read;
    ++report.malformed;
    report.malformed_lines.push_back(e);
  }
  std::sort(report.malformed_lines.begin(), report.malformed_lines.end(),
            [](const auto& a, const auto& b) { return a.line < b.line; });

  std::vector<SpreadEvent> derived;
  for (auto& ev : pending) {
    auto it = seen.find(ev.source_tweet_id);
    if (it != seen.end() && ev.event_time >= kept[it->second].created_at) derived.push_back(std::move(ev));
  }
  report.retained = kept.size();
  return {CorpusHandle(std::move(kept), std::move(derived)), report};
}

inline ordered_json tweet_to_json(const Tweet& t) {
  ordered_json j;
  j["id"] = t.id;
  j["text"] = t.text;
  j["author_id"] = t.author_id;
  j["author_handle"] = t.author_handle;
  j["created_at"] = timeutil::format_timestamp(t.created_at);
  j["kind"] = std::string(to_string(t.kind));
  j["urls"] = t.urls;
  j["hashtags"] = t.hashtags;
  return j;
}

// Canonical persisted form: sorted by id, fixed field order.
inline void save_corpus(const CorpusHandle& corpus, const std::filesystem::path& path) {
  std::vector<ordered_json> rows;
  rows.reserve(corpus.size());
  for (const auto& t : corpus.tweets()) rows.push_back(tweet_to_json(t));
  jsonl::write_lines(path, rows);
}

inline CorpusHandle load_corpus(const std::filesystem::path& path) {
  auto result = ingest_tweets(path);
  if (result.report.malformed > 0) {
    throw Error(ErrorCode::kParse, "persisted corpus " + path.string() + " has malformed lines");
  }
  return std::move(result.corpus);
}

// ---------------------------------------------------------------------------
// Claims

class ClaimSet {
 public:
  ClaimSet() = default;
  explicit ClaimSet(std::vector<Claim> claims) : claims_(std::move(claims)) {
    std::sort(claims_.begin(), claims_.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    std::vector<std::string> dups;
    for (std::size_t i = 0; i < claims_.size(); ++i) {
      if (!index_.emplace(claims_[i].id, i).second) {
        if (dups.empty() || dups.back() != claims_[i].id) dups.push_back(claims_[i].id);
      }
    }
    if (!dups.empty()) {
      std::string msg = "duplicate claim id(s):";
      for (const auto& d : dups) msg += " " + d;
      throw Error(ErrorCode::kDuplicateId, msg);
    }
  }

  std::size_t size() const { return claims_.size(); }
  bool empty() const { return claims_.empty(); }
  const std::vector<Claim>& claims() const { return claims_; }
  auto begin() const { return claims_.begin(); }
  auto end() const { return claims_.end(); }

  const Claim* find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &claims_[it->second];
  }

 private:
  std::vector<Claim> claims_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ClaimIngestReport {
  std::size_t read = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<jsonl::LineError> rejected_records;

  ordered_json to_json() const {
    ordered_json j;
    j["read"] = read;
    j["accepted"] = accepted;
    j["rejected"] = rejected;
    j["rejected_records"] = ordered_json::array();
    for (const auto& e : rejected_records) j["rejected_records"].push_back({{"line", e.line}, {"reason", e.reason}});
    return j;
  }
};

struct ClaimIngestResult {
  ClaimSet claims;
  ClaimIngestReport report;
};

// RFC 4180 CSV: quoted fields may contain commas, doubled quotes and newlines.
inline std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline Claim claim_from_fields(const std::unordered_map<std::string, std::string>& f) {
  auto get = [&](const char* k) -> std::string {
    auto it = f.find(k);
    return it == f.end() ? std::string() : text::trim(it->second);
  };
  Claim c;
  c.id = get("id");
  if (c.id.empty()) throw Error(ErrorCode::kParse, "missing claim id");
  c.text = get("text");
  if (c.text.empty()) c.text = get("claim");
  if (c.text.empty()) throw Error(ErrorCode::kParse, "claim " + c.id + ": missing text");
  const std::string date = get("debunk_date");
  if (date.empty()) throw Error(ErrorCode::kParse, "claim " + c.id + ": missing debunk_date");
  auto d = timeutil::parse_date(date.substr(0, std::min<std::size_t>(date.size(), 10)));
  if (!d || (date.size() > 10 && !timeutil::parse_timestamp(date))) {
    throw Error(ErrorCode::kParse, "claim " + c.id + ": unparseable debunk_date '" + date + "'");
  }
  c.debunk_date = *d;
  const std::string topic = get("topic");
  if (topic.empty()) throw Error(ErrorCode::kParse, "claim " + c.id + ": missing topic");
  c.topic = parse_or_throw<Topic>(topic, parse_topic, "topic");
  c.fact_checker = get("fact_checker");
  const std::string url = get("debunk_url");
  if (!url.empty()) {
    if (!text::looks_like_url(url)) throw Error(ErrorCode::kParse, "claim " + c.id + ": malformed debunk_url");
    c.debunk_url = text::normalize_url(url);
  }
  return c;
}

}  // namespace detail

// Accepts .csv (header row required) or line-delimited JSON. Invalid records
// are rejected and counted; duplicate ids throw kDuplicateId naming them.
inline ClaimIngestResult ingest_claims(const std::filesystem::path& path) {
  ClaimIngestReport report;
  std::vector<Claim> claims;
  auto reject = [&](std::size_t line, std::string reason) {
    ++report.rejected;
    report.rejected_records.push_back({line, std::move(reason)});
  };

  if (path.extension() == ".csv") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    const auto rows = parse_csv(in);
    if (!rows.empty()) {
      std::vector<std::string> header;
      for (const auto& h : rows[0]) header.push_back(text::ascii_lower(text::trim(h)));
      for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() == 1 && text::trim(rows[r][0]).empty()) continue;
        ++report.read;
        std::unordered_map<std::string, std::string> fields;
        for (std::size_t c = 0; c < header.size() && c < rows[r].size(); ++c) fields[header[c]] = rows[r][c];
        try {
          claims.push_back(detail::claim_from_fields(fields));
        } catch (const Error& e) {
          reject(r + 1, e.what());
        }
      }
    }
  } else {
    const auto errors = jsonl::for_each(path, [&](const json& j, std::size_t line_no) {
      ++report.read;
      std::unordered_map<std::string, std::string> fields;
      if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
          if (auto s = get_string(j, k.c_str())) fields[k] = *s;
        }
      }
      try {
        claims.push_back(detail::claim_from_fields(fields));
      } catch (const Error& e) {
        reject(line_no, e.what());
      }
    });
    for (const auto& e : errors) {
      ++report.read;
      reject(e.line, e.reason);
    }
  }
  report.accepted = claims.size();
  return {ClaimSet(std::move(claims)), report};
}

// ---------------------------------------------------------------------------
// Live status snapshot

class LiveStatusSnapshot {
 public:
  std::optional<Date> snapshot_date;

  LiveStatus status_of(std::string_view tweet_id) const {
    auto it = entries_.find(std::string(tweet_id));
    return it == entries_.end() ? LiveStatus::kLive : it->second;
  }
  void set(std::string tweet_id, LiveStatus s) { entries_[std::move(tweet_id)] = s; }
  const std::map<std::string, LiveStatus>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LiveStatus> entries_;
};

struct SnapshotReport {
  std::size_t listed = 0;
  std::size_t skipped_unknown = 0;
  std::size_t duplicates = 0;
  std::size_t malformed = 0;
  std::size_t defaulted = 0;

  ordered_json to_json() const {
    return {{"listed", listed}, {"skipped_unknown", skipped_unknown}, {"duplicates", duplicates},
            {"malformed", malformed}, {"defaulted", defaulted}};
  }
};

struct SnapshotResult {
  LiveStatusSnapshot snapshot;
  SnapshotReport report;
};

// Every corpus tweet ends up with exactly one status; unlisted ones are LIVE.
inline SnapshotResult ingest_status_snapshot(const std::filesystem::path& path, const CorpusHandle& corpus) {
  SnapshotResult res;
  auto& rep = res.report;
  const auto errors = jsonl::for_each(path, [&](const json& j, std::size_t) {
    if (auto d = get_string(j, "snapshot_date")) {
      res.snapshot.snapshot_date = timeutil::parse_date(*d);
      if (!j.contains("tweet_id")) return;
    }
    const std::string id = require_string(j, "tweet_id");
    const LiveStatus status = parse_or_throw<LiveStatus>(require_string(j, "status"), parse_live_status, "status");
    if (!corpus.find(id)) {
      ++rep.skipped_unknown;
      return;
    }
    if (res.snapshot.entries().contains(id)) {
      ++rep.duplicates;
      return;
    }
    res.snapshot.set(id, status);
    ++rep.listed;
  });
  rep.malformed = errors.size();
  for (const auto& t : corpus.tweets()) {
    if (!res.snapshot.entries().contains(t.id)) {
      res.snapshot.set(t.id, LiveStatus::kLive);
      ++rep.defaulted;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Spread events

class SpreadEventLog {
 public:
  // Stable by event_time within each group.
  void add(SpreadEvent ev) { groups_[ev.source_tweet_id].push_back(std::move(ev)); }
  void finalize() {
    for (auto& [id, evs] : groups_) {
      std::stable_sort(evs.begin(), evs.end(),
                       [](const SpreadEvent& a, const SpreadEvent& b) { return a.event_time < b.event_time; });
    }
  }

  const std::vector<SpreadEvent>& events_for(std::string_view tweet_id) const {
    static const std::vector<SpreadEvent> kEmpty;
    auto it = groups_.find(std::string(tweet_id));
    return it == groups_.end() ? kEmpty : it->second;
  }
  const std::map<std::string, std::vector<SpreadEvent>>& groups() const { return groups_; }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [id, evs] : groups_) n += evs.size();
    return n;
  }

 private:
  std::map<std::string, std::vector<SpreadEvent>> groups_;
};

struct SpreadReport {
  std::size_t read = 0;
  std::size_t accepted = 0;
  std::size_t rejected_before_source = 0;
  std::size_t skipped_unknown = 0;
  std::size_t malformed = 0;
  std::size_t derived = 0;

  ordered_json to_json() const {
    return {{"read", read}, {"accepted", accepted}, {"rejected_before_source", rejected_before_source},
            {"skipped_unknown", skipped_unknown}, {"malformed", malformed}, {"derived", derived}};
  }
};

struct SpreadResult {
  SpreadEventLog log;
  SpreadReport report;
};

namespace detail {

inline bool admit_event(SpreadEvent ev, const CorpusHandle& corpus, SpreadResult& res) {
  const Tweet* src = corpus.find(ev.source_tweet_id);
  if (!src) {
    ++res.report.skipped_unknown;
    return false;
  }
  if (ev.event_time < src->created_at) {
    ++res.report.rejected_before_source;
    return false;
  }
  res.log.add(std::move(ev));
  ++res.report.accepted;
  return true;
}

}  // namespace detail

// Reads the event file (if given) and, when include_derived is set, merges
// RETWEET / QUOTE records captured during tweet ingestion.
inline SpreadResult ingest_spread_events(const std::optional<std::filesystem::path>& path,
                                         const CorpusHandle& corpus, bool include_derived = false) {
  SpreadResult res;
  if (path) {
    const auto errors = jsonl::for_each(*path, [&](const json& j, std::size_t) {
      SpreadEvent ev;
      ev.source_tweet_id = require_string(j, "source_tweet_id");
      ev.kind = parse_or_throw<SpreadKind>(require_string(j, "kind"), parse_spread_kind, "spread kind");
      const std::string when = require_string(j, "event_time");
      auto ts = timeutil::parse_timestamp(when);
      if (!ts) throw Error(ErrorCode::kParse, "unparseable event_time '" + when + "'");
      ev.event_time = *ts;
      ++res.report.read;
      detail::admit_event(std::move(ev), corpus, res);
    });
    res.report.malformed = errors.size();
    res.report.read += errors.size();
  }
  if (include_derived) {
    for (const auto& ev : corpus.derived_spread_events()) {
      ++res.report.read;
      if (detail::admit_event(ev, corpus, res)) ++res.report.derived;
    }
  }
  res.log.finalize();
  return res;
}

inline SpreadResult ingest_spread_events(const std::filesystem::path& path, const CorpusHandle& corpus) {
  return ingest_spread_events(std::optional<std::filesystem::path>(path), corpus, false);
}

}  // namespace misinfo
