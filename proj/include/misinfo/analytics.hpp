#pragma once

// Topic distribution, live-status breakdown, binned spread curves and the
// comparison sample.
//
// A tweet matched to claims of m distinct topics contributes 1/m to each.
// Tweets without any topic source count as OTHER and are reported.

#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/pipeline.hpp"
#include "misinfo/rng.hpp"

namespace misinfo {

// tweet id -> topics of its matched claims (or its annotation)
using TopicJoin = std::map<std::string, std::set<Topic>>;

inline TopicJoin join_topics(const MisinfoSet& set, const ClaimSet& claims) {
  TopicJoin join;
  for (const auto& p : set.pairs) {
    auto& topics = join[p.prediction.tweet_id];
    if (const Claim* c = claims.find(p.prediction.claim_id)) topics.insert(c->topic);
  }
  return join;
}

// JSONL {tweet_id, topic}; repeated ids accumulate topics.
inline TopicJoin load_topic_annotations(const std::filesystem::path& path, std::size_t* malformed = nullptr) {
  TopicJoin join;
  const auto errors = jsonl::for_each(path, [&](const json& j, std::size_t) {
    const std::string id = require_string(j, "tweet_id");
    join[id].insert(parse_or_throw<Topic>(require_string(j, "topic"), parse_topic, "topic"));
  });
  if (malformed) *malformed = errors.size();
  return join;
}

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace detail {

// Fractional topic weights of one tweet; empty or missing -> {OTHER: 1}.
inline std::vector<std::pair<Topic, double>> topic_weights(const TopicJoin& join, const std::string& tweet_id,
                                                           bool* unresolved) {
  auto it = join.find(tweet_id);
  if (it == join.end() || it->second.empty()) {
    if (unresolved) *unresolved = true;
    return {{Topic::kOther, 1.0}};
  }
  if (unresolved) *unresolved = false;
  const double w = 1.0 / static_cast<double>(it->second.size());
  std::vector<std::pair<Topic, double>> out;
  for (auto t : it->second) out.emplace_back(t, w);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Topic distribution

struct TopicDistribution {
  std::size_t tweets = 0;
  std::array<double, 8> counts{};                    // fractional, by topic_index
  std::optional<std::array<double, 8>> proportions;  // absent for an empty set
  std::vector<std::string> unresolved;               // counted under OTHER

  double count(Topic t) const { return counts[topic_index(t)]; }
  double proportion(Topic t) const { return proportions ? (*proportions)[topic_index(t)] : 0.0; }

  std::string to_csv() const {
    std::string out = "topic,count,proportion\n";
    if (!proportions) return out;
    for (auto t : kAllTopics) {
      out += std::string(to_string(t)) + "," + format_number(count(t)) + "," + format_number(proportion(t)) + "\n";
    }
    return out;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["tweets"] = tweets;
    j["unresolved"] = unresolved.size();
    j["topics"] = ordered_json::object();
    if (proportions) {
      for (auto t : kAllTopics) j["topics"][std::string(to_string(t))] = {{"count", count(t)}, {"proportion", proportion(t)}};
    }
    return j;
  }
};

inline TopicDistribution topic_distribution(const std::vector<std::string>& tweet_ids, const TopicJoin& join) {
  TopicDistribution d;
  d.tweets = tweet_ids.size();
  for (const auto& id : tweet_ids) {
    bool unresolved = false;
    for (auto [t, w] : detail::topic_weights(join, id, &unresolved)) d.counts[topic_index(t)] += w;
    if (unresolved) d.unresolved.push_back(id);
  }
  if (d.tweets) {
    std::array<double, 8> p{};
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = d.counts[i] / static_cast<double>(d.tweets);
    d.proportions = p;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Live status

struct StatusBreakdown {
  std::size_t tweets = 0;
  std::array<std::array<double, 5>, 8> by_topic{};  // [topic][status], fractional
  std::array<std::size_t, 5> overall{};             // integer counts per status

  double cell(Topic t, LiveStatus s) const { return by_topic[topic_index(t)][status_index(s)]; }
  double topic_total(Topic t) const {
    double n = 0.0;
    for (auto v : by_topic[topic_index(t)]) n += v;
    return n;
  }
  std::size_t count(LiveStatus s) const { return overall[status_index(s)]; }
  double rate(LiveStatus s) const {
    return tweets ? static_cast<double>(count(s)) / static_cast<double>(tweets) : 0.0;
  }
  double inaccessible_rate() const { return tweets ? 1.0 - rate(LiveStatus::kLive) : 0.0; }

  std::string to_csv() const {
    std::string out = "topic,status,count\n";
    for (auto t : kAllTopics) {
      for (auto s : kAllLiveStatuses) {
        out += std::string(to_string(t)) + "," + std::string(to_string(s)) + "," + format_number(cell(t, s)) + "\n";
      }
    }
    for (auto s : kAllLiveStatuses) out += "ALL," + std::string(to_string(s)) + "," + std::to_string(count(s)) + "\n";
    return out;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["tweets"] = tweets;
    for (auto s : kAllLiveStatuses) {
      j["overall"][std::string(to_string(s))] = {{"count", count(s)}, {"rate", rate(s)}};
    }
    j["inaccessible_rate"] = inaccessible_rate();
    for (auto t : kAllTopics) {
      ordered_json row;
      for (auto s : kAllLiveStatuses) row[std::string(to_string(s))] = cell(t, s);
      j["by_topic"][std::string(to_string(t))] = row;
    }
    return j;
  }
};

inline StatusBreakdown live_status_breakdown(const std::vector<std::string>& tweet_ids,
                                             const LiveStatusSnapshot& snapshot, const TopicJoin& join) {
  StatusBreakdown b;
  b.tweets = tweet_ids.size();
  for (const auto& id : tweet_ids) {
    const std::size_t s = status_index(snapshot.status_of(id));
    ++b.overall[s];
    for (auto [t, w] : detail::topic_weights(join, id, nullptr)) b.by_topic[topic_index(t)][s] += w;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Spread power

struct SpreadSeries {
  double tweets = 0.0;              // weighted set size
  std::vector<double> bin_totals;   // weighted event counts
  std::vector<double> averages;     // bin_totals / tweets, 0 for an empty set
  double cumulative = 0.0;          // in-horizon events per tweet
};

struct SpreadCurve {
  std::chrono::seconds bin_width{4 * 3600};
  std::chrono::seconds horizon{36 * 3600};
  std::size_t tweets = 0;
  std::vector<std::size_t> bin_counts;  // exact overall counts
  std::size_t in_horizon_events = 0;
  SpreadSeries overall;
  std::map<Topic, SpreadSeries> by_topic;  // topics with a non-zero weight only

  std::size_t bins() const { return bin_counts.size(); }

  std::string to_csv() const {
    std::string out = "group,bin_start_hours,average\n";
    auto rows = [&](const std::string& group, const SpreadSeries& s) {
      for (std::size_t b = 0; b < s.averages.size(); ++b) {
        const auto start = bin_width.count() * static_cast<long long>(b) / 3600;
        out += group + "," + std::to_string(start) + "," + format_number(s.averages[b]) + "\n";
      }
    };
    rows("ALL", overall);
    for (const auto& [t, s] : by_topic) rows(std::string(to_string(t)), s);
    return out;
  }

  ordered_json to_json() const {
    auto series = [](const SpreadSeries& s) {
      ordered_json j;
      j["tweets"] = s.tweets;
      j["averages"] = s.averages;
      j["cumulative"] = s.cumulative;
      return j;
    };
    ordered_json j;
    j["bin_width_hours"] = bin_width.count() / 3600.0;
    j["horizon_hours"] = horizon.count() / 3600.0;
    j["tweets"] = tweets;
    j["in_horizon_events"] = in_horizon_events;
    j["bin_counts"] = bin_counts;
    j["overall"] = series(overall);
    for (const auto& [t, s] : by_topic) j["by_topic"][std::string(to_string(t))] = series(s);
    return j;
  }
};

// Events with 0 <= event_time - created_at < horizon go to bin floor(dt / bin).
// Every tweet in the set stays in the denominator, with or without events.
inline SpreadCurve spread_power_curve(const std::vector<std::string>& tweet_ids, const CorpusHandle& corpus,
                                      const SpreadEventLog& events, const TopicJoin& join,
                                      std::chrono::seconds bin_width = std::chrono::hours(4),
                                      std::chrono::seconds horizon = std::chrono::hours(36)) {
  if (bin_width.count() <= 0 || horizon.count() <= 0 || horizon.count() % bin_width.count() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "horizon must be a positive multiple of the bin width");
  }
  const auto nbins = static_cast<std::size_t>(horizon.count() / bin_width.count());
  SpreadCurve c;
  c.bin_width = bin_width;
  c.horizon = horizon;
  c.tweets = tweet_ids.size();
  c.bin_counts.assign(nbins, 0);
  auto fresh = [&] {
    SpreadSeries s;
    s.bin_totals.assign(nbins, 0.0);
    return s;
  };

  for (const auto& id : tweet_ids) {
    const Tweet* tw = corpus.find(id);
    if (!tw) throw Error(ErrorCode::kInvalidArgument, "tweet " + id + " is not in the corpus");
    std::vector<std::size_t> local(nbins, 0);
    for (const auto& ev : events.events_for(id)) {
      const auto dt = ev.event_time - tw->created_at;
      if (dt.count() < 0 || dt >= horizon) continue;
      ++local[static_cast<std::size_t>(dt / bin_width)];
    }
    for (std::size_t b = 0; b < nbins; ++b) {
      c.bin_counts[b] += local[b];
      c.in_horizon_events += local[b];
    }
    for (auto [t, w] : detail::topic_weights(join, id, nullptr)) {
      auto it = c.by_topic.find(t);
      if (it == c.by_topic.end()) it = c.by_topic.emplace(t, fresh()).first;
      it->second.tweets += w;
      for (std::size_t b = 0; b < nbins; ++b) it->second.bin_totals[b] += w * static_cast<double>(local[b]);
    }
  }

  c.overall = fresh();
  c.overall.tweets = static_cast<double>(c.tweets);
  for (std::size_t b = 0; b < nbins; ++b) c.overall.bin_totals[b] = static_cast<double>(c.bin_counts[b]);
  auto finish = [&](SpreadSeries& s) {
    s.averages.assign(nbins, 0.0);
    double total = 0.0;
    for (std::size_t b = 0; b < nbins; ++b) {
      total += s.bin_totals[b];
      if (s.tweets > 0.0) s.averages[b] = s.bin_totals[b] / s.tweets;
    }
    s.cumulative = s.tweets > 0.0 ? total / s.tweets : 0.0;
  };
  finish(c.overall);
  for (auto& [t, s] : c.by_topic) finish(s);
  return c;
}

// ---------------------------------------------------------------------------
// Comparison sample

struct ComparisonSample {
  std::vector<std::string> tweet_ids;  // ascending
  std::size_t available = 0;
  std::string warning;
};

// Seeded uniform sample without replacement of corpus tweets not in `exclude`.
inline ComparisonSample sample_comparison_set(const CorpusHandle& corpus, const std::set<std::string>& exclude,
                                              std::size_t n = 20000, std::uint64_t seed = 0) {
  std::vector<const std::string*> pool;
  for (const auto& t : corpus.tweets()) {
    if (!exclude.contains(t.id)) pool.push_back(&t.id);
  }
  ComparisonSample s;
  s.available = pool.size();
  if (n > pool.size()) {
    s.warning = "requested " + std::to_string(n) + " but only " + std::to_string(pool.size()) +
                " tweets are available; taking all";
  }
  for (auto i : rng::sample_indices(pool.size(), n, seed)) s.tweet_ids.push_back(*pool[i]);
  return s;
}

// Published documentation constants: share of misinformation tweets from
// suspended accounts, the same for the comparison set, and the mean 36 h
// spread power of a misinformation tweet.
inline constexpr double kReferenceMisinfoSuspendedRate = 0.331;
inline constexpr double kReferenceNonMisinfoSuspendedRate = 0.037;
inline constexpr double kReferenceMisinfoSpreadPower36h = 64.5;

}  // namespace misinfo
