#pragma once

// Candidate selection stages after BM25: embedding rerank and the
// debunk-date window.

#include <algorithm>
#include <string_view>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/embed.hpp"
#include "misinfo/index.hpp"

namespace misinfo {

// Top-k by cosine(embed(claim), embed(tweet)), ties by ascending tweet_id.
// Throws kUnusableQuery when the claim embeds to the zero vector.
inline std::vector<RankedCandidate> rerank(std::vector<RankedCandidate> candidates, std::string_view claim_text,
                                           const CorpusHandle& corpus, const Embedder& embedder,
                                           std::size_t k = 1000) {
  const EmbeddingVector query = embedder.embed(claim_text);
  if (query.is_zero) throw Error(ErrorCode::kUnusableQuery, "claim text embeds to the zero vector");
  for (auto& c : candidates) {
    const Tweet* t = corpus.find(c.tweet_id);
    if (!t) throw Error(ErrorCode::kInvalidArgument, "candidate " + c.tweet_id + " not in corpus");
    c.rerank_score = cosine(query, embedder.embed(t->text));
  }
  auto cmp = [](const RankedCandidate& a, const RankedCandidate& b) {
    return ranks_before(a, b, *a.rerank_score, *b.rerank_score);
  };
  if (candidates.size() > k) {
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k), candidates.end(), cmp);
    candidates.resize(k);
  } else {
    std::sort(candidates.begin(), candidates.end(), cmp);
  }
  return candidates;
}

struct TimeWindow {
  int days_before = 70;
  int days_after = 14;
};

// Inclusive on both ends; compares UTC calendar dates.
inline bool within_window(const Tweet& tweet, const Claim& claim, const TimeWindow& window) {
  const Date d = timeutil::date_of(tweet.created_at);
  return d >= claim.debunk_date - std::chrono::days{window.days_before} &&
         d <= claim.debunk_date + std::chrono::days{window.days_after};
}

inline std::vector<RankedCandidate> temporal_filter(std::vector<RankedCandidate> candidates, const Claim& claim,
                                                    const CorpusHandle& corpus, const TimeWindow& window = {}) {
  std::erase_if(candidates, [&](const RankedCandidate& c) {
    const Tweet* t = corpus.find(c.tweet_id);
    return !t || !within_window(*t, claim, window);
  });
  return candidates;
}

}  // namespace misinfo
