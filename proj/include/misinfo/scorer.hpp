#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "misinfo/error.hpp"
#include "misinfo/lexicons.hpp"
#include "misinfo/text.hpp"
#include "misinfo/types.hpp"

namespace misinfo {

struct ScoreOutput {
  Label label = Label::kIrrelevant;
  double confidence = 0.0;  // probability of `label`

  bool operator==(const ScoreOutput&) const = default;
};

struct PairPrediction {
  std::string claim_id;
  std::string tweet_id;
  Label label = Label::kIrrelevant;
  double confidence = 0.0;
};

struct PairText {
  std::string claim;
  std::string text;
};

// Pairwise classifier over (claim, tweet text). Implementations must be safe
// to call concurrently.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual ScoreOutput score(std::string_view claim_text, std::string_view tweet_text) const = 0;

  // Responses are in request order.
  virtual std::vector<ScoreOutput> score_batch(const std::vector<PairText>& pairs) const {
    std::vector<ScoreOutput> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(score(p.claim, p.text));
    return out;
  }
};

inline void require_pair_texts(std::string_view claim_text, std::string_view tweet_text) {
  if (text::trim(claim_text).empty() || text::trim(tweet_text).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "claim and tweet text must be non-empty");
  }
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.contains(x);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

// Deterministic lexical stand-in for the transformer classifier.
//
//   h = debunk-cue phrase occurrences in the tweet beyond those in the claim
//   j = Jaccard overlap of claim and tweet content-token sets
//
//   h >= 1       -> DEBUNK,         confidence 1 - 0.5^(h+1)
//   j >= tau     -> MISINFORMATION, confidence 0.5 + 0.5 (j - tau) / (1 - tau)   (1 when tau = 1)
//   otherwise    -> IRRELEVANT,     confidence 1 - 0.5 j / tau
class BaselineLexicalScorer final : public Scorer {
 public:
  explicit BaselineLexicalScorer(double tau_match = 0.5)
      : tau_(tau_match), stopwords_(&default_stopwords()), cues_(&default_debunk_cues()) {
    if (!(tau_ > 0.0 && tau_ <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "tau_match must be in (0, 1]");
  }

  double tau() const { return tau_; }

  std::size_t debunk_hits(std::string_view claim_text, std::string_view tweet_text) const {
    const std::size_t in_tweet = cues_->count(text::tokenize(tweet_text));
    const std::size_t in_claim = cues_->count(text::tokenize(claim_text));
    return in_tweet > in_claim ? in_tweet - in_claim : 0;
  }

  ScoreOutput score(std::string_view claim_text, std::string_view tweet_text) const override {
    require_pair_texts(claim_text, tweet_text);
    if (const std::size_t h = debunk_hits(claim_text, tweet_text); h > 0) {
      return {Label::kDebunk, 1.0 - std::pow(0.5, static_cast<double>(h + 1))};
    }
    const double j =
        jaccard(text::content_token_set(claim_text, *stopwords_), text::content_token_set(tweet_text, *stopwords_));
    if (j >= tau_) {
      const double conf = tau_ >= 1.0 ? 1.0 : 0.5 + 0.5 * (j - tau_) / (1.0 - tau_);
      return {Label::kMisinformation, conf};
    }
    return {Label::kIrrelevant, 1.0 - 0.5 * j / tau_};
  }

 private:
  double tau_;
  const text::WordSet* stopwords_;
  const PhraseMatcher* cues_;
};

}  // namespace misinfo
