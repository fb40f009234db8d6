#pragma once

// Misinformation extraction: BM25 -> rerank -> debunk-date window ->
// pairwise scoring -> precision post-filter, run independently per claim.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/embed.hpp"
#include "misinfo/index.hpp"
#include "misinfo/jsonl.hpp"
#include "misinfo/retrieval.hpp"
#include "misinfo/scorer.hpp"
#include "misinfo/svo.hpp"

namespace misinfo {

struct PipelineConfig {
  std::size_t k_bm25 = 20000;
  std::size_t k_rerank = 1000;
  TimeWindow window{};
  double confidence_threshold = 0.95;
  Bm25Params bm25{};
  std::size_t workers = 1;
};

// label == MISINFORMATION and (confidence >= threshold or the tweet mentions
// a claim subject/object).
inline bool post_filter(const PairPrediction& prediction, const SvoTerms& claim_terms, std::string_view tweet_text,
                        double threshold = 0.95) {
  if (prediction.label != Label::kMisinformation) return false;
  return prediction.confidence >= threshold || shares_subject_or_object(claim_terms, tweet_text);
}

inline bool post_filter(const PairPrediction& prediction, const Claim& claim, const Tweet& tweet,
                        double threshold = 0.95, const SvoExtractor& svo = default_svo_extractor()) {
  if (prediction.label != Label::kMisinformation) return false;
  if (prediction.confidence >= threshold) return true;
  return shares_subject_or_object(svo.extract(claim.text), tweet.text);
}

struct StageCounts {
  std::string claim_id;
  std::size_t bm25 = 0;
  std::size_t rerank = 0;
  std::size_t temporal = 0;
  std::size_t scored = 0;
  std::size_t misinformation = 0;
  std::size_t accepted = 0;
  bool failed = false;
  std::string error;
  std::string warning;

  ordered_json to_json() const {
    ordered_json j;
    j["claim_id"] = claim_id;
    j["bm25"] = bm25;
    j["rerank"] = rerank;
    j["temporal"] = temporal;
    j["scored"] = scored;
    j["misinformation"] = misinformation;
    j["accepted"] = accepted;
    j["failed"] = failed;
    if (!error.empty()) j["error"] = error;
    if (!warning.empty()) j["warning"] = warning;
    return j;
  }
};

struct AcceptedPair {
  PairPrediction prediction;
  double bm25_score = 0.0;
  double rerank_score = 0.0;
};

struct MisinfoSet {
  std::vector<AcceptedPair> pairs;  // sorted by (claim_id, tweet_id), unique
  std::vector<StageCounts> stages;  // in claim id order
  std::string config_hash;

  std::size_t distinct_tweets() const {
    std::set<std::string> ids;
    for (const auto& p : pairs) ids.insert(p.prediction.tweet_id);
    return ids.size();
  }
  std::set<std::string> tweet_ids() const {
    std::set<std::string> ids;
    for (const auto& p : pairs) ids.insert(p.prediction.tweet_id);
    return ids;
  }
  std::size_t failed_claims() const {
    return static_cast<std::size_t>(std::count_if(stages.begin(), stages.end(), [](const auto& s) { return s.failed; }));
  }

  ordered_json manifest() const {
    ordered_json j;
    j["config_hash"] = config_hash;
    j["accepted_pairs"] = pairs.size();
    j["distinct_tweets"] = distinct_tweets();
    j["failed_claims"] = failed_claims();
    j["stages"] = ordered_json::array();
    for (const auto& s : stages) j["stages"].push_back(s.to_json());
    return j;
  }
};

inline ordered_json accepted_to_json(const AcceptedPair& a) {
  ordered_json j;
  j["claim_id"] = a.prediction.claim_id;
  j["tweet_id"] = a.prediction.tweet_id;
  j["label"] = std::string(to_string(a.prediction.label));
  j["confidence"] = a.prediction.confidence;
  j["bm25_score"] = a.bm25_score;
  j["rerank_score"] = a.rerank_score;
  return j;
}

inline void save_misinfo_set(const MisinfoSet& set, const std::filesystem::path& pairs_path,
                             const std::filesystem::path& manifest_path) {
  std::vector<ordered_json> rows;
  for (const auto& a : set.pairs) rows.push_back(accepted_to_json(a));
  jsonl::write_lines(pairs_path, rows);
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + manifest_path.string());
  out << set.manifest().dump(2) << '\n';
}

inline MisinfoSet load_misinfo_set(const std::filesystem::path& pairs_path) {
  MisinfoSet set;
  const auto errors = jsonl::for_each(pairs_path, [&](const json& j, std::size_t) {
    AcceptedPair a;
    a.prediction.claim_id = require_string(j, "claim_id");
    a.prediction.tweet_id = require_string(j, "tweet_id");
    a.prediction.label = parse_or_throw<Label>(require_string(j, "label"), parse_label, "label");
    a.prediction.confidence = j.at("confidence").get<double>();
    a.bm25_score = j.value("bm25_score", 0.0);
    a.rerank_score = j.value("rerank_score", 0.0);
    set.pairs.push_back(std::move(a));
  });
  if (!errors.empty()) {
    throw Error(ErrorCode::kParse, pairs_path.string() + ":" + std::to_string(errors.front().line) + ": " +
                                       errors.front().reason);
  }
  return set;
}

struct ExtractionContext {
  const CorpusHandle& corpus;
  const InvertedIndex& index;
  const Scorer& scorer;
  const Embedder& embedder;
  const SvoExtractor& svo;
};

namespace detail {

struct ClaimOutcome {
  StageCounts counts;
  std::vector<AcceptedPair> accepted;
};

inline ClaimOutcome run_claim(const Claim& claim, const ExtractionContext& ctx, const PipelineConfig& cfg) {
  ClaimOutcome out;
  out.counts.claim_id = claim.id;
  try {
    auto found = bm25_search(ctx.index, claim.text, cfg.k_bm25, cfg.bm25);
    out.counts.warning = found.warning;
    out.counts.bm25 = found.candidates.size();
    if (found.candidates.empty()) return out;
    auto reranked = rerank(std::move(found.candidates), claim.text, ctx.corpus, ctx.embedder, cfg.k_rerank);
    out.counts.rerank = reranked.size();
    auto windowed = temporal_filter(std::move(reranked), claim, ctx.corpus, cfg.window);
    out.counts.temporal = windowed.size();
    if (windowed.empty()) return out;

    std::vector<PairText> batch;
    batch.reserve(windowed.size());
    for (const auto& c : windowed) batch.push_back({claim.text, ctx.corpus.find(c.tweet_id)->text});
    const auto scores = ctx.scorer.score_batch(batch);
    out.counts.scored = scores.size();

    std::optional<SvoTerms> claim_terms;
    for (std::size_t i = 0; i < windowed.size(); ++i) {
      const PairPrediction pred{claim.id, windowed[i].tweet_id, scores[i].label, scores[i].confidence};
      if (pred.label != Label::kMisinformation) continue;
      ++out.counts.misinformation;
      if (pred.confidence < cfg.confidence_threshold && !claim_terms) claim_terms = ctx.svo.extract(claim.text);
      if (post_filter(pred, claim_terms ? *claim_terms : SvoTerms{}, batch[i].text, cfg.confidence_threshold)) {
        out.accepted.push_back({pred, windowed[i].bm25_score, windowed[i].rerank_score.value_or(0.0)});
      }
    }
    out.counts.accepted = out.accepted.size();
  } catch (const Error& e) {
    out.counts.failed = true;
    out.counts.error = e.what();
    out.accepted.clear();
    out.counts.accepted = 0;
  }
  return out;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

}  // namespace detail

inline MisinfoSet extract_misinformation(const ClaimSet& claims, const ExtractionContext& ctx,
                                         const PipelineConfig& cfg = {}) {
  if (cfg.k_bm25 == 0 || cfg.k_rerank == 0) throw Error(ErrorCode::kInvalidArgument, "k values must be >= 1");
  std::vector<detail::ClaimOutcome> outcomes(claims.size());
  detail::parallel_for(claims.size(), cfg.workers,
                       [&](std::size_t i) { outcomes[i] = detail::run_claim(claims.claims()[i], ctx, cfg); });

  MisinfoSet set;
  std::map<std::pair<std::string, std::string>, AcceptedPair> unique;
  for (auto& o : outcomes) {
    set.stages.push_back(std::move(o.counts));
    for (auto& a : o.accepted) {
      unique.try_emplace({a.prediction.claim_id, a.prediction.tweet_id}, std::move(a));
    }
  }
  for (auto& [key, a] : unique) set.pairs.push_back(std::move(a));
  return set;
}

}  // namespace misinfo
