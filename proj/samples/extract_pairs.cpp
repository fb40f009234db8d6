// Runs the claim-to-tweet extraction with the baseline scorer and prints
// accepted pairs plus the per-claim funnel.
//   sample_extract_pairs tweets.jsonl claims.csv

#include <iostream>

#include "misinfo/misinfo.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: " << argv[0] << " TWEETS_JSONL CLAIMS_CSV\n";
    return 1;
  }
  try {
    const auto corpus = misinfo::ingest_tweets(argv[1]).corpus;
    const auto claims = misinfo::ingest_claims(argv[2]).claims;
    const auto index = misinfo::build_index(corpus);
    const misinfo::BaselineLexicalScorer scorer;
    const misinfo::TrigramEmbedder embedder;
    misinfo::PipelineConfig cfg;
    cfg.workers = 2;
    const auto set =
        misinfo::extract_misinformation(claims, {corpus, index, scorer, embedder, misinfo::default_svo_extractor()}, cfg);
    for (const auto& p : set.pairs) {
      std::cout << p.prediction.claim_id << '\t' << p.prediction.tweet_id << '\t' << p.prediction.confidence << '\n';
    }
    std::cerr << "claim\tbm25\trerank\ttemporal\tmisinfo\taccepted\n";
    for (const auto& s : set.stages) {
      std::cerr << s.claim_id << '\t' << s.bm25 << '\t' << s.rerank << '\t' << s.temporal << '\t' << s.misinformation
                << '\t' << s.accepted << '\n';
    }
  } catch (const misinfo::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
