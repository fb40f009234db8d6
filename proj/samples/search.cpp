// BM25 over a tweets.jsonl file.
//   sample_search tweets.jsonl "garlic cures covid" [k]

#include <iostream>

#include "misinfo/misinfo.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: " << argv[0] << " TWEETS_JSONL QUERY [K]\n";
    return 1;
  }
  try {
    const auto corpus = misinfo::ingest_tweets(argv[1]).corpus;
    const auto index = misinfo::build_index(corpus);
    const std::size_t k = argc > 3 ? std::stoul(argv[3]) : 10;
    const auto res = misinfo::bm25_search(index, argv[2], k);
    if (!res.warning.empty()) std::cerr << "warning: " << res.warning << '\n';
    for (const auto& c : res.candidates) {
      std::cout << c.tweet_id << '\t' << c.bm25_score << '\t' << corpus.find(c.tweet_id)->text << '\n';
    }
  } catch (const misinfo::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
