#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"

using namespace misinfo;

TEST_CASE("bm25 matches the exhaustive oracle on random corpora", "[index]") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 25; ++round) {
    const std::size_t n = 20 + rng() % 300;
    const auto docs = testsupport::random_docs(rng, n, 40, 1, 15);
    std::vector<Tweet> tweets;
    for (std::size_t i = 0; i < n; ++i) tweets.push_back(testsupport::tweet(testsupport::pad_id(i), docs[i]));
    const CorpusHandle corpus(std::move(tweets));
    const auto index = build_index(corpus);
    for (int q = 0; q < 5; ++q) {
      const auto query = testsupport::random_docs(rng, 1, 50, 1, 5)[0];
      const auto got = bm25_search(index, query, corpus.size());
      const auto want = oracle::bm25_rank(corpus, query);
      REQUIRE(got.candidates.size() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(got.candidates[i].tweet_id == want[i].first);
        CHECK(got.candidates[i].bm25_score == want[i].second);
      }
    }
  }
}

TEST_CASE("bm25 top-k is a prefix of the full ranking", "[index]") {
  std::mt19937_64 rng(7);
  const auto docs = testsupport::random_docs(rng, 200, 20, 2, 10);
  std::vector<Tweet> tweets;
  for (std::size_t i = 0; i < docs.size(); ++i) tweets.push_back(testsupport::tweet(testsupport::pad_id(i), docs[i]));
  const CorpusHandle corpus(std::move(tweets));
  const auto index = build_index(corpus);
  const auto full = bm25_search(index, "w1 w2 w3", 100000);
  for (std::size_t k : {1u, 5u, 17u, 50u}) {
    const auto top = bm25_search(index, "w1 w2 w3", k);
    REQUIRE(top.candidates.size() == std::min<std::size_t>(k, full.candidates.size()));
    for (std::size_t i = 0; i < top.candidates.size(); ++i) {
      CHECK(top.candidates[i].tweet_id == full.candidates[i].tweet_id);
    }
  }
}

TEST_CASE("bm25 ties break by ascending tweet id", "[index]") {
  using testsupport::tweet;
  const CorpusHandle corpus({tweet("b", "garlic cures"), tweet("a", "garlic cures"), tweet("c", "nothing here")});
  const auto res = bm25_search(build_index(corpus), "garlic");
  REQUIRE(res.candidates.size() == 2);
  CHECK(res.candidates[0].tweet_id == "a");
  CHECK(res.candidates[1].tweet_id == "b");
}

TEST_CASE("bm25 edge cases", "[index]") {
  using testsupport::tweet;
  const CorpusHandle corpus({tweet("1", "alpha beta"), tweet("2", "gamma")});
  const auto index = build_index(corpus);
  CHECK_THROWS_AS(bm25_search(index, "alpha", 0), Error);
  const auto none = bm25_search(index, "!!! https://x.y @who");
  CHECK(none.candidates.empty());
  CHECK_FALSE(none.warning.empty());
  CHECK(bm25_search(index, "delta").candidates.empty());
  CHECK_THROWS_AS(build_index(CorpusHandle{}), Error);
}

TEST_CASE("index file round trips and rejects corruption", "[index]") {
  using testsupport::tweet;
  const CorpusHandle corpus({tweet("1", "alpha beta beta"), tweet("2", "gamma alpha"), tweet("3", "café")});
  const auto index = build_index(corpus);
  const std::string bytes = index.to_bytes();
  std::istringstream in(bytes);
  const auto back = InvertedIndex::read(in);
  CHECK(back.to_bytes() == bytes);
  CHECK(back.doc_count() == 3);
  CHECK(back.df("alpha") == 2);
  CHECK(back.avgdl() == index.avgdl());
  REQUIRE(back.postings("beta"));
  CHECK(back.postings("beta")->at(0).tf == 2);

  std::string bad = bytes;
  bad[0] = 'X';
  std::istringstream bad_in(bad);
  CHECK_THROWS_AS(InvertedIndex::read(bad_in), Error);
  std::istringstream short_in(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(InvertedIndex::read(short_in), Error);
}

TEST_CASE("idf follows the smoothed form", "[index]") {
  using testsupport::tweet;
  const CorpusHandle corpus({tweet("1", "a"), tweet("2", "a b"), tweet("3", "c"), tweet("4", "d")});
  const auto index = build_index(corpus);
  CHECK(index.idf(2) == Catch::Approx(std::log((4 - 2 + 0.5) / (2 + 0.5) + 1)));
  CHECK(index.avgdl() == Catch::Approx(5.0 / 4.0));
}
