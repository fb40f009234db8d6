#include <catch_amalgamated.hpp>

#include "mock_sidecar.hpp"
#include "support.hpp"

using namespace misinfo;
using testsupport::MockFaults;
using testsupport::MockSidecar;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kConfig;
}

const std::vector<PairText> kPairs = {
    {"garlic cures covid", "garlic cures covid for real"},
    {"garlic cures covid", "fact check: garlic does not cure covid, this is false"},
    {"5g towers spread the virus", "the beach was lovely today"},
};

std::set<std::pair<std::string, std::string>> keys(const MisinfoSet& s) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : s.pairs) out.emplace(p.prediction.claim_id, p.prediction.tweet_id);
  return out;
}

}  // namespace

TEST_CASE("external scorer reproduces the baseline over the wire", "[sidecar]") {
  MockSidecar mock;
  const ExternalScorer ext(mock.options());
  const BaselineLexicalScorer base;
  for (const auto& p : kPairs) CHECK(ext.score(p.claim, p.text) == base.score(p.claim, p.text));
  const auto batch = ext.score_batch(kPairs);
  REQUIRE(batch.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(batch[i] == base.score(kPairs[i].claim, kPairs[i].text));
  CHECK(ext.score_batch({}).empty());
}

TEST_CASE("protocol violations are rejected", "[sidecar]") {
  {
    MockSidecar mock({.bad_label = true});
    CHECK(code_of([&] { ExternalScorer(mock.options()).score("a b", "a b"); }) == ErrorCode::kProtocol);
  }
  {
    MockSidecar mock({.bad_confidence = true});
    CHECK(code_of([&] { ExternalScorer(mock.options()).score("a b", "a b"); }) == ErrorCode::kProtocol);
  }
  CHECK_THROWS_AS(parse_score_response(json{{"label", "misinformation"}, {"confidence", 0.5}}), Error);
  CHECK_THROWS_AS(parse_score_response(json{{"label", "DEBUNK"}}), Error);
  CHECK_THROWS_AS(parse_score_response(json::array()), Error);
  CHECK(parse_score_response(json{{"label", "DEBUNK"}, {"confidence", 0}}).label == Label::kDebunk);
}

TEST_CASE("4xx is not retried, 5xx is", "[sidecar]") {
  MockSidecar mock({.fail_first_n = 2});
  const ExternalScorer ok(mock.options(2));
  CHECK(ok.score("garlic cures covid", "garlic cures covid").label == Label::kMisinformation);
  CHECK(mock.requests() == 3);

  MockSidecar strict;
  const SidecarClient client(strict.options(3));
  CHECK(code_of([&] { client.post("/score", json{{"claim", "x"}}); }) == ErrorCode::kProtocol);
  CHECK(strict.requests() == 1);

  MockSidecar down({.fail_first_n = 100});
  CHECK(code_of([&] { ExternalScorer(down.options(1)).score("a b", "a b"); }) == ErrorCode::kScorerUnavailable);
  CHECK(down.requests() == 2);
}

TEST_CASE("unreachable endpoint is a scorer failure", "[sidecar]") {
  SidecarOptions o;
  o.endpoint = "http://127.0.0.1:1";
  o.retries = 1;
  o.backoff_ms = 1;
  o.timeout_ms = 500;
  CHECK(code_of([&] { ExternalScorer(o).score("a b", "a b"); }) == ErrorCode::kScorerUnavailable);
  CHECK_FALSE(SidecarClient(o).healthy());
}

TEST_CASE("empty texts never reach the wire", "[sidecar]") {
  MockSidecar mock({.accept_empty = true});
  CHECK(code_of([&] { ExternalScorer(mock.options()).score("claim", " "); }) == ErrorCode::kInvalidArgument);
  CHECK(mock.requests() == 0);
}

TEST_CASE("external embedder checks dimension and normalizes", "[sidecar]") {
  MockSidecar mock({}, 64);
  const ExternalEmbedder emb(mock.options(), 64);
  const auto v = emb.embed("garlic cures covid");
  CHECK(v.values.size() == 64);
  CHECK(dot(v, v) == Catch::Approx(1.0));
  const auto local = TrigramEmbedder(64).embed("garlic cures covid");
  CHECK(cosine(v, local) == Catch::Approx(1.0).margin(1e-12));
  CHECK(code_of([&] { ExternalEmbedder(mock.options(), 32).embed("x y"); }) == ErrorCode::kProtocol);
  CHECK(code_of([&] { emb.embed(""); }) == ErrorCode::kProtocol);
}

TEST_CASE("external svo terms are re-tokenized", "[sidecar]") {
  MockSidecar mock;
  const auto t = ExternalSvoExtractor(mock.options()).extract("Garlic cures COVID");
  CHECK(t.subjects == std::set<std::string>{"garlic"});
  CHECK(t.objects == std::set<std::string>{"covid"});
}

TEST_CASE("in-flight limiter bounds concurrency", "[sidecar]") {
  InFlightLimiter lim(2);
  std::atomic<int> now{0}, peak{0};
  std::vector<std::thread> ts;
  for (int i = 0; i < 8; ++i) {
    ts.emplace_back([&] {
      lim.run([&] {
        const int n = ++now;
        int p = peak.load();
        while (n > p && !peak.compare_exchange_weak(p, n)) {
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
        --now;
        return 0;
      });
    });
  }
  for (auto& t : ts) t.join();
  CHECK(peak.load() <= 2);
  CHECK(peak.load() >= 1);
}

TEST_CASE("reference mock passes the conformance suite", "[sidecar]") {
  MockSidecar mock({}, 64);
  ConformanceOptions opt;
  opt.sidecar = mock.options();
  opt.embed_dim = 64;
  opt.check_svo = true;
  const auto rep = run_conformance(opt);
  INFO(rep.to_text());
  CHECK(rep.passed());
  CHECK(rep.checks.size() == 11);
}

TEST_CASE("conformance suite catches each fault", "[sidecar]") {
  auto failing = [](MockFaults f, std::size_t dim = 0) {
    MockSidecar mock(f, 64);
    ConformanceOptions opt;
    opt.sidecar = mock.options();
    opt.embed_dim = dim;
    std::set<std::string> out;
    for (const auto& c : run_conformance(opt).checks)
      if (!c.passed) out.insert(c.name);
    return out;
  };
  CHECK(failing({.reverse_batch = true}) == std::set<std::string>{"score.batch_order"});
  CHECK(failing({.never_ready = true}) == std::set<std::string>{"health"});
  CHECK(failing({.accept_empty = true}) == std::set<std::string>{"score.empty_text_is_4xx"});
  CHECK(failing({.embed_dim_override = 32}, 64) == std::set<std::string>{"embed.dimension_and_norm"});
  const auto bad_label = failing({.bad_label = true});
  CHECK(bad_label.count("score.label_closure_and_range"));
  CHECK(failing({.bad_confidence = true}).count("score.label_closure_and_range"));
}

TEST_CASE("a conforming sidecar is interchangeable in extraction", "[sidecar]") {
  const auto corpus = ingest_tweets(testsupport::fixture("tweets.jsonl")).corpus;
  const auto claims = ingest_claims(testsupport::fixture("claims.csv")).claims;
  const auto index = build_index(corpus);
  MockSidecar mock({}, 512);
  const BaselineLexicalScorer base;
  const ExternalScorer ext(mock.options(1));
  const TrigramEmbedder embedder;
  PipelineConfig cfg;
  cfg.workers = 2;
  const auto a = extract_misinformation(claims, {corpus, index, base, embedder, default_svo_extractor()}, cfg);
  const auto b = extract_misinformation(claims, {corpus, index, ext, embedder, default_svo_extractor()}, cfg);
  CHECK(keys(a) == keys(b));
  CHECK(a.manifest().dump() == b.manifest().dump());
  CHECK(b.failed_claims() == 0);
  // funnel is monotone per claim
  for (const auto& s : b.stages) {
    CHECK(s.rerank <= s.bm25);
    CHECK(s.temporal <= s.rerank);
    CHECK(s.scored == s.temporal);
    CHECK(s.misinformation <= s.scored);
    CHECK(s.accepted <= s.misinformation);
  }
}

TEST_CASE("a dead sidecar fails claims, not the run", "[sidecar]") {
  const CorpusHandle corpus({testsupport::tweet("1", "garlic cures covid")});
  const ClaimSet claims({testsupport::claim("A", "garlic cures covid")});
  const auto index = build_index(corpus);
  SidecarOptions o;
  o.endpoint = "http://127.0.0.1:1";
  o.retries = 0;
  o.timeout_ms = 300;
  const ExternalScorer ext(o);
  const TrigramEmbedder embedder;
  const auto got = extract_misinformation(claims, {corpus, index, ext, embedder, default_svo_extractor()});
  CHECK(got.failed_claims() == 1);
  CHECK(got.pairs.empty());
}
