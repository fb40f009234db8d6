#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace misinfo;

namespace {

std::vector<std::string> diagnostics_of(const std::string& text) {
  try {
    parse_run_config(json::parse(text));
  } catch (const ConfigError& e) {
    return e.diagnostics();
  }
  return {};
}

}  // namespace

TEST_CASE("defaults carry the published constants", "[config]") {
  const auto c = parse_run_config(json::object());
  CHECK(c.k_bm25 == 20000);
  CHECK(c.k_rerank == 1000);
  CHECK(c.window_days_before == 70);
  CHECK(c.window_days_after == 14);
  CHECK(c.confidence_threshold == 0.95);
  CHECK(c.enrich_threshold == 0.7);
  CHECK(c.bin_hours == 4);
  CHECK(c.horizon_hours == 36);
  CHECK(c.horizon_hours / c.bin_hours == 9);
  CHECK(c.n_comparison == 20000);
  CHECK(c.alpha == 0.05);
  CHECK(c.top_k == 10);
  CHECK(c.min_df_exclusive == 3);
  CHECK(c.max_df_ratio == 0.4);
  CHECK(c.folds == 5);
  CHECK(c.scorer == "baseline");
  // library defaults agree with the config defaults
  const PipelineConfig p;
  CHECK(p.k_bm25 == c.k_bm25);
  CHECK(p.k_rerank == c.k_rerank);
  CHECK(p.window.days_before == c.window_days_before);
  CHECK(p.window.days_after == c.window_days_after);
  CHECK(p.confidence_threshold == c.confidence_threshold);
}

TEST_CASE("bundled fixture config parses", "[config]") {
  const auto c = load_run_config(testsupport::fixture("config.json"));
  CHECK(c.seed == 7);
  CHECK(c.n_comparison == 300);
  CHECK(std::filesystem::path(c.paths.corpus).is_absolute());
  CHECK(std::filesystem::exists(c.paths.corpus));
  CHECK(std::filesystem::exists(c.paths.lexicon));
  CHECK(c.k_bm25 == 20000);
}

TEST_CASE("field-level diagnostics", "[config]") {
  CHECK(diagnostics_of(R"({"pipeline": {"k_bm25": 0}})") == std::vector<std::string>{"pipeline.k_bm25: must be >= 1"});
  CHECK(diagnostics_of(R"({"pipeline": {"k_bm25": -3}})") ==
        std::vector<std::string>{"pipeline.k_bm25: expected a non-negative integer"});
  CHECK(diagnostics_of(R"({"pipeline": {"confidence_threshold": "high"}})") ==
        std::vector<std::string>{"pipeline.confidence_threshold: expected a number"});
  CHECK(diagnostics_of(R"({"pipline": {}})") == std::vector<std::string>{"pipline: unknown field"});
  CHECK(diagnostics_of(R"({"paths": {"corpus": 3, "tweets": "x"}})") ==
        std::vector<std::string>{"paths.tweets: unknown field", "paths.corpus: expected a string"});
  CHECK(diagnostics_of(R"({"analytics": {"bin_hours": 5}})") ==
        std::vector<std::string>{"analytics.horizon_hours: must be a positive multiple of bin_hours"});
  CHECK(diagnostics_of(R"({"scorer": {"kind": "bert"}})") ==
        std::vector<std::string>{"scorer.kind: must be 'baseline' or 'external'"});
  CHECK(diagnostics_of(R"({"enrichment": 0.7})") == std::vector<std::string>{"enrichment: expected an object"});
  CHECK(diagnostics_of("[1]") == std::vector<std::string>{"<root>: expected an object"});
  // unknown keys do not hide range errors
  CHECK(diagnostics_of(R"({"pipeline": {"k_bm25": 0, "window_days_befor": 70}, "enrichment": {"threshold": 1.5}})") ==
        std::vector<std::string>{"pipeline.window_days_befor: unknown field", "pipeline.k_bm25: must be >= 1",
                                 "enrichment.threshold: must be in (0, 1]"});
}

TEST_CASE("malformed and missing config files", "[config]") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "bad.json", "{ nope");
  CHECK_THROWS_AS(load_run_config(dir / "bad.json"), ConfigError);
  try {
    load_run_config(dir / "missing.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
}

TEST_CASE("config hash is stable and ignores workers", "[config]") {
  const auto a = parse_run_config(json::object());
  const auto b = parse_run_config(json::parse(R"({"workers": 8})"));
  const auto c = parse_run_config(json::parse(R"({"seed": 1})"));
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(c));
  CHECK(config_hash(a).size() == 64);
  // explicit defaults hash the same as omitted ones
  const auto d = parse_run_config(json::parse(R"({"pipeline": {"k_bm25": 20000}, "seed": 0})"));
  CHECK(config_hash(a) == config_hash(d));
  CHECK(parse_run_config(config_to_json(c)).seed == 1);
}

TEST_CASE("sha256 digests", "[config]") {
  CHECK(digest::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(digest::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  testsupport::TempDir dir;
  testsupport::write_file(dir / "f", "abc");
  CHECK(digest::sha256_file(dir / "f") == digest::sha256_hex("abc"));
}
