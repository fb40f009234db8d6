#pragma once

// Run configuration: a JSON document with every field optional. Missing
// fields take the defaults below; unknown fields and bad values are reported
// per field. See docs/config.md for the schema.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "misinfo/digest.hpp"
#include "misinfo/error.hpp"
#include "misinfo/jsonl.hpp"

namespace misinfo {

struct RunPaths {
  std::string corpus;
  std::string claims;
  std::string snapshot;
  std::string events;
  std::string lexicon;
  std::string keywords;
  std::string credible_accounts;
  std::string debunk_urls;
  std::string ifcn_articles;
  std::string seed_dataset;
  std::string covidlies;
  std::string labeled_dataset;
  std::string topic_annotations;
};

struct RunConfig {
  RunPaths paths;

  // extraction
  std::size_t k_bm25 = 20000;
  std::size_t k_rerank = 1000;
  int window_days_before = 70;
  int window_days_after = 14;
  double confidence_threshold = 0.95;
  // enrichment
  double enrich_threshold = 0.7;
  // analytics
  int bin_hours = 4;
  int horizon_hours = 36;
  std::size_t n_comparison = 20000;
  // linguistic statistics
  double alpha = 0.05;
  std::size_t top_k = 10;
  std::size_t bow_top_k = 5000;
  std::size_t min_df_exclusive = 3;
  double max_df_ratio = 0.4;
  std::size_t ngram_max = 1;
  // evaluation
  std::size_t folds = 5;
  // scorer binding
  std::string scorer = "baseline";  // baseline | external
  double tau_match = 0.5;
  std::string embedder = "trigram";  // trigram | external
  std::size_t embed_dim = 512;
  std::string svo = "heuristic";  // heuristic | external
  std::string endpoint = "http://127.0.0.1:8765";
  int retries = 2;
  int timeout_ms = 30000;
  int max_in_flight = 4;

  std::uint64_t seed = 0;
  std::size_t workers = 0;  // 0 = hardware concurrency; not part of the hash

  std::size_t effective_workers() const {
    if (workers) return workers;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
  }
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> diagnostics)
      : Error(ErrorCode::kConfig, join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& d) {
    std::string s = "invalid config";
    for (const auto& x : d) s += "\n  " + x;
    return s;
  }
  std::vector<std::string> diagnostics_;
};

namespace detail {

class ConfigReader {
 public:
  std::vector<std::string> diags;

  // Reads obj[key] into out when present and reports type/range problems.
  template <typename T>
  void read(const json& obj, const std::string& section, const char* key, T& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    const std::string where = section.empty() ? key : section + "." + key;
    if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) return bad(where, "expected a string");
      out = it->get<std::string>();
    } else if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) return bad(where, "expected a number");
      out = it->get<double>();
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!it->is_number_unsigned()) return bad(where, "expected a non-negative integer");
      out = it->get<std::uint64_t>();
    } else if constexpr (std::is_unsigned_v<T>) {
      if (!it->is_number_unsigned()) return bad(where, "expected a non-negative integer");
      out = static_cast<T>(it->get<std::uint64_t>());
    } else {
      if (!it->is_number_integer()) return bad(where, "expected an integer");
      out = static_cast<T>(it->get<std::int64_t>());
    }
  }

  void unknown_keys(const json& obj, const std::string& section, std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (const char* k : known) ok = ok || it.key() == k;
      if (!ok) bad(section.empty() ? it.key() : section + "." + it.key(), "unknown field");
    }
  }

  const json* section(const json& root, const char* name) {
    auto it = root.find(name);
    if (it == root.end()) return nullptr;
    if (!it->is_object()) {
      bad(name, "expected an object");
      return nullptr;
    }
    return &*it;
  }

  void bad(const std::string& where, const std::string& what) { diags.push_back(where + ": " + what); }
};

}  // namespace detail

inline void validate(const RunConfig& c, std::vector<std::string>& d) {
  auto need = [&](bool ok, const char* field, const char* what) {
    if (!ok) d.push_back(std::string(field) + ": " + what);
  };
  need(c.k_bm25 >= 1, "pipeline.k_bm25", "must be >= 1");
  need(c.k_rerank >= 1, "pipeline.k_rerank", "must be >= 1");
  need(c.window_days_before >= 0, "pipeline.window_days_before", "must be >= 0");
  need(c.window_days_after >= 0, "pipeline.window_days_after", "must be >= 0");
  need(c.confidence_threshold > 0.0 && c.confidence_threshold <= 1.0, "pipeline.confidence_threshold",
       "must be in (0, 1]");
  need(c.enrich_threshold > 0.0 && c.enrich_threshold <= 1.0, "enrichment.threshold", "must be in (0, 1]");
  need(c.bin_hours > 0, "analytics.bin_hours", "must be > 0");
  need(c.horizon_hours > 0 && c.bin_hours > 0 && c.horizon_hours % c.bin_hours == 0, "analytics.horizon_hours",
       "must be a positive multiple of bin_hours");
  need(c.n_comparison >= 1, "analytics.n_comparison", "must be >= 1");
  need(c.alpha > 0.0 && c.alpha < 1.0, "lingstats.alpha", "must be in (0, 1)");
  need(c.top_k >= 1, "lingstats.top_k", "must be >= 1");
  need(c.bow_top_k >= 1, "lingstats.bow_top_k", "must be >= 1");
  need(c.max_df_ratio > 0.0 && c.max_df_ratio <= 1.0, "lingstats.max_df_ratio", "must be in (0, 1]");
  need(c.ngram_max >= 1, "lingstats.ngram_max", "must be >= 1");
  need(c.folds >= 2, "evaluation.folds", "must be >= 2");
  need(c.scorer == "baseline" || c.scorer == "external", "scorer.kind", "must be 'baseline' or 'external'");
  need(c.tau_match > 0.0 && c.tau_match <= 1.0, "scorer.tau_match", "must be in (0, 1]");
  need(c.embedder == "trigram" || c.embedder == "external", "scorer.embedder", "must be 'trigram' or 'external'");
  need(c.embed_dim >= 1, "scorer.embed_dim", "must be >= 1");
  need(c.svo == "heuristic" || c.svo == "external", "scorer.svo", "must be 'heuristic' or 'external'");
  need(c.retries >= 0, "scorer.retries", "must be >= 0");
  need(c.timeout_ms > 0, "scorer.timeout_ms", "must be > 0");
  need(c.max_in_flight >= 1, "scorer.max_in_flight", "must be >= 1");
}

inline RunConfig parse_run_config(const json& root) {
  RunConfig c;
  detail::ConfigReader r;
  if (!root.is_object()) throw ConfigError({"<root>: expected an object"});
  r.unknown_keys(root, "",
                 {"paths", "pipeline", "enrichment", "analytics", "lingstats", "evaluation", "scorer", "seed", "workers"});
  if (const json* p = r.section(root, "paths")) {
    r.unknown_keys(*p, "paths",
                   {"corpus", "claims", "snapshot", "events", "lexicon", "keywords", "credible_accounts", "debunk_urls",
                    "ifcn_articles", "seed_dataset", "covidlies", "labeled_dataset", "topic_annotations"});
    auto& P = c.paths;
    r.read(*p, "paths", "corpus", P.corpus);
    r.read(*p, "paths", "claims", P.claims);
    r.read(*p, "paths", "snapshot", P.snapshot);
    r.read(*p, "paths", "events", P.events);
    r.read(*p, "paths", "lexicon", P.lexicon);
    r.read(*p, "paths", "keywords", P.keywords);
    r.read(*p, "paths", "credible_accounts", P.credible_accounts);
    r.read(*p, "paths", "debunk_urls", P.debunk_urls);
    r.read(*p, "paths", "ifcn_articles", P.ifcn_articles);
    r.read(*p, "paths", "seed_dataset", P.seed_dataset);
    r.read(*p, "paths", "covidlies", P.covidlies);
    r.read(*p, "paths", "labeled_dataset", P.labeled_dataset);
    r.read(*p, "paths", "topic_annotations", P.topic_annotations);
  }
  if (const json* p = r.section(root, "pipeline")) {
    r.unknown_keys(*p, "pipeline",
                   {"k_bm25", "k_rerank", "window_days_before", "window_days_after", "confidence_threshold"});
    r.read(*p, "pipeline", "k_bm25", c.k_bm25);
    r.read(*p, "pipeline", "k_rerank", c.k_rerank);
    r.read(*p, "pipeline", "window_days_before", c.window_days_before);
    r.read(*p, "pipeline", "window_days_after", c.window_days_after);
    r.read(*p, "pipeline", "confidence_threshold", c.confidence_threshold);
  }
  if (const json* p = r.section(root, "enrichment")) {
    r.unknown_keys(*p, "enrichment", {"threshold"});
    r.read(*p, "enrichment", "threshold", c.enrich_threshold);
  }
  if (const json* p = r.section(root, "analytics")) {
    r.unknown_keys(*p, "analytics", {"bin_hours", "horizon_hours", "n_comparison"});
    r.read(*p, "analytics", "bin_hours", c.bin_hours);
    r.read(*p, "analytics", "horizon_hours", c.horizon_hours);
    r.read(*p, "analytics", "n_comparison", c.n_comparison);
  }
  if (const json* p = r.section(root, "lingstats")) {
    r.unknown_keys(*p, "lingstats", {"alpha", "top_k", "bow_top_k", "min_df_exclusive", "max_df_ratio", "ngram_max"});
    r.read(*p, "lingstats", "alpha", c.alpha);
    r.read(*p, "lingstats", "top_k", c.top_k);
    r.read(*p, "lingstats", "bow_top_k", c.bow_top_k);
    r.read(*p, "lingstats", "min_df_exclusive", c.min_df_exclusive);
    r.read(*p, "lingstats", "max_df_ratio", c.max_df_ratio);
    r.read(*p, "lingstats", "ngram_max", c.ngram_max);
  }
  if (const json* p = r.section(root, "evaluation")) {
    r.unknown_keys(*p, "evaluation", {"folds"});
    r.read(*p, "evaluation", "folds", c.folds);
  }
  if (const json* p = r.section(root, "scorer")) {
    r.unknown_keys(*p, "scorer",
                   {"kind", "tau_match", "embedder", "embed_dim", "svo", "endpoint", "retries", "timeout_ms",
                    "max_in_flight"});
    r.read(*p, "scorer", "kind", c.scorer);
    r.read(*p, "scorer", "tau_match", c.tau_match);
    r.read(*p, "scorer", "embedder", c.embedder);
    r.read(*p, "scorer", "embed_dim", c.embed_dim);
    r.read(*p, "scorer", "svo", c.svo);
    r.read(*p, "scorer", "endpoint", c.endpoint);
    r.read(*p, "scorer", "retries", c.retries);
    r.read(*p, "scorer", "timeout_ms", c.timeout_ms);
    r.read(*p, "scorer", "max_in_flight", c.max_in_flight);
  }
  r.read(root, "", "seed", c.seed);
  r.read(root, "", "workers", c.workers);
  validate(c, r.diags);
  if (!r.diags.empty()) throw ConfigError(std::move(r.diags));
  return c;
}

// Relative paths are resolved against the config file's directory.
inline RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read config " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError({std::string("<root>: ") + e.what()});
  }
  RunConfig c = parse_run_config(root);
  const auto base = path.parent_path();
  for (std::string* p : {&c.paths.corpus, &c.paths.claims, &c.paths.snapshot, &c.paths.events, &c.paths.lexicon,
                         &c.paths.keywords, &c.paths.credible_accounts, &c.paths.debunk_urls, &c.paths.ifcn_articles,
                         &c.paths.seed_dataset, &c.paths.covidlies, &c.paths.labeled_dataset,
                         &c.paths.topic_annotations}) {
    if (!p->empty() && std::filesystem::path(*p).is_relative()) *p = (base / *p).lexically_normal().string();
  }
  return c;
}

// Fully defaulted form. `workers` is left out: it does not change outputs.
inline json config_to_json(const RunConfig& c) {
  json j;
  const auto& P = c.paths;
  j["paths"] = {{"corpus", P.corpus},
                {"claims", P.claims},
                {"snapshot", P.snapshot},
                {"events", P.events},
                {"lexicon", P.lexicon},
                {"keywords", P.keywords},
                {"credible_accounts", P.credible_accounts},
                {"debunk_urls", P.debunk_urls},
                {"ifcn_articles", P.ifcn_articles},
                {"seed_dataset", P.seed_dataset},
                {"covidlies", P.covidlies},
                {"labeled_dataset", P.labeled_dataset},
                {"topic_annotations", P.topic_annotations}};
  j["pipeline"] = {{"k_bm25", c.k_bm25},
                   {"k_rerank", c.k_rerank},
                   {"window_days_before", c.window_days_before},
                   {"window_days_after", c.window_days_after},
                   {"confidence_threshold", c.confidence_threshold}};
  j["enrichment"] = {{"threshold", c.enrich_threshold}};
  j["analytics"] = {{"bin_hours", c.bin_hours}, {"horizon_hours", c.horizon_hours}, {"n_comparison", c.n_comparison}};
  j["lingstats"] = {{"alpha", c.alpha},
                    {"top_k", c.top_k},
                    {"bow_top_k", c.bow_top_k},
                    {"min_df_exclusive", c.min_df_exclusive},
                    {"max_df_ratio", c.max_df_ratio},
                    {"ngram_max", c.ngram_max}};
  j["evaluation"] = {{"folds", c.folds}};
  j["scorer"] = {{"kind", c.scorer},          {"tau_match", c.tau_match}, {"embedder", c.embedder},
                 {"embed_dim", c.embed_dim},  {"svo", c.svo},             {"endpoint", c.endpoint},
                 {"retries", c.retries},      {"timeout_ms", c.timeout_ms}, {"max_in_flight", c.max_in_flight}};
  j["seed"] = c.seed;
  return j;
}

// SHA-256 of the canonical (sorted-key, compact) JSON.
inline std::string config_hash(const RunConfig& c) { return digest::sha256_hex(config_to_json(c).dump()); }

}  // namespace misinfo
