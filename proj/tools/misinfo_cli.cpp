// misinfo: batch command-line front end.
//
//   misinfo <subcommand> --config run.json --run-dir out/ [--workers N] ...
//
// Exit codes: 0 ok, 1 usage or config, 2 input error, 3 external scorer failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "misinfo/misinfo.hpp"

namespace fs = std::filesystem;
using namespace misinfo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitScorer = 3;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kConfig:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kScorerUnavailable:
    case ErrorCode::kProtocol:
      return kExitScorer;
    default:
      return kExitInput;
  }
}

struct Flags {
  std::string config;
  std::string run_dir = "run";
  std::optional<std::size_t> workers;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> scorer;
  std::optional<std::string> endpoint;
  std::string tweets;  // analyze / lingstats: explicit tweet id list
};

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> read_id_list(const fs::path& p) {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (auto& w : load_word_list(p)) {
    if (seen.insert(w).second) ids.push_back(std::move(w));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// One run directory: inputs are loaded lazily and every artifact written
// through here is digested into manifest.json.
class Run {
 public:
  Run(RunConfig cfg, fs::path dir) : cfg_(std::move(cfg)), dir_(std::move(dir)), hash_(config_hash(cfg_)) {
    fs::create_directories(dir_);
    const auto mpath = dir_ / "manifest.json";
    if (fs::exists(mpath)) {
      ordered_json old;
      try {
        old = ordered_json::parse(read_text(mpath));
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kConfig, mpath.string() + " is not valid JSON: " + e.what());
      }
      const std::string prev = old.value("config_hash", "");
      if (prev != hash_) {
        throw Error(ErrorCode::kConfig, "run directory " + dir_.string() + " holds artifacts of config " + prev +
                                            "; current config is " + hash_ + ". Refusing to overwrite.");
      }
      if (old.contains("artifacts")) artifacts_ = old["artifacts"];
      if (old.contains("inputs")) inputs_ = old["inputs"];
    }
  }

  const RunConfig& cfg() const { return cfg_; }
  const std::string& hash() const { return hash_; }
  const fs::path& dir() const { return dir_; }

  PipelineConfig pipeline() const {
    PipelineConfig p;
    p.k_bm25 = cfg_.k_bm25;
    p.k_rerank = cfg_.k_rerank;
    p.window = {cfg_.window_days_before, cfg_.window_days_after};
    p.confidence_threshold = cfg_.confidence_threshold;
    p.workers = cfg_.effective_workers();
    return p;
  }

  fs::path need(const std::string& path, const char* field) {
    if (path.empty()) throw Error(ErrorCode::kConfig, std::string("paths.") + field + " is required for this command");
    if (!inputs_.contains(field)) {
      if (!fs::exists(path)) throw Error(ErrorCode::kIo, std::string("paths.") + field + ": no such file " + path);
      inputs_[field] = {{"path", path}, {"sha256", digest::sha256_file(path)}};
    }
    return path;
  }

  const CorpusHandle& corpus() {
    if (!corpus_) {
      IngestOptions opt;
      if (!cfg_.paths.keywords.empty()) opt.keyword_filter = KeywordFilter(load_word_list(need(cfg_.paths.keywords, "keywords")));
      auto res = ingest_tweets(need(cfg_.paths.corpus, "corpus"), opt);
      if (res.corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "no source tweets retained from " + cfg_.paths.corpus);
      reports_["tweets"] = res.report.to_json();
      corpus_ = std::make_unique<CorpusHandle>(std::move(res.corpus));
    }
    return *corpus_;
  }

  const ClaimSet& claims() {
    if (!claims_) {
      auto res = ingest_claims(need(cfg_.paths.claims, "claims"));
      reports_["claims"] = res.report.to_json();
      claims_ = std::make_unique<ClaimSet>(std::move(res.claims));
    }
    return *claims_;
  }

  const LiveStatusSnapshot& snapshot() {
    if (!snapshot_) {
      auto res = ingest_status_snapshot(need(cfg_.paths.snapshot, "snapshot"), corpus());
      reports_["snapshot"] = res.report.to_json();
      snapshot_ = std::make_unique<LiveStatusSnapshot>(std::move(res.snapshot));
    }
    return *snapshot_;
  }

  const SpreadEventLog& events() {
    if (!events_) {
      auto res = ingest_spread_events(need(cfg_.paths.events, "events"), corpus());
      reports_["events"] = res.report.to_json();
      events_ = std::make_unique<SpreadEventLog>(std::move(res.log));
    }
    return *events_;
  }

  const InvertedIndex& index() {
    if (!index_) {
      const auto p = dir_ / "index.bin";
      if (artifacts_.contains("index.bin") && fs::exists(p) &&
          artifacts_["index.bin"].get<std::string>() == digest::sha256_file(p)) {
        std::ifstream in(p, std::ios::binary);
        index_ = std::make_unique<InvertedIndex>(InvertedIndex::read(in));
        if (index_->doc_count() != corpus().size()) index_.reset();
      }
      if (!index_) index_ = std::make_unique<InvertedIndex>(build_index(corpus()));
    }
    return *index_;
  }

  const Scorer& scorer() {
    if (!scorer_) {
      ScorerBinding b;
      b.kind = cfg_.scorer == "external" ? ScorerKind::kExternal : ScorerKind::kBaselineLexical;
      b.tau_match = cfg_.tau_match;
      b.sidecar = sidecar();
      b.max_in_flight = cfg_.max_in_flight;
      if (b.kind == ScorerKind::kExternal) require_healthy();
      scorer_ = b.resolve();
    }
    return *scorer_;
  }

  const Embedder& embedder() {
    if (!embedder_) {
      if (cfg_.embedder == "external") {
        require_healthy();
        embedder_ = std::make_unique<ExternalEmbedder>(sidecar(), cfg_.embed_dim);
      } else {
        embedder_ = std::make_unique<TrigramEmbedder>(cfg_.embed_dim);
      }
    }
    return *embedder_;
  }

  const SvoExtractor& svo() {
    if (cfg_.svo == "external") {
      if (!svo_) {
        require_healthy();
        svo_ = std::make_unique<ExternalSvoExtractor>(sidecar());
      }
      return *svo_;
    }
    return default_svo_extractor();
  }

  ExtractionContext context() { return {corpus(), index(), scorer(), embedder(), svo()}; }

  // Pairs from an earlier `extract` in this run directory, else a fresh extraction.
  const MisinfoSet& misinfo_set() {
    if (!misinfo_) {
      const auto p = dir_ / "misinfo_pairs.jsonl";
      if (artifacts_.contains("misinfo_pairs.jsonl") && fs::exists(p) &&
          artifacts_["misinfo_pairs.jsonl"].get<std::string>() == digest::sha256_file(p)) {
        misinfo_ = std::make_unique<MisinfoSet>(load_misinfo_set(p));
      } else {
        auto set = extract_misinformation(claims(), context(), pipeline());
        set.config_hash = hash_;
        misinfo_ = std::make_unique<MisinfoSet>(std::move(set));
      }
    }
    return *misinfo_;
  }

  TopicJoin topic_join() {
    if (!cfg_.paths.topic_annotations.empty()) {
      std::size_t bad = 0;
      auto j = load_topic_annotations(need(cfg_.paths.topic_annotations, "topic_annotations"), &bad);
      reports_["topic_annotations"] = {{"tweets", j.size()}, {"malformed", bad}};
      return j;
    }
    return join_topics(misinfo_set(), claims());
  }

  void write(const std::string& name, const std::string& content) {
    const auto p = dir_ / name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
    out << content;
    out.close();
    artifacts_[name] = digest::sha256_hex(content);
  }

  // Tabular artifacts name the config hash in a leading comment line.
  void write_table(const std::string& name, const std::string& body) {
    write(name, "# config_hash: " + hash_ + "\n" + body);
  }

  void write_json(const std::string& name, ordered_json j) {
    ordered_json out;
    out["config_hash"] = hash_;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value();
    write(name, out.dump(2) + "\n");
  }

  void record_file(const std::string& name) { artifacts_[name] = digest::sha256_file(dir_ / name); }

  const ordered_json& reports() const { return reports_; }

  void save_manifest() const {
    ordered_json m;
    m["config_hash"] = hash_;
    m["config"] = config_to_json(cfg_);
    m["inputs"] = inputs_;
    m["artifacts"] = artifacts_;
    std::ofstream out(dir_ / "manifest.json", std::ios::binary | std::ios::trunc);
    out << m.dump(2) << '\n';
  }

 private:
  SidecarOptions sidecar() const {
    SidecarOptions o;
    o.endpoint = cfg_.endpoint;
    o.retries = cfg_.retries;
    o.timeout_ms = cfg_.timeout_ms;
    return o;
  }
  void require_healthy() {
    if (healthy_checked_) return;
    if (!SidecarClient(sidecar()).healthy()) {
      throw Error(ErrorCode::kScorerUnavailable, "sidecar at " + cfg_.endpoint + " is not ready");
    }
    healthy_checked_ = true;
  }

  RunConfig cfg_;
  fs::path dir_;
  std::string hash_;
  ordered_json artifacts_ = ordered_json::object();
  ordered_json inputs_ = ordered_json::object();
  ordered_json reports_ = ordered_json::object();
  std::unique_ptr<CorpusHandle> corpus_;
  std::unique_ptr<ClaimSet> claims_;
  std::unique_ptr<LiveStatusSnapshot> snapshot_;
  std::unique_ptr<SpreadEventLog> events_;
  std::unique_ptr<InvertedIndex> index_;
  std::unique_ptr<Scorer> scorer_;
  std::unique_ptr<Embedder> embedder_;
  std::unique_ptr<SvoExtractor> svo_;
  std::unique_ptr<MisinfoSet> misinfo_;
  bool healthy_checked_ = false;
};

// ---------------------------------------------------------------------------
// subcommands

void cmd_ingest(Run& run) {
  run.corpus();
  run.claims();
  if (!run.cfg().paths.snapshot.empty()) run.snapshot();
  if (!run.cfg().paths.events.empty()) run.events();
  std::string corpus;
  for (const auto& t : run.corpus().tweets()) corpus += tweet_to_json(t).dump() + "\n";
  run.write("corpus.jsonl", corpus);
  run.write_json("ingest_report.json", run.reports());
  std::cout << "ingested " << run.corpus().size() << " source tweets, " << run.claims().size() << " claims\n";
}

void cmd_index(Run& run) {
  const auto idx = build_index(run.corpus());
  run.write("index.bin", idx.to_bytes());
  run.write_json("index_report.json", ordered_json{{"documents", idx.doc_count()},
                                                   {"terms", idx.term_count()},
                                                   {"avgdl", idx.avgdl()}});
  std::cout << "indexed " << idx.doc_count() << " documents, " << idx.term_count() << " terms\n";
}

void cmd_extract(Run& run) {
  auto set = extract_misinformation(run.claims(), run.context(), run.pipeline());
  set.config_hash = run.hash();
  std::string pairs;
  for (const auto& a : set.pairs) pairs += accepted_to_json(a).dump() + "\n";
  run.write("misinfo_pairs.jsonl", pairs);
  run.write("extract_manifest.json", set.manifest().dump(2) + "\n");
  std::cout << "accepted " << set.pairs.size() << " pairs over " << set.distinct_tweets() << " tweets";
  if (set.failed_claims()) std::cout << "; " << set.failed_claims() << " claim(s) failed, see extract_manifest.json";
  std::cout << "\n";
}

std::vector<TrainingSample> build_enriched(Run& run, ordered_json& report) {
  const auto& P = run.cfg().paths;
  std::vector<TrainingSample> all;

  std::vector<std::string> extra_urls;
  if (!P.debunk_urls.empty()) extra_urls = load_word_list(run.need(P.debunk_urls, "debunk_urls"));
  const auto credible = P.credible_accounts.empty()
                            ? normalize_handle_set(to_vector(lists::kDefaultCredibleAccounts))
                            : normalize_handle_set(load_word_list(run.need(P.credible_accounts, "credible_accounts")));
  const EnrichmentInputs in{run.corpus(), run.claims(), run.snapshot(), known_debunk_urls(run.claims(), extra_urls),
                            credible, run.cfg().enrich_threshold};
  auto collected = enrich_from_collection(in, run.context(), run.pipeline());
  report["collection"] = collected.report.to_json();
  all.insert(all.end(), collected.samples.begin(), collected.samples.end());

  if (!P.ifcn_articles.empty()) {
    IfcnReport rep;
    auto s = enrich_from_ifcn(load_debunk_articles(run.need(P.ifcn_articles, "ifcn_articles")), &rep);
    report["ifcn"] = {{"articles", rep.articles},
                      {"rejected_no_explanation", rep.rejected_no_explanation},
                      {"debunk_samples", rep.debunk_samples},
                      {"misinformation_samples", rep.misinformation_samples}};
    all.insert(all.end(), s.begin(), s.end());
  }
  auto import = [&](const std::string& path, const char* field, SampleSource src) {
    if (path.empty()) return;
    std::size_t rejected = 0;
    auto s = import_labeled_pairs(run.need(path, field), src, &rejected);
    report[field] = {{"imported", s.size()}, {"rejected", rejected}};
    all.insert(all.end(), s.begin(), s.end());
  };
  import(P.covidlies, "covidlies", SampleSource::kCovidLies);
  import(P.seed_dataset, "seed_dataset", SampleSource::kSeedAnnotated);

  auto cleaned = clean_pairs(all, run.svo());
  report["cleaning"] = {{"input", all.size()}, {"kept", cleaned.kept.size()}, {"discarded", cleaned.discarded.size()}};
  return std::move(cleaned.kept);
}

std::string samples_jsonl(const std::vector<TrainingSample>& samples) {
  std::string out;
  for (const auto& s : samples) out += sample_to_json(s).dump() + "\n";
  return out;
}

void cmd_enrich(Run& run) {
  ordered_json report;
  const auto kept = build_enriched(run, report);
  run.write("enriched.jsonl", samples_jsonl(kept));
  run.write_table("dataset_table.csv", dataset_report(kept).to_text());
  run.write_json("enrich_report.json", report);
  std::cout << "enriched set: " << kept.size() << " samples\n";
}

void cmd_eval(Run& run) {
  const auto& P = run.cfg().paths;
  const auto data = import_labeled_pairs(run.need(P.labeled_dataset, "labeled_dataset"), SampleSource::kSeedAnnotated);
  if (data.empty()) throw Error(ErrorCode::kParse, "labeled dataset has no usable rows");

  std::vector<TrainingSample> enrichment;
  const auto ep = run.dir() / "enriched.jsonl";
  if (fs::exists(ep)) enrichment = load_training_set(ep);

  const Scorer& scorer = run.scorer();
  std::shared_ptr<const Scorer> shared(&scorer, [](const Scorer*) {});
  EvalOptions opt;
  opt.folds = run.cfg().folds;
  opt.seed = run.cfg().seed;
  opt.workers = run.cfg().effective_workers();
  const auto plain = evaluate(data, shared, opt);
  opt.enrichment = enrichment;
  const auto enriched = evaluate(data, shared, opt);

  run.write_json("eval.json", ordered_json{{"scorer", run.cfg().scorer},
                                           {"samples", data.size()},
                                           {"without_enrichment", plain.to_json()},
                                           {"with_enrichment", enriched.to_json()}});
  run.write_table("metrics_table.tsv",
                  metrics_table({{"w/o enrichment", &plain}, {"w/ enrichment", &enriched}}));
  std::cout << metrics_table({{"w/o enrichment", &plain}, {"w/ enrichment", &enriched}});
  if (!plain.warning.empty()) std::cerr << "warning: " << plain.warning << "\n";
}

struct TweetSets {
  std::vector<std::string> target;      // misinformation set or --tweets
  ComparisonSample comparison;
};

TweetSets tweet_sets(Run& run, const Flags& flags) {
  TweetSets s;
  if (!flags.tweets.empty()) {
    s.target = read_id_list(flags.tweets);
    for (const auto& id : s.target) {
      if (!run.corpus().find(id)) throw Error(ErrorCode::kParse, "--tweets: " + id + " is not a corpus source tweet");
    }
  } else {
    const auto ids = run.misinfo_set().tweet_ids();
    s.target.assign(ids.begin(), ids.end());
  }
  const std::set<std::string> exclude(s.target.begin(), s.target.end());
  s.comparison = sample_comparison_set(run.corpus(), exclude, run.cfg().n_comparison, run.cfg().seed);
  if (!s.comparison.warning.empty()) std::cerr << "warning: " << s.comparison.warning << "\n";
  return s;
}

void cmd_topics(Run& run, const Flags& flags) {
  const auto sets = tweet_sets(run, flags);
  const auto d = topic_distribution(sets.target, run.topic_join());
  run.write_table("topics.csv", d.to_csv());
  run.write_json("topics.json", d.to_json());
  std::cout << d.to_csv();
}

void cmd_status(Run& run, const Flags& flags) {
  const auto sets = tweet_sets(run, flags);
  const auto join = run.topic_join();
  const auto a = live_status_breakdown(sets.target, run.snapshot(), join);
  const auto b = live_status_breakdown(sets.comparison.tweet_ids, run.snapshot(), join);
  run.write_table("status.csv", a.to_csv());
  run.write_table("status_comparison.csv", b.to_csv());
  run.write_json("status.json", ordered_json{{"misinformation", a.to_json()}, {"comparison", b.to_json()}});
  std::cout << "inaccessible: " << format_number(a.inaccessible_rate()) << " (comparison "
            << format_number(b.inaccessible_rate()) << ")\n";
}

void cmd_spread(Run& run, const Flags& flags) {
  const auto sets = tweet_sets(run, flags);
  const auto join = run.topic_join();
  const std::chrono::seconds bin = std::chrono::hours(run.cfg().bin_hours);
  const std::chrono::seconds horizon = std::chrono::hours(run.cfg().horizon_hours);
  const auto a = spread_power_curve(sets.target, run.corpus(), run.events(), join, bin, horizon);
  const auto b = spread_power_curve(sets.comparison.tweet_ids, run.corpus(), run.events(), join, bin, horizon);
  run.write_table("spread.csv", a.to_csv());
  run.write_table("spread_comparison.csv", b.to_csv());
  run.write_json("spread.json", ordered_json{{"misinformation", a.to_json()}, {"comparison", b.to_json()}});
  std::cout << "cumulative spread per tweet: " << format_number(a.overall.cumulative) << " (comparison "
            << format_number(b.overall.cumulative) << ")\n";
}

struct LabeledDocs {
  std::vector<std::string> docs;
  std::vector<int> labels;
};

LabeledDocs labeled_docs(Run& run, const Flags& flags) {
  const auto sets = tweet_sets(run, flags);
  LabeledDocs out;
  for (const auto& id : sets.target) {
    out.docs.push_back(run.corpus().find(id)->text);
    out.labels.push_back(1);
  }
  for (const auto& id : sets.comparison.tweet_ids) {
    out.docs.push_back(run.corpus().find(id)->text);
    out.labels.push_back(0);
  }
  return out;
}

ordered_json tables_json(const CorrelationTables& t) {
  auto list = [](const std::vector<FeatureCorrelation>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& f : v) a.push_back({{"feature", f.feature}, {"r", f.r}, {"p", f.p}});
    return a;
  };
  return {{"tested", t.tested},
          {"zero_variance", t.zero_variance},
          {"not_significant", t.not_significant},
          {"misinformation", list(t.misinformation)},
          {"non_misinformation", list(t.non_misinformation)}};
}

void cmd_bow(Run& run, const Flags& flags) {
  const auto ld = labeled_docs(run, flags);
  BowOptions opt;
  opt.min_df_exclusive = run.cfg().min_df_exclusive;
  opt.max_df_ratio = run.cfg().max_df_ratio;
  opt.top_k = run.cfg().bow_top_k;
  opt.ngram_max = run.cfg().ngram_max;
  const auto features = select_bow_features(ld.docs, opt);
  if (!features.warning.empty()) std::cerr << "warning: " << features.warning << "\n";
  const auto m = bow_matrix(ld.docs, features, opt.ngram_max);
  const auto t = top_correlated(m, ld.labels, run.cfg().alpha, run.cfg().top_k);
  run.write_table("bow_correlations.csv", t.to_csv());
  auto j = tables_json(t);
  j["features"] = features.size();
  j["documents"] = ld.docs.size();
  run.write_json("bow_correlations.json", j);
  std::cout << t.to_csv();
}

void cmd_lexicon(Run& run, const Flags& flags) {
  const auto lex = Lexicon::load(run.need(run.cfg().paths.lexicon, "lexicon"));
  const auto ld = labeled_docs(run, flags);
  std::size_t empty = 0;
  const auto m = lexicon_matrix(ld.docs, lex, &empty);
  const auto t = top_correlated(m, ld.labels, run.cfg().alpha, run.cfg().top_k);
  run.write_table("lexicon_correlations.csv", t.to_csv());
  auto j = tables_json(t);
  j["categories"] = lex.size();
  j["documents"] = ld.docs.size();
  j["empty_documents"] = empty;
  run.write_json("lexicon_correlations.json", j);
  std::cout << t.to_csv();
}

void cmd_report(Run& run, const Flags& flags) {
  cmd_ingest(run);
  cmd_index(run);
  cmd_extract(run);
  cmd_enrich(run);
  if (!run.cfg().paths.labeled_dataset.empty()) cmd_eval(run);
  cmd_topics(run, flags);
  cmd_status(run, flags);
  cmd_spread(run, flags);
  cmd_bow(run, flags);
  if (!run.cfg().paths.lexicon.empty()) cmd_lexicon(run, flags);

  const auto& set = run.misinfo_set();
  std::string md = "# Run report\n\nconfig hash: `" + run.hash() + "`\n\n";
  md += "| quantity | value |\n|---|---|\n";
  md += "| source tweets | " + std::to_string(run.corpus().size()) + " |\n";
  md += "| claims | " + std::to_string(run.claims().size()) + " |\n";
  md += "| accepted pairs | " + std::to_string(set.pairs.size()) + " |\n";
  md += "| misinformation tweets | " + std::to_string(set.distinct_tweets()) + " |\n";
  md += "\nArtifacts are listed with their SHA-256 digests in manifest.json.\n";
  run.write("report.md", md);
}

int run_conformance_cmd(const std::string& endpoint, std::size_t dim, bool svo) {
  ConformanceOptions opt;
  opt.sidecar.endpoint = endpoint;
  opt.sidecar.retries = 0;
  opt.embed_dim = dim;
  opt.check_svo = svo;
  const auto rep = run_conformance(opt);
  std::cout << rep.to_text();
  return rep.passed() ? kExitOk : kExitScorer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"misinfo: evidence-based COVID-19 misinformation analysis"};
  app.require_subcommand(1);
  Flags flags;

  auto common = [&](CLI::App* sub, bool tweets) {
    sub->add_option("-c,--config", flags.config, "run configuration (JSON)");
    sub->add_option("-r,--run-dir", flags.run_dir, "output directory")->capture_default_str();
    sub->add_option("-w,--workers", flags.workers, "worker threads (default: all cores)");
    sub->add_option("--seed", flags.seed, "override config seed");
    sub->add_option("--scorer", flags.scorer, "override scorer kind (baseline|external)");
    sub->add_option("--endpoint", flags.endpoint, "override sidecar endpoint");
    if (tweets) sub->add_option("--tweets", flags.tweets, "file of tweet ids to analyze instead of the extracted set");
  };

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"ingest", "load and validate inputs, write corpus.jsonl"},
           {"index", "build the BM25 index"},
           {"extract", "run retrieve, rerank, window, score and post-filter"},
           {"enrich", "build the enriched training set"},
           {"eval", "leave-claim-out cross-validation"},
           {"report", "run everything and bundle the outputs"}}) {
    subs[name] = app.add_subcommand(name, help);
    common(subs[name], name == "report");
  }
  auto* analyze = app.add_subcommand("analyze", "topic, live-status and spread statistics");
  analyze->require_subcommand(1);
  for (const auto& [s, help] : std::vector<std::pair<std::string, std::string>>{
           {"topics", "topic distribution of the set"},
           {"status", "live-status breakdown vs a comparison sample"},
           {"spread", "binned spread-power curves vs a comparison sample"}}) {
    subs["analyze." + s] = analyze->add_subcommand(s, help);
    common(subs["analyze." + s], true);
  }
  auto* ling = app.add_subcommand("lingstats", "feature correlation tables");
  ling->require_subcommand(1);
  for (const auto& [s, help] : std::vector<std::pair<std::string, std::string>>{
           {"bow", "tf-idf word features correlated with the group label"},
           {"lexicon", "lexicon category frequencies correlated with the group label"}}) {
    subs["lingstats." + s] = ling->add_subcommand(s, help);
    common(subs["lingstats." + s], true);
  }
  auto* conf = app.add_subcommand("conformance", "check a scorer sidecar against the wire protocol");
  std::string conf_endpoint = "http://127.0.0.1:8765";
  std::size_t conf_dim = 0;
  bool conf_svo = false;
  conf->add_option("--endpoint", conf_endpoint)->capture_default_str();
  conf->add_option("--embed-dim", conf_dim, "also check /embed with this dimension");
  conf->add_flag("--svo", conf_svo, "also check /svo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (conf->parsed()) return run_conformance_cmd(conf_endpoint, conf_dim, conf_svo);

    RunConfig cfg = flags.config.empty() ? parse_run_config(json::object()) : load_run_config(flags.config);
    if (flags.workers) cfg.workers = *flags.workers;
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.scorer) cfg.scorer = *flags.scorer;
    if (flags.endpoint) cfg.endpoint = *flags.endpoint;
    {
      std::vector<std::string> diags;
      validate(cfg, diags);
      if (!diags.empty()) throw ConfigError(diags);
    }
    Run run(std::move(cfg), flags.run_dir);

    auto parsed = [&](const char* name) { return subs.at(name)->parsed(); };
    if (parsed("ingest")) cmd_ingest(run);
    else if (parsed("index")) cmd_index(run);
    else if (parsed("extract")) cmd_extract(run);
    else if (parsed("enrich")) cmd_enrich(run);
    else if (parsed("eval")) cmd_eval(run);
    else if (parsed("report")) cmd_report(run, flags);
    else if (parsed("analyze.topics")) cmd_topics(run, flags);
    else if (parsed("analyze.status")) cmd_status(run, flags);
    else if (parsed("analyze.spread")) cmd_spread(run, flags);
    else if (parsed("lingstats.bow")) cmd_bow(run, flags);
    else if (parsed("lingstats.lexicon")) cmd_lexicon(run, flags);
    run.save_manifest();
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
