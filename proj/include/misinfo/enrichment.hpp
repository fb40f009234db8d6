#pragma once

// Enriched training-set construction.
//
// Collection rules, applied to scored (claim, tweet) pairs:
//   (a) candidates: label MISINFORMATION or DEBUNK with confidence >= threshold
//   (d) MISINFORMATION candidate by a credible account     -> IRRELEVANT sample
//   (b) MISINFORMATION candidate removed from the platform -> MISINFORMATION sample
//   (c) DEBUNK candidate linking a known debunk URL         -> DEBUNK sample
// (d) is checked before (b): a credible account's deleted tweet is IRRELEVANT.
// Candidates matching no rule are dropped and counted.

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/jsonl.hpp"
#include "misinfo/pipeline.hpp"
#include "misinfo/svo.hpp"

namespace misinfo {

enum class SampleSource { kSeedAnnotated, kCovidLies, kTweetCollect, kIfcn };

inline constexpr std::array<std::pair<SampleSource, std::string_view>, 4> kSampleSourceNames{{
    {SampleSource::kSeedAnnotated, "SEED_ANNOTATED"},
    {SampleSource::kCovidLies, "COVIDLIES"},
    {SampleSource::kTweetCollect, "TWEET_COLLECT"},
    {SampleSource::kIfcn, "IFCN"},
}};
inline constexpr std::array<SampleSource, 4> kAllSampleSources{SampleSource::kSeedAnnotated, SampleSource::kCovidLies,
                                                              SampleSource::kTweetCollect, SampleSource::kIfcn};

inline std::string_view to_string(SampleSource s) { return detail::name_of(kSampleSourceNames, s); }
inline std::optional<SampleSource> parse_sample_source(std::string_view s) {
  return detail::lookup(kSampleSourceNames, s);
}

enum class EnrichRule {
  kSeed,
  kCovidLiesImport,
  kRemovedFromPlatform,  // (b)
  kDebunkUrl,            // (c)
  kCredibleAccount,      // (d)
  kIfcnExplanation,
  kIfcnQuote,
};

inline constexpr std::array<std::pair<EnrichRule, std::string_view>, 7> kEnrichRuleNames{{
    {EnrichRule::kSeed, "SEED"},
    {EnrichRule::kCovidLiesImport, "COVIDLIES_IMPORT"},
    {EnrichRule::kRemovedFromPlatform, "REMOVED_FROM_PLATFORM"},
    {EnrichRule::kDebunkUrl, "DEBUNK_URL"},
    {EnrichRule::kCredibleAccount, "CREDIBLE_ACCOUNT"},
    {EnrichRule::kIfcnExplanation, "IFCN_EXPLANATION"},
    {EnrichRule::kIfcnQuote, "IFCN_QUOTE"},
}};

inline std::string_view to_string(EnrichRule r) { return detail::name_of(kEnrichRuleNames, r); }
inline std::optional<EnrichRule> parse_enrich_rule(std::string_view s) { return detail::lookup(kEnrichRuleNames, s); }

struct TrainingSample {
  std::string claim_id;
  std::string claim_text;
  std::string sample_text;
  Label label = Label::kIrrelevant;
  SampleSource source = SampleSource::kSeedAnnotated;
  EnrichRule rule = EnrichRule::kSeed;
  std::string provenance_id;

  bool operator==(const TrainingSample&) const = default;
};

inline ordered_json sample_to_json(const TrainingSample& s) {
  ordered_json j;
  j["claim_id"] = s.claim_id;
  j["claim"] = s.claim_text;
  j["text"] = s.sample_text;
  j["label"] = std::string(to_string(s.label));
  j["source"] = std::string(to_string(s.source));
  j["rule"] = std::string(to_string(s.rule));
  j["provenance_id"] = s.provenance_id;
  return j;
}

inline void save_training_set(const std::vector<TrainingSample>& samples, const std::filesystem::path& path) {
  std::vector<ordered_json> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) rows.push_back(sample_to_json(s));
  jsonl::write_lines(path, rows);
}

inline std::vector<TrainingSample> load_training_set(const std::filesystem::path& path) {
  std::vector<TrainingSample> out;
  const auto errors = jsonl::for_each(path, [&](const json& j, std::size_t) {
    TrainingSample s;
    s.claim_id = get_string(j, "claim_id").value_or("");
    s.claim_text = require_string(j, "claim");
    s.sample_text = require_string(j, "text");
    s.label = parse_or_throw<Label>(require_string(j, "label"), parse_label, "label");
    s.source = parse_or_throw<SampleSource>(get_string(j, "source").value_or("SEED_ANNOTATED"), parse_sample_source,
                                            "source");
    s.rule = parse_or_throw<EnrichRule>(get_string(j, "rule").value_or("SEED"), parse_enrich_rule, "rule");
    s.provenance_id = get_string(j, "provenance_id").value_or("");
    out.push_back(std::move(s));
  });
  if (!errors.empty()) {
    throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(errors.front().line) + ": " +
                                       errors.front().reason);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Collection rules

struct EnrichmentInputs {
  const CorpusHandle& corpus;
  const ClaimSet& claims;
  const LiveStatusSnapshot& snapshot;
  std::set<std::string> debunk_urls;        // normalized
  std::set<std::string> credible_accounts;  // lowercased handles
  double threshold = 0.7;
};

struct EnrichmentReport {
  std::size_t predictions = 0;
  std::size_t candidates = 0;
  std::size_t below_threshold = 0;
  std::size_t not_candidate_label = 0;
  std::size_t dropped_unmatched = 0;
  std::map<std::string, std::size_t> by_rule;

  ordered_json to_json() const {
    ordered_json j;
    j["predictions"] = predictions;
    j["candidates"] = candidates;
    j["below_threshold"] = below_threshold;
    j["not_candidate_label"] = not_candidate_label;
    j["dropped_unmatched"] = dropped_unmatched;
    j["by_rule"] = by_rule;
    return j;
  }
};

struct EnrichmentResult {
  std::vector<TrainingSample> samples;
  EnrichmentReport report;
};

inline bool removed_from_platform(LiveStatus s) {
  return s == LiveStatus::kTweetDeleted || s == LiveStatus::kAccountSuspended || s == LiveStatus::kAccountDeleted;
}

inline std::set<std::string> normalize_url_set(const std::vector<std::string>& urls) {
  std::set<std::string> out;
  for (const auto& u : urls) {
    if (!text::trim(u).empty()) out.insert(text::normalize_url(u));
  }
  return out;
}

// Claim fact-check URLs plus any extra list.
inline std::set<std::string> known_debunk_urls(const ClaimSet& claims, const std::vector<std::string>& extra = {}) {
  auto out = normalize_url_set(extra);
  for (const auto& c : claims.claims()) {
    if (!c.debunk_url.empty()) out.insert(c.debunk_url);
  }
  return out;
}

inline std::set<std::string> normalize_handle_set(const std::vector<std::string>& handles) {
  std::set<std::string> out;
  for (const auto& h : handles) {
    std::string k = text::ascii_lower(text::trim(h));
    if (!k.empty() && k.front() == '@') k.erase(0, 1);
    if (!k.empty()) out.insert(k);
  }
  return out;
}

inline std::optional<EnrichRule> classify_candidate(const PairPrediction& p, const Tweet& tweet,
                                                    const EnrichmentInputs& in) {
  if (p.label == Label::kMisinformation) {
    if (in.credible_accounts.contains(text::ascii_lower(tweet.author_handle))) return EnrichRule::kCredibleAccount;
    if (removed_from_platform(in.snapshot.status_of(tweet.id))) return EnrichRule::kRemovedFromPlatform;
    return std::nullopt;
  }
  if (p.label == Label::kDebunk) {
    for (const auto& u : tweet.urls) {
      if (in.debunk_urls.contains(u)) return EnrichRule::kDebunkUrl;
    }
  }
  return std::nullopt;
}

inline EnrichmentResult enrich_from_predictions(const std::vector<PairPrediction>& predictions,
                                                const EnrichmentInputs& in) {
  EnrichmentResult res;
  auto& rep = res.report;
  for (const auto& p : predictions) {
    ++rep.predictions;
    if (p.label != Label::kMisinformation && p.label != Label::kDebunk) {
      ++rep.not_candidate_label;
      continue;
    }
    if (p.confidence < in.threshold) {
      ++rep.below_threshold;
      continue;
    }
    ++rep.candidates;
    const Tweet* tweet = in.corpus.find(p.tweet_id);
    const Claim* claim = in.claims.find(p.claim_id);
    if (!tweet || !claim) {
      ++rep.dropped_unmatched;
      continue;
    }
    const auto rule = classify_candidate(p, *tweet, in);
    if (!rule) {
      ++rep.dropped_unmatched;
      continue;
    }
    TrainingSample s;
    s.claim_id = claim->id;
    s.claim_text = claim->text;
    s.sample_text = tweet->text;
    s.source = SampleSource::kTweetCollect;
    s.rule = *rule;
    s.label = *rule == EnrichRule::kCredibleAccount ? Label::kIrrelevant
              : *rule == EnrichRule::kRemovedFromPlatform ? Label::kMisinformation
                                                          : Label::kDebunk;
    s.provenance_id = claim->id + ":" + tweet->id;
    ++rep.by_rule[std::string(to_string(*rule))];
    res.samples.push_back(std::move(s));
  }
  return res;
}

// Scores every retrieval candidate (BM25 -> rerank -> window) with the given
// scorer, then applies the collection rules.
inline EnrichmentResult enrich_from_collection(const EnrichmentInputs& in, const ExtractionContext& ctx,
                                               const PipelineConfig& cfg = {}) {
  std::vector<std::vector<PairPrediction>> per_claim(in.claims.size());
  detail::parallel_for(in.claims.size(), cfg.workers, [&](std::size_t i) {
    const Claim& claim = in.claims.claims()[i];
    try {
      auto found = bm25_search(ctx.index, claim.text, cfg.k_bm25, cfg.bm25);
      if (found.candidates.empty()) return;
      auto cands = temporal_filter(rerank(std::move(found.candidates), claim.text, ctx.corpus, ctx.embedder, cfg.k_rerank),
                                   claim, ctx.corpus, cfg.window);
      std::vector<PairText> batch;
      for (const auto& c : cands) batch.push_back({claim.text, ctx.corpus.find(c.tweet_id)->text});
      const auto scores = ctx.scorer.score_batch(batch);
      for (std::size_t k = 0; k < cands.size(); ++k) {
        per_claim[i].push_back({claim.id, cands[k].tweet_id, scores[k].label, scores[k].confidence});
      }
    } catch (const Error&) {
      per_claim[i].clear();
    }
  });
  std::vector<PairPrediction> all;
  for (auto& v : per_claim) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.tweet_id < b.tweet_id; });
    all.insert(all.end(), v.begin(), v.end());
  }
  return enrich_from_predictions(all, in);
}

// ---------------------------------------------------------------------------
// Fact-checker articles

struct DebunkArticle {
  std::string claim_id;
  std::string debunk_url;
  std::string claim_text;
  std::string explanation_text;
  std::string full_article_text;
};

inline std::vector<DebunkArticle> load_debunk_articles(const std::filesystem::path& path) {
  std::vector<DebunkArticle> out;
  const auto errors = jsonl::for_each(path, [&](const json& j, std::size_t) {
    DebunkArticle a;
    a.claim_id = get_string(j, "claim_id").value_or("");
    a.debunk_url = text::normalize_url(get_string(j, "debunk_url").value_or(""));
    a.claim_text = require_string(j, "claim");
    a.explanation_text = get_string(j, "explanation").value_or("");
    a.full_article_text = get_string(j, "article").value_or("");
    out.push_back(std::move(a));
  });
  if (!errors.empty()) {
    throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(errors.front().line) + ": " +
                                       errors.front().reason);
  }
  return out;
}

inline constexpr std::size_t kMinQuoteTokens = 5;

// Quoted spans ("..." or “...”) of at least kMinQuoteTokens word tokens inside
// paragraphs (newline-separated) sharing a content token with the claim.
inline std::vector<std::string> extract_quoted_claims(std::string_view article, std::string_view claim_text) {
  const auto claim_tokens = text::content_token_set(claim_text, default_stopwords());
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= article.size()) {
    std::size_t end = article.find('\n', start);
    if (end == std::string_view::npos) end = article.size();
    const std::string_view para = article.substr(start, end - start);
    start = end + 1;

    bool claim_bearing = false;
    for (const auto& tok : text::content_tokens(para, default_stopwords())) {
      if (claim_tokens.contains(tok)) {
        claim_bearing = true;
        break;
      }
    }
    if (!claim_bearing) continue;

    // Scan by code point; '"' closes '"', U+201D closes U+201C.
    std::size_t i = 0;
    while (i < para.size()) {
      const std::size_t open_at = i;
      const char32_t cp = utf8::next(para, i);
      char32_t close = 0;
      if (cp == '"') close = '"';
      else if (cp == 0x201C) close = 0x201D;
      else continue;
      const std::size_t body_start = i;
      std::size_t j = i;
      std::size_t body_end = std::string_view::npos;
      while (j < para.size()) {
        const std::size_t at = j;
        if (utf8::next(para, j) == close) {
          body_end = at;
          break;
        }
      }
      if (body_end == std::string_view::npos) {
        i = open_at + 1;
        break;
      }
      std::string body = text::trim(para.substr(body_start, body_end - body_start));
      if (text::tokenize(body).size() >= kMinQuoteTokens && seen.insert(body).second) out.push_back(body);
      i = j;
    }
    if (end == article.size()) break;
  }
  return out;
}

struct IfcnReport {
  std::size_t articles = 0;
  std::size_t rejected_no_explanation = 0;
  std::size_t debunk_samples = 0;
  std::size_t misinformation_samples = 0;
};

inline std::vector<TrainingSample> enrich_from_ifcn(const std::vector<DebunkArticle>& articles,
                                                    IfcnReport* report = nullptr) {
  IfcnReport rep;
  std::vector<TrainingSample> out;
  for (const auto& a : articles) {
    ++rep.articles;
    if (text::trim(a.explanation_text).empty() || text::trim(a.claim_text).empty()) {
      ++rep.rejected_no_explanation;
      continue;
    }
    const std::string prov = a.claim_id.empty() ? a.debunk_url : a.claim_id;
    out.push_back({a.claim_id, a.claim_text, a.explanation_text, Label::kDebunk, SampleSource::kIfcn,
                   EnrichRule::kIfcnExplanation, prov});
    ++rep.debunk_samples;
    for (auto& quote : extract_quoted_claims(a.full_article_text, a.claim_text)) {
      out.push_back({a.claim_id, a.claim_text, std::move(quote), Label::kMisinformation, SampleSource::kIfcn,
                     EnrichRule::kIfcnQuote, prov});
      ++rep.misinformation_samples;
    }
  }
  if (report) *report = rep;
  return out;
}

// ---------------------------------------------------------------------------
// Import adapters

// CovidLies stance labels: pos -> MISINFORMATION, neg -> DEBUNK, na -> IRRELEVANT.
// Our own label names are accepted as well.
inline std::optional<Label> map_covidlies_label(std::string_view raw) {
  const std::string k = text::ascii_lower(text::trim(raw));
  if (k == "pos" || k == "agree" || k == "misconception") return Label::kMisinformation;
  if (k == "neg" || k == "disagree" || k == "refute") return Label::kDebunk;
  if (k == "na" || k == "no_stance" || k == "none") return Label::kIrrelevant;
  return parse_label(raw);
}

inline std::vector<TrainingSample> import_labeled_pairs(const std::filesystem::path& path, SampleSource source,
                                                        std::size_t* rejected = nullptr) {
  std::vector<TrainingSample> out;
  std::size_t bad = 0;
  const auto errors = jsonl::for_each(path, [&](const json& j, std::size_t line_no) {
    TrainingSample s;
    s.source = source;
    s.rule = source == SampleSource::kCovidLies ? EnrichRule::kCovidLiesImport : EnrichRule::kSeed;
    s.claim_id = get_string(j, "claim_id").value_or("");
    s.claim_text = get_string(j, "claim").value_or(get_string(j, "misconception").value_or(""));
    s.sample_text = get_string(j, "text").value_or(get_string(j, "tweet").value_or(""));
    const std::string raw_label = get_string(j, "label").value_or("");
    const auto label = source == SampleSource::kCovidLies ? map_covidlies_label(raw_label) : parse_label(raw_label);
    if (!label || text::trim(s.claim_text).empty() || text::trim(s.sample_text).empty()) {
      ++bad;
      return;
    }
    s.label = *label;
    s.provenance_id = get_string(j, "id").value_or(path.filename().string() + ":" + std::to_string(line_no));
    out.push_back(std::move(s));
  });
  if (rejected) *rejected = bad + errors.size();
  return out;
}

// ---------------------------------------------------------------------------
// Cleaning and reporting

struct CleanResult {
  std::vector<TrainingSample> kept;
  std::vector<TrainingSample> discarded;
};

// Discards samples whose text mentions neither a subject nor an object of the
// claim. Input order is preserved within each side.
inline CleanResult clean_pairs(const std::vector<TrainingSample>& samples,
                               const SvoExtractor& svo = default_svo_extractor()) {
  CleanResult res;
  std::map<std::string, SvoTerms> cache;
  for (const auto& s : samples) {
    auto it = cache.find(s.claim_text);
    if (it == cache.end()) it = cache.emplace(s.claim_text, svo.extract(s.claim_text)).first;
    (mentions_neither(it->second, s.sample_text) ? res.discarded : res.kept).push_back(s);
  }
  return res;
}

struct DatasetTable {
  // counts[source][label]
  std::array<std::array<std::size_t, 3>, 4> counts{};

  std::size_t cell(SampleSource s, Label l) const { return counts[static_cast<std::size_t>(s)][label_index(l)]; }
  std::size_t row_total(SampleSource s) const {
    std::size_t n = 0;
    for (auto v : counts[static_cast<std::size_t>(s)]) n += v;
    return n;
  }
  std::size_t column_total(Label l) const {
    std::size_t n = 0;
    for (const auto& row : counts) n += row[label_index(l)];
    return n;
  }
  std::size_t total() const {
    std::size_t n = 0;
    for (auto s : kAllSampleSources) n += row_total(s);
    return n;
  }

  // Columns IRRELEVANT, DEBUNK, MISINFO as in the published table layout.
  std::string to_text() const {
    static constexpr std::array<Label, 3> kCols{Label::kIrrelevant, Label::kDebunk, Label::kMisinformation};
    std::string out = "source,IRRELEVANT,DEBUNK,MISINFO,total\n";
    for (auto s : kAllSampleSources) {
      out += std::string(to_string(s));
      for (auto l : kCols) out += "," + std::to_string(cell(s, l));
      out += "," + std::to_string(row_total(s)) + "\n";
    }
    out += "TOTAL";
    for (auto l : kCols) out += "," + std::to_string(column_total(l));
    out += "," + std::to_string(total()) + "\n";
    return out;
  }
};

inline DatasetTable dataset_report(const std::vector<TrainingSample>& samples) {
  DatasetTable t;
  for (const auto& s : samples) ++t.counts[static_cast<std::size_t>(s.source)][label_index(s.label)];
  return t;
}

// Published totals of the enriched set (IRRELEVANT / DEBUNK / MISINFO), kept
// for documentation; they depend on data that is not distributed.
inline constexpr std::array<std::size_t, 3> kReferenceEnrichedTotals{9965, 5865, 1411};

}  // namespace misinfo
