#pragma once

// Leave-claim-out K-fold cross-validation and three-class metrics.

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "misinfo/enrichment.hpp"
#include "misinfo/pipeline.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/scorer.hpp"

namespace misinfo {

using LabeledDataset = std::vector<TrainingSample>;

inline void validate_dataset(const LabeledDataset& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].claim_id.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "sample " + std::to_string(i) + " has no claim_id");
    }
  }
}

struct Fold {
  std::vector<std::size_t> train;  // indices into the dataset, ascending
  std::vector<std::size_t> test;
  std::set<std::string> test_claims;
  std::set<std::string> train_claims;
};

// Distinct claim ids are sorted, shuffled with `seed`, and the claim at
// shuffled position i goes to fold i % folds.
inline std::vector<Fold> split_leave_claim_out(const LabeledDataset& data, std::size_t folds = 5,
                                               std::uint64_t seed = 0) {
  validate_dataset(data);
  if (folds < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 folds");
  std::set<std::string> distinct;
  for (const auto& s : data) distinct.insert(s.claim_id);
  if (distinct.size() < folds) {
    throw Error(ErrorCode::kInvalidArgument, "only " + std::to_string(distinct.size()) + " distinct claims for " +
                                                 std::to_string(folds) + " folds");
  }
  std::vector<std::string> order(distinct.begin(), distinct.end());
  rng::Engine eng(seed);
  rng::shuffle(order, eng);
  std::map<std::string, std::size_t> fold_of;
  for (std::size_t i = 0; i < order.size(); ++i) fold_of[order[i]] = i % folds;

  std::vector<Fold> out(folds);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t f = fold_of.at(data[i].claim_id);
    for (std::size_t g = 0; g < folds; ++g) {
      if (g == f) {
        out[g].test.push_back(i);
        out[g].test_claims.insert(data[i].claim_id);
      } else {
        out[g].train.push_back(i);
        out[g].train_claims.insert(data[i].claim_id);
      }
    }
  }
  for (const auto& f : out) {
    for (const auto& c : f.test_claims) {
      if (f.train_claims.contains(c)) throw Error(ErrorCode::kInvalidArgument, "claim leakage on " + c);
    }
  }
  return out;
}

// Drops enriched samples whose normalized claim text equals a test claim's.
inline std::vector<TrainingSample> exclude_overlapping_claims(const std::vector<TrainingSample>& enriched,
                                                              const std::set<std::string>& test_claim_texts) {
  std::set<std::string> norm;
  for (const auto& t : test_claim_texts) norm.insert(text::normalize_claim_text(t));
  std::vector<TrainingSample> out;
  for (const auto& s : enriched) {
    if (!norm.contains(text::normalize_claim_text(s.claim_text))) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Metrics

struct ConfusionMatrix {
  std::array<std::array<std::size_t, 3>, 3> cells{};  // [gold][predicted]

  void add(Label gold, Label predicted) { ++cells[label_index(gold)][label_index(predicted)]; }
  std::size_t at(Label gold, Label predicted) const { return cells[label_index(gold)][label_index(predicted)]; }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& r : cells)
      for (auto v : r) n += v;
    return n;
  }
  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    for (std::size_t g = 0; g < 3; ++g)
      for (std::size_t p = 0; p < 3; ++p) cells[g][p] += o.cells[g][p];
    return *this;
  }
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;    // gold count
  std::size_t predicted = 0;  // predicted count
  bool undefined = false;     // no gold and no predicted samples; f1 set to 0
};

struct Metrics {
  std::size_t samples = 0;
  double accuracy = 0.0;
  std::array<ClassMetrics, 3> per_class{};  // indexed by label_index
  double macro_f1 = 0.0;
  ConfusionMatrix confusion;

  const ClassMetrics& of(Label l) const { return per_class[label_index(l)]; }
};

inline Metrics compute_metrics(const ConfusionMatrix& cm) {
  Metrics m;
  m.confusion = cm;
  m.samples = cm.total();
  std::size_t correct = 0;
  for (auto l : kAllLabels) correct += cm.at(l, l);
  m.accuracy = m.samples ? static_cast<double>(correct) / static_cast<double>(m.samples) : 0.0;
  double f1_sum = 0.0;
  for (auto l : kAllLabels) {
    ClassMetrics c;
    const std::size_t tp = cm.at(l, l);
    for (auto o : kAllLabels) {
      c.support += cm.at(l, o);
      c.predicted += cm.at(o, l);
    }
    c.precision = c.predicted ? static_cast<double>(tp) / static_cast<double>(c.predicted) : 0.0;
    c.recall = c.support ? static_cast<double>(tp) / static_cast<double>(c.support) : 0.0;
    c.undefined = c.support == 0 && c.predicted == 0;
    // 2tp / (2tp + fp + fn) avoids the 0/0 of the harmonic mean when tp = 0.
    const std::size_t denom = c.support + c.predicted;
    c.f1 = denom ? 2.0 * static_cast<double>(tp) / static_cast<double>(denom) : 0.0;
    m.per_class[label_index(l)] = c;
    f1_sum += c.f1;
  }
  m.macro_f1 = f1_sum / 3.0;
  return m;
}

inline Metrics compute_metrics(const std::vector<Label>& gold, const std::vector<Label>& predicted) {
  if (gold.size() != predicted.size()) throw Error(ErrorCode::kInvalidArgument, "gold/predicted size mismatch");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], predicted[i]);
  return compute_metrics(cm);
}

struct FoldResult {
  std::size_t fold = 0;
  std::size_t train_samples = 0;
  std::size_t enrichment_used = 0;
  std::size_t test_claims = 0;
  bool failed = false;
  std::string error;
  Metrics metrics;
};

struct MetricsReport {
  std::vector<FoldResult> folds;
  // Means over completed folds.
  double accuracy = 0.0;
  std::array<double, 3> class_f1{};
  double macro_f1 = 0.0;
  ConfusionMatrix pooled;
  std::size_t completed = 0;
  std::string warning;

  double f1(Label l) const { return class_f1[label_index(l)]; }

  ordered_json to_json() const {
    auto metrics_json = [](const Metrics& m) {
      ordered_json j;
      j["samples"] = m.samples;
      j["accuracy"] = m.accuracy;
      j["macro_f1"] = m.macro_f1;
      for (auto l : kAllLabels) {
        const auto& c = m.of(l);
        ordered_json cj;
        cj["precision"] = c.precision;
        cj["recall"] = c.recall;
        cj["f1"] = c.f1;
        cj["support"] = c.support;
        cj["predicted"] = c.predicted;
        if (c.undefined) cj["undefined"] = true;
        j["classes"][std::string(to_string(l))] = cj;
      }
      ordered_json rows = ordered_json::array();
      for (const auto& r : m.confusion.cells) rows.push_back(r);
      j["confusion"] = rows;
      return j;
    };
    ordered_json j;
    j["completed_folds"] = completed;
    j["accuracy"] = accuracy;
    j["macro_f1"] = macro_f1;
    for (auto l : kAllLabels) j["class_f1"][std::string(to_string(l))] = f1(l);
    ordered_json pooled_rows = ordered_json::array();
    for (const auto& r : pooled.cells) pooled_rows.push_back(r);
    j["pooled_confusion"] = pooled_rows;
    j["confusion_order"] = {"MISINFORMATION", "DEBUNK", "IRRELEVANT"};
    if (!warning.empty()) j["warning"] = warning;
    j["folds"] = ordered_json::array();
    for (const auto& f : folds) {
      ordered_json fj;
      fj["fold"] = f.fold;
      fj["train_samples"] = f.train_samples;
      fj["enrichment_used"] = f.enrichment_used;
      fj["test_claims"] = f.test_claims;
      fj["failed"] = f.failed;
      if (f.failed) fj["error"] = f.error;
      else fj["metrics"] = metrics_json(f.metrics);
      j["folds"].push_back(fj);
    }
    return j;
  }
};

inline std::string format_fixed(double v, int places = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

// Rows Accuracy / Avg. F1 / per-class F1, one column per named report.
inline std::string metrics_table(const std::vector<std::pair<std::string, const MetricsReport*>>& runs) {
  std::vector<std::pair<std::string, std::function<double(const MetricsReport&)>>> rows{
      {"Accuracy", [](const MetricsReport& r) { return r.accuracy; }},
      {"Avg. F1", [](const MetricsReport& r) { return r.macro_f1; }},
      {"Debunk F1", [](const MetricsReport& r) { return r.f1(Label::kDebunk); }},
      {"IRRELEVANT F1", [](const MetricsReport& r) { return r.f1(Label::kIrrelevant); }},
      {"Misinformation F1", [](const MetricsReport& r) { return r.f1(Label::kMisinformation); }},
  };
  std::string out = "metric";
  for (const auto& [name, r] : runs) out += "\t" + name;
  out += "\n";
  for (const auto& [label, get] : rows) {
    out += label;
    for (const auto& [name, r] : runs) out += "\t" + format_fixed(get(*r));
    out += "\n";
  }
  return out;
}

// Builds a scorer from the fold's training samples. Scorers that do not learn
// can ignore the argument.
using ScorerFactory = std::function<std::shared_ptr<const Scorer>(const std::vector<TrainingSample>& train)>;

struct EvalOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::vector<TrainingSample> enrichment;  // extra training data, never tested on
};

inline MetricsReport evaluate(const LabeledDataset& data, const ScorerFactory& factory, const EvalOptions& opt = {}) {
  const auto folds = split_leave_claim_out(data, opt.folds, opt.seed);
  std::vector<FoldResult> results(folds.size());
  detail::parallel_for(folds.size(), opt.workers, [&](std::size_t f) {
    const Fold& fold = folds[f];
    FoldResult& r = results[f];
    r.fold = f;
    r.test_claims = fold.test_claims.size();
    try {
      std::set<std::string> test_texts;
      for (auto i : fold.test) test_texts.insert(data[i].claim_text);
      std::vector<TrainingSample> train;
      for (auto i : fold.train) train.push_back(data[i]);
      auto extra = exclude_overlapping_claims(opt.enrichment, test_texts);
      r.enrichment_used = extra.size();
      train.insert(train.end(), extra.begin(), extra.end());
      r.train_samples = train.size();

      const auto scorer = factory(train);
      if (!scorer) throw Error(ErrorCode::kScorerUnavailable, "scorer factory returned nothing");
      std::vector<PairText> batch;
      std::vector<Label> gold;
      for (auto i : fold.test) {
        batch.push_back({data[i].claim_text, data[i].sample_text});
        gold.push_back(data[i].label);
      }
      const auto preds = scorer->score_batch(batch);
      if (preds.size() != batch.size()) throw Error(ErrorCode::kProtocol, "scorer returned wrong number of results");
      std::vector<Label> predicted;
      for (const auto& p : preds) predicted.push_back(p.label);
      r.metrics = compute_metrics(gold, predicted);
    } catch (const std::exception& e) {
      r.failed = true;
      r.error = e.what();
    }
  });

  MetricsReport rep;
  rep.folds = std::move(results);
  for (const auto& r : rep.folds) {
    if (r.failed) continue;
    ++rep.completed;
    rep.accuracy += r.metrics.accuracy;
    for (std::size_t c = 0; c < 3; ++c) rep.class_f1[c] += r.metrics.per_class[c].f1;
    rep.macro_f1 += r.metrics.macro_f1;
    rep.pooled += r.metrics.confusion;
  }
  if (rep.completed) {
    const double n = static_cast<double>(rep.completed);
    rep.accuracy /= n;
    for (auto& v : rep.class_f1) v /= n;
    rep.macro_f1 /= n;
  }
  const std::size_t failed = rep.folds.size() - rep.completed;
  if (failed) {
    rep.warning = std::to_string(failed) + " of " + std::to_string(rep.folds.size()) +
                  " folds failed; aggregate covers completed folds only";
  }
  return rep;
}

inline MetricsReport evaluate(const LabeledDataset& data, std::shared_ptr<const Scorer> scorer,
                              const EvalOptions& opt = {}) {
  return evaluate(data, [scorer](const std::vector<TrainingSample>&) { return scorer; }, opt);
}

// Published reference numbers for the enriched model: accuracy, avg F1,
// misinformation F1. Not reproducible without the original model and data.
inline constexpr std::array<double, 3> kReferenceEnrichedScores{0.70, 0.66, 0.70};

}  // namespace misinfo
