#include <catch_amalgamated.hpp>

#include <atomic>
#include <map>
#include <mutex>
#include <random>

#include "support.hpp"

using namespace misinfo;

namespace {

TrainingSample sample(std::string claim_id, std::string text, Label l, std::string claim_text = "") {
  TrainingSample s;
  s.claim_id = claim_id;
  s.claim_text = claim_text.empty() ? "claim " + claim_id : claim_text;
  s.sample_text = std::move(text);
  s.label = l;
  return s;
}

// Every claim gets at least one sample of every label.
LabeledDataset random_dataset(std::mt19937_64& rng, std::size_t claims) {
  LabeledDataset d;
  for (std::size_t c = 0; c < claims; ++c) {
    const auto id = "K" + testsupport::pad_id(c, 4);
    const std::size_t extra = rng() % 5;
    for (std::size_t k = 0; k < 3 + extra; ++k) {
      d.push_back(sample(id, id + " text " + std::to_string(k), kAllLabels[k < 3 ? k : rng() % 3]));
    }
  }
  std::shuffle(d.begin(), d.end(), rng);
  return d;
}

class LookupScorer final : public Scorer {
 public:
  explicit LookupScorer(const LabeledDataset& d) {
    for (const auto& s : d) table_[s.claim_text + "\x1f" + s.sample_text] = s.label;
  }
  ScoreOutput score(std::string_view c, std::string_view t) const override {
    return {table_.at(std::string(c) + "\x1f" + std::string(t)), 1.0};
  }

 private:
  std::map<std::string, Label> table_;
};

class ConstantScorer final : public Scorer {
 public:
  explicit ConstantScorer(Label l) : l_(l) {}
  ScoreOutput score(std::string_view, std::string_view) const override { return {l_, 1.0}; }

 private:
  Label l_;
};

// Harmonic-mean F1 with the zero convention.
double f1_oracle(std::size_t tp, std::size_t fp, std::size_t fn) {
  if (tp == 0) return 0.0;
  const double p = static_cast<double>(tp) / static_cast<double>(tp + fp);
  const double r = static_cast<double>(tp) / static_cast<double>(tp + fn);
  return 2 * p * r / (p + r);
}

}  // namespace

TEST_CASE("leave-claim-out folds never leak across 100 random datasets", "[evaluation]") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 100; ++round) {
    const auto data = random_dataset(rng, 5 + rng() % 40);
    const std::size_t k = 2 + rng() % 4;
    const auto folds = split_leave_claim_out(data, k, rng());
    REQUIRE(folds.size() == k);
    std::vector<int> seen_as_test(data.size(), 0);
    for (const auto& f : folds) {
      CHECK_FALSE(f.test.empty());
      std::set<std::string> train_claims;
      for (auto i : f.train) train_claims.insert(data[i].claim_id);
      for (auto i : f.test) {
        ++seen_as_test[i];
        CHECK_FALSE(train_claims.count(data[i].claim_id));
      }
      CHECK(f.train.size() + f.test.size() == data.size());
    }
    for (int n : seen_as_test) CHECK(n == 1);
  }
}

TEST_CASE("five claims over five folds put one claim in each test fold", "[evaluation]") {
  LabeledDataset d;
  for (const char* c : {"A", "B", "C", "D", "E"}) {
    for (auto l : kAllLabels) d.push_back(sample(c, std::string(c) + std::string(to_string(l)), l));
  }
  const auto folds = split_leave_claim_out(d, 5, 1);
  std::set<std::string> all;
  for (const auto& f : folds) {
    REQUIRE(f.test_claims.size() == 1);
    all.insert(*f.test_claims.begin());
    CHECK(f.test.size() == 3);
  }
  CHECK(all.size() == 5);
  CHECK_THROWS_AS(split_leave_claim_out(d, 6, 1), Error);
  CHECK_THROWS_AS(split_leave_claim_out(d, 1, 1), Error);
  d.push_back(sample("", "orphan", Label::kDebunk));
  CHECK_THROWS_AS(split_leave_claim_out(d, 5, 1), Error);
}

TEST_CASE("fold assignment is a deterministic function of the seed", "[evaluation]") {
  std::mt19937_64 rng(5);
  const auto data = random_dataset(rng, 30);
  auto claims_of = [&](std::uint64_t seed) {
    std::vector<std::set<std::string>> out;
    for (const auto& f : split_leave_claim_out(data, 5, seed)) out.push_back(f.test_claims);
    return out;
  };
  CHECK(claims_of(17) == claims_of(17));
  CHECK(claims_of(17) != claims_of(18));
  // input order does not matter
  auto shuffled = data;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<std::set<std::string>> again;
  for (const auto& f : split_leave_claim_out(shuffled, 5, 17)) again.push_back(f.test_claims);
  CHECK(again == claims_of(17));
}

TEST_CASE("per-class F1 agrees with the harmonic-mean oracle", "[evaluation]") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 300; ++round) {
    ConfusionMatrix cm;
    for (auto& row : cm.cells)
      for (auto& v : row) v = rng() % 4 == 0 ? 0 : rng() % 20;
    const auto m = compute_metrics(cm);
    double sum = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t fp = 0, fn = 0;
      for (std::size_t o = 0; o < 3; ++o) {
        if (o == c) continue;
        fp += cm.cells[o][c];
        fn += cm.cells[c][o];
      }
      const double want = f1_oracle(cm.cells[c][c], fp, fn);
      CHECK(m.per_class[c].f1 == Catch::Approx(want).margin(1e-12));
      sum += want;
    }
    CHECK(m.macro_f1 == Catch::Approx(sum / 3).margin(1e-12));
  }
}

TEST_CASE("constant predictor has the closed-form macro F1", "[evaluation]") {
  std::vector<Label> gold = {Label::kIrrelevant, Label::kIrrelevant, Label::kIrrelevant, Label::kIrrelevant,
                             Label::kDebunk,     Label::kDebunk,     Label::kDebunk,     Label::kMisinformation,
                             Label::kMisinformation};
  const std::vector<Label> pred(9, Label::kIrrelevant);
  const auto m = compute_metrics(gold, pred);
  const double f1_irr = 2.0 * 4 / (4 + 9);
  CHECK(m.of(Label::kIrrelevant).f1 == Catch::Approx(f1_irr));
  CHECK(m.of(Label::kDebunk).f1 == 0.0);
  CHECK(m.macro_f1 == Catch::Approx(f1_irr / 3));
  CHECK(m.accuracy == Catch::Approx(4.0 / 9));
  CHECK_FALSE(m.of(Label::kDebunk).undefined);

  const auto only_irr = compute_metrics({Label::kIrrelevant}, {Label::kIrrelevant});
  CHECK(only_irr.of(Label::kDebunk).undefined);
  CHECK(only_irr.macro_f1 == Catch::Approx(1.0 / 3));
}

TEST_CASE("perfect scorer scores 1 in every fold", "[evaluation]") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 10; ++round) {
    const auto data = random_dataset(rng, 10 + rng() % 20);
    const auto scorer = std::make_shared<LookupScorer>(data);
    EvalOptions opt;
    opt.seed = rng();
    const auto rep = evaluate(data, scorer, opt);
    CHECK(rep.completed == 5);
    CHECK(rep.macro_f1 == 1.0);
    CHECK(rep.accuracy == 1.0);
    CHECK(rep.pooled.total() == data.size());
  }
}

TEST_CASE("aggregate is the mean over folds", "[evaluation]") {
  std::mt19937_64 rng(21);
  const auto data = random_dataset(rng, 20);
  const auto rep = evaluate(data, std::make_shared<ConstantScorer>(Label::kDebunk));
  double acc = 0, macro = 0;
  for (const auto& f : rep.folds) {
    acc += f.metrics.accuracy;
    macro += f.metrics.macro_f1;
  }
  CHECK(rep.accuracy == Catch::Approx(acc / 5));
  CHECK(rep.macro_f1 == Catch::Approx(macro / 5));
  CHECK(rep.f1(Label::kMisinformation) == 0.0);
}

TEST_CASE("enriched samples overlapping test claims are excluded", "[evaluation]") {
  std::vector<TrainingSample> enriched;
  for (int i = 0; i < 8; ++i) enriched.push_back(sample("E", "x", Label::kDebunk, "other claim " + std::to_string(i)));
  enriched.push_back(sample("E", "x", Label::kDebunk, "Garlic  CURES covid"));
  enriched.push_back(sample("E", "x", Label::kDebunk, "5g towers\tspread it"));
  const auto kept = exclude_overlapping_claims(enriched, {"garlic cures covid", "5G Towers spread it", "unrelated"});
  CHECK(kept.size() == 8);
  for (const auto& s : kept) CHECK(s.claim_text.rfind("other claim", 0) == 0);
}

TEST_CASE("evaluate feeds non-overlapping enrichment into training", "[evaluation]") {
  LabeledDataset data;
  for (const char* c : {"A", "B", "C", "D", "E"}) {
    for (auto l : kAllLabels) data.push_back(sample(c, std::string(c) + std::string(to_string(l)), l));
  }
  EvalOptions opt;
  opt.enrichment = {sample("X", "e1", Label::kDebunk, "claim A"), sample("X", "e2", Label::kDebunk, "claim Z")};
  std::vector<std::size_t> seen;
  std::mutex mu;
  const auto rep = evaluate(
      data,
      [&](const std::vector<TrainingSample>& train) -> std::shared_ptr<const Scorer> {
        std::lock_guard lock(mu);
        seen.push_back(train.size());
        return std::make_shared<ConstantScorer>(Label::kIrrelevant);
      },
      opt);
  std::size_t with_both = 0;
  for (const auto& f : rep.folds) {
    CHECK(f.train_samples == 12 + f.enrichment_used);
    with_both += f.enrichment_used == 2;
  }
  CHECK(with_both == 4);  // claim A is the test claim in exactly one fold
}

TEST_CASE("a failing fold is reported and excluded from the aggregate", "[evaluation]") {
  std::mt19937_64 rng(4);
  const auto data = random_dataset(rng, 15);
  std::atomic<int> calls{0};
  const auto rep = evaluate(data, [&](const std::vector<TrainingSample>&) -> std::shared_ptr<const Scorer> {
    if (calls++ == 2) throw Error(ErrorCode::kScorerUnavailable, "down");
    return std::make_shared<LookupScorer>(data);
  });
  CHECK(rep.completed == 4);
  CHECK_FALSE(rep.warning.empty());
  CHECK(rep.macro_f1 == 1.0);
  std::size_t failed = 0;
  for (const auto& f : rep.folds) failed += f.failed;
  CHECK(failed == 1);
  const auto j = rep.to_json();
  CHECK(j.contains("warning"));
}

TEST_CASE("metrics table lists the five rows", "[evaluation]") {
  std::mt19937_64 rng(2);
  const auto data = random_dataset(rng, 10);
  const auto rep = evaluate(data, std::make_shared<LookupScorer>(data));
  const auto t = metrics_table({{"perfect", &rep}});
  for (const char* row : {"Accuracy", "Avg. F1", "Debunk F1", "IRRELEVANT F1", "Misinformation F1"}) {
    CHECK(t.find(row) != std::string::npos);
  }
  CHECK(t.find("1.00") != std::string::npos);
  CHECK(format_fixed(0.666666) == "0.67");
}
