#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace misinfo;

namespace {

const char* kDemoLex = "%\n1\twe\n2\tvirus\n3\tquote\n%\nwe\t1\nus\t1\nviru*\t2\n\"\t3\n";

bool oracle_match(const std::string& pattern, const std::string& tok) {
  if (!pattern.empty() && pattern.back() == '*') {
    const auto stem = pattern.substr(0, pattern.size() - 1);
    return tok.size() >= stem.size() && tok.compare(0, stem.size(), stem) == 0;
  }
  return tok == pattern;
}

}  // namespace

TEST_CASE("pearson closed-form example", "[linguistic]") {
  const auto c = pearson_r({0, 1, 2, 3}, {0, 0, 1, 1});
  CHECK(c.r == Catch::Approx(0.894).margin(0.001));
  CHECK(pearson_r({0, 1, 1, 0, 1}, {0, 1, 1, 0, 1}).r == Catch::Approx(1.0));
}

TEST_CASE("pearson rejects degenerate input", "[linguistic]") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kConfig;
  };
  CHECK(code_of([] { pearson_r({2, 2, 2, 2}, {0, 1, 0, 1}); }) == ErrorCode::kZeroVariance);
  CHECK(code_of([] { pearson_r({1, 2, 3, 4}, {1, 1, 1, 1}); }) == ErrorCode::kZeroVariance);
  CHECK(code_of([] { pearson_r({1, 2}, {0, 1}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { pearson_r({1, 2, 3}, {0, 1, 2}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("streaming r matches the two-pass oracle on 1000 random series", "[linguistic]") {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 3 + rng() % 200;
    std::vector<double> x(n), yd(n);
    std::vector<int> y(n);
    const double shift = round % 3 == 0 ? 1e6 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = static_cast<int>(rng() % 2);
      x[i] = shift + nd(rng) + 0.7 * y[i];
      yd[i] = y[i];
    }
    y[0] = 0;
    y[1] = 1;
    yd[0] = 0;
    yd[1] = 1;
    const auto c = pearson_r(x, y);
    CHECK(std::fabs(c.r - oracle::pearson(x, yd)) < 1e-9);
  }
}

TEST_CASE("p values match numerical t integration", "[linguistic]") {
  std::mt19937_64 rng(55);
  for (int round = 0; round < 200; ++round) {
    const double df = 1.0 + static_cast<double>(rng() % 300);
    const double t = static_cast<double>(rng() % 100000) / 10000.0;
    CHECK(std::fabs(stats::t_two_sided_p(t, df) - oracle::t_two_sided_p(t, df)) < 1e-6);
  }
  // correlation p equals the t-test p with t = r sqrt((n-2)/(1-r^2))
  const auto c = pearson_r({0, 1, 2, 3, 4, 2, 7}, {0, 0, 1, 1, 1, 0, 1});
  const double n = 7;
  const double t = c.r * std::sqrt((n - 2) / (1 - c.r * c.r));
  CHECK(c.p == Catch::Approx(oracle::t_two_sided_p(t, n - 2)).margin(1e-6));
}

TEST_CASE("pearson is permutation invariant and affine-equivariant", "[linguistic]") {
  std::vector<double> x = {0.3, 1.5, 2.2, 0.1, 4.0, 3.3, 2.9};
  std::vector<int> y = {0, 0, 1, 0, 1, 1, 0};
  const double r = pearson_r(x, y).r;
  std::swap(x[1], x[5]);
  std::swap(y[1], y[5]);
  CHECK(pearson_r(x, y).r == Catch::Approx(r).margin(1e-12));
  std::vector<double> up, down;
  for (double v : x) {
    up.push_back(3 * v + 7);
    down.push_back(-2 * v + 1);
  }
  CHECK(pearson_r(up, y).r == Catch::Approx(r).margin(1e-12));
  CHECK(pearson_r(down, y).r == Catch::Approx(-r).margin(1e-12));
}

TEST_CASE("bow df bounds are strict", "[linguistic]") {
  const BowOptions opt;
  CHECK_FALSE(df_in_bounds(3, 100, opt));
  CHECK(df_in_bounds(4, 100, opt));
  CHECK(df_in_bounds(39, 100, opt));
  CHECK_FALSE(df_in_bounds(40, 100, opt));
  CHECK_FALSE(df_in_bounds(41, 100, opt));
}

TEST_CASE("selected bow terms satisfy the bounds on random corpora", "[linguistic]") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    const auto docs = testsupport::random_docs(rng, 10 + rng() % 200, 60, 1, 12);
    BowOptions opt;
    opt.top_k = 1 + rng() % 40;
    const auto f = select_bow_features(docs, opt);
    CHECK(f.t == docs.size());
    CHECK(f.size() <= opt.top_k);
    for (const auto& term : f.terms) {
      CHECK(term.df > 3);
      CHECK(static_cast<double>(term.df) < 0.4 * static_cast<double>(docs.size()));
    }
    for (std::size_t i = 1; i < f.size(); ++i) {
      const auto& a = f.terms[i - 1];
      const auto& b = f.terms[i];
      CHECK((a.score > b.score || (a.score == b.score && a.term < b.term)));
    }
  }
}

TEST_CASE("bow selection equals brute-force enumeration on 20 docs", "[linguistic]") {
  std::mt19937_64 rng(20);
  const auto docs = testsupport::random_docs(rng, 20, 15, 3, 10);
  const auto f = select_bow_features(docs);
  std::vector<std::tuple<double, std::string, std::size_t>> want;
  std::set<std::string> vocab;
  for (const auto& d : docs)
    for (auto& t : text::tokenize(d)) vocab.insert(t);
  for (const auto& term : vocab) {
    std::size_t df = 0, tf = 0;
    for (const auto& d : docs) {
      const auto toks = text::tokenize(d);
      const auto c = static_cast<std::size_t>(std::count(toks.begin(), toks.end(), term));
      tf += c;
      df += c > 0;
    }
    if (df > 3 && df * 10 < 4 * docs.size()) want.emplace_back(-static_cast<double>(tf) * std::log(20.0 / df), term, df);
  }
  std::sort(want.begin(), want.end());
  REQUIRE(f.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(f.terms[i].term == std::get<1>(want[i]));
    CHECK(f.terms[i].df == std::get<2>(want[i]));
    CHECK(f.terms[i].score == Catch::Approx(-std::get<0>(want[i])));
  }
}

TEST_CASE("tfidf values", "[linguistic]") {
  BowFeatureSet f;
  f.t = 2;
  f.terms = {{"garlic", 1, 0.0}};
  const auto v = tfidf_vector("garlic bread garlic", f);
  REQUIRE(v.size() == 1);
  CHECK(v[0].second == Catch::Approx(2 * std::log(2.0)));
  CHECK(tfidf_vector("bread only", f).empty());
  CHECK(tfidf_vector("garlic bread garlic", f) == tfidf_vector("garlic garlic bread", f));
}

TEST_CASE("n-grams are opt-in", "[linguistic]") {
  CHECK(bow_terms("bill gates vaccine") == std::vector<std::string>{"bill", "gates", "vaccine"});
  CHECK(bow_terms("bill gates vaccine", 2) ==
        std::vector<std::string>{"bill", "gates", "vaccine", "bill gates", "gates vaccine"});
}

TEST_CASE("empty selection warns", "[linguistic]") {
  const auto f = select_bow_features({"a b", "c d"});
  CHECK(f.size() == 0);
  CHECK_FALSE(f.warning.empty());
}

TEST_CASE("lexicon frequencies", "[linguistic]") {
  const auto lex = Lexicon::from_string(kDemoLex);
  REQUIRE(lex.size() == 3);
  auto f = lexicon_frequencies("we we go", lex);
  CHECK(f.values[0] == Catch::Approx(2.0 / 3));
  CHECK(lex.match("virus") == std::vector<std::size_t>{1});
  CHECK(lex.match("viruses") == std::vector<std::size_t>{1});
  CHECK(lex.match("vir").empty());
  f = lexicon_frequencies("He said \"the virus\" is real", lex);
  CHECK(f.word_tokens == 6);
  CHECK(f.values[2] == Catch::Approx(2.0 / 6));
  CHECK(lexicon_frequencies("", lex).empty);
  CHECK(lexicon_frequencies("!!!", lex).empty);
}

TEST_CASE("lexicon parse errors and tolerated entries", "[linguistic]") {
  CHECK_THROWS_AS(Lexicon::from_string("1\twe\n"), Error);
  CHECK_THROWS_AS(Lexicon::from_string("%\n1\twe\n%\nw*e\t1\n"), Error);
  CHECK_THROWS_AS(Lexicon::from_string("%\n1\twe\n%\n*\t1\n"), Error);
  CHECK_THROWS_AS(Lexicon::from_string("%\n1\twe\n%\nwe\t9\n"), Error);
  CHECK_THROWS_AS(Lexicon::from_string("%\n1\twe\n"), Error);
  const auto lex = Lexicon::from_string("%\n1\twe\n2\tnone\n%\nwe\t1\nkind of\t1\nus 1\n");
  CHECK(lex.size() == 1);
  CHECK(lex.dropped_empty() == 1);
  CHECK(lex.skipped_multiword() == 1);
  CHECK(lex.categories()[0].patterns == std::vector<std::string>{"we", "us"});
}

TEST_CASE("demo lexicon matrix equals a brute-force matcher", "[linguistic]") {
  const auto lex = Lexicon::load(testsupport::data_file("demo_lexicon.dic"));
  const std::vector<std::string> docs = {
      "We hope our doctors stay healthy; killing the virus today",
      "Angry liars! They hate us - and we know it",
      "Nothing to see here",
      "Friends help friends: support your community hospital",
      "\"Death\" is coming, said the sick man, dying of disease",
  };
  const auto m = lexicon_matrix(docs, lex);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto toks = text::tokenize_marks(docs[d], true);
    double words = 0;
    for (const auto& t : toks) words += t.is_word;
    for (std::size_t c = 0; c < lex.size(); ++c) {
      double hits = 0;
      for (const auto& t : toks) {
        bool any = false;
        for (const auto& p : lex.categories()[c].patterns) any = any || oracle_match(p, t.text);
        hits += any;
      }
      double got = 0;
      for (auto [doc, v] : m.columns[c]) if (doc == d) got = v;
      CHECK(got == Catch::Approx(hits / words));
    }
  }
}

TEST_CASE("top correlated lists respect sign, alpha and label swap", "[linguistic]") {
  std::mt19937_64 rng(9);
  const std::size_t n = 200;
  std::vector<int> labels(n);
  FeatureMatrix m;
  m.docs = n;
  m.names = {"only_misinfo", "only_other", "noise", "constant"};
  m.columns.resize(4);
  for (std::size_t d = 0; d < n; ++d) {
    labels[d] = d % 2;
    if (labels[d] == 1 && rng() % 3) m.columns[0].emplace_back(d, 1.0 + rng() % 3);
    if (labels[d] == 0 && rng() % 3) m.columns[1].emplace_back(d, 1.0);
    if (rng() % 2) m.columns[2].emplace_back(d, 1.0);
    m.columns[3].emplace_back(d, 2.0);
  }
  const auto t = top_correlated(m, labels);
  REQUIRE(t.misinformation.size() == 1);
  CHECK(t.misinformation[0].feature == "only_misinfo");
  CHECK(t.misinformation[0].r > 0);
  REQUIRE(t.non_misinformation.size() == 1);
  CHECK(t.non_misinformation[0].feature == "only_other");
  CHECK(t.zero_variance == 1);
  CHECK(t.not_significant == 1);

  std::vector<int> swapped;
  for (int y : labels) swapped.push_back(1 - y);
  const auto s = top_correlated(m, swapped);
  REQUIRE(s.misinformation.size() == t.non_misinformation.size());
  REQUIRE(s.non_misinformation.size() == t.misinformation.size());
  for (std::size_t i = 0; i < s.misinformation.size(); ++i) {
    CHECK(s.misinformation[i].feature == t.non_misinformation[i].feature);
    CHECK(s.misinformation[i].r == -t.non_misinformation[i].r);
    CHECK(s.misinformation[i].p == t.non_misinformation[i].p);
  }
  for (std::size_t i = 0; i < s.non_misinformation.size(); ++i) {
    CHECK(s.non_misinformation[i].feature == t.misinformation[i].feature);
    CHECK(s.non_misinformation[i].r == -t.misinformation[i].r);
  }
  CHECK(t.to_csv().rfind("feature,r,p,group\nonly_misinfo,", 0) == 0);
}

TEST_CASE("sparse column correlation equals dense pearson", "[linguistic]") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 5 + rng() % 100;
    std::vector<int> labels(n);
    std::vector<double> dense(n, 0.0), yd(n);
    std::vector<std::pair<std::size_t, double>> col;
    for (std::size_t d = 0; d < n; ++d) {
      labels[d] = static_cast<int>(rng() % 2);
      if (rng() % 3 == 0) {
        dense[d] = static_cast<double>(rng() % 7 + 1) / 3.0;
        col.emplace_back(d, dense[d]);
      }
    }
    labels[0] = 0;
    labels[1] = 1;
    dense[0] = 0;
    dense[1] = 1;
    std::erase_if(col, [](const auto& p) { return p.first < 2; });
    col.insert(col.begin(), {1, 1.0});
    for (std::size_t d = 0; d < n; ++d) yd[d] = labels[d];
    CHECK(std::fabs(correlate_column(col, labels).r - oracle::pearson(dense, yd)) < 1e-9);
  }
}
