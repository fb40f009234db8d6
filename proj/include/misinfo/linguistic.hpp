#pragma once

// Bag-of-words and lexicon-category correlation with a binary group label.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "misinfo/error.hpp"
#include "misinfo/text.hpp"
#include "misinfo/types.hpp"

namespace misinfo {

// ---------------------------------------------------------------------------
// Bag of words

struct BowOptions {
  std::size_t min_df_exclusive = 3;
  double max_df_ratio = 0.4;
  std::size_t top_k = 5000;
  std::size_t ngram_max = 1;
};

struct BowTerm {
  std::string term;
  std::size_t df = 0;
  double score = 0.0;  // sum over docs of tf * ln(t / df)
};

struct BowFeatureSet {
  std::vector<BowTerm> terms;  // by score desc, then term asc
  std::size_t t = 0;           // analyzed document count
  std::string warning;

  std::size_t size() const { return terms.size(); }
  std::optional<std::size_t> index_of(std::string_view term) const {
    if (lookup_.size() != terms.size()) rebuild();
    auto it = lookup_.find(std::string(term));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void rebuild() const {
    lookup_.clear();
    for (std::size_t i = 0; i < terms.size(); ++i) lookup_.emplace(terms[i].term, i);
  }
  mutable std::unordered_map<std::string, std::size_t> lookup_;
};

// Unigrams, plus space-joined n-grams up to n_max.
inline std::vector<std::string> bow_terms(std::string_view doc, std::size_t n_max = 1) {
  auto toks = text::tokenize(doc);
  if (n_max <= 1) return toks;
  std::vector<std::string> out = toks;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::size_t i = 0; i + n <= toks.size(); ++i) {
      std::string g = toks[i];
      for (std::size_t k = 1; k < n; ++k) g += " " + toks[i + k];
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Keeps terms with min_df_exclusive < df < max_df_ratio * t (both strict).
// The upper bound is tested as df / t < ratio so that df / t equal to the
// ratio is excluded without rounding surprises.
inline bool df_in_bounds(std::size_t df, std::size_t t, const BowOptions& opt) {
  return df > opt.min_df_exclusive && static_cast<double>(df) / static_cast<double>(t) < opt.max_df_ratio;
}

inline BowFeatureSet select_bow_features(const std::vector<std::string>& docs, const BowOptions& opt = {}) {
  BowFeatureSet out;
  out.t = docs.size();
  std::map<std::string, std::pair<std::size_t, std::size_t>> stats;  // term -> (df, total tf)
  for (const auto& d : docs) {
    std::map<std::string, std::size_t> tf;
    for (auto& term : bow_terms(d, opt.ngram_max)) ++tf[term];
    for (const auto& [term, n] : tf) {
      auto& s = stats[term];
      ++s.first;
      s.second += n;
    }
  }
  const double t = static_cast<double>(out.t);
  for (const auto& [term, s] : stats) {
    if (!df_in_bounds(s.first, out.t, opt)) continue;
    out.terms.push_back({term, s.first, static_cast<double>(s.second) * std::log(t / static_cast<double>(s.first))});
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const BowTerm& a, const BowTerm& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.term < b.term;
  });
  if (out.terms.size() > opt.top_k) out.terms.resize(opt.top_k);
  if (out.terms.empty()) out.warning = "no term satisfies the document-frequency bounds";
  return out;
}

using SparseVector = std::vector<std::pair<std::size_t, double>>;  // (feature index, value), ascending index

// tf * ln(t / df) for every feature term in the doc.
inline SparseVector tfidf_vector(std::string_view doc, const BowFeatureSet& features, std::size_t ngram_max = 1) {
  std::map<std::size_t, std::size_t> tf;
  for (auto& term : bow_terms(doc, ngram_max)) {
    if (auto i = features.index_of(term)) ++tf[*i];
  }
  SparseVector v;
  const double t = static_cast<double>(features.t);
  for (auto [i, n] : tf) {
    v.emplace_back(i, static_cast<double>(n) * std::log(t / static_cast<double>(features.terms[i].df)));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Lexicon (LIWC .dic layout)

struct LexiconCategory {
  std::string id;
  std::string name;
  std::vector<std::string> patterns;
};

class Lexicon {
 public:
  const std::vector<LexiconCategory>& categories() const { return categories_; }
  std::size_t size() const { return categories_.size(); }
  std::size_t skipped_multiword() const { return skipped_multiword_; }
  std::size_t dropped_empty() const { return dropped_empty_; }

  static Lexicon parse(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    int section = 0;  // 0 before header, 1 in header, 2 entries
    std::map<std::string, std::size_t> by_id;
    std::vector<LexiconCategory> cats;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParse, "lexicon line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::string trimmed = text::trim(line);
      if (trimmed.empty()) continue;
      if (trimmed == "%") {
        if (section == 2) fail("unexpected '%'");
        ++section;
        continue;
      }
      if (section == 0) fail("missing '%' header");
      const auto fields = split_fields(trimmed);
      if (section == 1) {
        if (fields.size() != 2) fail("category line needs '<id><TAB><name>'");
        if (by_id.contains(fields[0])) fail("duplicate category id " + fields[0]);
        by_id[fields[0]] = cats.size();
        cats.push_back({fields[0], fields[1], {}});
        continue;
      }
      if (fields.size() < 2) fail("entry needs a pattern and at least one category id");
      std::string pattern = normalize_pattern(fields[0]);
      if (pattern.empty()) fail("empty pattern");
      if (pattern.find(' ') != std::string::npos) {
        ++lex.skipped_multiword_;
        continue;
      }
      const auto star = pattern.find('*');
      if (star != std::string::npos && star + 1 != pattern.size()) fail("wildcard must be the last character");
      if (pattern == "*") fail("bare wildcard");
      for (std::size_t k = 1; k < fields.size(); ++k) {
        auto it = by_id.find(fields[k]);
        if (it == by_id.end()) fail("unknown category id " + fields[k]);
        auto& pats = cats[it->second].patterns;
        if (std::find(pats.begin(), pats.end(), pattern) == pats.end()) pats.push_back(pattern);
      }
    }
    if (section < 2) throw Error(ErrorCode::kParse, "lexicon header is not closed with '%'");
    for (auto& c : cats) {
      if (c.patterns.empty()) {
        ++lex.dropped_empty_;
        continue;
      }
      lex.categories_.push_back(std::move(c));
    }
    lex.index();
    return lex;
  }

  static Lexicon load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot read lexicon " + path.string());
    return parse(in);
  }

  static Lexicon from_string(const std::string& s) {
    std::istringstream in(s);
    return parse(in);
  }

  // Category indices matched by one token (word or canonical punctuation mark).
  std::vector<std::size_t> match(const std::string& token) const {
    std::vector<std::size_t> hit;
    if (auto it = exact_.find(token); it != exact_.end()) hit = it->second;
    for (std::size_t len = 1; len <= token.size(); ++len) {
      auto it = prefix_.find(token.substr(0, len));
      if (it != prefix_.end()) hit.insert(hit.end(), it->second.begin(), it->second.end());
    }
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    return hit;
  }

 private:
  static std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    // Tabs separate fields; a pattern may contain single spaces (multi-word).
    while (i <= line.size()) {
      std::size_t j = line.find('\t', i);
      if (j == std::string::npos) j = line.size();
      std::string f = text::trim(std::string_view(line).substr(i, j - i));
      if (!f.empty()) out.push_back(std::move(f));
      i = j + 1;
    }
    if (out.size() == 1 && out[0].find(' ') != std::string::npos) {
      // Space-separated fallback: "<pattern> <id> <id>..."
      std::istringstream ss(out[0]);
      out.clear();
      for (std::string f; ss >> f;) out.push_back(f);
    }
    return out;
  }

  static std::string normalize_pattern(std::string_view raw) {
    std::string out;
    std::size_t i = 0;
    while (i < raw.size()) {
      const char32_t cp = utf8::next(raw, i);
      if (text::is_apostrophe(cp)) continue;
      if (cp == '*') {
        out += '*';
        continue;
      }
      if (text::is_punct_mark(cp)) {
        utf8::append(out, text::canonical_punct(cp));
        continue;
      }
      text::append_folded(out, cp);
    }
    return text::trim(out);
  }

  void index() {
    for (std::size_t c = 0; c < categories_.size(); ++c) {
      for (const auto& p : categories_[c].patterns) {
        if (p.back() == '*') prefix_[p.substr(0, p.size() - 1)].push_back(c);
        else exact_[p].push_back(c);
      }
    }
  }

  std::vector<LexiconCategory> categories_;
  std::unordered_map<std::string, std::vector<std::size_t>> exact_;
  std::unordered_map<std::string, std::vector<std::size_t>> prefix_;
  std::size_t skipped_multiword_ = 0;
  std::size_t dropped_empty_ = 0;
};

struct LexiconFrequencies {
  std::vector<double> values;  // per category, matched tokens / word tokens
  std::size_t word_tokens = 0;
  bool empty = false;
};

// A word token counts once per category it matches; punctuation marks count
// toward their categories but not toward the denominator.
inline LexiconFrequencies lexicon_frequencies(std::string_view doc, const Lexicon& lexicon) {
  LexiconFrequencies f;
  f.values.assign(lexicon.size(), 0.0);
  std::vector<std::size_t> hits(lexicon.size(), 0);
  for (const auto& tok : text::tokenize_marks(doc, true)) {
    if (tok.is_word) ++f.word_tokens;
    for (auto c : lexicon.match(tok.text)) ++hits[c];
  }
  if (f.word_tokens == 0) {
    f.empty = true;
    return f;
  }
  for (std::size_t c = 0; c < hits.size(); ++c) {
    f.values[c] = static_cast<double>(hits[c]) / static_cast<double>(f.word_tokens);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Correlation

namespace stats {

inline double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// Continued fraction for the incomplete beta (modified Lentz).
inline double beta_cf(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
inline double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

// Two-sided p-value of Student's t with `df` degrees of freedom.
inline double t_two_sided_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

}  // namespace stats

struct Correlation {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
};

// Point-biserial r streamed with Welford statistics per label group.
class PointBiserial {
 public:
  void add(double x, bool y) { add_group(y ? g1_ : g0_, x); }

  // `count` observations with value 0 in one group.
  void add_zeros(std::size_t count, bool y) {
    if (count == 0) return;
    Group z{count, 0.0, 0.0};
    merge_into(y ? g1_ : g0_, z);
  }

  std::size_t size() const { return g0_.n + g1_.n; }

  Correlation result() const {
    const std::size_t n = size();
    if (n < 3) throw Error(ErrorCode::kInvalidArgument, "need at least 3 observations");
    if (g0_.n == 0 || g1_.n == 0) throw Error(ErrorCode::kZeroVariance, "label series is constant");
    const double n0 = static_cast<double>(g0_.n), n1 = static_cast<double>(g1_.n), nn = static_cast<double>(n);
    const double delta = g1_.mean - g0_.mean;
    const double m2 = (g0_.m2 + g1_.m2) + delta * delta * (n0 * n1) / nn;
    if (!(m2 > 0.0)) throw Error(ErrorCode::kZeroVariance, "feature series is constant");
    double r = delta * std::sqrt((n0 * n1) / (nn * m2));
    r = std::clamp(r, -1.0, 1.0);
    Correlation c;
    c.r = r;
    c.n = n;
    // t^2 = r^2 (n-2) / (1-r^2), so df / (df + t^2) = 1 - r^2.
    const double one_minus = std::max(0.0, 1.0 - r * r);
    c.p = one_minus == 0.0 ? 0.0 : stats::incomplete_beta((nn - 2.0) / 2.0, 0.5, one_minus);
    c.p = std::clamp(c.p, 0.0, 1.0);
    return c;
  }

 private:
  struct Group {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
  };

  static void add_group(Group& g, double x) {
    ++g.n;
    const double d = x - g.mean;
    g.mean += d / static_cast<double>(g.n);
    g.m2 += d * (x - g.mean);
  }

  static void merge_into(Group& a, const Group& b) {
    if (b.n == 0) return;
    if (a.n == 0) {
      a = b;
      return;
    }
    const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n), n = na + nb;
    const double d = b.mean - a.mean;
    a.mean += d * nb / n;
    a.m2 += b.m2 + d * d * na * nb / n;
    a.n += b.n;
  }

  Group g0_, g1_;
};

// y must hold only 0 and 1.
inline Correlation pearson_r(const std::vector<double>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::kInvalidArgument, "series lengths differ");
  PointBiserial acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] != 0 && y[i] != 1) throw Error(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
    acc.add(x[i], y[i] == 1);
  }
  return acc.result();
}

enum class CorrelationGroup { kMisinformation, kNonMisinformation };

inline std::string_view to_string(CorrelationGroup g) {
  return g == CorrelationGroup::kMisinformation ? "MISINFORMATION" : "NON_MISINFORMATION";
}

struct FeatureCorrelation {
  std::string feature;
  double r = 0.0;
  double p = 1.0;
  CorrelationGroup group = CorrelationGroup::kMisinformation;

  bool operator==(const FeatureCorrelation&) const = default;
};

// Column-sparse feature matrix: columns[f] lists (doc, value) with value != 0.
struct FeatureMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<std::pair<std::size_t, double>>> columns;
  std::size_t docs = 0;
};

inline FeatureMatrix bow_matrix(const std::vector<std::string>& docs, const BowFeatureSet& features,
                                std::size_t ngram_max = 1) {
  FeatureMatrix m;
  m.docs = docs.size();
  for (const auto& t : features.terms) m.names.push_back(t.term);
  m.columns.resize(features.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (auto [f, v] : tfidf_vector(docs[d], features, ngram_max)) m.columns[f].emplace_back(d, v);
  }
  return m;
}

inline FeatureMatrix lexicon_matrix(const std::vector<std::string>& docs, const Lexicon& lexicon,
                                    std::size_t* empty_docs = nullptr) {
  FeatureMatrix m;
  m.docs = docs.size();
  for (const auto& c : lexicon.categories()) m.names.push_back(c.name);
  m.columns.resize(lexicon.size());
  std::size_t empty = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto f = lexicon_frequencies(docs[d], lexicon);
    empty += f.empty;
    for (std::size_t c = 0; c < f.values.size(); ++c) {
      if (f.values[c] != 0.0) m.columns[c].emplace_back(d, f.values[c]);
    }
  }
  if (empty_docs) *empty_docs = empty;
  return m;
}

inline Correlation correlate_column(const std::vector<std::pair<std::size_t, double>>& column,
                                    const std::vector<int>& labels) {
  PointBiserial acc;
  std::size_t ones = 0, zeros = 0;
  for (auto y : labels) (y == 1 ? ones : zeros) += 1;
  std::size_t nz_ones = 0, nz_zeros = 0;
  for (auto [d, v] : column) {
    const bool y = labels.at(d) == 1;
    acc.add(v, y);
    (y ? nz_ones : nz_zeros) += 1;
  }
  acc.add_zeros(ones - nz_ones, true);
  acc.add_zeros(zeros - nz_zeros, false);
  return acc.result();
}

struct CorrelationTables {
  std::vector<FeatureCorrelation> misinformation;      // r > 0, r descending
  std::vector<FeatureCorrelation> non_misinformation;  // r < 0, |r| descending
  std::size_t tested = 0;
  std::size_t zero_variance = 0;
  std::size_t not_significant = 0;

  std::string to_csv() const {
    std::string out = "feature,r,p,group\n";
    char buf[128];
    for (const auto* list : {&misinformation, &non_misinformation}) {
      for (const auto& f : *list) {
        std::snprintf(buf, sizeof buf, ",%.6f,%.6g,", f.r, f.p);
        std::string name = f.feature;
        if (name.find_first_of(",\"\n") != std::string::npos) {
          std::string q = "\"";
          for (char ch : name) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          name = q + "\"";
        }
        out += name + buf + std::string(to_string(f.group)) + "\n";
      }
    }
    return out;
  }
};

// labels: 1 = misinformation, 0 = not. Features with p >= alpha are dropped;
// zero-variance features are skipped and counted.
inline CorrelationTables top_correlated(const FeatureMatrix& m, const std::vector<int>& labels, double alpha = 0.05,
                                        std::size_t k = 10) {
  if (labels.size() != m.docs) throw Error(ErrorCode::kInvalidArgument, "labels and matrix are not aligned");
  for (auto y : labels) {
    if (y != 0 && y != 1) throw Error(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
  }
  CorrelationTables out;
  for (std::size_t f = 0; f < m.columns.size(); ++f) {
    ++out.tested;
    Correlation c;
    try {
      c = correlate_column(m.columns[f], labels);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroVariance) throw;
      ++out.zero_variance;
      continue;
    }
    if (!(c.p < alpha) || c.r == 0.0) {
      ++out.not_significant;
      continue;
    }
    if (c.r > 0) out.misinformation.push_back({m.names[f], c.r, c.p, CorrelationGroup::kMisinformation});
    else out.non_misinformation.push_back({m.names[f], c.r, c.p, CorrelationGroup::kNonMisinformation});
  }
  auto by_strength = [](const FeatureCorrelation& a, const FeatureCorrelation& b) {
    const double ra = std::fabs(a.r), rb = std::fabs(b.r);
    if (ra != rb) return ra > rb;
    return a.feature < b.feature;
  };
  std::sort(out.misinformation.begin(), out.misinformation.end(), by_strength);
  std::sort(out.non_misinformation.begin(), out.non_misinformation.end(), by_strength);
  if (out.misinformation.size() > k) out.misinformation.resize(k);
  if (out.non_misinformation.size() > k) out.non_misinformation.resize(k);
  return out;
}

// Published reference correlations: r("gates") with misinformation and
// r(Affiliation). Documentation only.
inline constexpr double kReferenceGatesR = 0.204;
inline constexpr double kReferenceAffiliationR = 0.200;

}  // namespace misinfo
