#pragma once

// Approximate subject/object term extraction and the overlap predicates used
// by pair cleaning and the extraction post-filter.
//
// Heuristic: the text is tokenized with punctuation marks and split into
// clauses at '.', '!', '?', ';' and ':'. In each clause the first token found
// in the verb-cue lexicon splits it: content tokens before it are subjects,
// content tokens after it are objects. A clause without a cue contributes all
// of its content tokens as subjects. Content tokens exclude stopwords and verb
// cues. If no clause has a cue the result is flagged low-confidence.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "misinfo/lexicons.hpp"
#include "misinfo/text.hpp"

namespace misinfo {

struct SvoTerms {
  std::set<std::string> subjects;
  std::set<std::string> objects;
  bool low_confidence = false;

  bool operator==(const SvoTerms&) const = default;
};

class SvoExtractor {
 public:
  virtual ~SvoExtractor() = default;
  virtual SvoTerms extract(std::string_view text) const = 0;
};

class HeuristicSvoExtractor final : public SvoExtractor {
 public:
  HeuristicSvoExtractor() : stopwords_(&default_stopwords()), verbs_(&default_verb_cues()) {}
  HeuristicSvoExtractor(const text::WordSet& stopwords, const text::WordSet& verbs)
      : stopwords_(&stopwords), verbs_(&verbs) {}

  SvoTerms extract(std::string_view raw) const override {
    SvoTerms out;
    bool any_verb = false;
    std::vector<std::string> clause;
    auto finish_clause = [&] {
      std::size_t verb_at = clause.size();
      for (std::size_t i = 0; i < clause.size(); ++i) {
        if (verbs_->contains(clause[i])) {
          verb_at = i;
          break;
        }
      }
      any_verb = any_verb || verb_at < clause.size();
      for (std::size_t i = 0; i < clause.size(); ++i) {
        if (i == verb_at || !is_content(clause[i])) continue;
        (i < verb_at ? out.subjects : out.objects).insert(clause[i]);
      }
      clause.clear();
    };
    for (auto& tok : text::tokenize_marks(raw, true)) {
      if (tok.is_word) {
        clause.push_back(std::move(tok.text));
      } else if (is_clause_break(tok.text)) {
        finish_clause();
      }
    }
    finish_clause();
    out.low_confidence = !any_verb;
    return out;
  }

  bool is_content(const std::string& tok) const { return !stopwords_->contains(tok) && !verbs_->contains(tok); }

 private:
  static bool is_clause_break(std::string_view mark) {
    return mark == "." || mark == "!" || mark == "?" || mark == ";" || mark == ":";
  }

  const text::WordSet* stopwords_;
  const text::WordSet* verbs_;
};

inline const HeuristicSvoExtractor& default_svo_extractor() {
  static const HeuristicSvoExtractor e;
  return e;
}

inline SvoTerms extract_svo(std::string_view text) { return default_svo_extractor().extract(text); }

// True iff any claim subject or object token is among the tweet's content tokens.
inline bool shares_subject_or_object(const SvoTerms& claim_terms, std::string_view tweet_text,
                                     const text::WordSet& stopwords = default_stopwords()) {
  for (const auto& tok : text::tokenize(tweet_text)) {
    if (stopwords.contains(tok)) continue;
    if (claim_terms.subjects.contains(tok) || claim_terms.objects.contains(tok)) return true;
  }
  return false;
}

inline bool mentions_neither(const SvoTerms& claim_terms, std::string_view tweet_text,
                             const text::WordSet& stopwords = default_stopwords()) {
  return !shares_subject_or_object(claim_terms, tweet_text, stopwords);
}

}  // namespace misinfo
