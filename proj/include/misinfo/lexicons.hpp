#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "misinfo/default_lists.hpp"
#include "misinfo/error.hpp"
#include "misinfo/text.hpp"

namespace misinfo {

// One entry per non-empty line; '#'-prefixed lines are comments unless the
// list holds hashtags (keyword files), so comments use "//" instead.
inline std::vector<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open word list " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = text::trim(line);
    if (w.empty() || w.starts_with("//")) continue;
    out.push_back(std::move(w));
  }
  return out;
}

template <std::size_t N>
std::vector<std::string> to_vector(const std::array<std::string_view, N>& words) {
  return {words.begin(), words.end()};
}

inline text::WordSet make_word_set(const std::vector<std::string>& words) {
  text::WordSet out;
  for (const auto& w : words) out.insert(text::fold(w));
  return out;
}

inline const text::WordSet& default_stopwords() {
  static const text::WordSet set = make_word_set(to_vector(lists::kDefaultStopwords));
  return set;
}

inline const text::WordSet& default_verb_cues() {
  static const text::WordSet set = make_word_set(to_vector(lists::kDefaultVerbCues));
  return set;
}

// Multi-word cue phrases matched as contiguous token sequences.
class PhraseMatcher {
 public:
  PhraseMatcher() = default;
  explicit PhraseMatcher(const std::vector<std::string>& phrases) {
    for (const auto& p : phrases) {
      auto toks = text::tokenize(p);
      if (!toks.empty()) phrases_.push_back(std::move(toks));
    }
  }

  // Number of (possibly overlapping) phrase occurrences in the token stream.
  std::size_t count(const std::vector<std::string>& tokens) const {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      for (const auto& phrase : phrases_) {
        if (i + phrase.size() <= tokens.size() &&
            std::equal(phrase.begin(), phrase.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
          ++hits;
        }
      }
    }
    return hits;
  }

  std::size_t size() const { return phrases_.size(); }

 private:
  std::vector<std::vector<std::string>> phrases_;
};

inline const PhraseMatcher& default_debunk_cues() {
  static const PhraseMatcher m(to_vector(lists::kDefaultDebunkCues));
  return m;
}

}  // namespace misinfo
