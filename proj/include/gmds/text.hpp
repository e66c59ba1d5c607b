#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gmds/graph.hpp"

namespace gmds {

using WordSet = std::unordered_set<std::string>;
using LemmaMap = std::unordered_map<std::string, std::string>;

/// Term counts of one sentence after stop-word removal and lemmatization,
/// terms in order of first appearance.
struct SentenceVector {
  std::size_t sentence_id = 0;
  std::vector<std::pair<std::string, int>> counts;
  std::size_t word_count = 0;  // surface words before filtering

  int count(std::string_view term) const;
  bool empty() const noexcept { return counts.empty(); }
};

struct TextOptions {
  WordSet stopwords;
  LemmaMap lemmas;
  WordSet abbreviations;  // lowercase, without the trailing period

  /// Built-in English lists (also shipped under data/).
  static TextOptions defaults();
};

const WordSet& default_stopwords();
const LemmaMap& default_lemmas();
const WordSet& default_abbreviations();

/// One word per line; blank lines and '#' comments skipped; lowercased.
WordSet load_word_list(const std::filesystem::path& path);
/// `surface<TAB>lemma` per line.
LemmaMap load_lemma_map(const std::filesystem::path& path);

/// Throws EncodingError if text is not valid UTF-8.
void validate_utf8(std::string_view text);

/// Splits at '.', '?' or '!' followed by whitespace and an uppercase letter
/// (or digit, or opening quote), or by the end of the text. A period after a
/// listed abbreviation or a single-letter initial does not end a sentence.
std::vector<std::string> split_sentences(std::string_view text, const WordSet& abbreviations);

/// Lowercased word tokens: runs of letters, digits, apostrophes and
/// non-ASCII bytes, with a trailing possessive "'s" removed.
std::vector<std::string> surface_words(std::string_view text);

SentenceVector vectorize(std::size_t sentence_id, std::string_view sentence,
                         const WordSet& stopwords, const LemmaMap& lemmas);

struct SegmentedText {
  std::vector<std::string> sentences;
  std::vector<SentenceVector> vectors;
};

SegmentedText segment_text(std::string_view text, const TextOptions& options);

std::vector<SentenceVector> segment_and_normalize(std::string_view text, const WordSet& stopwords,
                                                  const LemmaMap& lemmas);

/// Document vocabulary in order of first appearance.
std::vector<std::string> vocabulary(const std::vector<SentenceVector>& vectors);
std::vector<int> dense_counts(const SentenceVector& v, const std::vector<std::string>& vocab);

/// Cosine of the two count vectors; 0 when either is empty.
double cosine_similarity(const SentenceVector& a, const SentenceVector& b);

struct SentenceGraph {
  WeightedGraph graph;
  std::vector<std::string> sentences;
  std::vector<SentenceVector> vectors;
};

/// One vertex per sentence, symmetric cosine weights, zero-similarity pairs
/// omitted.
SentenceGraph build_sentence_graph(std::vector<SentenceVector> vectors,
                                   std::vector<std::string> sentences, double theta);

/// Writes the graph in the instance format to tsv_path and the sentence
/// texts with their word counts as JSON to json_path.
void save_sentence_graph(const SentenceGraph& sg, const std::filesystem::path& tsv_path,
                         const std::filesystem::path& json_path);

}  // namespace gmds
