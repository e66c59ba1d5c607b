#include "gmds/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "gmds/errors.hpp"
#include "gmds/graph_io.hpp"

namespace gmds {

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c == '\'' || c >= 0x80; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Collapses runs of whitespace (including line breaks) to single spaces.
std::string squeeze(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

// The token immediately before position `dot`, lowercased, without the dot.
std::string token_before(std::string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string tok;
  for (std::size_t k = b; k < dot; ++k) {
    const char c = text[k];
    if (c == '(' || c == '"' || c == '\'') continue;
    tok.push_back(lower(c));
  }
  return tok;
}

bool opens_sentence(unsigned char c) {
  return std::isupper(c) || std::isdigit(c) || c == '"' || c == '\'' || c == '(' || c >= 0x80;
}

}  // namespace

int SentenceVector::count(std::string_view term) const {
  for (const auto& [t, c] : counts) {
    if (t == term) return c;
  }
  return 0;
}

const WordSet& default_stopwords() {
  static const WordSet words{
      "a", "about", "above", "after", "again", "against", "all", "an", "and", "any",
      "as", "at", "because", "before", "below", "between", "both", "but", "by", "can",
      "could", "did", "do", "does", "doing", "down", "during", "each", "few", "for",
      "from", "further", "her", "here", "hers", "herself", "him", "himself", "his", "how",
      "i", "if", "in", "into", "it", "its", "itself", "just", "me", "more",
      "most", "my", "myself", "no", "nor", "not", "now", "of", "off", "on",
      "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own",
      "same", "she", "should", "so", "some", "such", "than", "that", "the", "their",
      "theirs", "them", "themselves", "then", "there", "these", "they", "this", "those", "through",
      "to", "too", "under", "until", "up", "very", "we", "what", "when", "where",
      "which", "while", "who", "whom", "why", "will", "with", "would", "you", "your",
      "yours", "yourself", "yourselves",
  };
  return words;
}

const LemmaMap& default_lemmas() {
  static const LemmaMap lemmas{
      {"am", "be"}, {"is", "be"}, {"are", "be"},
      {"was", "be"}, {"were", "be"}, {"been", "be"},
      {"being", "be"}, {"has", "have"}, {"had", "have"},
      {"having", "have"}, {"looking", "look"}, {"looked", "look"},
      {"looks", "look"}, {"children", "child"}, {"singing", "sing"},
      {"sang", "sing"}, {"sung", "sing"}, {"sings", "sing"},
      {"airier", "airy"}, {"fleshier", "fleshy"}, {"men", "man"},
      {"women", "woman"}, {"people", "person"}, {"mice", "mouse"},
      {"feet", "foot"}, {"teeth", "tooth"}, {"went", "go"},
      {"goes", "go"}, {"gone", "go"}, {"going", "go"},
      {"made", "make"}, {"makes", "make"}, {"making", "make"},
      {"said", "say"}, {"says", "say"}, {"saying", "say"},
      {"took", "take"}, {"taken", "take"}, {"takes", "take"},
      {"taking", "take"}, {"better", "good"}, {"best", "good"},
  };
  return lemmas;
}

const WordSet& default_abbreviations() {
  static const WordSet words{
      "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc",
      "e.g", "i.e", "inc", "ltd", "co", "corp", "fig", "no", "jan", "feb",
      "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec",
      "u.s", "u.k",
  };
  return words;
}

TextOptions TextOptions::defaults() {
  return {default_stopwords(), default_lemmas(), default_abbreviations()};
}

WordSet load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  WordSet out;
  std::string line;
  while (std::getline(in, line)) {
    auto w = trim(line);
    if (w.empty() || w[0] == '#') continue;
    std::transform(w.begin(), w.end(), w.begin(), lower);
    out.insert(std::move(w));
  }
  return out;
}

LemmaMap load_lemma_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  LemmaMap out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto tab = t.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected 'surface<TAB>lemma'");
    auto surface = trim(t.substr(0, tab));
    auto lemma = trim(t.substr(tab + 1));
    if (surface.empty() || lemma.empty()) throw ParseError(line_no, "empty lemma entry");
    std::transform(surface.begin(), surface.end(), surface.begin(), lower);
    std::transform(lemma.begin(), lemma.end(), lemma.begin(), lower);
    out[surface] = lemma;
  }
  return out;
}

void validate_utf8(std::string_view text) {
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xe0) == 0xc0) {
      len = 2;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      len = 3;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      len = 4;
      cp = c & 0x07;
    } else {
      throw EncodingError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > n) throw EncodingError("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xc0) != 0x80) {
        throw EncodingError("invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cc & 0x3f);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
      throw EncodingError("invalid UTF-8 code point at offset " + std::to_string(i));
    }
    i += len;
  }
}

std::vector<std::string> split_sentences(std::string_view text, const WordSet& abbreviations) {
  std::vector<std::string> out;
  std::size_t start = 0;
  const auto n = text.size();
  auto emit = [&](std::size_t end) {
    auto s = squeeze(trim(text.substr(start, end - start)));
    if (!s.empty()) out.push_back(std::move(s));
    start = end;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    // Absorb runs like "?!" or "..." and closing quotes/brackets.
    std::size_t end = i + 1;
    while (end < n && (text[end] == '.' || text[end] == '?' || text[end] == '!')) ++end;
    while (end < n && (text[end] == '"' || text[end] == '\'' || text[end] == ')')) ++end;

    std::size_t next = end;
    while (next < n && std::isspace(static_cast<unsigned char>(text[next]))) ++next;
    const bool at_end = next == n;
    if (!at_end && (next == end || !opens_sentence(static_cast<unsigned char>(text[next])))) {
      continue;
    }
    if (c == '.' && end == i + 1) {
      const auto tok = token_before(text, i);
      const bool initial = tok.size() == 1 && std::isalpha(static_cast<unsigned char>(tok[0]));
      if (!at_end && (initial || abbreviations.count(tok) != 0)) continue;
    }
    emit(end);
    i = end - 1;
  }
  if (start < n) emit(n);
  return out;
}

std::vector<std::string> surface_words(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::string w;
    while (i < n && is_word_byte(static_cast<unsigned char>(text[i]))) w.push_back(lower(text[i++]));
    if (w.size() > 2 && w.compare(w.size() - 2, 2, "'s") == 0) w.resize(w.size() - 2);
    const auto b = w.find_first_not_of('\'');
    if (b == std::string::npos) continue;
    w = w.substr(b, w.find_last_not_of('\'') - b + 1);
    out.push_back(std::move(w));
  }
  return out;
}

SentenceVector vectorize(std::size_t sentence_id, std::string_view sentence,
                         const WordSet& stopwords, const LemmaMap& lemmas) {
  SentenceVector v;
  v.sentence_id = sentence_id;
  const auto words = surface_words(sentence);
  v.word_count = words.size();
  for (const auto& w : words) {
    if (stopwords.count(w)) continue;
    auto it = lemmas.find(w);
    const std::string& term = it == lemmas.end() ? w : it->second;
    auto slot = std::find_if(v.counts.begin(), v.counts.end(),
                             [&](const auto& tc) { return tc.first == term; });
    if (slot == v.counts.end()) {
      v.counts.emplace_back(term, 1);
    } else {
      ++slot->second;
    }
  }
  return v;
}

SegmentedText segment_text(std::string_view text, const TextOptions& options) {
  validate_utf8(text);
  SegmentedText out;
  out.sentences = split_sentences(text, options.abbreviations);
  out.vectors.reserve(out.sentences.size());
  for (std::size_t k = 0; k < out.sentences.size(); ++k) {
    out.vectors.push_back(vectorize(k, out.sentences[k], options.stopwords, options.lemmas));
  }
  return out;
}

std::vector<SentenceVector> segment_and_normalize(std::string_view text, const WordSet& stopwords,
                                                  const LemmaMap& lemmas) {
  return segment_text(text, {stopwords, lemmas, default_abbreviations()}).vectors;
}

std::vector<std::string> vocabulary(const std::vector<SentenceVector>& vectors) {
  std::vector<std::string> vocab;
  std::unordered_set<std::string> seen;
  for (const auto& v : vectors) {
    for (const auto& [term, c] : v.counts) {
      if (seen.insert(term).second) vocab.push_back(term);
    }
  }
  return vocab;
}

std::vector<int> dense_counts(const SentenceVector& v, const std::vector<std::string>& vocab) {
  std::vector<int> out;
  out.reserve(vocab.size());
  for (const auto& term : vocab) out.push_back(v.count(term));
  return out;
}

double cosine_similarity(const SentenceVector& a, const SentenceVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::unordered_map<std::string_view, int> index;
  double norm_a = 0.0;
  for (const auto& [t, c] : a.counts) {
    index.emplace(t, c);
    norm_a += static_cast<double>(c) * c;
  }
  double dot = 0.0;
  double norm_b = 0.0;
  for (const auto& [t, c] : b.counts) {
    norm_b += static_cast<double>(c) * c;
    if (auto it = index.find(t); it != index.end()) dot += static_cast<double>(c) * it->second;
  }
  return std::clamp(dot / (std::sqrt(norm_a) * std::sqrt(norm_b)), 0.0, 1.0);
}

SentenceGraph build_sentence_graph(std::vector<SentenceVector> vectors,
                                   std::vector<std::string> sentences, double theta) {
  if (vectors.empty()) throw InputError("sentence graph needs at least one sentence");
  if (!sentences.empty() && sentences.size() != vectors.size()) {
    throw InputError("sentence texts and vectors differ in length");
  }
  const auto n = vectors.size();
  WeightedGraph graph(n, theta);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      const double w = cosine_similarity(vectors[i], vectors[j]);
      if (w > 0.0) graph.add_edge(i, j, w, w);
    }
  }
  return {std::move(graph), std::move(sentences), std::move(vectors)};
}

void save_sentence_graph(const SentenceGraph& sg, const std::filesystem::path& tsv_path,
                         const std::filesystem::path& json_path) {
  save_graph(sg.graph, tsv_path);
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["theta"] = sg.graph.theta();
  auto& items = doc["sentences"] = nlohmann::json::array();
  for (std::size_t k = 0; k < sg.vectors.size(); ++k) {
    nlohmann::json s;
    s["id"] = k;
    s["text"] = k < sg.sentences.size() ? sg.sentences[k] : std::string();
    s["word_count"] = sg.vectors[k].word_count;
    items.push_back(std::move(s));
  }
  std::ofstream out(json_path);
  if (!out) throw InputError("cannot write " + json_path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace gmds
