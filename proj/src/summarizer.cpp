#include "gmds/summarizer.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "gmds/errors.hpp"

namespace gmds {

SummaryMethod parse_summary_method(std::string_view name) {
  if (name == "bpd") return SummaryMethod::bpd;
  if (name == "pagerank") return SummaryMethod::pagerank;
  if (name == "ap") return SummaryMethod::ap;
  throw InputError("unknown summary method '" + std::string(name) + "'");
}

std::string_view to_string(SummaryMethod method) {
  switch (method) {
    case SummaryMethod::bpd:
      return "bpd";
    case SummaryMethod::pagerank:
      return "pagerank";
    case SummaryMethod::ap:
      return "ap";
  }
  return "?";
}

std::vector<std::size_t> budget_prefix(std::span<const VertexId> order,
                                       const std::vector<SentenceVector>& vectors,
                                       std::size_t budget) {
  std::vector<std::size_t> out;
  std::size_t words = 0;
  for (auto v : order) {
    if (words >= budget) break;
    out.push_back(v);
    words += vectors.at(v).word_count;
  }
  return out;
}

Summary summarize_graph(const SentenceGraph& sg, const SummarizeOptions& options) {
  const auto& graph = sg.graph;
  std::vector<std::size_t> picked;

  switch (options.method) {
    case SummaryMethod::bpd: {
      if (options.word_budget) {
        const auto order = bpd_rank_order(graph, options.bpd);
        picked = budget_prefix(order, sg.vectors, *options.word_budget);
      } else {
        const auto set = bpd_solve(graph, options.bpd);
        picked.assign(set.members.begin(), set.members.end());
      }
      break;
    }
    case SummaryMethod::pagerank: {
      const auto pr = pagerank(graph, options.pagerank_p);
      if (options.word_budget) {
        picked = budget_prefix(rank_by_score(pr.scores), sg.vectors, *options.word_budget);
      } else {
        const auto sel = pagerank_select(pr.scores, options.pagerank_fraction);
        picked.assign(sel.begin(), sel.end());
      }
      break;
    }
    case SummaryMethod::ap: {
      if (options.word_budget) throw InputError("word budget is not supported for ap");
      const auto res = affinity_propagation(graph, options.ap);
      picked.assign(res.exemplars.begin(), res.exemplars.end());
      break;
    }
  }

  std::sort(picked.begin(), picked.end());
  Summary out;
  out.n_sentences = graph.n_vertices();
  out.selected = picked;
  for (auto id : picked) {
    out.sentences.push_back(id < sg.sentences.size() ? sg.sentences[id] : std::string());
    out.word_count += sg.vectors.at(id).word_count;
  }
  return out;
}

Summary summarize(std::string_view document, const SummarizeOptions& options) {
  auto seg = segment_text(document, options.text);
  if (seg.sentences.empty()) throw InputError("document contains no sentences");
  const auto sg =
      build_sentence_graph(std::move(seg.vectors), std::move(seg.sentences), options.theta);
  return summarize_graph(sg, options);
}

CoverageRatios coverage_ratios(std::span<const std::size_t> system,
                               std::span<const std::size_t> reference) {
  const std::set<std::size_t> ref(reference.begin(), reference.end());
  const std::set<std::size_t> sys(system.begin(), system.end());
  if (ref.empty()) throw UndefinedMetricError("coverage ratio needs a non-empty reference set");
  if (sys.empty()) throw UndefinedMetricError("difference ratio needs a non-empty system set");
  std::size_t shared = 0;
  for (auto id : sys) shared += ref.count(id);
  return {static_cast<double>(shared) / ref.size(),
          static_cast<double>(sys.size() - shared) / sys.size()};
}

RougeReport rouge1(std::string_view system, std::span<const std::string> references) {
  if (references.empty()) throw UndefinedMetricError("ROUGE needs at least one reference");
  std::unordered_map<std::string, std::size_t> sys_counts;
  const auto sys_words = surface_words(system);
  for (const auto& w : sys_words) ++sys_counts[w];

  RougeReport out;
  for (const auto& ref : references) {
    const auto ref_words = surface_words(ref);
    if (ref_words.empty()) throw UndefinedMetricError("reference summary has no words");
    std::unordered_map<std::string, std::size_t> ref_counts;
    for (const auto& w : ref_words) ++ref_counts[w];
    std::size_t clipped = 0;
    for (const auto& [w, c] : ref_counts) {
      auto it = sys_counts.find(w);
      if (it != sys_counts.end()) clipped += std::min(c, it->second);
    }
    RougeScore s;
    s.recall = static_cast<double>(clipped) / ref_words.size();
    s.precision = sys_words.empty() ? 0.0 : static_cast<double>(clipped) / sys_words.size();
    // 2PR/(P+R) reduced to counts, which rounds once.
    s.fscore = clipped > 0 ? 2.0 * clipped / static_cast<double>(ref_words.size() + sys_words.size())
                           : 0.0;
    out.per_reference.push_back(s);
  }
  for (const auto& s : out.per_reference) {
    out.mean.recall += s.recall;
    out.mean.precision += s.precision;
    out.mean.fscore += s.fscore;
  }
  const auto k = static_cast<double>(out.per_reference.size());
  out.mean.recall /= k;
  out.mean.precision /= k;
  out.mean.fscore /= k;
  return out;
}

}  // namespace gmds
