#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmds/baselines.hpp"
#include "gmds/bpd.hpp"
#include "gmds/text.hpp"

namespace gmds {

enum class SummaryMethod { bpd, pagerank, ap };

SummaryMethod parse_summary_method(std::string_view name);
std::string_view to_string(SummaryMethod method);

struct SummarizeOptions {
  SummaryMethod method = SummaryMethod::bpd;
  double theta = 1.0;
  /// Stop after the sentence that brings the surface word count to the
  /// budget. Supported for bpd and pagerank.
  std::optional<std::size_t> word_budget;
  /// Cosine weights are arbitrary reals, hence the fine quantization grid.
  BpdConfig bpd{.beta = 8.0, .occupy_fraction = 0.01, .bp_sweeps_per_round = 10, .tol = 1e-7,
                .damping = 0.0, .seed = 1, .grid_divisions = 1000};
  double pagerank_p = kDefaultJumpProbability;
  double pagerank_fraction = 0.25;
  ApParams ap;
  TextOptions text = TextOptions::defaults();
};

struct Summary {
  std::vector<std::size_t> selected;   // sentence ids in document order
  std::vector<std::string> sentences;  // matching texts
  std::size_t word_count = 0;
  std::size_t n_sentences = 0;         // in the whole document
};

/// Runs the chosen selector on an already built sentence graph.
Summary summarize_graph(const SentenceGraph& sg, const SummarizeOptions& options);

/// Document -> sentence graph -> selection. Throws InputError for a
/// document without sentences.
Summary summarize(std::string_view document, const SummarizeOptions& options);

/// Longest prefix of `order` whose cumulative word count first reaches the
/// budget (or all of it).
std::vector<std::size_t> budget_prefix(std::span<const VertexId> order,
                                       const std::vector<SentenceVector>& vectors,
                                       std::size_t budget);

struct CoverageRatios {
  double r_cov = 0.0;  // |B ∩ B~| / |B|
  double r_dif = 0.0;  // |B~ - B| / |B~|
};

/// system is the algorithm's selection B~, reference the manual one B.
CoverageRatios coverage_ratios(std::span<const std::size_t> system,
                               std::span<const std::size_t> reference);

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double fscore = 0.0;
};

struct RougeReport {
  std::vector<RougeScore> per_reference;
  RougeScore mean;
};

/// ROUGE-1 on lowercased surface words (no stop-word removal or
/// lemmatization), averaged over references.
RougeReport rouge1(std::string_view system, std::span<const std::string> references);

}  // namespace gmds
