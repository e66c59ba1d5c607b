#include <doctest.h>

#include <algorithm>

#include "gmds/errors.hpp"
#include "gmds/summarizer.hpp"

using namespace gmds;

namespace {

constexpr const char* kExample =
    "Tom is looking at his children with a smile. These children are good at singing.";

constexpr const char* kLonger =
    "The river floods the valley every spring. Farmers in the valley plant rice after the flood. "
    "Rice needs water and warm weather. The spring flood brings water to the fields. "
    "Some farmers also keep goats. Goats eat grass near the river. "
    "The valley market sells rice and goat milk. Weather in the valley is warm in summer.";

SummarizeOptions with_method(SummaryMethod m) {
  SummarizeOptions o;
  o.method = m;
  return o;
}

}  // namespace

TEST_SUITE("summarizer") {
  TEST_CASE("single sentence, any method") {
    for (auto m : {SummaryMethod::bpd, SummaryMethod::pagerank, SummaryMethod::ap}) {
      const auto s = summarize("Only one sentence here.", with_method(m));
      CHECK(s.selected == std::vector<std::size_t>{0});
      CHECK(s.n_sentences == 1);
    }
  }

  TEST_CASE("identical sentences need one") {
    const auto s = summarize("Cats purr loudly. Cats purr loudly. Cats purr loudly.",
                             with_method(SummaryMethod::bpd));
    CHECK(s.selected.size() == 1);
  }

  TEST_CASE("two-sentence example keeps both") {
    const auto s = summarize(kExample, with_method(SummaryMethod::bpd));
    CHECK(s.selected == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("outputs are in document order and within range") {
    for (auto m : {SummaryMethod::bpd, SummaryMethod::pagerank, SummaryMethod::ap}) {
      const auto s = summarize(kLonger, with_method(m));
      CHECK(std::is_sorted(s.selected.begin(), s.selected.end()));
      CHECK_FALSE(s.selected.empty());
      for (auto id : s.selected) CHECK(id < s.n_sentences);
      CHECK(s.sentences.size() == s.selected.size());
    }
  }

  TEST_CASE("budgeted selection is a prefix of the ranking") {
    auto options = with_method(SummaryMethod::bpd);
    const auto seg = segment_text(kLonger, options.text);
    const auto sg = build_sentence_graph(seg.vectors, seg.sentences, options.theta);
    const auto order = bpd_rank_order(sg.graph, options.bpd);
    for (std::size_t budget : {1, 10, 20, 1000}) {
      const auto prefix = budget_prefix(order, sg.vectors, budget);
      REQUIRE(prefix.size() <= order.size());
      for (std::size_t k = 0; k < prefix.size(); ++k) CHECK(prefix[k] == order[k]);
      std::size_t words = 0;
      for (auto id : prefix) words += sg.vectors[id].word_count;
      if (prefix.size() < order.size()) CHECK(words >= budget);
      options.word_budget = budget;
      const auto s = summarize_graph(sg, options);
      auto sorted = prefix;
      std::sort(sorted.begin(), sorted.end());
      CHECK(s.selected == sorted);
    }
  }

  TEST_CASE("input errors") {
    CHECK_THROWS_AS(summarize("", with_method(SummaryMethod::bpd)), InputError);
    auto ap = with_method(SummaryMethod::ap);
    ap.word_budget = 50;
    CHECK_THROWS_AS(summarize(kLonger, ap), InputError);
    CHECK(parse_summary_method("pagerank") == SummaryMethod::pagerank);
    CHECK_THROWS_AS(parse_summary_method("lexrank"), InputError);
  }
}

TEST_SUITE("metrics") {
  TEST_CASE("coverage ratios") {
    const std::vector<std::size_t> b = {1, 2, 3, 4};
    const auto same = coverage_ratios(b, b);
    CHECK(same.r_cov == 1.0);
    CHECK(same.r_dif == 0.0);
    const std::vector<std::size_t> other = {7, 8};
    CHECK(coverage_ratios(other, b).r_cov == 0.0);
    CHECK(coverage_ratios(other, b).r_dif == 1.0);
    const std::vector<std::size_t> sys = {1, 2, 5, 6, 7};
    const auto r = coverage_ratios(sys, b);
    CHECK(r.r_cov == doctest::Approx(0.5));
    CHECK(r.r_dif == doctest::Approx(0.6));
    CHECK_THROWS_AS(coverage_ratios(sys, {}), UndefinedMetricError);
  }

  TEST_CASE("rouge-1") {
    const std::vector<std::string> ref = {"a b c d"};
    const auto r = rouge1("a b e", ref).mean;
    CHECK(r.recall == 0.5);
    CHECK(r.precision == 2.0 / 3.0);
    CHECK(r.fscore == doctest::Approx(4.0 / 7.0).epsilon(1e-15));

    const auto same = rouge1("The cat sat.", std::vector<std::string>{"the CAT sat"}).mean;
    CHECK(same.recall == 1.0);
    CHECK(same.precision == 1.0);
    CHECK(same.fscore == 1.0);

    const auto none = rouge1("x y", ref).mean;
    CHECK(none.fscore == 0.0);

    const std::vector<std::string> refs = {"a b c d", "a b"};
    const auto two = rouge1("a b e", refs);
    REQUIRE(two.per_reference.size() == 2);
    CHECK(two.mean.recall == doctest::Approx((0.5 + 1.0) / 2));
    for (const auto& s : two.per_reference) CHECK(s.fscore <= (s.recall + s.precision) / 2 + 1e-15);

    // Clipping: repeated system words count at most as often as in the reference.
    const auto clipped = rouge1("a a a", std::vector<std::string>{"a b"}).mean;
    CHECK(clipped.recall == 0.5);
    CHECK(clipped.precision == doctest::Approx(1.0 / 3.0));

    CHECK_THROWS_AS(rouge1("a", std::vector<std::string>{""}), UndefinedMetricError);
    CHECK_THROWS_AS(rouge1("a", std::vector<std::string>{}), InputError);
  }
}
