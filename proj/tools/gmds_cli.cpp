// gmds: command-line front end for the generalized dominating-set library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gmds/baselines.hpp"
#include "gmds/bp.hpp"
#include "gmds/bpd.hpp"
#include "gmds/er_generator.hpp"
#include "gmds/errors.hpp"
#include "gmds/exact.hpp"
#include "gmds/graph_io.hpp"
#include "gmds/population.hpp"
#include "gmds/rho0.hpp"
#include "gmds/summarizer.hpp"
#include "gmds/text.hpp"

namespace {

using nlohmann::json;
using namespace gmds;

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kInputError = 1, kRefusal = 2 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

// "A:B:STEP" or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec, const char* what) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError(std::string("bad ") + what + " value '" + s + "'");
    }
  };
  std::vector<std::string> parts;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  if (sep == ':') {
    if (parts.size() != 3) throw InputError(std::string(what) + " must be START:STOP:STEP");
    return beta_grid(number(parts[0]), number(parts[1]), number(parts[2]));
  }
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(number(p));
  if (out.empty()) throw InputError(std::string(what) + " is empty");
  return out;
}

json densities_json(const ThermoDensities& d) {
  return {{"beta", d.beta},         {"rho", d.rho},         {"f", nullable(d.f)},
          {"s", d.s},               {"converged", d.converged}, {"residual", d.residual},
          {"sweeps", d.sweeps}};
}

std::string rho0_line(std::span<const ThermoDensities> curve) {
  try {
    const auto est = locate_rho0(curve);
    return "# rho0=" + fmt(est.rho0) + ",beta_at_zero=" + fmt(est.beta_at_zero) +
           ",extrapolated=" + (est.extrapolated ? "true" : "false") + "\n";
  } catch (const InsufficientDataError& e) {
    return std::string("# rho0=unavailable (") + e.what() + ")\n";
  }
}

// Sentence ids from a summary JSON ("selected") or whitespace/comma separated
// integers.
std::vector<std::size_t> read_ids(const std::string& path) {
  const auto text = read_file(path);
  std::vector<std::size_t> ids;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("selected")) {
      throw InputError(path + ": expected a summary JSON with 'selected'");
    }
    for (const auto& v : doc["selected"]) ids.push_back(v.get<std::size_t>());
    return ids;
  }
  std::string cleaned = text;
  for (auto& ch : cleaned) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(cleaned);
  for (std::string tok; in >> tok;) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError(path + ": bad sentence id '" + tok + "'");
    }
    ids.push_back(std::stoull(tok));
  }
  return ids;
}

// Summary text from a summary JSON ("sentences") or the raw file.
std::string read_summary_text(const std::string& path) {
  const auto text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto doc = json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.contains("sentences")) {
      std::string joined;
      for (const auto& s : doc["sentences"]) joined += s.get<std::string>() + "\n";
      return joined;
    }
  }
  return text;
}

struct Cli {
  CLI::App app{"Generalized minimum dominating set tools"};

  // Values bound to flags. Defaults come from the library structs.
  std::string graph_path, out_path, weights = "paper", betas = "0:12:0.5", c_grid;
  std::size_t n = 0, max_sweeps = BpParams{}.max_sweeps;
  double c = 0.0, theta = 1.0, beta = 8.0, tol = BpParams{}.tol, damping = 0.0;
  std::uint64_t seed = 1;
  BpdConfig bpd;
  PopulationParams pop;

  std::string text_path, method = "bpd", stopwords_path, lemmas_path, graph_out;
  std::optional<std::size_t> word_budget;
  double pr_p = kDefaultJumpProbability, pr_fraction = 0.25, self_pref = 0.0, ap_damping = 0.5;

  std::string system_path, metric = "rouge";
  std::vector<std::string> references;

  CLI::App* gen_er;
  CLI::App* solve_bp;
  CLI::App* scan;
  CLI::App* bpd_cmd;
  CLI::App* rs;
  CLI::App* rho0;
  CLI::App* exact;
  CLI::App* summ;
  CLI::App* eval;

  Cli() {
    app.require_subcommand(1);

    gen_er = app.add_subcommand("gen-er", "Generate an Erdős–Rényi instance");
    gen_er->add_option("--n", n, "Number of vertices")->required();
    gen_er->add_option("--c", c, "Mean degree")->required();
    gen_er->add_option("--weights", weights, "paper | uniform | mds-undirected | mds-directed");
    gen_er->add_option("--theta", theta, "Threshold");
    gen_er->add_option("--seed", seed);
    gen_er->add_option("--out", out_path, "Output file (default stdout)");

    solve_bp = app.add_subcommand("solve-bp", "Run BP at one beta and print densities");
    add_graph(solve_bp);
    solve_bp->add_option("--beta", beta)->required();
    add_bp_flags(solve_bp);
    solve_bp->add_option("--out", out_path);

    scan = app.add_subcommand("scan-beta", "BP densities over a beta schedule (CSV)");
    add_graph(scan);
    scan->add_option("--betas", betas, "START:STOP:STEP or a comma list");
    add_bp_flags(scan);
    scan->add_option("--out", out_path);

    bpd_cmd = app.add_subcommand("bpd", "Decimation solver");
    add_graph(bpd_cmd);
    bpd_cmd->add_option("--beta", bpd.beta);
    bpd_cmd->add_option("--frac", bpd.occupy_fraction, "Share of candidates occupied per round");
    bpd_cmd->add_option("--sweeps", bpd.bp_sweeps_per_round, "BP sweeps per round");
    bpd_cmd->add_option("--grid-divisions", bpd.grid_divisions);
    bpd_cmd->add_option("--seed", bpd.seed);
    bpd_cmd->add_option("--out", out_path);

    rs = app.add_subcommand("rs-ensemble", "Population dynamics over a beta schedule (CSV)");
    add_ensemble_flags(rs);
    rs->add_option("--c", c)->required();
    rs->add_option("--beta-grid", betas, "START:STOP:STEP or a comma list");

    rho0 = app.add_subcommand("rho0-curve", "Ensemble minimum density against mean degree (CSV)");
    add_ensemble_flags(rho0);
    rho0->add_option("--c-grid", c_grid, "START:STOP:STEP or a comma list")->required();
    rho0->add_option("--beta-grid", betas, "START:STOP:STEP or a comma list");

    exact = app.add_subcommand("exact-mds", "Exhaustive minimum dominating set (small graphs)");
    add_graph(exact);
    exact->add_option("--out", out_path);

    summ = app.add_subcommand("summarize", "Extractive summary of a text document");
    summ->add_option("--text", text_path, "Plain-text document")->required();
    summ->add_option("--method", method, "bpd | pagerank | ap");
    summ->add_option("--theta", theta);
    summ->add_option("--beta", beta);
    summ->add_option("--frac", bpd.occupy_fraction, "BPD share occupied per round");
    summ->add_option("--word-budget", word_budget);
    summ->add_option("--p", pr_p, "PageRank jump probability");
    summ->add_option("--fraction", pr_fraction, "PageRank share of sentences");
    summ->add_option("--self-pref", self_pref, "AP self-preference");
    summ->add_option("--damping", ap_damping, "AP damping");
    summ->add_option("--stopwords", stopwords_path, "Stop-word list (one per line)");
    summ->add_option("--lemmas", lemmas_path, "Lemma TSV (surface<TAB>lemma)");
    summ->add_option("--graph-out", graph_out, "Also write the sentence graph here");
    summ->add_option("--seed", seed);
    summ->add_option("--out", out_path);

    eval = app.add_subcommand("evaluate", "Score a summary against references");
    eval->add_option("--system", system_path)->required();
    eval->add_option("--reference", references)->required();
    eval->add_option("--metric", metric, "rouge | coverage");
    eval->add_option("--out", out_path);
  }

  void add_graph(CLI::App* sub) { sub->add_option("--graph", graph_path, "Instance file")->required(); }

  void add_bp_flags(CLI::App* sub) {
    sub->add_option("--max-sweeps", max_sweeps);
    sub->add_option("--tol", tol);
    sub->add_option("--damping", damping);
    sub->add_option("--seed", seed);
  }

  void add_ensemble_flags(CLI::App* sub) {
    sub->add_option("--weights", weights);
    sub->add_option("--theta", theta);
    sub->add_option("--pop-size", pop.pop_size);
    sub->add_option("--equilibration", pop.equilibration_sweeps, "Sweeps before the first beta");
    sub->add_option("--sweeps-per-beta", pop.sweeps_per_beta);
    sub->add_option("--samples", pop.samples);
    sub->add_option("--seed", pop.seed);
    sub->add_option("--out", out_path);
  }

  BpParams bp_params() const {
    BpParams p;
    p.max_sweeps = max_sweeps;
    p.tol = tol;
    p.damping = damping;
    p.seed = seed;
    return p;
  }

  int run() {
    if (gen_er->parsed()) return run_gen_er();
    if (solve_bp->parsed()) return run_solve_bp();
    if (scan->parsed()) return run_scan();
    if (bpd_cmd->parsed()) return run_bpd();
    if (rs->parsed()) return run_rs();
    if (rho0->parsed()) return run_rho0();
    if (exact->parsed()) return run_exact();
    if (summ->parsed()) return run_summarize();
    return run_evaluate();
  }

  int run_gen_er() {
    const auto g = generate_er(n, c, named_weight_distribution(weights, theta), seed, theta);
    std::ostringstream s;
    write_graph(g, s);
    emit(out_path, s.str());
    return kOk;
  }

  int run_solve_bp() {
    const auto g = load_graph(graph_path);
    const auto r = run_bp(g, beta, bp_params());
    json j = densities_json(densities(r.state, r.run));
    j["schema_version"] = kSchemaVersion;
    emit(out_path, dump(j));
    return kOk;
  }

  int run_scan() {
    const auto g = load_graph(graph_path);
    const auto grid = parse_grid(betas, "--betas");
    const auto curve = scan_beta(g, grid, bp_params());
    std::ostringstream s;
    s << "beta,rho,f,s,converged,residual,sweeps\n";
    for (const auto& d : curve) {
      s << fmt(d.beta) << ',' << fmt(d.rho) << ',' << fmt(d.f) << ',' << fmt(d.s) << ','
        << (d.converged ? 1 : 0) << ',' << fmt(d.residual) << ',' << d.sweeps << '\n';
    }
    s << rho0_line(curve);
    emit(out_path, s.str());
    return kOk;
  }

  int run_bpd() {
    const auto g = load_graph(graph_path);
    const auto r = bpd_run(g, bpd);
    json j = {{"schema_version", kSchemaVersion},
              {"members", r.set.members},
              {"order", r.order},
              {"size", r.set.size()},
              {"relative_size", r.set.relative_size()},
              {"rounds", r.rounds},
              {"n_vertices", g.n_vertices()}};
    emit(out_path, dump(j));
    return kOk;
  }

  int run_rs() {
    const auto dist = named_weight_distribution(weights, theta);
    const auto grid = parse_grid(betas, "--beta-grid");
    const auto curve = ensemble_scan(c, dist, grid, pop, theta);
    std::vector<ThermoDensities> plain;
    std::ostringstream s;
    s << "beta,rho,rho_err,f,f_err,s,s_err\n";
    for (const auto& e : curve) {
      const auto& d = e.densities;
      s << fmt(d.beta) << ',' << fmt(d.rho) << ',' << fmt(e.rho_err) << ',' << fmt(d.f) << ','
        << fmt(e.f_err) << ',' << fmt(d.s) << ',' << fmt(e.s_err) << '\n';
      plain.push_back(d);
    }
    s << rho0_line(plain);
    emit(out_path, s.str());
    return kOk;
  }

  int run_rho0() {
    const auto dist = named_weight_distribution(weights, theta);
    const auto cs = parse_grid(c_grid, "--c-grid");
    const auto grid = parse_grid(betas, "--beta-grid");
    const auto points = rho0_curve(cs, dist, grid, pop, theta);
    std::ostringstream s;
    s << "c,rho0,beta_at_zero,extrapolated\n";
    for (const auto& p : points) {
      s << fmt(p.mean_degree) << ',' << fmt(p.estimate.rho0) << ','
        << fmt(p.estimate.beta_at_zero) << ',' << (p.estimate.extrapolated ? 1 : 0) << '\n';
    }
    emit(out_path, s.str());
    return kOk;
  }

  int run_exact() {
    const auto g = load_graph(graph_path);
    const auto set = exact_mds(g);
    json j = {{"schema_version", kSchemaVersion},
              {"size", set.size()},
              {"members", set.members},
              {"relative_size", set.relative_size()},
              {"n_vertices", g.n_vertices()}};
    emit(out_path, dump(j));
    return kOk;
  }

  int run_summarize() {
    SummarizeOptions o;
    o.method = parse_summary_method(method);
    o.theta = theta;
    o.word_budget = word_budget;
    o.bpd.beta = beta;
    o.bpd.seed = seed;
    o.pagerank_p = pr_p;
    o.pagerank_fraction = pr_fraction;
    o.ap.self_preference = self_pref;
    o.ap.damping = ap_damping;
    o.ap.seed = seed;
    if (!stopwords_path.empty()) o.text.stopwords = load_word_list(stopwords_path);
    if (!lemmas_path.empty()) o.text.lemmas = load_lemma_map(lemmas_path);

    const auto document = read_file(text_path);
    const auto seg = segment_text(document, o.text);
    if (seg.sentences.empty()) throw InputError("document has no sentences");
    const auto sg = build_sentence_graph(seg.vectors, seg.sentences, o.theta);
    if (!graph_out.empty()) save_sentence_graph(sg, graph_out, graph_out + ".sentences.json");
    const auto summary = summarize_graph(sg, o);

    json j = {{"schema_version", kSchemaVersion},
              {"method", std::string(to_string(o.method))},
              {"theta", o.theta},
              {"selected", summary.selected},
              {"sentences", summary.sentences},
              {"word_count", summary.word_count},
              {"n_sentences", summary.n_sentences}};
    if (word_budget) j["word_budget"] = *word_budget;
    emit(out_path, dump(j));
    return kOk;
  }

  int run_evaluate() {
    json j = {{"schema_version", kSchemaVersion}, {"metric", metric}};
    if (metric == "rouge") {
      std::vector<std::string> refs;
      for (const auto& r : references) refs.push_back(read_summary_text(r));
      const auto report = rouge1(read_summary_text(system_path), refs);
      auto score = [](const RougeScore& s) {
        return json{{"recall", s.recall}, {"precision", s.precision}, {"fscore", s.fscore}};
      };
      j["per_reference"] = json::array();
      for (const auto& s : report.per_reference) j["per_reference"].push_back(score(s));
      j.update(score(report.mean));
    } else if (metric == "coverage") {
      const auto system = read_ids(system_path);
      double cov = 0.0, dif = 0.0;
      j["per_reference"] = json::array();
      for (const auto& r : references) {
        const auto ratios = coverage_ratios(system, read_ids(r));
        j["per_reference"].push_back({{"r_cov", ratios.r_cov}, {"r_dif", ratios.r_dif}});
        cov += ratios.r_cov;
        dif += ratios.r_dif;
      }
      j["r_cov"] = cov / static_cast<double>(references.size());
      j["r_dif"] = dif / static_cast<double>(references.size());
    } else {
      throw InputError("unknown metric '" + metric + "' (expected rouge or coverage)");
    }
    emit(out_path, dump(j));
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return cli.app.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.app.exit(e);
    return kInputError;
  }
  try {
    return cli.run();
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefusal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
