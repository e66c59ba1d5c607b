#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

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
#include "gmds/threshold_sum.hpp"

namespace py = pybind11;
using namespace gmds;

namespace {

BpParams bp_params(std::size_t max_sweeps, double tol, double damping, std::uint64_t seed,
                   int grid_divisions) {
  BpParams p;
  p.max_sweeps = max_sweeps;
  p.tol = tol;
  p.damping = damping;
  p.seed = seed;
  p.grid_divisions = grid_divisions;
  return p;
}

py::dict rho0_dict(const Rho0Estimate& e) {
  py::dict d;
  d["rho0"] = e.rho0;
  d["beta_at_zero"] = e.beta_at_zero;
  d["extrapolated"] = e.extrapolated;
  return d;
}

py::dict rouge_dict(const RougeScore& s) {
  py::dict d;
  d["recall"] = s.recall;
  d["precision"] = s.precision;
  d["fscore"] = s.fscore;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gmds, m) {
  m.doc() = "Generalized minimum dominating set library";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_RuntimeError);
  (void)input_error;

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init<std::size_t, double>(), py::arg("n_vertices"), py::arg("theta") = 1.0)
      .def("add_edge", &WeightedGraph::add_edge, py::arg("u"), py::arg("v"), py::arg("w_uv"),
           py::arg("w_vu"))
      .def_property_readonly("n_vertices", &WeightedGraph::n_vertices)
      .def_property_readonly("n_edges", &WeightedGraph::n_edges)
      .def_property_readonly("theta", &WeightedGraph::theta)
      .def("edges",
           [](const WeightedGraph& g) {
             std::vector<std::tuple<VertexId, VertexId, double, double>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w_uv, e.w_vu);
             return out;
           })
      .def("has_edge", &WeightedGraph::has_edge)
      .def("residual_theta", &WeightedGraph::residual_theta)
      .def("occupied", &WeightedGraph::occupied)
      .def("occupy", &WeightedGraph::occupy)
      .def("__repr__", [](const WeightedGraph& g) {
        return "WeightedGraph(n_vertices=" + std::to_string(g.n_vertices()) +
               ", n_edges=" + std::to_string(g.n_edges()) + ")";
      });

  py::class_<DominatingSet>(m, "DominatingSet")
      .def_readonly("members", &DominatingSet::members)
      .def_readonly("n_vertices", &DominatingSet::n_vertices)
      .def_property_readonly("size", &DominatingSet::size)
      .def_property_readonly("relative_size", &DominatingSet::relative_size);

  py::class_<BpdResult>(m, "BpdResult")
      .def_readonly("set", &BpdResult::set)
      .def_readonly("order", &BpdResult::order)
      .def_readonly("rounds", &BpdResult::rounds);

  py::class_<ThermoDensities>(m, "ThermoDensities")
      .def_readonly("beta", &ThermoDensities::beta)
      .def_readonly("rho", &ThermoDensities::rho)
      .def_readonly("f", &ThermoDensities::f)
      .def_readonly("s", &ThermoDensities::s)
      .def_readonly("converged", &ThermoDensities::converged)
      .def_readonly("residual", &ThermoDensities::residual)
      .def_readonly("sweeps", &ThermoDensities::sweeps);

  py::class_<Summary>(m, "Summary")
      .def_readonly("selected", &Summary::selected)
      .def_readonly("sentences", &Summary::sentences)
      .def_readonly("word_count", &Summary::word_count)
      .def_readonly("n_sentences", &Summary::n_sentences);

  m.def(
      "is_satisfying",
      [](const WeightedGraph& g, const std::vector<VertexId>& members) {
        return is_satisfying(g, Configuration::from_members(g.n_vertices(), members));
      },
      py::arg("graph"), py::arg("members"));

  m.def(
      "generate_er",
      [](std::size_t n, double c, const std::string& weights, std::uint64_t seed, double theta) {
        return generate_er(n, c, named_weight_distribution(weights, theta), seed, theta);
      },
      py::arg("n"), py::arg("c"), py::arg("weights") = "paper", py::arg("seed") = 1,
      py::arg("theta") = 1.0);
  m.def("load_graph", &load_graph, py::arg("path"));
  m.def("save_graph", &save_graph, py::arg("graph"), py::arg("path"));

  m.def(
      "threshold_exceed_sum",
      [](const std::vector<std::tuple<double, double, double>>& cs, double theta_res,
         double grid) {
        std::vector<Contributor> v;
        for (const auto& [occ, emp, w] : cs) v.push_back({occ, emp, w});
        return threshold_exceed_sum(v, theta_res, grid);
      },
      py::arg("contributors"), py::arg("theta_res"), py::arg("grid") = 0.1);

  m.def(
      "run_bp",
      [](const WeightedGraph& g, double beta, std::size_t max_sweeps, double tol, double damping,
         std::uint64_t seed, int grid_divisions) {
        const auto r = run_bp(g, beta, bp_params(max_sweeps, tol, damping, seed, grid_divisions));
        std::vector<double> q1(g.n_vertices());
        for (VertexId v = 0; v < g.n_vertices(); ++v) q1[v] = marginal(r.state, v).second;
        return std::make_pair(densities(r.state, r.run), q1);
      },
      py::arg("graph"), py::arg("beta"), py::arg("max_sweeps") = 1000, py::arg("tol") = 1e-7,
      py::arg("damping") = 0.0, py::arg("seed") = 1, py::arg("grid_divisions") = 10,
      "Returns (densities, per-vertex occupation marginals).");

  m.def(
      "scan_beta",
      [](const WeightedGraph& g, const std::vector<double>& betas, std::size_t max_sweeps,
         double tol, std::uint64_t seed) {
        return scan_beta(g, betas, bp_params(max_sweeps, tol, 0.0, seed, 10));
      },
      py::arg("graph"), py::arg("betas"), py::arg("max_sweeps") = 1000, py::arg("tol") = 1e-7,
      py::arg("seed") = 1);

  m.def(
      "estimate_rho0",
      [](const WeightedGraph& g, const std::vector<double>& betas, std::size_t max_sweeps,
         double tol, std::uint64_t seed) {
        return rho0_dict(estimate_rho0(g, betas, bp_params(max_sweeps, tol, 0.0, seed, 10)));
      },
      py::arg("graph"), py::arg("betas"), py::arg("max_sweeps") = 500, py::arg("tol") = 1e-6,
      py::arg("seed") = 1);

  m.def(
      "bpd_solve",
      [](const WeightedGraph& g, double beta, double frac, std::size_t sweeps,
         std::uint64_t seed) {
        BpdConfig c;
        c.beta = beta;
        c.occupy_fraction = frac;
        c.bp_sweeps_per_round = sweeps;
        c.seed = seed;
        return bpd_run(g, c);
      },
      py::arg("graph"), py::arg("beta") = 8.0, py::arg("frac") = 0.01, py::arg("sweeps") = 10,
      py::arg("seed") = 1);

  m.def("exact_mds", &exact_mds, py::arg("graph"));
  m.def(
      "exact_thermo",
      [](const WeightedGraph& g, double beta) {
        const auto t = exact_thermo(g, beta);
        py::dict d;
        d["ln_z"] = t.ln_z;
        d["q1"] = t.q1;
        d["rho"] = t.rho;
        d["f"] = t.f;
        d["s"] = t.s;
        d["n_satisfying"] = t.n_satisfying;
        return d;
      },
      py::arg("graph"), py::arg("beta"));

  auto pop_params = [](std::size_t pop_size, std::size_t equilibration, std::size_t per_beta,
                       std::size_t samples, std::uint64_t seed) {
    PopulationParams p;
    p.pop_size = pop_size;
    p.equilibration_sweeps = equilibration;
    p.sweeps_per_beta = per_beta;
    p.samples = samples;
    p.seed = seed;
    return p;
  };
  m.def(
      "ensemble_scan",
      [pop_params](double c, const std::vector<double>& betas, const std::string& weights,
                   double theta, std::size_t pop_size, std::size_t equilibration,
                   std::size_t per_beta, std::size_t samples, std::uint64_t seed) {
        const auto rows =
            ensemble_scan(c, named_weight_distribution(weights, theta), betas,
                          pop_params(pop_size, equilibration, per_beta, samples, seed), theta);
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["beta"] = r.densities.beta;
          d["rho"] = r.densities.rho;
          d["rho_err"] = r.rho_err;
          d["f"] = r.densities.f;
          d["f_err"] = r.f_err;
          d["s"] = r.densities.s;
          d["s_err"] = r.s_err;
          out.append(d);
        }
        return out;
      },
      py::arg("c"), py::arg("betas"), py::arg("weights") = "paper", py::arg("theta") = 1.0,
      py::arg("pop_size") = 100000, py::arg("equilibration") = 1000, py::arg("sweeps_per_beta") = 200,
      py::arg("samples") = 10000, py::arg("seed") = 1);
  m.def(
      "rho0_curve",
      [pop_params](const std::vector<double>& cs, const std::vector<double>& betas,
                   const std::string& weights, double theta, std::size_t pop_size,
                   std::size_t equilibration, std::size_t per_beta, std::size_t samples,
                   std::uint64_t seed) {
        const auto pts =
            rho0_curve(cs, named_weight_distribution(weights, theta), betas,
                       pop_params(pop_size, equilibration, per_beta, samples, seed), theta);
        py::list out;
        for (const auto& p : pts) {
          auto d = rho0_dict(p.estimate);
          d["c"] = p.mean_degree;
          out.append(d);
        }
        return out;
      },
      py::arg("cs"), py::arg("betas"), py::arg("weights") = "paper", py::arg("theta") = 1.0,
      py::arg("pop_size") = 100000, py::arg("equilibration") = 1000, py::arg("sweeps_per_beta") = 200,
      py::arg("samples") = 10000, py::arg("seed") = 1);

  m.def(
      "segment_text",
      [](const std::string& text) {
        const auto seg = segment_text(text, TextOptions::defaults());
        py::list vectors;
        for (const auto& v : seg.vectors) vectors.append(v.counts);
        return py::make_tuple(seg.sentences, vectors);
      },
      py::arg("text"), "Returns (sentences, per-sentence [(term, count)] lists).");

  m.def(
      "summarize",
      [](const std::string& text, const std::string& method, double theta, double beta,
         std::optional<std::size_t> word_budget, double p, double fraction, double self_pref,
         std::uint64_t seed) {
        SummarizeOptions o;
        o.method = parse_summary_method(method);
        o.theta = theta;
        o.bpd.beta = beta;
        o.bpd.seed = seed;
        o.word_budget = word_budget;
        o.pagerank_p = p;
        o.pagerank_fraction = fraction;
        o.ap.self_preference = self_pref;
        o.ap.seed = seed;
        return summarize(text, o);
      },
      py::arg("text"), py::arg("method") = "bpd", py::arg("theta") = 1.0, py::arg("beta") = 8.0,
      py::arg("word_budget") = py::none(), py::arg("p") = kDefaultJumpProbability,
      py::arg("fraction") = 0.25, py::arg("self_pref") = 0.0, py::arg("seed") = 1);

  m.def(
      "pagerank",
      [](const WeightedGraph& g, double p) { return pagerank(g, p).scores; }, py::arg("graph"),
      py::arg("p") = kDefaultJumpProbability);
  m.def(
      "affinity_propagation",
      [](const WeightedGraph& g, double self_pref, double damping) {
        ApParams p;
        p.self_preference = self_pref;
        p.damping = damping;
        return affinity_propagation(g, p).exemplars;
      },
      py::arg("graph"), py::arg("self_pref") = 0.0, py::arg("damping") = 0.5);

  m.def(
      "coverage_ratios",
      [](const std::vector<std::size_t>& system, const std::vector<std::size_t>& reference) {
        const auto r = coverage_ratios(system, reference);
        return py::make_tuple(r.r_cov, r.r_dif);
      },
      py::arg("system"), py::arg("reference"));
  m.def(
      "rouge1",
      [](const std::string& system, const std::vector<std::string>& references) {
        const auto r = rouge1(system, references);
        py::dict d = rouge_dict(r.mean);
        py::list per;
        for (const auto& s : r.per_reference) per.append(rouge_dict(s));
        d["per_reference"] = per;
        return d;
      },
      py::arg("system"), py::arg("references"));
}
