#include "gmds/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmds/errors.hpp"

namespace gmds {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

template <class T>
std::optional<T> parse_number(const std::string& s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Shortest representation that reads back to the same double.
std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::optional<std::size_t> n;
  double theta = 1.0;
  bool seen_theta = false;
  std::optional<WeightedGraph> graph;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (line[0] == '#') {
      const auto fields = split_fields(line.substr(1));
      if (fields.empty()) continue;
      if (fields[0] == "N" || fields[0] == "theta") {
        if (graph) throw ParseError(line_no, "header after first edge");
        if (fields.size() != 2) throw ParseError(line_no, "malformed #" + fields[0] + " header");
        if (fields[0] == "N") {
          if (n) throw ParseError(line_no, "repeated #N header");
          auto v = parse_number<std::size_t>(fields[1]);
          if (!v) throw ParseError(line_no, "bad vertex count '" + fields[1] + "'");
          n = *v;
        } else {
          if (seen_theta) throw ParseError(line_no, "repeated #theta header");
          auto v = parse_number<double>(fields[1]);
          if (!v || *v < 0.0) throw ParseError(line_no, "bad theta '" + fields[1] + "'");
          theta = *v;
          seen_theta = true;
        }
      }
      continue;
    }
    if (!n) throw ParseError(line_no, "edge before #N header");
    if (!graph) graph.emplace(*n, theta);

    const auto fields = split_fields(line);
    if (fields.size() != 4) throw ParseError(line_no, "expected 'i j w_ij w_ji'");
    auto u = parse_number<VertexId>(fields[0]);
    auto v = parse_number<VertexId>(fields[1]);
    auto w_uv = parse_number<double>(fields[2]);
    auto w_vu = parse_number<double>(fields[3]);
    if (!u || !v) throw ParseError(line_no, "bad vertex id");
    if (!w_uv || !w_vu) throw ParseError(line_no, "bad weight");
    try {
      graph->add_edge(*u, *v, *w_uv, *w_vu);
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!n) throw ParseError(line_no, "missing #N header");
  if (!graph) graph.emplace(*n, theta);
  return std::move(*graph);
}

void write_graph(const WeightedGraph& graph, std::ostream& out) {
  out << "#N " << graph.n_vertices() << '\n';
  out << "#theta " << format_double(graph.theta()) << '\n';
  for (const auto& e : graph.edges()) {
    out << e.u << '\t' << e.v << '\t' << format_double(e.w_uv) << '\t' << format_double(e.w_vu)
        << '\n';
  }
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_graph(in);
}

void save_graph(const WeightedGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_graph(graph, out);
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace gmds
