#include "cactuswp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "cactuswp/error.hpp"

namespace cactuswp {
namespace {

std::string out_of_range_message(long long id, std::size_t n) {
  return "vertex " + std::to_string(id) + " out of range for n=" + std::to_string(n);
}

std::string edge_text(Vertex u, Vertex v) { return std::to_string(u) + " " + std::to_string(v); }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

long long parse_integer(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line_no) + ": not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::kTooLarge, "vertex count " + std::to_string(vertex_count));
  }
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= vertex_count) throw Error(ErrorCode::kVertexOutOfRange, out_of_range_message(e.u, vertex_count));
    if (e.v >= vertex_count) throw Error(ErrorCode::kVertexOutOfRange, out_of_range_message(e.v, vertex_count));
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " + edge_text(dup->u, dup->v));
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : sorted) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  // Edges are sorted by (u, v), so appending in this order leaves every
  // neighbor list ascending: smaller neighbors arrive before larger ones.
  g.neighbors_.resize(2 * sorted.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : sorted) {
    g.neighbors_[cursor[e.u]++] = e.v;
    g.neighbors_[cursor[e.v]++] = e.u;
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::kVertexOutOfRange, out_of_range_message(v, vertex_count()));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto adj = neighbors(u);
  check_vertex(v);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph from_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    auto fields = split_fields(view);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 1) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected vertex count");
      }
      long long value = parse_integer(fields[0], line_no);
      if (value < 0 || static_cast<unsigned long long>(value) > std::numeric_limits<Vertex>::max()) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": invalid vertex count");
      }
      n = static_cast<std::size_t>(value);
      have_header = true;
      continue;
    }

    if (fields.size() != 2) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    long long u = parse_integer(fields[0], line_no);
    long long v = parse_integer(fields[1], line_no);
    for (long long id : {u, v}) {
      if (id < 0 || static_cast<unsigned long long>(id) >= n) {
        throw Error(ErrorCode::kVertexOutOfRange, out_of_range_message(id, n));
      }
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw Error(ErrorCode::kParse, "missing vertex count line");
  return Graph::from_edges(n, edges);
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return from_edge_list(in);
}

void to_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  to_edge_list(g, out);
  return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  to_edge_list(g, out);
  if (!out) throw Error(ErrorCode::kParse, "write failed for '" + path + "'");
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
}

}  // namespace cactuswp
