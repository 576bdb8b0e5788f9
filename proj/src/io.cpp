#include "qmis/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qmis/errors.hpp"

namespace qmis {

namespace {

// Splits text into lines, tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const auto end = text_.find('\n', pos_);
    const auto stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(pos_, stop - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = stop + 1;
    ++lineno_;
    return true;
  }

  std::size_t lineno() const { return lineno_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t lineno_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t to_count(std::string_view tok, std::size_t lineno) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

Edge checked_edge(std::size_t u, std::size_t v, std::size_t n, std::size_t lineno) {
  if (u >= n || v >= n) throw ParseError(lineno, "edge endpoint out of range");
  if (u == v) throw ParseError(lineno, "self-loop");
  return {static_cast<node_t>(u), static_cast<node_t>(v)};
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  while (reader.next(line)) {
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(reader.lineno(), "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(reader.lineno(), "expected 'p edge <n> <m>'");
      }
      n = to_count(tok[2], reader.lineno());
      declared = to_count(tok[3], reader.lineno());
      have_header = true;
      edges.reserve(declared);
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(reader.lineno(), "edge line before problem line");
      if (tok.size() != 3) throw ParseError(reader.lineno(), "expected 'e <u> <v>'");
      const std::size_t u = to_count(tok[1], reader.lineno());
      const std::size_t v = to_count(tok[2], reader.lineno());
      if (u == 0 || v == 0) throw ParseError(reader.lineno(), "DIMACS endpoints are 1-based");
      edges.push_back(checked_edge(u - 1, v - 1, n, reader.lineno()));
    } else {
      throw ParseError(reader.lineno(), "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(reader.lineno(), "missing 'p edge' line");
  if (edges.size() != declared) {
    throw ParseError(reader.lineno(), "header declares " + std::to_string(declared) +
                                          " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  while (reader.next(line)) {
    const auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() != 2) throw ParseError(reader.lineno(), "expected two integers");
    const std::size_t a = to_count(tok[0], reader.lineno());
    const std::size_t b = to_count(tok[1], reader.lineno());
    if (!have_header) {
      n = a;
      declared = b;
      have_header = true;
      edges.reserve(declared);
    } else {
      edges.push_back(checked_edge(a, b, n, reader.lineno()));
    }
  }
  if (!have_header) throw ParseError(reader.lineno(), "missing 'n m' header");
  if (edges.size() != declared) {
    throw ParseError(reader.lineno(), "header declares " + std::to_string(declared) +
                                          " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  while (reader.next(line)) {
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "c" || tok[0] == "p") return GraphFormat::dimacs;
    if (tok[0].front() == '#') continue;
    return GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  return parse_graph(text, detect_format(text));
}

}  // namespace qmis
