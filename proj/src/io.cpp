#include "edqc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace edqc {

namespace {

// Splits off the next whitespace-delimited token; empty view when exhausted.
std::string_view next_token(std::string_view& rest) {
  std::size_t start = rest.find_first_not_of(" \t\r");
  if (start == std::string_view::npos) {
    rest = {};
    return {};
  }
  std::size_t end = rest.find_first_of(" \t\r", start);
  std::string_view token = rest.substr(start, end == std::string_view::npos ? end : end - start);
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return token;
}

std::uint64_t parse_label(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line_no, "vertex label overflows the supported id range");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, "expected an integer vertex label, got '" + std::string(token) + "'");
  return value;
}

bool is_comment_or_blank(std::string_view line) {
  std::size_t start = line.find_first_not_of(" \t\r");
  if (start == std::string_view::npos) return true;
  return line[start] == '#' || line[start] == '%';
}

std::pair<std::uint64_t, std::uint64_t> parse_pair(std::string_view line, std::size_t line_no) {
  std::string_view rest = line;
  std::string_view a = next_token(rest);
  std::string_view b = next_token(rest);
  if (a.empty() || b.empty()) throw ParseError(line_no, "expected two vertex labels");
  return {parse_label(a, line_no), parse_label(b, line_no)};
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    edges.push_back(parse_pair(line, line_no));
  }
  return Graph::from_edges(edges);
}

Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw ParseError(1, "missing %%MatrixMarket header");
  ++line_no;

  // Size line: first non-comment line, "rows cols [nnz]".
  std::uint64_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::string_view rest = line;
    std::string_view r = next_token(rest);
    std::string_view c = next_token(rest);
    if (r.empty() || c.empty()) throw ParseError(line_no, "expected a size line");
    rows = parse_label(r, line_no);
    std::uint64_t cols = parse_label(c, line_no);
    if (rows != cols) throw ParseError(line_no, "matrix is not square");
    break;
  }
  if (rows >= std::uint64_t(1) << 32)
    throw ParseError(line_no, "vertex count exceeds the supported id range");

  std::uint32_t n = static_cast<std::uint32_t>(rows);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto [i, j] = parse_pair(line, line_no);
    if (i < 1 || j < 1 || i > rows || j > rows)
      throw ParseError(line_no, "entry index outside the declared dimension");
    edges.emplace_back(static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1));
  }
  return Graph::from_edges_with_universe(n, edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0) return load_matrix_market(in);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

void write_matrix_market(const Graph& g, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.vertex_count() << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v < u) out << (u + 1) << ' ' << (v + 1) << '\n';
}

}  // namespace edqc
