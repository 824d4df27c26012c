#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "edqc/graph.hpp"

namespace edqc {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Plain edge-list text: lines starting with '#' or '%' are comments, data
// lines carry two whitespace-separated non-negative integer labels (extra
// columns, e.g. weights, are ignored).
Graph load_edge_list(std::istream& in);

// MatrixMarket coordinate format ("%%MatrixMarket ..." header, square size
// line); entries are treated as an edge list with 1-based indices. The
// declared dimension fixes the vertex universe, so isolated vertices survive.
Graph load_matrix_market(std::istream& in);

// Sniffs the header line and dispatches to the matching loader.
Graph load_graph(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_matrix_market(const Graph& g, std::ostream& out);

}  // namespace edqc
