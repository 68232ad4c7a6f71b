#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "dmc/graph.hpp"

namespace dmc {
namespace {

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> tokens;
  auto is_sep = [delimiter](char c) {
    if (delimiter == '\0') return c == ' ' || c == '\t' || c == ',' || c == '\r';
    return c == delimiter;
  };
  auto is_blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  std::size_t i = 0;
  while (i < line.size()) {
    if (delimiter == '\0') {
      while (i < line.size() && is_sep(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_sep(line[j])) ++j;
      tokens.push_back(line.substr(i, j - i));
      i = j;
    } else {
      std::size_t j = line.find(delimiter, i);
      if (j == std::string_view::npos) j = line.size();
      std::string_view tok = line.substr(i, j - i);
      while (!tok.empty() && is_blank(tok.front())) tok.remove_prefix(1);
      while (!tok.empty() && is_blank(tok.back())) tok.remove_suffix(1);
      tokens.push_back(tok);
      i = j + 1;
      if (j + 1 == line.size()) tokens.emplace_back();  // trailing delimiter
    }
  }
  return tokens;
}

bool parse_double(std::string_view tok, double& out) {
  std::string s(tok);
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return !s.empty() && end == s.c_str() + s.size();
}

}  // namespace

EdgeListLoad read_edge_list(std::istream& in, const EdgeListOptions& options) {
  GraphBuilder builder(options.weighted);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    if (view.empty() || view.front() == '#' || view.front() == '%') continue;
    const auto tokens = split(view, options.delimiter);
    if (tokens.empty()) continue;
    for (const auto& t : tokens)
      if (t.empty()) throw ParseError(line_no, "empty token");
    if (tokens.size() == 1) {
      builder.add_node(tokens[0]);
      continue;
    }
    if (tokens.size() > 3)
      throw ParseError(line_no, "expected `u v` or `u v w`, got " +
                                    std::to_string(tokens.size()) + " tokens");
    double weight = 1.0;
    if (tokens.size() == 3) {
      if (!parse_double(tokens[2], weight))
        throw ParseError(line_no, "invalid weight '" + std::string(tokens[2]) + "'");
      if (options.weighted && !(weight > 0.0 && std::isfinite(weight)))
        throw DataError("line " + std::to_string(line_no) + ": weight must be positive and finite");
    }
    builder.add_edge(tokens[0], tokens[1], weight);
  }
  EdgeListLoad result;
  result.duplicates_collapsed = builder.duplicates();
  result.self_loops_dropped = builder.self_loops();
  result.graph = std::move(builder).build();
  return result;
}

EdgeListLoad load_edge_list(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in, options);
}

// Each edge is written from its later endpoint, so labels first appear in
// index order and reading the file back restores the same node order. A node
// with no earlier neighbor gets a line of its own.
void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[32];
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) {
    const auto nbs = g.neighbors(u);
    if (nbs.empty() || nbs.front().node > u) out << g.label(u) << '\n';
    for (const auto& nb : nbs) {
      if (nb.node > u) break;
      out << g.label(nb.node) << ' ' << g.label(u);
      if (g.weighted()) {
        std::snprintf(buf, sizeof buf, "%.17g", nb.weight);
        out << ' ' << buf;
      }
      out << '\n';
    }
  }
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_edge_list(out, g);
}

}  // namespace dmc
