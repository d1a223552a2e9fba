#include "modcert/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "modcert/errors.hpp"

namespace modcert {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  long long header_n = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string tag;
      if (hs >> tag && tag == "n") {
        if (!(hs >> header_n) || header_n <= 0) parse_fail(line_no, "bad '#n' header");
      }
      continue;
    }
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) parse_fail(line_no, "expected two vertex indices");
    std::string extra;
    if (ls >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
    if (u < 0 || v < 0) parse_fail(line_no, "negative vertex index");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
  }
  long long n = header_n > 0 ? header_n : max_index + 1;
  if (n <= 0) parse_fail(line_no == 0 ? 1 : line_no, "no edges and no '#n' header");
  return Graph::build(static_cast<int>(n), edges);
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << write_edge_list(g);
}

}  // namespace modcert
