#include "mpd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

namespace mpd {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (parsed.tokens.empty() || parsed.tokens.front().front() == '#') continue;
    out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

template <typename Int>
bool to_int(std::string_view token, Int& value) {
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && end == token.data() + token.size();
}

int int_at(const Line& line, std::size_t i) {
  int value = 0;
  if (!to_int(line.tokens[i], value))
    fail(line, "expected an integer, got '" + std::string(line.tokens[i]) + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(line, "'" + std::string(line.tokens.front()) + "' takes " + std::to_string(n - 1) +
                   " fields");
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw InputError("graph file has no 'p' line");
  const Line& header = lines.front();
  if (header.tokens.front() != "p") fail(header, "expected 'p <n> <m>'");
  expect_arity(header, 3);
  const int n = int_at(header, 1);
  const int m = int_at(header, 2);
  if (n < 0 || m < 0) fail(header, "negative size");
  if (static_cast<std::size_t>(m) != lines.size() - 1) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() != "e") fail(line, "expected 'e <u> <v>'");
    expect_arity(line, 3);
    edges.push_back({int_at(line, 1), int_at(line, 2)});
  }
  return Graph::from_edges(n, edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

RestrictedSet parse_restricted(std::string_view text, Vertex universe) {
  RestrictedSet r(universe);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (is_space(text[i]) || text[i] == '\n' || text[i] == ',')) ++i;
    std::size_t j = i;
    while (j < text.size() && !(is_space(text[j]) || text[j] == '\n' || text[j] == ',')) ++j;
    if (j == i) break;
    const std::string_view token = text.substr(i, j - i);
    Vertex v = 0;
    if (!to_int(token, v)) throw InputError("bad restricted vertex id '" + std::string(token) + "'");
    r.insert(v);
    i = j;
  }
  return r;
}

std::string format_restricted(const RestrictedSet& r) {
  std::string out;
  for (Vertex v : r.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
  return out;
}

std::string format_solution(const MPDSolution& sol) {
  std::vector<PairedEdge> pairs = sol.pairs;
  std::sort(pairs.begin(), pairs.end(),
            [](const PairedEdge& a, const PairedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::ostringstream out;
  out << "beta " << sol.matched_number << '\n';
  out << "kfs " << sol.k << ' ' << sol.s << ' ' << sol.f << '\n';
  for (const auto& p : pairs) out << "pair " << p.u << ' ' << p.v << ' ' << to_string(p.cls) << '\n';
  return out.str();
}

std::vector<Edge> SolutionFile::edge_list() const {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.u, p.v});
  return out;
}

SolutionFile parse_solution(std::string_view text) {
  SolutionFile sol;
  bool seen_beta = false;
  bool seen_kfs = false;
  for (const Line& line : lines_of(text)) {
    const std::string_view key = line.tokens.front();
    if (key == "beta") {
      if (seen_beta) fail(line, "repeated 'beta'");
      if (line.tokens.size() == 4 && line.tokens[2] == "fmin") {
        sol.fmin = int_at(line, 3);
      } else {
        expect_arity(line, 2);
      }
      sol.beta = int_at(line, 1);
      seen_beta = true;
    } else if (key == "kfs") {
      if (seen_kfs) fail(line, "repeated 'kfs'");
      expect_arity(line, 4);
      sol.k = int_at(line, 1);
      sol.s = int_at(line, 2);
      sol.f = int_at(line, 3);
      seen_kfs = true;
    } else if (key == "pair") {
      expect_arity(line, 4);
      PairedEdge p;
      p.u = int_at(line, 1);
      p.v = int_at(line, 2);
      const std::string_view cls = line.tokens[3];
      if (cls == "full")
        p.cls = EdgeClass::Full;
      else if (cls == "semi")
        p.cls = EdgeClass::Semi;
      else if (cls == "free")
        p.cls = EdgeClass::Free;
      else
        fail(line, "unknown pair class '" + std::string(cls) + "'");
      sol.pairs.push_back(p);
    } else {
      fail(line, "unknown record '" + std::string(key) + "'");
    }
  }
  if (!seen_beta || !seen_kfs) throw InputError("solution file needs 'beta' and 'kfs' lines");
  return sol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace mpd
