#include "hypersquare/text_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "hypersquare/errors.hpp"

namespace hypersquare {

namespace {

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

bool to_int(std::string_view tok, long long& v) {
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

Hypergraph3 read_hypergraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<Triple> edges;
  std::set<Triple> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = split(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !to_int(tok[1], n) || n < 0 || n > 100000)
        throw ParseError(lineno, "expected header \"n <N>\"");
      continue;
    }
    long long v[3];
    if (tok.size() != 3 || !to_int(tok[0], v[0]) || !to_int(tok[1], v[1]) || !to_int(tok[2], v[2]))
      throw ParseError(lineno, "expected \"i j k\"");
    if (v[0] < 0 || v[2] >= n) throw ParseError(lineno, "vertex out of range");
    if (!(v[0] < v[1] && v[1] < v[2])) throw ParseError(lineno, "triple must satisfy i < j < k");
    const Triple t{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
    if (!seen.insert(t).second) throw ParseError(lineno, "duplicate triple");
    edges.push_back(t);
  }
  if (n < 0) throw ParseError(lineno + 1, "missing header \"n <N>\"");
  return Hypergraph3(static_cast<int>(n), edges);
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h) {
  out << "n " << h.n() << '\n';
  for (const auto& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

VertexSeq parse_sequence(std::string_view text) {
  auto tok = split(text);
  while (!tok.empty() && tok.back().empty()) tok.pop_back();
  VertexSeq s;
  std::size_t i = 0;
  if (!tok.empty() && tok[0] == "C") {
    s.closed = true;
    i = 1;
  }
  for (; i < tok.size(); ++i) {
    long long v;
    if (!to_int(tok[i], v) || v < 0 || v > 1'000'000) throw ParseError(1, "bad vertex id \"" + std::string(tok[i]) + "\"");
    s.vertices.push_back(static_cast<int>(v));
  }
  if (s.vertices.empty()) throw ParseError(1, "empty sequence");
  return s;
}

std::string format_sequence(const VertexSeq& s) {
  std::ostringstream out;
  if (s.closed) out << "C";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) out << (i || s.closed ? " " : "") << s.vertices[i];
  return out.str();
}

}  // namespace hypersquare
