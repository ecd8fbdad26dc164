#include "hypersquare/certify.hpp"

#include <algorithm>

#include "hypersquare/errors.hpp"

namespace hypersquare {

namespace {

bool all_distinct_in_range(const Hypergraph3& h, std::span<const int> vs) {
  std::vector<char> seen(static_cast<std::size_t>(h.n()), 0);
  for (int v : vs) {
    if (v < 0 || v >= h.n() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool windows_ok(const Hypergraph3& h, std::span<const int> s) {
  if (s.size() == 3) return h.has_edge(s[0], s[1], s[2]);
  for (std::size_t i = 0; i + 3 < s.size(); ++i)
    if (!is_k4(h, s[i], s[i + 1], s[i + 2], s[i + 3])) return false;
  return true;
}

void require_open(const VertexSeq& s, const char* what) {
  if (s.closed) throw ArgumentError(std::string(what) + " expects an open sequence");
  if (s.size() < 3) throw ArgumentError(std::string(what) + " needs at least 3 vertices");
}

}  // namespace

bool is_squared_path(const Hypergraph3& h, const VertexSeq& s) {
  require_open(s, "is_squared_path");
  return all_distinct_in_range(h, s.vertices) && windows_ok(h, s.vertices);
}

bool is_squared_walk(const Hypergraph3& h, const VertexSeq& s) {
  require_open(s, "is_squared_walk");
  // is_k4 / has_edge reject windows with repeated or out-of-range vertices.
  return windows_ok(h, s.vertices);
}

bool is_squared_cycle(const Hypergraph3& h, const VertexSeq& s) {
  if (!s.closed) throw ArgumentError("is_squared_cycle expects a closed sequence");
  if (s.size() < 5) throw ArgumentError("squared cycles need length at least 5");
  if (!all_distinct_in_range(h, s.vertices)) return false;
  const auto& v = s.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!is_k4(h, v[i], v[(i + 1) % n], v[(i + 2) % n], v[(i + 3) % n])) return false;
  return true;
}

bool is_squared_v_walk(const Hypergraph3& h, int v, const Triple& abc, const Triple& xyz,
                       std::span<const int> interior) {
  if (!h.has_edge(abc[0], abc[1], abc[2])) throw PreconditionError("abc is not an edge");
  if (!h.has_edge(xyz[0], xyz[1], xyz[2])) throw PreconditionError("xyz is not an edge");
  std::vector<int> seq(abc.begin(), abc.end());
  seq.insert(seq.end(), interior.begin(), interior.end());
  seq.insert(seq.end(), xyz.begin(), xyz.end());
  if (std::find(seq.begin(), seq.end(), v) != seq.end())
    throw PreconditionError("v occurs in the walk");

  for (std::size_t i = 0; i + 2 < seq.size(); ++i)
    if (!h.has_edge(seq[i], seq[i + 1], seq[i + 2])) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!h.has_edge(v, seq[i], seq[i + 1])) return false;
    if (i + 2 < seq.size() && !h.has_edge(v, seq[i], seq[i + 2])) return false;
  }
  return true;
}

bool is_v_absorber(const Hypergraph3& h, int v, const SixTuple& t) noexcept {
  std::array<int, 7> seven{t[0], t[1], t[2], v, t[3], t[4], t[5]};
  if (!all_distinct_in_range(h, seven)) return false;
  const std::array<int, 6> plain = t;
  return windows_ok(h, plain) && windows_ok(h, seven);
}

bool certify_hamiltonian(const Hypergraph3& h, const VertexSeq& s) {
  return is_squared_cycle(h, s) && s.size() == static_cast<std::size_t>(h.n());
}

}  // namespace hypersquare
