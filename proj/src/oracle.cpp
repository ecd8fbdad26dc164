#include "hypersquare/oracle.hpp"

#include <algorithm>

namespace hypersquare {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::timeout: return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit) : end_(Clock::now() + limit) {}
  /// Polls the clock every 4096 calls.
  bool expired(std::uint64_t nodes) {
    if ((nodes & 4095) == 0) hit_ = hit_ || Clock::now() >= end_;
    return hit_;
  }
  bool hit() const { return hit_; }

 private:
  Clock::time_point end_;
  bool hit_ = false;
};

VertexSet triple_successors(const Hypergraph3& h, int p, int q, int r, const VertexSet& pool) {
  VertexSet s = pool;
  s.intersect_words(h.pair_words(p, q)).intersect_words(h.pair_words(p, r));
  s.intersect_words(h.pair_words(q, r));
  return s;
}

}  // namespace

CycleOracleResult oracle_has_squared_hamiltonian(const Hypergraph3& h,
                                                 std::chrono::milliseconds time_limit) {
  CycleOracleResult res;
  const int n = h.n();
  if (n < 5) {
    res.verdict = Verdict::no;
    return res;
  }
  // Every vertex of a squared cycle sits in a tetrahedron.
  VertexSet in_k4(n);
  for (const auto& k : enumerate_k4s(h))
    for (int v : k) in_k4.insert(v);
  if (in_k4.count() != n) {
    res.verdict = Verdict::no;
    return res;
  }

  Deadline deadline(time_limit);
  std::vector<int> seq{0};
  VertexSet unused = VertexSet::all(n);
  unused.erase(0);
  VertexSet closers(n);  // candidates for the final vertex

  auto closes = [&]() {
    const int x = seq[static_cast<std::size_t>(n - 3)], y = seq[static_cast<std::size_t>(n - 2)],
              z = seq[static_cast<std::size_t>(n - 1)];
    return is_k4(h, x, y, z, 0) && is_k4(h, y, z, 0, seq[1]) && is_k4(h, z, 0, seq[1], seq[2]);
  };

  // Each unused vertex still needs a tetrahedron inside unused + the open ends.
  auto still_coverable = [&]() {
    const std::size_t k = seq.size();
    VertexSet pool = unused;
    for (int v : {seq[0], seq[1], seq[2], seq[k - 3], seq[k - 2], seq[k - 1]}) pool.insert(v);
    bool ok = true;
    unused.for_each([&](int w) {
      if (!ok) return;
      VertexSet nb = pool;
      nb.erase(w);
      bool found = false;
      for (int a = nb.first(); a != -1 && !found; a = nb.next(a)) {
        VertexSet b_set = nb;
        b_set.intersect_words(h.pair_words(w, a));
        for (int b = b_set.next(a); b != -1 && !found; b = b_set.next(b)) {
          VertexSet c_set = b_set;
          c_set.intersect_words(h.pair_words(w, b)).intersect_words(h.pair_words(a, b));
          found = c_set.next(b) != -1;
        }
      }
      ok = found;
    });
    return ok;
  };

  auto dfs = [&](auto&& self) -> bool {
    ++res.nodes;
    if (deadline.expired(res.nodes)) return false;
    const std::size_t k = seq.size();
    if (k == static_cast<std::size_t>(n)) return seq[1] < seq.back() && closes();
    VertexSet cand(n);
    if (k == 1) {
      cand = unused;
    } else if (k == 2) {
      cand = unused;
      cand.intersect_words(h.pair_words(seq[0], seq[1]));
    } else {
      cand = triple_successors(h, seq[k - 3], seq[k - 2], seq[k - 1], unused);
      if (k + 1 == static_cast<std::size_t>(n)) {
        cand &= closers;
      } else if (!unused.intersects(closers)) {
        return false;
      }
      if (k >= 4 && (k & 1) == 0 && !still_coverable()) return false;
    }
    for (int u = cand.first(); u != -1; u = cand.next(u)) {
      seq.push_back(u);
      unused.erase(u);
      if (k == 2) {
        // Window (z, 0, v1, v2) pins the last vertex; orientation wants z > v1.
        closers = triple_successors(h, seq[0], seq[1], seq[2], VertexSet::all(n));
        for (int v = 0; v <= seq[1]; ++v) closers.erase(v);
      }
      if (self(self)) return true;
      unused.insert(u);
      seq.pop_back();
      if (deadline.hit()) return false;
    }
    return false;
  };

  if (dfs(dfs)) {
    res.verdict = Verdict::yes;
    res.witness = VertexSeq{seq, true};
  } else {
    res.verdict = deadline.hit() ? Verdict::timeout : Verdict::no;
  }
  return res;
}

TilingOracleResult oracle_has_perfect_k4_tiling(const Hypergraph3& h,
                                                std::chrono::milliseconds time_limit) {
  TilingOracleResult res;
  const int n = h.n();
  if (n % 4 != 0) {
    res.verdict = Verdict::no;
    return res;
  }
  const auto k4s = enumerate_k4s(h);
  std::vector<std::vector<int>> by_vertex(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < k4s.size(); ++i)
    for (int v : k4s[i]) by_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

  Deadline deadline(time_limit);
  VertexSet uncovered = VertexSet::all(n);
  std::vector<int> chosen;
  auto dfs = [&](auto&& self) -> bool {
    ++res.nodes;
    if (deadline.expired(res.nodes)) return false;
    const int v = uncovered.first();
    if (v < 0) return true;
    for (int idx : by_vertex[static_cast<std::size_t>(v)]) {
      const auto& k = k4s[static_cast<std::size_t>(idx)];
      if (!std::all_of(k.begin(), k.end(), [&](int u) { return uncovered.contains(u); })) continue;
      for (int u : k) uncovered.erase(u);
      chosen.push_back(idx);
      if (self(self)) return true;
      chosen.pop_back();
      for (int u : k) uncovered.insert(u);
      if (deadline.hit()) return false;
    }
    return false;
  };
  if (dfs(dfs)) {
    res.verdict = Verdict::yes;
    for (int idx : chosen) res.tiles.push_back(k4s[static_cast<std::size_t>(idx)]);
  } else {
    res.verdict = deadline.hit() ? Verdict::timeout : Verdict::no;
  }
  return res;
}

}  // namespace hypersquare
