#include "hypersquare/absorber.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hypersquare/errors.hpp"

namespace hypersquare {

VertexSet AbsorberFamily::vertex_set(int n) const {
  VertexSet s(n);
  for (const auto& t : tuples)
    for (int v : t) s.insert(v);
  return s;
}

std::vector<SixTuple> enumerate_v_absorbers(const Hypergraph3& h, int v, const VertexSet& exclude,
                                            std::size_t limit, std::uint64_t seed) {
  std::vector<SixTuple> out;
  if (v < 0 || v >= h.n()) throw ArgumentError("vertex out of range");
  if (limit == 0) return out;
  std::mt19937_64 rng(seed);
  VertexSet free = VertexSet::all(h.n()) - exclude;
  free.erase(v);

  SixTuple t{};
  auto pw = [&](int a, int b) { return h.pair_words(a, b); };
  // Candidate bitset for level `k`, given t[0..k-1].
  auto candidates = [&](int k) {
    VertexSet s = free;
    const int a = t[0], b = t[1], c = t[2], d = t[3], e = t[4];
    switch (k) {
      case 0: break;
      case 1: s.intersect_words(pw(v, a)); break;
      case 2: s.intersect_words(pw(a, b)).intersect_words(pw(a, v)).intersect_words(pw(b, v)); break;
      case 3:
        s.intersect_words(pw(a, b)).intersect_words(pw(a, c)).intersect_words(pw(b, c));
        s.intersect_words(pw(b, v)).intersect_words(pw(c, v));
        break;
      case 4:
        s.intersect_words(pw(b, c)).intersect_words(pw(b, d)).intersect_words(pw(c, d));
        s.intersect_words(pw(c, v)).intersect_words(pw(d, v));
        break;
      default:
        s.intersect_words(pw(c, d)).intersect_words(pw(c, e)).intersect_words(pw(d, e));
        s.intersect_words(pw(d, v)).intersect_words(pw(e, v));
        break;
    }
    auto list = s.to_vector();
    std::shuffle(list.begin(), list.end(), rng);
    return list;
  };

  auto dfs = [&](auto&& self, int k) -> bool {
    if (k == 6) {
      out.push_back(t);
      return out.size() >= limit;
    }
    for (int u : candidates(k)) {
      t[static_cast<std::size_t>(k)] = u;
      free.erase(u);
      const bool done = self(self, k + 1);
      free.insert(u);
      if (done) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return out;
}

int absorber_target(const Config& cfg, int n) {
  const double want = 2.0 * cfg.theta_star * cfg.theta_star * n;
  return std::max(1, static_cast<int>(std::ceil(want - 1e-9)));
}

AbsorberFamily build_absorber_family(const Hypergraph3& h, const Reservoir& r, const Config& cfg) {
  return build_absorber_family(h, r, cfg, absorber_target(cfg, h.n()));
}

AbsorberFamily build_absorber_family(const Hypergraph3& h, const Reservoir& r, const Config& cfg,
                                     int target) {
  cfg.validate();
  const int n = h.n();
  AbsorberFamily fam;
  fam.target = target;
  std::vector<int> owned(static_cast<std::size_t>(n), 0);
  VertexSet in_family(n), stalled(n);
  const std::int64_t max_iter = 4LL * n * std::max(target, 1) + 16;

  // Family vertices stay within half of V so joins and the cover have room.
  const std::size_t max_tuples = static_cast<std::size_t>(std::max(1, n / kFamilyVertexDivisor));

  for (std::int64_t iter = 0; iter < max_iter && fam.tuples.size() < max_tuples; ++iter) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in_family.contains(v) || stalled.contains(v) || owned[static_cast<std::size_t>(v)] >= target)
        continue;
      if (pick < 0 || owned[static_cast<std::size_t>(v)] < owned[static_cast<std::size_t>(pick)]) pick = v;
    }
    if (pick < 0) break;
    const auto found = enumerate_v_absorbers(h, pick, in_family | r.members, 1,
                                             derive_seed(cfg.seed, static_cast<std::uint64_t>(iter)));
    if (found.empty()) {
      stalled.insert(pick);
      continue;
    }
    const SixTuple& t = found.front();
    fam.tuples.push_back(t);
    for (int u : t) in_family.insert(u);
    for (int u = 0; u < n; ++u)
      if (!in_family.contains(u) && is_v_absorber(h, u, t)) ++owned[static_cast<std::size_t>(u)];
  }

  fam.per_vertex_index.assign(static_cast<std::size_t>(n), {});
  for (int u = 0; u < n; ++u)
    for (std::size_t i = 0; i < fam.tuples.size(); ++i)
      if (is_v_absorber(h, u, fam.tuples[i]))
        fam.per_vertex_index[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
  for (int u = 0; u < n; ++u)
    if (!in_family.contains(u) && owned[static_cast<std::size_t>(u)] < target) fam.degraded = true;
  return fam;
}

VertexSeq build_absorbing_path(const Hypergraph3& h, const AbsorberFamily& f, const Reservoir& r,
                               const Config& cfg) {
  if (f.tuples.empty()) throw ArgumentError("absorbing path needs a nonempty family");
  VertexSeq path;
  path.vertices.assign(f.tuples[0].begin(), f.tuples[0].end());
  VertexSet placed = f.vertex_set(h.n());
  for (std::size_t i = 1; i < f.tuples.size(); ++i) {
    const SixTuple& t = f.tuples[i];
    const Triple from = path.back_triple();
    const Triple to{t[0], t[1], t[2]};
    VertexSet forbidden = placed | r.members;
    for (int v : from) forbidden.erase(v);
    for (int v : to) forbidden.erase(v);
    const auto joint = connect(h, from, to, forbidden, cfg.cap_m);
    if (!joint)
      throw ConstructionError("absorbing_path", "cannot join absorber " + std::to_string(i - 1) +
                                                    " to absorber " + std::to_string(i));
    for (std::size_t k = 3; k + 3 < joint->size(); ++k) {
      path.vertices.push_back(joint->vertices[k]);
      placed.insert(joint->vertices[k]);
    }
    path.vertices.insert(path.vertices.end(), t.begin(), t.end());
  }
  return path;
}

VertexSeq absorb(const Hypergraph3& h, const VertexSeq& pa, const AbsorberFamily& f,
                 const std::vector<int>& x, AbsorbOptions opts) {
  const int n = h.n();
  if (pa.closed) throw ArgumentError("absorb expects an open path");
  if (!is_squared_path(h, pa)) throw ArgumentError("absorb expects a squared path");
  VertexSet on_path(n);
  for (int v : pa.vertices) on_path.insert(v);
  VertexSet incoming(n);
  for (int v : x) {
    if (v < 0 || v >= n) throw ArgumentError("vertex out of range");
    if (on_path.contains(v)) throw ArgumentError("vertex " + std::to_string(v) + " already on the path");
    if (incoming.contains(v)) throw ArgumentError("vertex " + std::to_string(v) + " repeated");
    incoming.insert(v);
  }

  std::vector<int> cur = pa.vertices;
  auto index_of = [&](int v) {
    return static_cast<std::size_t>(std::find(cur.begin(), cur.end(), v) - cur.begin());
  };
  // Tuples that appear consecutively in pa and are still intact.
  std::vector<char> available(f.tuples.size(), 0);
  VertexSet reserved(n);
  for (std::size_t i = 0; i < f.tuples.size(); ++i) {
    const auto& t = f.tuples[i];
    const std::size_t p = index_of(t[0]);
    if (p + 6 > cur.size()) continue;
    if (std::equal(t.begin(), t.end(), cur.begin() + static_cast<std::ptrdiff_t>(p))) {
      available[i] = 1;
      for (int u : t) reserved.insert(u);
    }
  }

  std::vector<int> order = x;
  std::sort(order.begin(), order.end());
  for (int v : order) {
    bool done = false;
    for (int idx : f.per_vertex_index.at(static_cast<std::size_t>(v))) {
      if (!available[static_cast<std::size_t>(idx)]) continue;
      const auto& t = f.tuples[static_cast<std::size_t>(idx)];
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(index_of(t[3])), v);
      available[static_cast<std::size_t>(idx)] = 0;
      for (int u : t) reserved.erase(u);
      done = true;
      break;
    }
    if (!done && opts.allow_path_windows) {
      for (std::size_t i = 0; i + 6 <= cur.size() && !done; ++i) {
        SixTuple w;
        std::copy_n(cur.begin() + static_cast<std::ptrdiff_t>(i), 6, w.begin());
        if (std::any_of(w.begin(), w.end(), [&](int u) { return reserved.contains(u); })) continue;
        if (!is_v_absorber(h, v, w)) continue;
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i + 3), v);
        done = true;
      }
    }
    if (!done) throw AbsorptionError(v, "no unused absorber for vertex " + std::to_string(v));
  }

  VertexSeq out{std::move(cur), false};
  if (!is_squared_path(h, out)) throw std::logic_error("absorption produced an invalid squared path");
  return out;
}

}  // namespace hypersquare
