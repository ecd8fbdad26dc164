#include "hypersquare/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include "hypersquare/errors.hpp"

namespace hypersquare {

GoodPairOracle::GoodPairOracle(const Hypergraph3& h, int threshold)
    : threshold_(threshold), bad_with_(static_cast<std::size_t>(h.n()), VertexSet(h.n())) {
  for (int u = 0; u < h.n(); ++u)
    for (int v = u + 1; v < h.n(); ++v)
      if (pair_degree(h, u, v) < threshold) {
        bad_with_[static_cast<std::size_t>(u)].insert(v);
        bad_with_[static_cast<std::size_t>(v)].insert(u);
      }
}

std::size_t GoodPairOracle::bad_count() const {
  std::size_t twice = 0;
  for (const auto& s : bad_with_) twice += static_cast<std::size_t>(s.count());
  return twice / 2;
}

std::vector<std::pair<int, int>> GoodPairOracle::bad_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < bad_with_.size(); ++u) {
    const auto& s = bad_with_[u];
    for (int v = s.next(static_cast<int>(u)); v != -1; v = s.next(v))
      out.emplace_back(static_cast<int>(u), v);
  }
  return out;
}

GoodPairOracle classify_pairs(const Hypergraph3& h, int threshold) {
  if (threshold < 0) throw ArgumentError("threshold must be non-negative");
  return GoodPairOracle(h, threshold);
}

VertexSet prune_bad_vertices(const Hypergraph3& h, double tau, const GoodPairOracle& oracle) {
  if (!(tau > 0.0 && tau < 1.0)) throw ArgumentError("tau must lie in (0,1)");
  const double limit = std::sqrt(tau) * h.n();
  VertexSet keep = VertexSet::all(h.n());
  while (true) {
    int worst = -1, worst_count = -1;
    keep.for_each([&](int v) {
      const int c = (oracle.bad_partners(v) & keep).count();
      if (c > worst_count) worst = v, worst_count = c;
    });
    if (worst < 0 || worst_count < limit) break;
    keep.erase(worst);
  }
  return keep;
}

int Tiling::count(std::size_t size) const {
  return static_cast<int>(
      std::count_if(tiles.begin(), tiles.end(), [&](const auto& t) { return t.size() == size; }));
}

bool is_good_tile(const Hypergraph3& h, const GoodPairOracle& oracle, std::span<const int> tile) {
  const std::size_t s = tile.size();
  if (s < 2 || s > 4) return false;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (tile[i] == tile[j] || oracle.is_bad(tile[i], tile[j])) return false;
  if (s == 3) return h.has_edge(tile[0], tile[1], tile[2]);
  if (s == 4) return is_k4(h, tile[0], tile[1], tile[2], tile[3]);
  return true;
}

namespace {

int tile_weight(std::size_t size) { return size < kTileWeight.size() ? kTileWeight[size] : 0; }

constexpr std::size_t kRetileTiles = 4;
constexpr std::size_t kRetileFree = 4;
constexpr std::size_t kRetileMaxVertices = 16;
constexpr std::int64_t kRetileBudget = 50'000;

class TilingSearch {
 public:
  TilingSearch(const Hypergraph3& h, const VertexSet& domain, const GoodPairOracle& oracle)
      : h_(h), oracle_(oracle), domain_(domain), tile_of_(static_cast<std::size_t>(h.n()), -1) {}

  void seed_matching(std::uint64_t seed) {
    auto order = domain_.to_vector();
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (int u : order) {
      if (tile_of(u) >= 0) continue;
      for (int v : order)
        if (v != u && tile_of(v) < 0 && !oracle_.is_bad(u, v)) {
          add_tile({std::min(u, v), std::max(u, v)});
          break;
        }
    }
  }

  /// Applies one improving move; false at a local optimum.
  bool improve() {
    compute_targets();
    // An uncovered vertex joins a tile.
    for (int x : domain_.to_vector()) {
      if (tile_of(x) >= 0 || targets_[static_cast<std::size_t>(x)].empty()) continue;
      relocate(-1, {x}, {targets_[static_cast<std::size_t>(x)].front().tile});
      return true;
    }
    // Relocate part of a tile.
    for (std::size_t f = 0; f < tiles_.size(); ++f) {
      const auto& tile = tiles_[f];
      const int s = static_cast<int>(tile.size());
      if (s == 0) continue;
      for (int mask = 1; mask < (1 << s); ++mask) {
        std::vector<int> moving;
        for (int i = 0; i < s; ++i)
          if (mask >> i & 1) moving.push_back(tile[static_cast<std::size_t>(i)]);
        const int loss = tile_weight(tile.size()) - tile_weight(tile.size() - moving.size());
        std::vector<int> best_targets;
        const int gain = best_assignment(moving, best_targets);
        if (gain - loss > 0) {
          relocate(static_cast<int>(f), moving, best_targets);
          return true;
        }
      }
    }
    // Two uncovered vertices forming a good pair.
    const auto free = domain_.to_vector();
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (tile_of(free[i]) >= 0) continue;
      for (std::size_t j = i + 1; j < free.size(); ++j)
        if (tile_of(free[j]) < 0 && !oracle_.is_bad(free[i], free[j])) {
          add_tile({free[i], free[j]});
          return true;
        }
    }
    return retile();
  }

  Tiling result() const {
    Tiling t;
    for (const auto& tile : tiles_)
      if (!tile.empty()) {
        auto sorted = tile;
        std::sort(sorted.begin(), sorted.end());
        t.weight += tile_weight(sorted.size());
        t.tiles.push_back(std::move(sorted));
      }
    std::sort(t.tiles.begin(), t.tiles.end());
    return t;
  }

 private:
  struct Target {
    int tile;
    int gain;
  };

  int tile_of(int v) const { return tile_of_[static_cast<std::size_t>(v)]; }

  void add_tile(std::vector<int> tile) {
    for (int v : tile) tile_of_[static_cast<std::size_t>(v)] = static_cast<int>(tiles_.size());
    tiles_.push_back(std::move(tile));
  }

  /// Tile t (2 or 3 vertices) plus x spans a complete good hypergraph.
  bool connects(const std::vector<int>& t, int x) const {
    for (int u : t)
      if (oracle_.is_bad(u, x)) return false;
    if (t.size() == 2) return h_.has_edge(t[0], t[1], x);
    return h_.has_edge(t[0], t[1], x) && h_.has_edge(t[0], t[2], x) && h_.has_edge(t[1], t[2], x);
  }

  void compute_targets() {
    targets_.assign(static_cast<std::size_t>(h_.n()), {});
    domain_.for_each([&](int x) {
      auto& list = targets_[static_cast<std::size_t>(x)];
      for (std::size_t f = 0; f < tiles_.size(); ++f) {
        const auto& t = tiles_[f];
        if ((t.size() != 2 && t.size() != 3) || static_cast<int>(f) == tile_of(x)) continue;
        if (connects(t, x))
          list.push_back({static_cast<int>(f), tile_weight(t.size() + 1) - tile_weight(t.size())});
      }
      std::stable_sort(list.begin(), list.end(),
                       [](const Target& a, const Target& b) { return a.gain > b.gain; });
    });
  }

  /// Max total gain placing each moving vertex into a distinct target.
  /// Returns -1 if some vertex has no target.
  int best_assignment(const std::vector<int>& moving, std::vector<int>& chosen) const {
    const std::size_t k = moving.size();
    std::vector<std::vector<Target>> options(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& all = targets_[static_cast<std::size_t>(moving[i])];
      if (all.empty()) return -1;
      // k entries per gain class suffice to realise any distinct assignment.
      std::size_t per_gain = 0;
      int last_gain = -1;
      for (const auto& t : all) {
        if (t.gain != last_gain) last_gain = t.gain, per_gain = 0;
        if (per_gain++ < k) options[i].push_back(t);
      }
    }
    int best = -1;
    std::vector<int> pick(k, -1);
    auto dfs = [&](auto&& self, std::size_t i, int sum) -> void {
      if (i == k) {
        if (sum > best) best = sum, chosen = pick;
        return;
      }
      for (const auto& t : options[i]) {
        if (std::find(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(i), t.tile) !=
            pick.begin() + static_cast<std::ptrdiff_t>(i))
          continue;
        pick[i] = t.tile;
        self(self, i + 1, sum + t.gain);
      }
    };
    dfs(dfs, 0, 0);
    return best;
  }

  /// Exact re-tiling of a few tiles plus a few uncovered vertices.
  ///
  /// Uncovered vertices are pairwise bad once no new pair tile can form, so
  /// every block of an optimal tiling holds at most one of them next to a
  /// tiled vertex. With up to kRetileTiles tiles and kRetileFree uncovered
  /// vertices per neighbourhood the search is therefore exact whenever the
  /// domain has at most 8 vertices.
  bool retile() {
    std::vector<int> live;
    for (std::size_t f = 0; f < tiles_.size(); ++f)
      if (!tiles_[f].empty()) live.push_back(static_cast<int>(f));
    std::vector<int> uncovered;
    domain_.for_each([&](int v) {
      if (tile_of(v) < 0) uncovered.push_back(v);
    });
    std::int64_t budget = kRetileBudget;
    std::vector<int> chosen;
    for (std::size_t size = 1; size <= kRetileTiles && size <= live.size(); ++size) {
      chosen.clear();
      if (pick_tiles(live, 0, size, chosen, uncovered, budget)) return true;
      if (budget <= 0) return false;
    }
    return false;
  }

  bool pick_tiles(const std::vector<int>& live, std::size_t from, std::size_t size, std::vector<int>& chosen,
                  const std::vector<int>& uncovered, std::int64_t& budget) {
    if (chosen.size() == size) {
      std::vector<int> core;
      int weight = 0;
      for (int f : chosen) {
        const auto& t = tiles_[static_cast<std::size_t>(f)];
        core.insert(core.end(), t.begin(), t.end());
        weight += tile_weight(t.size());
      }
      std::vector<int> cand;
      for (int x : uncovered)
        if (std::any_of(core.begin(), core.end(), [&](int u) { return !oracle_.is_bad(u, x); })) cand.push_back(x);
      std::vector<int> extra;
      return pick_free(cand, 0, core, weight, chosen, extra, budget);
    }
    for (std::size_t i = from; i < live.size(); ++i) {
      chosen.push_back(live[i]);
      if (pick_tiles(live, i + 1, size, chosen, uncovered, budget)) return true;
      chosen.pop_back();
      if (budget <= 0) return false;
    }
    return false;
  }

  bool pick_free(const std::vector<int>& cand, std::size_t from, const std::vector<int>& core, int weight,
                 const std::vector<int>& chosen, std::vector<int>& extra, std::int64_t& budget) {
    if (--budget < 0) return false;
    std::vector<int> pool = core;
    pool.insert(pool.end(), extra.begin(), extra.end());
    if (pool.size() <= kRetileMaxVertices) {
      std::vector<std::vector<int>> blocks;
      if (best_partition(pool, weight, blocks)) {
        for (int f : chosen) {
          for (int v : tiles_[static_cast<std::size_t>(f)]) tile_of_[static_cast<std::size_t>(v)] = -1;
          tiles_[static_cast<std::size_t>(f)].clear();
        }
        for (auto& b : blocks) add_tile(std::move(b));
        return true;
      }
    }
    if (extra.size() == kRetileFree) return false;
    for (std::size_t i = from; i < cand.size(); ++i) {
      extra.push_back(cand[i]);
      if (pick_free(cand, i + 1, core, weight, chosen, extra, budget)) return true;
      extra.pop_back();
      if (budget <= 0) return false;
    }
    return false;
  }

  /// Max-weight tiling of `pool`; true (with blocks) iff it beats `floor`.
  bool best_partition(const std::vector<int>& pool, int floor, std::vector<std::vector<int>>& out) const {
    const std::size_t m = pool.size();
    std::vector<char> used(m, 0);
    std::vector<std::vector<int>> cur;
    int best = floor;
    bool found = false;
    auto good_block = [&](const std::vector<int>& b) {
      const int x = b.back();
      for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (oracle_.is_bad(b[i], x)) return false;
      if (b.size() == 3) return h_.has_edge(b[0], b[1], b[2]);
      if (b.size() == 4) return h_.has_edge(b[0], b[1], b[3]) && h_.has_edge(b[0], b[2], b[3]) && h_.has_edge(b[1], b[2], b[3]);
      return true;
    };
    auto dfs = [&](auto&& self, int weight, std::size_t left) -> void {
      if (weight + (11 * static_cast<int>(left)) / 4 <= best) return;
      std::size_t i = 0;
      while (i < m && used[i]) ++i;
      if (i == m) {
        best = weight;
        found = true;
        out = cur;
        return;
      }
      used[i] = 1;
      std::vector<int> block{pool[i]};
      auto grow = [&](auto&& grow_self, std::size_t start) -> void {
        for (std::size_t j = start; j < m; ++j) {
          if (used[j]) continue;
          block.push_back(pool[j]);
          if (good_block(block)) {
            used[j] = 1;
            cur.push_back(block);
            self(self, weight + tile_weight(block.size()), left - block.size());
            cur.pop_back();
            if (block.size() < 4) grow_self(grow_self, j + 1);
            used[j] = 0;
          }
          block.pop_back();
        }
      };
      grow(grow, i + 1);
      self(self, weight, left - 1);  // pool[i] stays uncovered
      used[i] = 0;
    };
    dfs(dfs, 0, m);
    return found;
  }

  void relocate(int from, const std::vector<int>& moving, const std::vector<int>& to) {
    if (from >= 0) {
      auto& src = tiles_[static_cast<std::size_t>(from)];
      std::erase_if(src, [&](int v) {
        return std::find(moving.begin(), moving.end(), v) != moving.end();
      });
      if (src.size() < 2) {
        for (int v : src) tile_of_[static_cast<std::size_t>(v)] = -1;
        src.clear();
      }
    }
    for (std::size_t i = 0; i < moving.size(); ++i) {
      tiles_[static_cast<std::size_t>(to[i])].push_back(moving[i]);
      tile_of_[static_cast<std::size_t>(moving[i])] = to[i];
    }
  }

  const Hypergraph3& h_;
  const GoodPairOracle& oracle_;
  VertexSet domain_;
  std::vector<int> tile_of_;
  std::vector<std::vector<int>> tiles_;
  std::vector<std::vector<Target>> targets_;
};

}  // namespace

Tiling weighted_tiling(const Hypergraph3& h, const VertexSet& domain, const GoodPairOracle& oracle,
                       std::uint64_t seed) {
  if (domain.universe() != h.n()) throw ArgumentError("domain universe mismatch");
  TilingSearch search(h, domain, oracle);
  search.seed_matching(seed);
  while (search.improve()) {
  }
  return search.result();
}

AlmostFactor almost_k4_factor(const Hypergraph3& h, const Config& cfg) {
  cfg.validate();
  AlmostFactor out;
  const int n = h.n();
  out.threshold = static_cast<int>(std::ceil((0.75 + cfg.alpha) * n - 1e-9));
  const auto oracle = classify_pairs(h, out.threshold);
  const VertexSet kept = prune_bad_vertices(h, cfg.tau, oracle);
  out.pruned = (VertexSet::all(n) - kept).to_vector();
  out.tiling = weighted_tiling(h, kept, oracle, cfg.seed);
  VertexSet covered(n);
  for (const auto& t : out.tiling.tiles)
    if (t.size() == 4) {
      out.k4s.push_back({t[0], t[1], t[2], t[3]});
      for (int v : t) covered.insert(v);
    }
  out.leftover = (VertexSet::all(n) - covered).to_vector();
  out.leftover_bound = 2.0 * std::sqrt(cfg.tau) * n + 14.0;
  out.within_bound = static_cast<double>(out.leftover.size()) <= out.leftover_bound;
  return out;
}

namespace {

constexpr std::int64_t kCoverNodeBudget = 50'000;

/// Squared path of exactly q vertices inside `unused` starting at `start`.
std::optional<std::vector<int>> grow_path(const Hypergraph3& h, int start, const VertexSet& unused,
                                          int q, std::mt19937_64& rng) {
  std::vector<int> seq{start};
  VertexSet avail = unused;
  avail.erase(start);
  std::int64_t nodes = 0;
  auto candidates = [&]() {
    VertexSet s = avail;
    const std::size_t k = seq.size();
    if (k == 1) {
      // Second vertex must lie in some edge with the first inside avail.
      VertexSet ok(h.n());
      s.for_each([&](int b) {
        if (h.pair_neighbors(start, b).intersects(avail)) ok.insert(b);
      });
      s = ok;
    } else if (k == 2) {
      s.intersect_words(h.pair_words(seq[0], seq[1]));
    } else {
      const int p = seq[k - 3], q2 = seq[k - 2], r = seq[k - 1];
      s.intersect_words(h.pair_words(p, q2)).intersect_words(h.pair_words(p, r));
      s.intersect_words(h.pair_words(q2, r));
    }
    auto list = s.to_vector();
    std::shuffle(list.begin(), list.end(), rng);
    return list;
  };
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == q) return true;
    if (++nodes > kCoverNodeBudget) return false;
    for (int u : candidates()) {
      seq.push_back(u);
      avail.erase(u);
      if (self(self)) return true;
      avail.insert(u);
      seq.pop_back();
      if (nodes > kCoverNodeBudget) return false;
    }
    return false;
  };
  if (dfs(dfs)) return seq;
  return std::nullopt;
}

}  // namespace

CoverResult cover_with_squared_paths(const Hypergraph3& h, int q, double mu, std::uint64_t seed,
                                     const VertexSet& domain) {
  if (q < 4 || q % 4 != 0) throw ArgumentError("q must be a positive multiple of 4");
  if (domain.universe() != h.n()) throw ArgumentError("domain universe mismatch");
  CoverResult out;
  out.domain_size = domain.count();
  VertexSet unused = domain;
  std::mt19937_64 rng(seed);
  auto starts = domain.to_vector();
  std::shuffle(starts.begin(), starts.end(), rng);
  for (int a : starts) {
    if (unused.count() < q) break;
    if (!unused.contains(a)) continue;
    if (auto path = grow_path(h, a, unused, q, rng)) {
      for (int v : *path) unused.erase(v);
      out.paths.push_back(VertexSeq{std::move(*path), false});
    }
  }
  out.uncovered = unused.count();
  out.within_mu = out.uncovered <= mu * out.domain_size;
  return out;
}

CoverResult cover_with_squared_paths(const Hypergraph3& h, int q, double mu, std::uint64_t seed) {
  return cover_with_squared_paths(h, q, mu, seed, VertexSet::all(h.n()));
}

}  // namespace hypersquare
