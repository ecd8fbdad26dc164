#include "hypersquare/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hypersquare/absorber.hpp"
#include "hypersquare/connector.hpp"
#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "hypersquare/tiling.hpp"

namespace hypersquare {

namespace {

using Clock = std::chrono::steady_clock;

struct StageFailure {
  std::string stage;
  std::string detail;
};

class Stopwatch {
 public:
  explicit Stopwatch(StageStats& s) : stats_(s) {}
  void lap(const char* name) {
    const auto now = Clock::now();
    stats_.timings_ms.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  StageStats& stats_;
  Clock::time_point last_ = Clock::now();
};

// One attempt. Returns the certified-candidate cycle or a StageFailure.
std::optional<VertexSeq> attempt(const Hypergraph3& h, const Config& cfg, StageStats& st,
                                 StageFailure& fail) {
  const int n = h.n();
  Stopwatch clock(st);

  Reservoir r;
  try {
    r = sample_reservoir(h, cfg);
  } catch (const ResourceError& e) {
    fail = {"reservoir", e.what()};
    return std::nullopt;
  }
  st.reservoir_size = r.members.count();
  clock.lap("reservoir");

  const AbsorberFamily fam = build_absorber_family(h, r, cfg);
  st.family_size = static_cast<int>(fam.tuples.size());
  st.family_degraded = fam.degraded;
  clock.lap("absorber_family");
  if (fam.tuples.empty()) {
    fail = {"absorber_family", "no vertex has an absorber outside the reservoir"};
    return std::nullopt;
  }

  VertexSeq pa;
  try {
    pa = build_absorbing_path(h, fam, r, cfg);
  } catch (const ConstructionError& e) {
    fail = {e.stage(), e.what()};
    return std::nullopt;
  }
  st.absorbing_path_size = static_cast<int>(pa.size());
  clock.lap("absorbing_path");

  VertexSet on_pa(n);
  for (int v : pa.vertices) on_pa.insert(v);
  const VertexSet domain = VertexSet::all(n) - on_pa - r.members;
  const CoverResult cover = cover_with_squared_paths(h, cfg.q, cfg.mu, derive_seed(cfg.seed, 11), domain);
  st.cover_paths = static_cast<int>(cover.paths.size());
  st.cover_uncovered = cover.uncovered;
  st.reservoir_budget_ok =
      static_cast<double>(cfg.cap_m) * st.cover_paths <= std::pow(cfg.theta_star, 4) * n;
  clock.lap("cover");

  // Cycle order: P_A, W_1, ..., W_k, back to P_A.
  std::vector<const VertexSeq*> pieces{&pa};
  for (const auto& p : cover.paths) pieces.push_back(&p);
  VertexSet on_cycle = on_pa;
  for (const auto& p : cover.paths)
    for (int v : p.vertices) on_cycle.insert(v);

  std::vector<int> cyc;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const VertexSeq& cur = *pieces[i];
    const VertexSeq& nxt = *pieces[(i + 1) % pieces.size()];
    cyc.insert(cyc.end(), cur.vertices.begin(), cur.vertices.end());
    auto joint = connect_through_reservoir(h, r, cur.back_triple(), nxt.front_triple(), cfg.cap_m);
    if (!joint) {
      // Reservoir exhausted or too sparse: route through vertices that are
      // not yet on the cycle. The absorber step picks up the rest.
      VertexSet forbidden = on_cycle;
      for (int v : cur.back_triple()) forbidden.erase(v);
      for (int v : nxt.front_triple()) forbidden.erase(v);
      joint = connect(h, cur.back_triple(), nxt.front_triple(), forbidden, cfg.cap_m);
    }
    if (!joint) {
      fail = {"connect", "no connection from piece " + std::to_string(i) + " to piece " +
                             std::to_string((i + 1) % pieces.size())};
      return std::nullopt;
    }
    for (std::size_t k = 3; k + 3 < joint->size(); ++k) {
      const int v = joint->vertices[k];
      cyc.push_back(v);
      on_cycle.insert(v);
      if (r.members.contains(v)) r.used.insert(v);
    }
  }
  st.reservoir_used = r.used.count();
  clock.lap("connect");

  std::vector<int> leftover = (VertexSet::all(n) - on_cycle).to_vector();
  st.leftover = static_cast<int>(leftover.size());
  VertexSeq pstar;
  try {
    pstar = absorb(h, pa, fam, leftover, AbsorbOptions{true});
  } catch (const AbsorptionError& e) {
    fail = {"absorb", e.what()};
    return std::nullopt;
  }
  clock.lap("absorb");

  // P_A opens the cycle; replace it by P*.
  std::vector<int> out = pstar.vertices;
  out.insert(out.end(), cyc.begin() + static_cast<std::ptrdiff_t>(pa.size()), cyc.end());
  return VertexSeq{std::move(out), true};
}

std::string format_fraction(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", f);
  return buf;
}

}  // namespace

ConstructionReport construct_squared_hamiltonian(const Hypergraph3& h, const Config& cfg) {
  if (h.n() < 5) throw ArgumentError("construction needs n >= 5");
  cfg.validate();
  ConstructionReport rep;
  for (int a = 0; a < kConstructionAttempts; ++a) {
    Config c = cfg;
    c.seed = a == 0 ? cfg.seed : derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(a));
    rep.attempts = a + 1;
    rep.stats = {};
    StageFailure fail;
    auto cycle = attempt(h, c, rep.stats, fail);
    if (cycle) {
      if (!certify_hamiltonian(h, *cycle))
        throw std::logic_error("construction produced an uncertified cycle");
      rep.cycle = std::move(cycle);
      rep.failed_stage.clear();
      rep.detail.clear();
      return rep;
    }
    rep.failed_stage = fail.stage;
    rep.detail = fail.detail;
  }
  return rep;
}

std::vector<ProbeRow> threshold_probe(const ProbeOptions& opts) {
  if (opts.n < 5) throw ArgumentError("probe needs n >= 5");
  if (opts.trials < 0) throw ArgumentError("trials must be >= 0");
  const std::size_t total = opts.grid.size() * static_cast<std::size_t>(opts.trials);
  std::vector<ProbeRow> rows(total);

  auto run_one = [&](std::size_t idx) {
    const double f = opts.grid[idx / static_cast<std::size_t>(opts.trials)];
    ProbeRow& row = rows[idx];
    row.fraction = f;
    row.trial = static_cast<int>(idx % static_cast<std::size_t>(opts.trials));
    const std::uint64_t s = derive_seed(opts.seed, idx);
    const int n = opts.n;
    const int required =
        std::clamp(static_cast<int>(std::ceil(f * n - 1e-9)), 0, n - 2);
    const Hypergraph3 h = repair_to_pair_degree(n, std::clamp(f, 0.0, 1.0), required, s);
    row.min_pair_degree = min_pair_degree(h);

    std::optional<Verdict> ov;
    if (opts.mode != ProbeMode::pipeline) {
      ov = oracle_has_squared_hamiltonian(h, opts.time_limit).verdict;
      row.oracle = std::string(to_string(*ov));
    } else {
      row.oracle = "skipped";
    }
    std::optional<bool> found;
    if (opts.mode != ProbeMode::exact) {
      Config c = opts.config;
      c.seed = derive_seed(s, 1);
      found = construct_squared_hamiltonian(h, c).success();
      row.pipeline = *found ? "cycle" : "failure";
    } else {
      row.pipeline = "skipped";
    }
    if (!ov || !found || *ov == Verdict::timeout)
      row.agreement = "na";
    else if (*ov == Verdict::yes)
      row.agreement = *found ? "match" : "pipeline_miss";
    else
      row.agreement = *found ? "contradiction" : "match";
  };

  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(std::max<std::size_t>(total, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < total; ++i) run_one(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return rows;
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream out;
  out << "fraction,trial,min_pair_degree,oracle,pipeline,agreement\n";
  for (const auto& r : rows)
    out << format_fraction(r.fraction) << ',' << r.trial << ',' << r.min_pair_degree << ','
        << r.oracle << ',' << r.pipeline << ',' << r.agreement << '\n';
  return out.str();
}

}  // namespace hypersquare
