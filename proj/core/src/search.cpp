#include "ekrw/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ekrw/numbers.hpp"
#include "ekrw/subsets.hpp"
#include "ekrw/verify.hpp"

namespace ekrw {
namespace {

constexpr int kMaxCandidates = 512;
constexpr int kCandWords = kMaxCandidates / 64;
constexpr int kColourCap = 96;  // colour bound only on small candidate sets

void check_cap(const SearchProblem& p, long cap, const char* which) {
  BigCount universe = binomial(p.n, p.k);
  if (universe > cap)
    throw std::invalid_argument(std::string(which) +
                                ": instance too large, C(n,k) must be <= " +
                                std::to_string(cap));
}

std::vector<std::uint32_t> universe_masks(int n, int k) {
  std::vector<std::uint32_t> masks;
  for_each_k_subset(n, k, [&](const ElementSet& s) {
    masks.push_back(static_cast<std::uint32_t>(s.word(0)));
  });
  return masks;
}

SetFamily masks_to_family(int n, int k, const std::vector<std::uint32_t>& masks) {
  std::vector<ElementSet> members;
  members.reserve(masks.size());
  for (std::uint32_t m : masks) members.push_back(ElementSet::from_words(n, m));
  std::sort(members.begin(), members.end());
  return SetFamily::from_sorted_unique(n, k, std::move(members));
}

void verify_witness(const SearchProblem& p, const SetFamily& fam) {
  if (fam.empty()) return;
  if (!is_d_wise_t_intersecting(fam, p.d, p.t).ok)
    throw std::logic_error("search produced a non-intersecting witness");
  if (p.require_nontrivial && !is_nontrivial(fam, p.t))
    throw std::logic_error("search produced a trivial witness");
}

// ---------------------------------------------------------------------------
// Brute force oracle
// ---------------------------------------------------------------------------

struct BruteState {
  const SearchProblem* prob = nullptr;
  std::vector<std::uint32_t> cand;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> best;
  long nodes = 0;
  std::vector<std::pair<int, long>> history;

  bool extension_valid(std::uint32_t c) const {
    // Every (d-1)-subset of the current family must meet c in >= t elements.
    const int d = prob->d, t = prob->t;
    const int s = static_cast<int>(chosen.size());
    if (d - 1 > s) return true;
    std::vector<int> idx(static_cast<std::size_t>(d - 1));
    for (int i = 0; i < d - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint32_t inter = c;
      for (int i : idx) inter &= chosen[static_cast<std::size_t>(i)];
      if (std::popcount(inter) < t) return false;
      int pos = d - 2;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == s - (d - 1) + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < d - 1; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return true;
  }

  void dfs(std::size_t next, std::uint32_t running_intersection) {
    ++nodes;
    const int size = static_cast<int>(chosen.size());
    const bool acceptable =
        size > 0 && (!prob->require_nontrivial ||
                     std::popcount(running_intersection) < prob->t);
    if (acceptable && size > static_cast<int>(best.size())) {
      best = chosen;
      history.emplace_back(size, nodes);
    }
    for (std::size_t j = next; j < cand.size(); ++j) {
      if (size + static_cast<int>(cand.size() - j) <=
          static_cast<int>(best.size()))
        break;  // not enough candidates left to improve
      std::uint32_t c = cand[j];
      if (!extension_valid(c)) continue;
      chosen.push_back(c);
      dfs(j + 1, size == 0 ? c : (running_intersection & c));
      chosen.pop_back();
    }
  }
};

}  // namespace

void SearchProblem::validate() const {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (k < t + d - 1) throw std::invalid_argument("k must be >= t+d-1");
  if (!(k < n)) throw std::invalid_argument("k must be < n");
  if (n > 20) throw std::invalid_argument("n must be <= 20");
}

SearchResult brute_force_max(const SearchProblem& problem) {
  problem.validate();
  check_cap(problem, 24, "brute_force_max");
  BruteState state;
  state.prob = &problem;
  state.cand = universe_masks(problem.n, problem.k);
  state.dfs(0, 0);
  SearchResult result;
  result.best_size = static_cast<int>(state.best.size());
  result.witness = masks_to_family(problem.n, problem.k, state.best);
  result.status = SearchStatus::Optimal;
  result.nodes = state.nodes;
  result.incumbent_history = std::move(state.history);
  verify_witness(problem, result.witness);
  return result;
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

namespace {

struct CandBits {
  std::array<std::uint64_t, kCandWords> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) {
    w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }
  bool any(int nwords) const {
    for (int i = 0; i < nwords; ++i)
      if (w[static_cast<std::size_t>(i)]) return true;
    return false;
  }
  int count(int nwords) const {
    int c = 0;
    for (int i = 0; i < nwords; ++i) c += std::popcount(w[static_cast<std::size_t>(i)]);
    return c;
  }
  void and_with(const CandBits& o, int nwords) {
    for (int i = 0; i < nwords; ++i) w[static_cast<std::size_t>(i)] &= o.w[static_cast<std::size_t>(i)];
  }
  bool intersects(const CandBits& o, int nwords) const {
    for (int i = 0; i < nwords; ++i)
      if (w[static_cast<std::size_t>(i)] & o.w[static_cast<std::size_t>(i)]) return true;
    return false;
  }
  template <typename Fn>
  void for_each(int nwords, Fn&& fn) const {
    for (int i = 0; i < nwords; ++i) {
      std::uint64_t bits = w[static_cast<std::size_t>(i)];
      while (bits) {
        if (!fn(i * 64 + std::countr_zero(bits))) return;
        bits &= bits - 1;
      }
    }
  }
};

struct BnbShared {
  SearchProblem prob;
  std::vector<std::uint32_t> cand;
  int ncand = 0;
  int nwords = 0;
  int pair_threshold = 0;
  bool adj_complete = false;
  std::vector<CandBits> adj;
  // d == 3 only: pair_ok[i*ncand+j] = candidates l with |c_i & c_j & c_l| >= t.
  std::vector<CandBits> pair_ok;
  // star_of[x] = candidates containing element x (0-based element index).
  std::array<CandBits, 32> star_of{};

  std::atomic<int> best_size{0};
  std::atomic<long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<long> next_checkpoint{0};
  std::mutex best_mutex;
  std::vector<std::uint32_t> best_masks;
  std::vector<std::pair<int, long>> history;
  const BnbOptions* options = nullptr;

  const CandBits& pair_row(int i, int j) const {
    return pair_ok[static_cast<std::size_t>(i) * static_cast<std::size_t>(ncand) +
                   static_cast<std::size_t>(j)];
  }

  void try_update_best(const std::vector<int>& chosen_indices) {
    int size = static_cast<int>(chosen_indices.size());
    if (size <= best_size.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(best_mutex);
    if (size <= best_size.load(std::memory_order_relaxed)) return;
    best_masks.clear();
    for (int i : chosen_indices) best_masks.push_back(cand[static_cast<std::size_t>(i)]);
    best_size.store(size, std::memory_order_relaxed);
    history.emplace_back(size, nodes.load(std::memory_order_relaxed));
  }

  SearchResult snapshot(SearchStatus status) {
    std::lock_guard<std::mutex> lock(best_mutex);
    SearchResult r;
    r.best_size = best_size.load();
    r.witness = masks_to_family(prob.n, prob.k, best_masks);
    r.status = status;
    r.nodes = nodes.load();
    r.incumbent_history = history;
    return r;
  }

  void maybe_checkpoint() {
    if (!options->checkpoint_sink) return;
    long due = next_checkpoint.load(std::memory_order_relaxed);
    long now = nodes.load(std::memory_order_relaxed);
    if (now < due) return;
    if (!next_checkpoint.compare_exchange_strong(due, due + options->checkpoint_every_nodes))
      return;
    options->checkpoint_sink(snapshot(SearchStatus::BudgetExhausted));
  }
};

struct BnbWorker {
  BnbShared* shared = nullptr;
  std::vector<int> chosen;
  // levels[m] holds the intersections of all (m+1)-subsets of the chosen
  // family as element masks; level 0 is the chosen sets themselves.
  std::vector<std::vector<std::uint32_t>> levels;
  long local_nodes = 0;

  void init() {
    levels.assign(static_cast<std::size_t>(shared->prob.d - 1), {});
    for (auto& lvl : levels) lvl.reserve(4096);
  }

  void count_node() {
    if (++local_nodes >= 8192) flush_nodes();
  }

  void flush_nodes() {
    if (local_nodes == 0) return;
    long total = shared->nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes;
    local_nodes = 0;
    if (shared->prob.node_budget && total > *shared->prob.node_budget) {
      shared->budget_hit.store(true, std::memory_order_relaxed);
      shared->stop.store(true, std::memory_order_relaxed);
    }
    shared->maybe_checkpoint();
  }

  void include(int ci, std::array<int, 8>& added) {
    const std::uint32_t c = shared->cand[static_cast<std::size_t>(ci)];
    const int top = static_cast<int>(levels.size());
    for (int m = top - 1; m >= 1; --m) {
      const std::size_t before = levels[static_cast<std::size_t>(m - 1)].size();
      added[static_cast<std::size_t>(m)] = static_cast<int>(before);
      auto& dst = levels[static_cast<std::size_t>(m)];
      const auto& src = levels[static_cast<std::size_t>(m - 1)];
      for (std::size_t i = 0; i < before; ++i) dst.push_back(src[i] & c);
    }
    added[0] = 1;
    levels[0].push_back(c);
    chosen.push_back(ci);
  }

  void undo_include(const std::array<int, 8>& added) {
    chosen.pop_back();
    levels[0].pop_back();
    for (std::size_t m = 1; m < levels.size(); ++m) {
      auto& lvl = levels[m];
      lvl.resize(lvl.size() - static_cast<std::size_t>(added[m]));
    }
  }

  /// Viable set after adding ci: indices above ci, adjacent to ci, and
  /// compatible with every (d-1)-subset intersection that ci creates.
  /// Must be called right after include(ci, added).
  CandBits filter_children(const CandBits& p, int ci, const std::array<int, 8>& added) const {
    const int nwords = shared->nwords;
    CandBits out = p;
    out.and_with(shared->adj[static_cast<std::size_t>(ci)], nwords);
    const int word = ci >> 6;
    out.w[static_cast<std::size_t>(word)] &= ~((std::uint64_t{2} << (ci & 63)) - 1);
    for (int i = 0; i < word; ++i) out.w[static_cast<std::size_t>(i)] = 0;

    if (levels.size() == 1) return out;  // d == 2: the adjacency is the check
    if (!shared->pair_ok.empty()) {
      // d == 3 fast path: precomputed triple-compatibility rows.
      for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
        if (!out.any(nwords)) break;
        out.and_with(shared->pair_row(chosen[i], ci), nwords);
      }
      return out;
    }
    // General path: test the new top-level masks explicitly.
    const auto& top_level = levels.back();
    const std::size_t appended = static_cast<std::size_t>(added[levels.size() - 1]);
    if (appended == 0) return out;
    const std::size_t first_new = top_level.size() - appended;
    const int t = shared->prob.t;
    CandBits filtered = out;
    out.for_each(nwords, [&](int j) {
      const std::uint32_t cj = shared->cand[static_cast<std::size_t>(j)];
      for (std::size_t i = first_new; i < top_level.size(); ++i) {
        if (std::popcount(top_level[i] & cj) < t) {
          filtered.reset(j);
          break;
        }
      }
      return true;
    });
    return filtered;
  }

  /// Candidates whose inclusion can lower the trivial core u.
  CandBits breakers(std::uint32_t u, const CandBits& p) const {
    CandBits core_keepers;
    for (int i = 0; i < shared->nwords; ++i)
      core_keepers.w[static_cast<std::size_t>(i)] = ~std::uint64_t{0};
    std::uint32_t bits = u;
    while (bits) {
      int x = std::countr_zero(bits);
      core_keepers.and_with(shared->star_of[static_cast<std::size_t>(x)], shared->nwords);
      bits &= bits - 1;
    }
    CandBits out = p;
    for (int i = 0; i < shared->nwords; ++i)
      out.w[static_cast<std::size_t>(i)] &= ~core_keepers.w[static_cast<std::size_t>(i)];
    return out;
  }

  /// Upper bound on completions that must eventually break the trivial
  /// core: every acceptable completion contains a breaker b, and everything
  /// added alongside b must be triple-compatible with b and the chosen sets
  /// (d == 3 path; other d fall back to the breaker-existence test alone).
  int trivial_core_bound(const CandBits& p, const CandBits& brk) const {
    const int s = static_cast<int>(chosen.size());
    if (!shared->pair_ok.empty()) {
      int best_with_breaker = 0;
      const int nwords = shared->nwords;
      brk.for_each(nwords, [&](int b) {
        CandBits pool = p;
        pool.and_with(shared->adj[static_cast<std::size_t>(b)], nwords);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          if (!pool.any(nwords)) break;
          pool.and_with(shared->pair_row(chosen[i], b), nwords);
        }
        pool.reset(b);
        int size = 1 + pool.count(nwords);
        if (size > best_with_breaker) best_with_breaker = size;
        return true;
      });
      return s + best_with_breaker;
    }
    return s + p.count(shared->nwords);
  }

  void dfs(const CandBits& p, std::uint32_t u) {
    if (shared->stop.load(std::memory_order_relaxed)) return;
    const int s = static_cast<int>(chosen.size());
    const int nwords = shared->nwords;
    int remaining = p.count(nwords);
    int best = shared->best_size.load(std::memory_order_relaxed);
    if (s + remaining <= best) return;

    const bool trivial_here =
        shared->prob.require_nontrivial && s > 0 &&
        std::popcount(u) >= shared->prob.t;
    CandBits brk;
    if (trivial_here) {
      brk = breakers(u, p);
      if (!brk.any(nwords)) return;  // the trivial core can never be broken
      if (trivial_core_bound(p, brk) <= best) return;
    }

    // Greedy colouring of the residual compatibility graph: worthwhile only
    // off the complete-graph regime and once the pool is small.
    std::vector<CandBits> classes;
    if (!shared->adj_complete && remaining <= kColourCap) {
      p.for_each(nwords, [&](int j) {
        for (auto& cls : classes) {
          if (!shared->adj[static_cast<std::size_t>(j)].intersects(cls, nwords)) {
            cls.set(j);
            return true;
          }
        }
        classes.emplace_back();
        classes.back().set(j);
        return true;
      });
      if (s + static_cast<int>(classes.size()) <= best) return;
    }

    int count_ge = remaining;
    p.for_each(nwords, [&](int ci) {
      if (shared->stop.load(std::memory_order_relaxed)) return false;
      best = shared->best_size.load(std::memory_order_relaxed);
      if (s + count_ge <= best) return false;  // pool only shrinks from here
      --count_ge;
      count_node();

      std::array<int, 8> added{};
      include(ci, added);
      const std::uint32_t u2 =
          s == 0 ? shared->cand[static_cast<std::size_t>(ci)]
                 : (u & shared->cand[static_cast<std::size_t>(ci)]);
      const bool trivial_now =
          shared->prob.require_nontrivial && std::popcount(u2) >= shared->prob.t;
      if (!trivial_now) shared->try_update_best(chosen);

      CandBits p2 = filter_children(p, ci, added);
      int p2_count = p2.count(nwords);
      bool descend =
          p2_count > 0 &&
          s + 1 + p2_count > shared->best_size.load(std::memory_order_relaxed);
      if (descend && !classes.empty()) {
        int usable = 0;
        for (const auto& cls : classes)
          if (p2.intersects(cls, nwords)) ++usable;
        descend = s + 1 + usable > shared->best_size.load(std::memory_order_relaxed);
      }
      if (descend) dfs(p2, u2);
      undo_include(added);
      return true;
    });
  }
};

}  // namespace

SearchResult branch_and_bound_max(const SearchProblem& problem, const BnbOptions& options) {
  problem.validate();
  check_cap(problem, 500, "branch_and_bound_max");

  BnbShared shared;
  shared.prob = problem;
  shared.options = &options;
  shared.cand = universe_masks(problem.n, problem.k);
  shared.ncand = static_cast<int>(shared.cand.size());
  shared.nwords = (shared.ncand + 63) / 64;
  shared.next_checkpoint.store(options.checkpoint_every_nodes);
  // Pairwise reduction: a nontrivial d-wise t-intersecting family is
  // (t+d-2)-intersecting, so incompatible pairs can never coexist.
  shared.pair_threshold = problem.t + (problem.require_nontrivial ? problem.d - 2 : 0);

  shared.adj.assign(static_cast<std::size_t>(shared.ncand), CandBits{});
  bool complete = true;
  for (int i = 0; i < shared.ncand; ++i) {
    for (int j = i + 1; j < shared.ncand; ++j) {
      if (std::popcount(shared.cand[static_cast<std::size_t>(i)] &
                        shared.cand[static_cast<std::size_t>(j)]) >=
          shared.pair_threshold) {
        shared.adj[static_cast<std::size_t>(i)].set(j);
        shared.adj[static_cast<std::size_t>(j)].set(i);
      } else {
        complete = false;
      }
    }
  }
  shared.adj_complete = complete;

  for (int x = 0; x < problem.n; ++x)
    for (int i = 0; i < shared.ncand; ++i)
      if ((shared.cand[static_cast<std::size_t>(i)] >> x) & 1)
        shared.star_of[static_cast<std::size_t>(x)].set(i);

  if (problem.d == 3) {
    shared.pair_ok.assign(
        static_cast<std::size_t>(shared.ncand) * static_cast<std::size_t>(shared.ncand),
        CandBits{});
    for (int i = 0; i < shared.ncand; ++i) {
      for (int j = i; j < shared.ncand; ++j) {
        const std::uint32_t meet = shared.cand[static_cast<std::size_t>(i)] &
                                   shared.cand[static_cast<std::size_t>(j)];
        CandBits row;
        for (int l = 0; l < shared.ncand; ++l)
          if (std::popcount(meet & shared.cand[static_cast<std::size_t>(l)]) >= problem.t)
            row.set(l);
        shared.pair_ok[static_cast<std::size_t>(i) * static_cast<std::size_t>(shared.ncand) +
                       static_cast<std::size_t>(j)] = row;
        shared.pair_ok[static_cast<std::size_t>(j) * static_cast<std::size_t>(shared.ncand) +
                       static_cast<std::size_t>(i)] = row;
      }
    }
  }

  if (options.seed_family) {
    const SetFamily& seed = *options.seed_family;
    if (seed.ground_size() != problem.n ||
        (seed.uniform_size() && *seed.uniform_size() != problem.k))
      throw std::invalid_argument("seed family does not match the problem");
    if (!is_d_wise_t_intersecting(seed, problem.d, problem.t).ok ||
        (problem.require_nontrivial && !is_nontrivial(seed, problem.t)))
      throw std::invalid_argument("seed family fails the problem constraints");
    std::lock_guard<std::mutex> lock(shared.best_mutex);
    for (const ElementSet& s : seed.members())
      shared.best_masks.push_back(static_cast<std::uint32_t>(s.word(0)));
    shared.best_size.store(static_cast<int>(seed.size()));
    shared.history.emplace_back(static_cast<int>(seed.size()), 0);
  }

  // Root symmetry breaking: some optimum maps its least member to [k];
  // candidate 0 is [k] in mask order.
  {
    BnbWorker probe;
    probe.shared = &shared;
    probe.init();
    std::array<int, 8> added{};
    probe.include(0, added);
    if (!problem.require_nontrivial) shared.try_update_best(probe.chosen);
    probe.undo_include(added);
  }

  CandBits p1;
  for (int j = 1; j < shared.ncand; ++j)
    if (shared.adj[0].test(j)) p1.set(j);

  // Second-level orbit representatives under the stabilizer of [k]:
  // B_j = {1..j} u {k+1..2k-j}, one per intersection size j with [k].
  std::vector<int> second_choices;
  const int j_min = std::max(0, 2 * problem.k - problem.n);
  for (int j = problem.k - 1; j >= j_min; --j) {
    std::uint32_t mask = (j > 0 ? (std::uint32_t{1} << j) - 1 : 0u);
    mask |= ((std::uint32_t{1} << (problem.k - j)) - 1) << problem.k;
    auto it = std::lower_bound(shared.cand.begin(), shared.cand.end(), mask);
    if (it == shared.cand.end() || *it != mask)
      throw std::logic_error("orbit representative missing from the universe");
    int idx = static_cast<int>(it - shared.cand.begin());
    if (p1.test(idx)) second_choices.push_back(idx);
  }

  const int threads = std::max(1, options.threads);
  std::atomic<std::size_t> next_task{0};
  auto run_tasks = [&]() {
    BnbWorker worker;
    worker.shared = &shared;
    worker.init();
    while (!shared.stop.load(std::memory_order_relaxed)) {
      std::size_t task = next_task.fetch_add(1);
      if (task >= second_choices.size()) break;
      int second = second_choices[task];
      std::array<int, 8> added0{}, added1{};
      worker.chosen.clear();
      for (auto& lvl : worker.levels) lvl.clear();
      // Including [k] first creates no (d-1)-level masks, so p1 (adjacency
      // with [k], indices above 0) is the viable set for the second level.
      worker.include(0, added0);
      worker.count_node();
      worker.include(second, added1);
      worker.count_node();
      std::uint32_t u2 = shared.cand[0] & shared.cand[static_cast<std::size_t>(second)];
      const bool trivial_now = shared.prob.require_nontrivial &&
                               std::popcount(u2) >= shared.prob.t;
      if (!trivial_now) shared.try_update_best(worker.chosen);
      CandBits p2 = worker.filter_children(p1, second, added1);
      if (p2.any(shared.nwords)) worker.dfs(p2, u2);
      worker.undo_include(added1);
      worker.undo_include(added0);
      worker.flush_nodes();
    }
    worker.flush_nodes();
  };

  if (threads == 1) {
    run_tasks();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(run_tasks);
    for (auto& th : pool) th.join();
  }

  SearchStatus status = shared.budget_hit.load() ? SearchStatus::BudgetExhausted
                                                 : SearchStatus::Optimal;
  SearchResult result = shared.snapshot(status);
  verify_witness(problem, result.witness);
  return result;
}

}  // namespace ekrw
