#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ekrw/set_family.hpp"

namespace ekrw {

/// Exact maximization instance: the largest (nontrivial) d-wise
/// t-intersecting subfamily of the k-subsets of [n].
struct SearchProblem {
  int n = 0, k = 0, d = 0, t = 0;
  bool require_nontrivial = true;
  std::optional<long> node_budget;

  void validate() const;  // 2 <= d, 1 <= t, t+d-1 <= k < n <= 20
};

enum class SearchStatus { Optimal, BudgetExhausted };

struct SearchResult {
  int best_size = 0;
  SetFamily witness;
  SearchStatus status = SearchStatus::Optimal;
  long nodes = 0;
  std::vector<std::pair<int, long>> incumbent_history;  // (size, node index)
};

/// Exhaustive reference search over all subfamilies, pruning supersets of
/// invalid families and exhausted remainders.  Deterministic: the witness
/// is the lexicographically least optimum.  Requires C(n,k) <= 24.
SearchResult brute_force_max(const SearchProblem& problem);

struct BnbOptions {
  int threads = 1;
  /// Constructive incumbent (checked against the problem before use).
  /// When the seed is already optimal the witness stays the seed.
  std::optional<SetFamily> seed_family;
  /// Periodic incumbent snapshots for long runs.
  std::function<void(const SearchResult&)> checkpoint_sink;
  long checkpoint_every_nodes = 1L << 26;
};

/// Branch and bound over the k-set universe in fixed mask order: pairwise
/// compatibility graph from the (t+d-2)-intersection reduction, incremental
/// (d-1)-subset intersection checks, greedy-colouring upper bounds, leaf
/// nontriviality, and root symmetry breaking (first set [k], second set an
/// orbit representative under its stabilizer).  Requires C(n,k) <= 500.
SearchResult branch_and_bound_max(const SearchProblem& problem,
                                  const BnbOptions& options = {});

}  // namespace ekrw
