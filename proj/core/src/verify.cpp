#include "ekrw/verify.hpp"

#include <stdexcept>

namespace ekrw {
namespace {

void check_params(int d, int t) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
}

ViolationWitness make_tuple_witness(const std::vector<ElementSet>& members,
                                    const std::vector<int>& idx, int isize) {
  ViolationWitness w;
  w.kind = ViolationWitness::Kind::Tuple;
  for (int i : idx) w.sets.push_back(members[static_cast<std::size_t>(i)]);
  w.intersection_size = isize;
  return w;
}

/// DFS over index combinations; once the running intersection is < t the
/// lexicographically first completion is already a violating d-subset.
bool dwise_dfs(const std::vector<ElementSet>& members, int d, int t, int start,
               std::vector<int>& chosen, const ElementSet& running,
               CheckResult& out) {
  const int m = static_cast<int>(members.size());
  const int depth = static_cast<int>(chosen.size());
  if (depth == d) return true;  // running >= t guaranteed by the caller
  for (int i = start; m - i >= d - depth; ++i) {
    ElementSet next = running.ground_size() == 0
                          ? members[static_cast<std::size_t>(i)]
                          : (running & members[static_cast<std::size_t>(i)]);
    chosen.push_back(i);
    if (next.size() < t) {
      // Complete with the smallest available indices: intersection only
      // shrinks, so this is a violating d-subset.
      std::vector<int> full = chosen;
      ElementSet acc = next;
      for (int j = i + 1; static_cast<int>(full.size()) < d; ++j) {
        full.push_back(j);
        acc &= members[static_cast<std::size_t>(j)];
      }
      out.ok = false;
      out.witness = make_tuple_witness(members, full, acc.size());
      return false;
    }
    if (!dwise_dfs(members, d, t, i + 1, chosen, next, out)) return false;
    chosen.pop_back();
  }
  return true;
}

}  // namespace

CheckResult is_d_wise_t_intersecting(const SetFamily& family, int d, int t) {
  check_params(d, t);
  CheckResult result;
  const auto& members = family.members();
  if (members.empty()) return result;  // vacuous
  if (static_cast<int>(members.size()) < d) {
    // All tuples collapse to subsets of the available members; the full
    // intersection is the minimal one.
    auto global = family.global_intersection();
    if (global->size() < t) {
      result.ok = false;
      ViolationWitness w;
      w.kind = ViolationWitness::Kind::Tuple;
      w.sets = members;
      w.intersection_size = global->size();
      result.witness = w;
    }
    return result;
  }
  std::vector<int> chosen;
  ElementSet none;  // ground_size 0 sentinel: running intersection not started
  dwise_dfs(members, d, t, 0, chosen, none, result);
  return result;
}

CheckResult is_d_wise_t_intersecting_naive(const SetFamily& family, int d, int t) {
  check_params(d, t);
  CheckResult result;
  const auto& members = family.members();
  const int m = static_cast<int>(members.size());
  if (m == 0) return result;
  if (m < d) return is_d_wise_t_intersecting(family, d, t);
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    ElementSet acc = members[static_cast<std::size_t>(idx[0])];
    for (int i = 1; i < d; ++i) acc &= members[static_cast<std::size_t>(idx[i])];
    if (acc.size() < t) {
      result.ok = false;
      result.witness = make_tuple_witness(members, idx, acc.size());
      return result;
    }
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - d + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < d; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return result;
}

bool is_nontrivial(const SetFamily& family, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  auto global = family.global_intersection();
  if (!global)
    throw std::invalid_argument("nontriviality undefined for the empty family");
  return global->size() < t;
}

namespace {

bool lemma_dfs(const std::vector<ElementSet>& members, int d, int t, int start,
               std::vector<int>& chosen, const ElementSet& running,
               CheckResult& out) {
  const int m = static_cast<int>(members.size());
  const int depth = static_cast<int>(chosen.size());
  if (depth == d) return true;
  for (int i = start; i < m; ++i) {
    ElementSet next = depth == 0 ? members[static_cast<std::size_t>(i)]
                                 : (running & members[static_cast<std::size_t>(i)]);
    chosen.push_back(i);
    // At depth m the requirement is t + d - m.
    if (next.size() < t + d - static_cast<int>(chosen.size())) {
      out.ok = false;
      out.witness = make_tuple_witness(members, chosen, next.size());
      out.witness->kind = ViolationWitness::Kind::Lemma;
      return false;
    }
    if (!lemma_dfs(members, d, t, i + 1, chosen, next, out)) return false;
    chosen.pop_back();
  }
  return true;
}

}  // namespace

CheckResult check_m_wise_lemma(const SetFamily& family, int d, int t) {
  check_params(d, t);
  if (family.empty() || !is_d_wise_t_intersecting(family, d, t).ok ||
      !is_nontrivial(family, t))
    throw std::invalid_argument(
        "lemma hypothesis fails: family must be nontrivial d-wise t-intersecting");
  CheckResult result;
  std::vector<int> chosen;
  ElementSet none;
  lemma_dfs(family.members(), d, t, 0, chosen, none, result);
  return result;
}

}  // namespace ekrw
