#include "ekrw/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ekrw {
namespace {

using Key = std::vector<long>;

/// Iterated refinement: start from (degree, member-size profile), then
/// split by multisets of (class, co-degree) pairs until stable.  Class ids
/// are assigned in sorted key order, which is label-free and therefore
/// permutation-invariant.
std::vector<int> refine_classes(const SetFamily& family) {
  const int n = family.ground_size();
  const auto& members = family.members();
  const int m = static_cast<int>(members.size());

  std::vector<Key> keys(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    Key& key = keys[static_cast<std::size_t>(x - 1)];
    std::vector<long> sizes;
    for (const ElementSet& s : members)
      if (s.contains(x)) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    key.push_back(static_cast<long>(sizes.size()));  // degree
    key.insert(key.end(), sizes.begin(), sizes.end());
  }

  auto assign = [&](const std::vector<Key>& ks) {
    std::map<Key, int> order;
    for (const Key& k : ks) order.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : order) id = next++;
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) cls[static_cast<std::size_t>(x)] = order[ks[static_cast<std::size_t>(x)]];
    return cls;
  };

  std::vector<int> cls = assign(keys);
  int classes = 1 + *std::max_element(cls.begin(), cls.end());

  // Pairwise co-degrees.
  std::vector<std::vector<int>> codeg(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < m; ++i) {
    auto elems = members[static_cast<std::size_t>(i)].elements();
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        ++codeg[static_cast<std::size_t>(elems[a] - 1)][static_cast<std::size_t>(elems[b] - 1)];
        ++codeg[static_cast<std::size_t>(elems[b] - 1)][static_cast<std::size_t>(elems[a] - 1)];
      }
  }

  while (true) {
    std::vector<Key> next(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      Key& key = next[static_cast<std::size_t>(x)];
      key.push_back(cls[static_cast<std::size_t>(x)]);
      std::vector<std::pair<long, long>> pairs;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        pairs.emplace_back(cls[static_cast<std::size_t>(y)],
                           codeg[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      }
      std::sort(pairs.begin(), pairs.end());
      for (auto& [c, cd] : pairs) {
        key.push_back(c);
        key.push_back(cd);
      }
    }
    std::vector<int> refined = assign(next);
    int refined_classes = 1 + *std::max_element(refined.begin(), refined.end());
    if (refined_classes == classes) return cls;
    cls = std::move(refined);
    classes = refined_classes;
  }
}

struct Cell {
  ElementSet mask;  // original elements in this cell
  int lo = 1;       // first canonical position of the cell's range
  bool symmetric = false;
};

/// True iff every transposition inside the cell fixes the family, i.e. the
/// full symmetric group on the cell's elements consists of automorphisms.
bool cell_symmetric(const SetFamily& family, const ElementSet& cell) {
  const int n = family.ground_size();
  auto elems = cell.elements();
  if (elems.size() <= 1) return true;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i + 1 <= elems.size(); ++i) {
    std::iota(perm.begin(), perm.end(), 1);
    std::swap(perm[static_cast<std::size_t>(elems[i - 1] - 1)],
              perm[static_cast<std::size_t>(elems[i] - 1)]);
    if (!(family.permuted(perm) == family)) return false;
  }
  return true;
}

struct Search {
  const SetFamily* family = nullptr;
  int n = 0;

  bool have_best = false;
  std::vector<ElementSet> best_seq;
  std::vector<int> best_perm;

  /// Minimal canonical mask member `mi` can occupy under the given cells.
  ElementSet placed_mask(const ElementSet& member, const std::vector<Cell>& cells) const {
    ElementSet v(n);
    for (const Cell& c : cells) {
      int cnt = member.intersection_size(c.mask);
      if (cnt > 0) v = v | ElementSet::window(n, c.lo, c.lo + cnt - 1);
    }
    return v;
  }

  std::vector<int> finish_permutation(const std::vector<Cell>& cells) const {
    std::vector<int> perm(static_cast<std::size_t>(n), 0);
    for (const Cell& c : cells) {
      int pos = c.lo;
      for (int e : c.mask.elements()) perm[static_cast<std::size_t>(e - 1)] = pos++;
    }
    return perm;
  }

  // cmp: 0 while the sequence equals the incumbent prefix, -1 once it is
  // strictly smaller (no further pruning possible on this branch).
  void dfs(std::vector<Cell> cells, std::vector<int> remaining,
           std::vector<ElementSet>& seq, int cmp) {
    if (remaining.empty()) {
      if (!have_best || cmp < 0) {
        have_best = true;
        best_seq = seq;
        best_perm = finish_permutation(cells);
      }
      return;
    }

    const auto& members = family->members();
    std::optional<ElementSet> min_mask;
    for (int mi : remaining) {
      ElementSet v = placed_mask(members[static_cast<std::size_t>(mi)], cells);
      if (!min_mask || v < *min_mask) min_mask = v;
    }

    if (have_best && cmp == 0) {
      std::size_t depth = seq.size();
      if (*min_mask > best_seq[depth]) return;
      if (*min_mask < best_seq[depth]) cmp = -1;
    }

    // Candidates achieving the minimum, grouped by their intersections
    // with asymmetric cells: within-symmetric-cell differences are
    // reachable by automorphisms, so one representative per group suffices.
    std::vector<int> reps;
    std::vector<std::vector<std::uint64_t>> rep_keys;
    for (int mi : remaining) {
      const ElementSet& mem = members[static_cast<std::size_t>(mi)];
      if (!(placed_mask(mem, cells) == *min_mask)) continue;
      std::vector<std::uint64_t> key;
      for (const Cell& c : cells) {
        if (c.symmetric) continue;
        ElementSet inter = mem & c.mask;
        key.push_back(inter.word(0));
        key.push_back(inter.word(1));
      }
      if (std::find(rep_keys.begin(), rep_keys.end(), key) != rep_keys.end()) continue;
      rep_keys.push_back(std::move(key));
      reps.push_back(mi);
    }

    for (int mi : reps) {
      const ElementSet& mem = members[static_cast<std::size_t>(mi)];
      std::vector<Cell> refined;
      refined.reserve(cells.size() + 4);
      for (const Cell& c : cells) {
        ElementSet in = c.mask & mem;
        ElementSet out = c.mask - mem;
        int in_count = in.size();
        if (in_count > 0) {
          Cell sub{in, c.lo, c.symmetric || cell_symmetric(*family, in)};
          refined.push_back(sub);
        }
        if (!out.empty()) {
          Cell sub{out, c.lo + in_count, c.symmetric || cell_symmetric(*family, out)};
          refined.push_back(sub);
        }
      }
      std::vector<int> rest;
      rest.reserve(remaining.size() - 1);
      for (int other : remaining)
        if (other != mi) rest.push_back(other);
      seq.push_back(*min_mask);
      dfs(std::move(refined), std::move(rest), seq, cmp);
      seq.pop_back();
    }
  }
};

}  // namespace

CanonicalResult canonical_form(const SetFamily& family) {
  const int n = family.ground_size();
  if (n > kCanonicalLimit)
    throw std::invalid_argument("canonicalization limit: n must be <= 16");

  std::vector<int> cls = refine_classes(family);
  int classes = 1 + *std::max_element(cls.begin(), cls.end());

  std::vector<Cell> cells;
  int lo = 1;
  for (int c = 0; c < classes; ++c) {
    ElementSet mask(n);
    for (int x = 1; x <= n; ++x)
      if (cls[static_cast<std::size_t>(x - 1)] == c) mask.add(x);
    if (mask.empty()) continue;
    Cell cell{mask, lo, cell_symmetric(family, mask)};
    lo += mask.size();
    cells.push_back(cell);
  }

  Search search;
  search.family = &family;
  search.n = n;

  bool all_symmetric = std::all_of(cells.begin(), cells.end(),
                                   [](const Cell& c) { return c.symmetric; });
  if (all_symmetric) {
    // Every cell-respecting relabeling is an automorphism composition:
    // any one of them realizes the canonical form.
    std::vector<int> perm = search.finish_permutation(cells);
    SetFamily canon = family.permuted(perm);
    return CanonicalResult{std::move(canon), std::move(perm)};
  }

  std::vector<int> remaining(family.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<ElementSet> seq;
  search.dfs(std::move(cells), std::move(remaining), seq, 0);
  SetFamily canon = SetFamily::from_sorted_unique(n, family.uniform_size(),
                                                  std::move(search.best_seq));
  return CanonicalResult{std::move(canon), std::move(search.best_perm)};
}

std::optional<std::vector<int>> are_isomorphic(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("ground set sizes differ");
  if (a.size() != b.size()) return std::nullopt;
  CanonicalResult ca = canonical_form(a);
  CanonicalResult cb = canonical_form(b);
  if (!(ca.canonical.members() == cb.canonical.members())) return std::nullopt;
  const int n = a.ground_size();
  std::vector<int> inv_b(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    inv_b[static_cast<std::size_t>(cb.permutation[static_cast<std::size_t>(x - 1)] - 1)] = x;
  std::vector<int> witness(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    witness[static_cast<std::size_t>(x - 1)] =
        inv_b[static_cast<std::size_t>(ca.permutation[static_cast<std::size_t>(x - 1)] - 1)];
  if (!(a.permuted(witness).members() == b.members()))
    throw std::logic_error("canonicalizer produced an invalid witness");
  return witness;
}

CanonicalResult canonical_form_brute(const SetFamily& family) {
  const int n = family.ground_size();
  if (n > 8) throw std::invalid_argument("brute-force canonicalizer limited to n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<CanonicalResult> best;
  do {
    SetFamily candidate = family.permuted(perm);
    if (!best || candidate.members() < best->canonical.members())
      best = CanonicalResult{candidate, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace ekrw
