#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ekrw/numbers.hpp"

namespace ekrw {

/// Labelled graph on [n] as an edge bit mask over the C(n,2) unordered
/// pairs in lexicographic order (1,2) < (1,3) < ... < (n-1,n).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);

  static int edge_count(int n) { return n * (n - 1) / 2; }
  static int pair_index(int n, int i, int j);  // 1-based, i != j

  int vertex_count() const { return n_; }
  bool has_edge(int i, int j) const;
  void set_edge(int i, int j, bool present = true);
  bool bit(int index) const;
  void set_bit(int index, bool present = true);
  int edge_total() const;  // popcount

  LabeledGraph operator&(const LabeledGraph& o) const;
  LabeledGraph operator|(const LabeledGraph& o) const;
  bool operator==(const LabeledGraph& o) const = default;

  /// True when no common bit with o (used for free-mask validation).
  bool disjoint_from(const LabeledGraph& o) const;

  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Parameters of the implicit K_{s_1,...,s_r,t}-intersecting construction:
/// parts S_1,...,S_r occupy vertices 1..sigma in order, R the next t+2*sigma
/// vertices.  Every S-vertex must see all but at most one vertex of R
/// (min_degree = t+2*sigma-1); lowering min_degree is exposed for mutation
/// tests.  The bipartite case is parts = {s}.
struct GraphFamilyParams {
  int n = 0;
  std::vector<int> parts;
  int t = 0;
  int min_degree = -1;  // default t + 2*sigma - 1

  int sigma() const;
  int r_size() const { return t + 2 * sigma(); }
  int r_first() const { return sigma() + 1; }
  int degree_threshold() const { return min_degree >= 0 ? min_degree : r_size() - 1; }
  bool multipartite() const { return parts.size() > 1; }
  void validate() const;  // n >= sigma + r_size(), parts/t positive
};

struct GraphFamilyCount {
  BigCount count;       // family size from the closed form
  BigCount ekr_count;   // 2^(C(n,2) - |E(H)|)
  bool exceeds = false;          // count > ekr_count
  bool condition_holds = false;  // t > 2^(2 sigma) - 2 sigma - 1
};

/// Closed form (t+2s+1)^s 2^(C(n,2)-s(t+2s)) against the EKR-type count.
GraphFamilyCount count_kst_family(int n, int s, int t);

/// Multipartite closed form
/// (t+2o+1)^o 2^(C(n,2) - o(t+2o) - sum_{i<j} s_i s_j), o = sum s_i.
GraphFamilyCount count_multipartite_family(int n, const std::vector<int>& parts, int t);

/// One member from its parametrization: a neighborhood mask in R per
/// S-vertex (bit j-1 = j-th vertex of R) plus free edges on the remaining
/// pairs.  Injective over valid inputs.
LabeledGraph member_graph(const GraphFamilyParams& params,
                          const std::vector<std::uint64_t>& neighborhoods,
                          const LabeledGraph& free_edges);

bool is_member(const GraphFamilyParams& params, const LabeledGraph& g);

/// Positions a member graph may use freely (neither S x R nor forced
/// cross-part pairs).
LabeledGraph free_edge_positions(const GraphFamilyParams& params);

enum class VerifyMode { ExhaustiveCore, Sampled };

struct VerifyOptions {
  long sample_pairs = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct IntersectReport {
  bool ok = true;
  long pairs_checked = 0;
  /// On failure: the two member graphs whose intersection misses the target.
  std::optional<std::pair<LabeledGraph, LabeledGraph>> witness;
};

/// ExhaustiveCore walks every ordered pair of S x R configurations and
/// checks that the S-vertices keep >= t common R-neighbors; Sampled draws
/// random full members (free edges included), intersects, and checks the
/// fixed K_{s,t} (per-pair seeds derive from the root seed, so the outcome
/// is independent of the thread count).
IntersectReport verify_intersecting(const GraphFamilyParams& params, VerifyMode mode,
                                    const VerifyOptions& options = {});

/// >= t common neighbors of S outside S.
bool contains_fixed_kst(const LabeledGraph& g, const std::vector<int>& s_vertices, int t);

}  // namespace ekrw
