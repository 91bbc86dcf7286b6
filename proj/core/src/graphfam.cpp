#include "ekrw/graphfam.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace ekrw {

LabeledGraph::LabeledGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  bits_.assign(static_cast<std::size_t>((edge_count(n) + 63) / 64), 0);
}

int LabeledGraph::pair_index(int n, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::out_of_range("invalid vertex pair");
  if (i > j) std::swap(i, j);
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

bool LabeledGraph::bit(int index) const {
  return (bits_[static_cast<std::size_t>(index >> 6)] >> (index & 63)) & 1;
}

void LabeledGraph::set_bit(int index, bool present) {
  std::uint64_t mask = std::uint64_t{1} << (index & 63);
  if (present)
    bits_[static_cast<std::size_t>(index >> 6)] |= mask;
  else
    bits_[static_cast<std::size_t>(index >> 6)] &= ~mask;
}

bool LabeledGraph::has_edge(int i, int j) const { return bit(pair_index(n_, i, j)); }

void LabeledGraph::set_edge(int i, int j, bool present) {
  set_bit(pair_index(n_, i, j), present);
}

int LabeledGraph::edge_total() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

LabeledGraph LabeledGraph::operator&(const LabeledGraph& o) const {
  if (n_ != o.n_) throw std::invalid_argument("vertex counts differ");
  LabeledGraph r(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
  return r;
}

LabeledGraph LabeledGraph::operator|(const LabeledGraph& o) const {
  if (n_ != o.n_) throw std::invalid_argument("vertex counts differ");
  LabeledGraph r(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
  return r;
}

bool LabeledGraph::disjoint_from(const LabeledGraph& o) const {
  if (n_ != o.n_) throw std::invalid_argument("vertex counts differ");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & o.bits_[i]) return false;
  return true;
}

int GraphFamilyParams::sigma() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

void GraphFamilyParams::validate() const {
  if (parts.empty()) throw std::invalid_argument("at least one part required");
  for (int s : parts)
    if (s < 1) throw std::invalid_argument("part sizes must be >= 1");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const int need = sigma() + r_size();
  if (n < need)
    throw std::invalid_argument("n too small: need n >= 3*sigma + t = " +
                                std::to_string(need));
  if (degree_threshold() < 0 || degree_threshold() > r_size())
    throw std::invalid_argument("degree threshold outside [0,|R|]");
}

namespace {

GraphFamilyCount count_common(int n, int sigma, int t, const BigCount& forced_cross) {
  GraphFamilyCount out;
  const long edges = static_cast<long>(n) * (n - 1) / 2;
  BigCount star_choices = ipow(BigInt(t + 2 * sigma + 1), static_cast<unsigned long>(sigma));
  BigCount free_exponent = BigCount(edges) - sigma * (t + 2 * sigma) - forced_cross;
  out.count = star_choices * pow2(free_exponent.get_ui());
  BigCount ekr_exponent = BigCount(edges) - forced_cross - BigCount(sigma) * t;
  out.ekr_count = pow2(ekr_exponent.get_ui());
  out.exceeds = out.count > out.ekr_count;
  out.condition_holds = BigCount(t) > pow2(static_cast<unsigned long>(2 * sigma)) - 2 * sigma - 1;
  return out;
}

}  // namespace

GraphFamilyCount count_kst_family(int n, int s, int t) {
  GraphFamilyParams params{n, {s}, t, -1};
  params.validate();
  return count_common(n, s, t, 0);
}

GraphFamilyCount count_multipartite_family(int n, const std::vector<int>& parts, int t) {
  GraphFamilyParams params{n, parts, t, -1};
  params.validate();
  BigCount cross = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      cross += static_cast<long>(parts[i]) * parts[j];
  return count_common(n, params.sigma(), t, cross);
}

LabeledGraph free_edge_positions(const GraphFamilyParams& params) {
  params.validate();
  if (params.r_size() > 62)
    throw std::invalid_argument("R too large for mask arithmetic");
  const int n = params.n;
  const int sigma = params.sigma();
  const int r_lo = params.r_first();
  const int r_hi = sigma + params.r_size();
  LabeledGraph mask(n);
  // Part id per S-vertex (0 when outside S).
  std::vector<int> part_of(static_cast<std::size_t>(n + 1), 0);
  int v = 1;
  for (std::size_t pi = 0; pi < params.parts.size(); ++pi)
    for (int c = 0; c < params.parts[static_cast<std::size_t>(pi)]; ++c)
      part_of[static_cast<std::size_t>(v++)] = static_cast<int>(pi) + 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool i_in_s = i <= sigma;
      bool j_in_s = j <= sigma;
      bool j_in_r = j >= r_lo && j <= r_hi;
      if (i_in_s && j_in_r) continue;  // S x R position
      if (i_in_s && j_in_s &&
          part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
        continue;  // forced cross-part edge
      mask.set_edge(i, j);
    }
  }
  return mask;
}

LabeledGraph member_graph(const GraphFamilyParams& params,
                          const std::vector<std::uint64_t>& neighborhoods,
                          const LabeledGraph& free_edges) {
  params.validate();
  if (params.r_size() > 62)
    throw std::invalid_argument("R too large for mask arithmetic");
  const int sigma = params.sigma();
  if (static_cast<int>(neighborhoods.size()) != sigma)
    throw std::invalid_argument("one neighborhood mask per S-vertex required");
  const int rs = params.r_size();
  const std::uint64_t r_full = (std::uint64_t{1} << rs) - 1;
  for (std::uint64_t nb : neighborhoods) {
    if (nb & ~r_full) throw std::invalid_argument("neighborhood outside R");
    if (std::popcount(nb) < params.degree_threshold())
      throw std::invalid_argument("neighborhood below the degree threshold");
  }
  if (free_edges.vertex_count() != params.n)
    throw std::invalid_argument("free-edge mask vertex count mismatch");
  LabeledGraph allowed = free_edge_positions(params);
  if (!((free_edges & allowed) == free_edges))
    throw std::invalid_argument("free edges overlap structured positions");

  LabeledGraph g = free_edges;
  // Forced cross-part edges.
  std::vector<int> starts;
  int v = 1;
  for (int s : params.parts) {
    starts.push_back(v);
    v += s;
  }
  for (std::size_t a = 0; a < params.parts.size(); ++a)
    for (std::size_t b = a + 1; b < params.parts.size(); ++b)
      for (int i = 0; i < params.parts[a]; ++i)
        for (int j = 0; j < params.parts[b]; ++j)
          g.set_edge(starts[a] + i, starts[b] + j);
  // S x R edges from the chosen neighborhoods.
  const int r_lo = params.r_first();
  for (int i = 0; i < sigma; ++i) {
    std::uint64_t nb = neighborhoods[static_cast<std::size_t>(i)];
    while (nb) {
      int j = std::countr_zero(nb);
      g.set_edge(i + 1, r_lo + j);
      nb &= nb - 1;
    }
  }
  return g;
}

bool is_member(const GraphFamilyParams& params, const LabeledGraph& g) {
  params.validate();
  if (g.vertex_count() != params.n) return false;
  const int sigma = params.sigma();
  const int r_lo = params.r_first();
  const int r_hi = sigma + params.r_size();
  for (int i = 1; i <= sigma; ++i) {
    int deg = 0;
    for (int j = r_lo; j <= r_hi; ++j)
      if (g.has_edge(i, j)) ++deg;
    if (deg < params.degree_threshold()) return false;
  }
  if (params.multipartite()) {
    std::vector<int> starts;
    int v = 1;
    for (int s : params.parts) {
      starts.push_back(v);
      v += s;
    }
    for (std::size_t a = 0; a < params.parts.size(); ++a)
      for (std::size_t b = a + 1; b < params.parts.size(); ++b)
        for (int i = 0; i < params.parts[a]; ++i)
          for (int j = 0; j < params.parts[b]; ++j)
            if (!g.has_edge(starts[a] + i, starts[b] + j)) return false;
  }
  return true;
}

bool contains_fixed_kst(const LabeledGraph& g, const std::vector<int>& s_vertices, int t) {
  const int n = g.vertex_count();
  int common = 0;
  for (int v = 1; v <= n; ++v) {
    bool in_s = false;
    for (int s : s_vertices)
      if (s == v) in_s = true;
    if (in_s) continue;
    bool adjacent_to_all = true;
    for (int s : s_vertices)
      if (!g.has_edge(s, v)) {
        adjacent_to_all = false;
        break;
      }
    if (adjacent_to_all) ++common;
  }
  return common >= t;
}

namespace {

/// Number of admissible neighborhoods: sum of C(|R|, j) over j >= threshold.
BigCount neighborhood_count(const GraphFamilyParams& params) {
  BigCount total = 0;
  for (int j = params.degree_threshold(); j <= params.r_size(); ++j)
    total += binomial(params.r_size(), j);
  return total;
}

/// Enumerated through the missing-element sets, so the cost is the output
/// size rather than 2^|R|.
std::vector<std::uint64_t> valid_neighborhoods(const GraphFamilyParams& params) {
  const int rs = params.r_size();
  const int threshold = params.degree_threshold();
  const std::uint64_t full = (std::uint64_t{1} << rs) - 1;
  std::vector<std::uint64_t> out;
  for (int missing = rs - threshold; missing >= 0; --missing) {
    if (missing == 0) {
      out.push_back(full);
      continue;
    }
    std::uint64_t mask = (std::uint64_t{1} << missing) - 1;
    const std::uint64_t top = std::uint64_t{1} << rs;
    while (mask < top) {
      out.push_back(full ^ mask);
      std::uint64_t c = mask & -mask;
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d649bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

IntersectReport verify_intersecting(const GraphFamilyParams& params, VerifyMode mode,
                                    const VerifyOptions& options) {
  params.validate();
  if (params.r_size() > 62)
    throw std::invalid_argument("R too large for mask arithmetic");
  const int sigma = params.sigma();
  IntersectReport report;

  if (mode == VerifyMode::ExhaustiveCore) {
    BigCount config_count = 1;
    for (int i = 0; i < sigma; ++i) config_count *= neighborhood_count(params);
    if (config_count > 10000)
      throw std::invalid_argument("mode limits exceeded: too many configurations");
    std::vector<std::uint64_t> nbhds = valid_neighborhoods(params);
    long total = 1;
    for (int i = 0; i < sigma; ++i) total *= static_cast<long>(nbhds.size());
    // Decode a config id into one neighborhood per S-vertex.
    auto config = [&](long id) {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(sigma));
      for (int i = 0; i < sigma; ++i) {
        c[static_cast<std::size_t>(i)] = nbhds[static_cast<std::size_t>(id % nbhds.size())];
        id /= static_cast<long>(nbhds.size());
      }
      return c;
    };
    for (long a = 0; a < total; ++a) {
      auto ca = config(a);
      for (long b = 0; b < total; ++b) {
        auto cb = config(b);
        ++report.pairs_checked;
        std::uint64_t common = ~std::uint64_t{0};
        for (int i = 0; i < sigma; ++i)
          common &= ca[static_cast<std::size_t>(i)] & cb[static_cast<std::size_t>(i)];
        if (std::popcount(common) < params.t) {
          report.ok = false;
          LabeledGraph empty(params.n);
          report.witness = {member_graph(params, ca, empty),
                            member_graph(params, cb, empty)};
          return report;
        }
      }
    }
    return report;
  }

  // Sampled mode: per-pair seeds make the outcome independent of the
  // thread partitioning.
  if (neighborhood_count(params) > 1000000)
    throw std::invalid_argument("mode limits exceeded: neighborhood list too large");
  std::vector<std::uint64_t> nbhds = valid_neighborhoods(params);
  const LabeledGraph free_mask = free_edge_positions(params);
  std::vector<int> s_vertices(static_cast<std::size_t>(sigma));
  std::iota(s_vertices.begin(), s_vertices.end(), 1);

  auto run_pair = [&](long pair_index) -> std::optional<std::pair<LabeledGraph, LabeledGraph>> {
    std::mt19937_64 rng(splitmix64(options.seed ^ static_cast<std::uint64_t>(pair_index)));
    auto draw_member = [&]() {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(sigma));
      for (int i = 0; i < sigma; ++i)
        c[static_cast<std::size_t>(i)] =
            nbhds[rng() % nbhds.size()];
      LabeledGraph free_edges(params.n);
      for (std::size_t w = 0; w < free_mask.words().size(); ++w) {
        std::uint64_t bits = rng() & free_mask.words()[w];
        for (int b = 0; b < 64; ++b)
          if ((bits >> b) & 1) free_edges.set_bit(static_cast<int>(w) * 64 + b);
      }
      return member_graph(params, c, free_edges);
    };
    LabeledGraph g1 = draw_member();
    LabeledGraph g2 = draw_member();
    LabeledGraph meet = g1 & g2;
    if (!contains_fixed_kst(meet, s_vertices, params.t))
      return std::make_pair(g1, g2);
    return std::nullopt;
  };

  const int threads = std::max(1, options.threads);
  std::vector<std::optional<std::pair<LabeledGraph, LabeledGraph>>> failures(
      static_cast<std::size_t>(options.sample_pairs));
  if (threads == 1) {
    for (long i = 0; i < options.sample_pairs; ++i) failures[static_cast<std::size_t>(i)] = run_pair(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (long i = w; i < options.sample_pairs; i += threads)
          failures[static_cast<std::size_t>(i)] = run_pair(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  report.pairs_checked = options.sample_pairs;
  for (auto& f : failures) {
    if (f) {
      report.ok = false;
      report.witness = *f;
      break;
    }
  }
  return report;
}

}  // namespace ekrw
