#include <doctest.h>

#include <bit>

#include "ekrw/graphfam.hpp"
#include "ekrw/numbers.hpp"

using namespace ekrw;

namespace {

// Every labelled graph on n vertices, as raw edge masks (n small).
long count_members_exhaustively(const GraphFamilyParams& params) {
  const int bits = LabeledGraph::edge_count(params.n);
  REQUIRE(bits <= 22);
  long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    LabeledGraph g(params.n);
    for (int b = 0; b < bits; ++b)
      if ((mask >> b) & 1) g.set_bit(b);
    if (is_member(params, g)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("edge indexing is the fixed lexicographic pair order") {
  CHECK(LabeledGraph::pair_index(5, 1, 2) == 0);
  CHECK(LabeledGraph::pair_index(5, 1, 5) == 3);
  CHECK(LabeledGraph::pair_index(5, 2, 3) == 4);
  CHECK(LabeledGraph::pair_index(5, 4, 5) == 9);
  CHECK(LabeledGraph::pair_index(5, 5, 4) == 9);  // unordered
  CHECK_THROWS(LabeledGraph::pair_index(5, 3, 3));
  LabeledGraph g(5);
  g.set_edge(2, 3);
  CHECK(g.has_edge(3, 2));
  CHECK(g.edge_total() == 1);
}

TEST_CASE("closed-form count at (5,1,2) and the EKR comparison") {
  GraphFamilyCount c = count_kst_family(5, 1, 2);
  CHECK(c.count == 320);      // 5 * 2^6
  CHECK(c.ekr_count == 256);  // 2^(10-2)
  CHECK(c.exceeds);
  CHECK(c.condition_holds);   // 2 > 2^2 - 2 - 1 = 1
}

TEST_CASE("count comparison flag tracks the threshold exactly") {
  for (int s = 1; s <= 3; ++s) {
    const long threshold = (1L << (2 * s)) - 2 * s - 1;
    for (int t = 1; t <= (1 << (2 * s)) + 2; ++t) {
      int n = 3 * s + t;
      GraphFamilyCount c = count_kst_family(n, s, t);
      CHECK_MESSAGE(c.exceeds == (t > threshold), "s=", s, " t=", t);
      CHECK(c.condition_holds == (t > threshold));
    }
  }
}

TEST_CASE("boundary: s=1, t=1 falls below the EKR count") {
  GraphFamilyCount c = count_kst_family(9, 1, 1);
  CHECK(c.count == BigCount(4) * pow2(33));
  CHECK(c.ekr_count == pow2(35));
  CHECK(!c.exceeds);
}

TEST_CASE("exhaustive membership oracle confirms the closed form") {
  GraphFamilyParams p5{5, {1}, 2, -1};
  CHECK(count_members_exhaustively(p5) == 320);

  // One vertex larger: closed form scales by 2^(new free pairs).
  GraphFamilyParams p6{6, {1}, 2, -1};
  GraphFamilyCount c6 = count_kst_family(6, 1, 2);
  CHECK(BigCount(count_members_exhaustively(p6)) == c6.count);
}

TEST_CASE("multipartite closed form validated by the exhaustive oracle") {
  GraphFamilyParams p{7, {1, 1}, 1, -1};
  GraphFamilyCount c = count_multipartite_family(7, {1, 1}, 1);
  CHECK(BigCount(count_members_exhaustively(p)) == c.count);
}

TEST_CASE("multipartite with one part reduces to the bipartite count") {
  for (int t = 1; t <= 4; ++t) {
    GraphFamilyCount a = count_kst_family(6 + t, 2, t);
    GraphFamilyCount b = count_multipartite_family(6 + t, {2}, t);
    CHECK(a.count == b.count);
    CHECK(a.ekr_count == b.ekr_count);
    CHECK(a.exceeds == b.exceeds);
  }
}

TEST_CASE("multipartite comparison boundary") {
  CHECK(count_multipartite_family(8 + 12, {1, 1}, 12).exceeds);    // 12 > 2^4-5 = 11
  CHECK(!count_multipartite_family(9 + 11, {1, 1}, 11).exceeds);   // boundary
}

TEST_CASE("member graphs are injective over their parametrization") {
  GraphFamilyParams params{5, {1}, 2, -1};
  LabeledGraph empty_free(5);
  // 5 valid neighborhoods in a 4-element R: the full one and four of size 3.
  std::vector<std::uint64_t> nbhds;
  for (std::uint64_t m = 0; m < 16; ++m)
    if (std::popcount(m) >= 3) nbhds.push_back(m);
  CHECK(nbhds.size() == 5);
  std::vector<LabeledGraph> built;
  for (std::uint64_t nb : nbhds) {
    LabeledGraph g = member_graph(params, {nb}, empty_free);
    CHECK(is_member(params, g));
    for (const LabeledGraph& seen : built) CHECK(!(seen == g));
    built.push_back(g);
  }
  CHECK_THROWS(member_graph(params, {std::uint64_t{0b0011}}, empty_free));

  // Free edges must avoid the S x R block.
  LabeledGraph bad_free(5);
  bad_free.set_edge(1, 2);  // vertex 1 is S, vertex 2 is in R
  CHECK_THROWS(member_graph(params, {nbhds[0]}, bad_free));
}

TEST_CASE("a member with two missing R-edges at an S-vertex is rejected") {
  GraphFamilyParams params{5, {1}, 2, -1};
  LabeledGraph empty_free(5);
  LabeledGraph g = member_graph(params, {std::uint64_t{0b1111}}, empty_free);
  g.set_edge(1, 2, false);
  g.set_edge(1, 3, false);
  CHECK(!is_member(params, g));
}

TEST_CASE("exhaustive core verification") {
  for (int t = 1; t <= 3; ++t) {
    GraphFamilyParams params{3 + t + 2, {1}, t, -1};
    IntersectReport r = verify_intersecting(params, VerifyMode::ExhaustiveCore);
    CHECK(r.ok);
    CHECK(r.pairs_checked == (t + 3) * (t + 3));
  }
  {
    GraphFamilyParams params{2 + 12 + 4, {2}, 12, -1};
    IntersectReport r = verify_intersecting(params, VerifyMode::ExhaustiveCore);
    CHECK(r.ok);
    CHECK(r.pairs_checked == 17L * 17 * 17 * 17);
  }
}

TEST_CASE("mutation: lowering the degree threshold breaks the construction") {
  GraphFamilyParams params{5, {1}, 2, -1};
  params.min_degree = params.r_size() - 2;  // t+2s-2 instead of t+2s-1
  IntersectReport r = verify_intersecting(params, VerifyMode::ExhaustiveCore);
  CHECK(!r.ok);
  REQUIRE(r.witness);
  // The witness pair genuinely misses the common-neighbor target.
  LabeledGraph meet = r.witness->first & r.witness->second;
  CHECK(!contains_fixed_kst(meet, {1}, params.t));
}

TEST_CASE("sampled verification is deterministic in the seed") {
  GraphFamilyParams params{6, {1}, 2, -1};
  VerifyOptions opt;
  opt.sample_pairs = 200;
  opt.seed = 12345;
  IntersectReport a = verify_intersecting(params, VerifyMode::Sampled, opt);
  CHECK(a.ok);
  opt.threads = 4;
  IntersectReport b = verify_intersecting(params, VerifyMode::Sampled, opt);
  CHECK(b.ok == a.ok);
  CHECK(b.pairs_checked == a.pairs_checked);
}

TEST_CASE("fixed K_{s,t} containment") {
  LabeledGraph complete(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) complete.set_edge(i, j);
  CHECK(contains_fixed_kst(complete, {1}, 3));
  LabeledGraph empty(5);
  CHECK(!contains_fixed_kst(empty, {1}, 1));
}

TEST_CASE("parameter guards") {
  CHECK_THROWS(count_kst_family(4, 1, 2));  // needs n >= 3s+t = 5
  GraphFamilyParams params{20, {1}, 1, -1};
  VerifyOptions opt;
  CHECK_NOTHROW(params.validate());
  GraphFamilyParams too_many{40, {3}, 30, -1};
  CHECK_THROWS(verify_intersecting(too_many, VerifyMode::ExhaustiveCore, opt));
}
