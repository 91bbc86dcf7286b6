#include <doctest.h>

#include "ekrw/constructions.hpp"
#include "ekrw/counting.hpp"
#include "ekrw/subsets.hpp"

using namespace ekrw;

TEST_CASE("spec parsing round trips") {
  for (const char* text : {"A(11,7,3)", "H(9,5,3)", "M(11,7,3,3)", "T(12,8,3,1)",
                           "star(5,3,2)", "franklU(10,5,2,1)", "franklN(8,3,1,1)"}) {
    FamilySpec spec = FamilySpec::parse(text);
    CHECK(spec.to_string() == text);
  }
  CHECK_THROWS(FamilySpec::parse("Q(1,2,3)"));
  CHECK_THROWS(FamilySpec::parse("A(11,7)"));
  CHECK_THROWS(FamilySpec::parse("A(11,7,x)"));
}

TEST_CASE("parameter validation is strict") {
  CHECK_THROWS_WITH(FamilySpec::a(8, 7, 3).validate(), doctest::Contains("n >= k+2"));
  CHECK_THROWS_WITH(FamilySpec::a(11, 7, 7).validate(), doctest::Contains("2 <= d < k"));
  CHECK_THROWS_WITH(FamilySpec::m(11, 7, 3, 4).validate(), doctest::Contains("floor"));
  CHECK_THROWS_WITH(FamilySpec::tt(11, 7, 3, 3).validate(), doctest::Contains("0 <= r <= d-1"));
  CHECK_THROWS_WITH(FamilySpec::star(5, 3, 4).validate(), doctest::Contains("star"));
  CHECK_THROWS_WITH(FamilySpec::frankl_uniform(5, 3, 2, 2).validate(),
                    doctest::Contains("t+2i <= n"));
  CHECK_THROWS_WITH(FamilySpec::frankl_nonuniform(5, 3, 2, 2).validate(),
                    doctest::Contains("t+di <= n"));
  CHECK_NOTHROW(FamilySpec::m(11, 7, 3, 3).validate());
  CHECK_NOTHROW(FamilySpec::tt(12, 8, 3, 0).validate());
}

TEST_CASE("paper families materialize with the reported sizes") {
  CHECK(build(FamilySpec::a(11, 7, 3)).size() == 175);
  CHECK(build(FamilySpec::m(11, 7, 3, 3)).size() == 176);
  SetFamily star = build(FamilySpec::star(5, 3, 2));
  REQUIRE(star.size() == 3);
  CHECK(star[0] == ElementSet::of(5, {1, 2, 3}));
  CHECK(star[1] == ElementSet::of(5, {1, 2, 4}));
  CHECK(star[2] == ElementSet::of(5, {1, 2, 5}));
}

TEST_CASE("membership examples") {
  CHECK(membership(FamilySpec::a(11, 7, 3), ElementSet::of(11, {1, 2, 3, 5, 6, 7, 8})));
  CHECK(!membership(FamilySpec::h(11, 7, 3), ElementSet::of(11, {3, 4, 5, 6, 7, 9, 10})));
  // [2,9] enters T(12,8,3,1) through the deleted-element block ([9] \ {1}).
  CHECK(membership(FamilySpec::tt(12, 8, 3, 1), ElementSet::window(12, 2, 9)));
  CHECK_THROWS(membership(FamilySpec::a(11, 7, 3), ElementSet::of(10, {1, 2, 3})));
}

TEST_CASE("build equals filtering by membership for n <= 12") {
  std::vector<FamilySpec> specs;
  for (int n = 5; n <= 12; ++n) {
    for (int k = 2; k < n; ++k)
      for (int d = 2; d < k; ++d) {
        if (n >= k + 2) specs.push_back(FamilySpec::a(n, k, d));
        specs.push_back(FamilySpec::h(n, k, d));
        for (int r = 1; r <= (k - 1) / (d - 1); ++r)
          if (n >= 2 + (d - 1) * r) specs.push_back(FamilySpec::m(n, k, d, r));
        for (int r = 0; r <= d - 1 && r <= k; ++r) specs.push_back(FamilySpec::tt(n, k, d, r));
      }
    for (int k = 1; k <= n; ++k)
      for (int t = 1; t <= k; ++t) specs.push_back(FamilySpec::star(n, k, t));
  }
  for (const FamilySpec& spec : specs) {
    SetFamily fam = build(spec);
    std::size_t match = 0;
    for_each_k_subset(spec.n, spec.k, [&](const ElementSet& s) {
      if (spec.membership(s)) ++match;
    });
    CHECK_MESSAGE(fam.size() == match, spec.to_string());
    CHECK_MESSAGE(BigCount(static_cast<long>(fam.size())) == count_construction(spec),
                  spec.to_string());
  }
}

TEST_CASE("prefix-window family equals its pairwise special case") {
  // A(n,k,d) and the i=1 window family with threshold d-1 coincide setwise.
  for (int n = 6; n <= 12; ++n)
    for (int k = 3; k < n - 1; ++k)
      for (int d = 2; d < k; ++d) {
        if (d - 1 + 2 > n || d - 1 + 1 > k) continue;
        SetFamily a = build(FamilySpec::a(n, k, d));
        SetFamily fu = build(FamilySpec::frankl_uniform(n, k, d - 1, 1));
        CHECK(a == fu);
      }
}

TEST_CASE("degenerate T variant r=0 has an empty appended block") {
  FamilySpec spec = FamilySpec::tt(10, 5, 3, 0);
  SetFamily fam = build(spec);
  // No member may equal [k+1] minus a deleted element unless the window
  // condition admits it; r=0 adds nothing beyond the window block.
  const int j0 = spec.t_variant_j0();
  for (const ElementSet& s : fam.members())
    CHECK(s.intersection_size(ElementSet::window(10, 1, 6)) >= j0);
  CHECK(BigCount(static_cast<long>(fam.size())) == count_construction(spec));
}

TEST_CASE("M members split between the pinned block and window supersets") {
  FamilySpec spec = FamilySpec::m(12, 4, 3, 1);
  spec.validate();
  SetFamily fam = build(spec);
  CHECK(BigCount(static_cast<long>(fam.size())) == count_construction(spec));
  const ElementSet window = ElementSet::window(12, 2, 4);
  std::size_t supersets = 0;
  for (const ElementSet& s : fam.members()) {
    if (!s.contains(1)) {
      CHECK(window.subset_of(s));
      ++supersets;
    }
  }
  // At the minimal n = k+1 the superset block shrinks to one member; here
  // it picks one extra element from [5,12].
  CHECK(supersets == 8);
}

TEST_CASE("argmax results agree with reported numbers") {
  ArgmaxResult m11 = mkd_argmax(11, 7, 3);
  CHECK(m11.r == 3);
  CHECK(m11.count == 176);
  ArgmaxResult m12 = mkd_argmax(12, 8, 3);
  CHECK(m12.r == 3);
  CHECK(m12.count == 299);
  ArgmaxResult t12 = tkd_argmax(12, 8, 3);
  CHECK(t12.count == 261);
  // Counting works far beyond the enumeration cap.
  ArgmaxResult big = mkd_argmax(1000, 77, 4);
  CHECK(!big.family);
  CHECK(big.count > 0);
}
