// Acceptance suite: one pass/fail line per criterion, exact values, pinned
// tolerances.  Run with --slow-search for the hours-scale full certification
// of the (11,7,3) search optimum instead of the budgeted smoke slice.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <string>

#include "ekrw/canonical.hpp"
#include "ekrw/constructions.hpp"
#include "ekrw/counting.hpp"
#include "ekrw/forbidden.hpp"
#include "ekrw/graphfam.hpp"
#include "ekrw/numbers.hpp"
#include "ekrw/search.hpp"
#include "ekrw/subsets.hpp"
#include "ekrw/thresholds.hpp"
#include "ekrw/verify.hpp"

using namespace ekrw;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(const std::string& id, bool ok, double seconds, const std::string& note = "") {
  std::printf("criterion %-4s %-4s %7.2fs%s%s\n", id.c_str(), ok ? "PASS" : "FAIL",
              seconds, note.empty() ? "" : "  ", note.c_str());
  if (!ok) ++failures;
}

bool within(double seconds, double limit) { return seconds < limit; }

// --------------------------------------------------------------------------

void criterion_1() {
  Timer timer;
  ExtremalReport rep = extremal_report(11, 7, 3);
  bool ok = rep.a_count == 175 && rep.m_count == 176 && rep.m_r == 3 &&
            count_construction(FamilySpec::m(11, 7, 3, 3)) == 176;
  double s = timer.seconds();
  report("1", ok && within(s, 1.0), s, "extremal_report(11,7,3): 176 beats 175");
}

void criterion_2() {
  Timer timer;
  ExtremalReport r12 = extremal_report(12, 8, 3);
  ExtremalReport r120 = extremal_report(120, 77, 4);
  bool ok = r12.m_count == 299 && r12.m_r == 3 && r12.t_count == 261 &&
            r120.t_count > r120.m_count;
  double s = timer.seconds();
  report("2", ok && within(s, 5.0), s, "m(12,8,3)=299, t(12,8,3)=261, t>m at (120,77,4)");
}

void criterion_3() {
  Timer timer;
  bool ok = true;
  long specs = 0;
  auto check = [&](const FamilySpec& spec) {
    ++specs;
    if (BigCount(static_cast<long>(build(spec).size())) != count_construction(spec))
      ok = false;
  };
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int d = 2; d < k; ++d) {
        if (n >= k + 2) check(FamilySpec::a(n, k, d));
        check(FamilySpec::h(n, k, d));
        for (int r = 1; r <= (k - 1) / (d - 1); ++r)
          if (n >= 2 + (d - 1) * r) check(FamilySpec::m(n, k, d, r));
        for (int r = 0; r <= d - 1 && r <= k; ++r) check(FamilySpec::tt(n, k, d, r));
      }
      for (int t = 1; t <= k; ++t) check(FamilySpec::star(n, k, t));
      for (int t = 1; t <= k; ++t)
        for (int i = 0; t + 2 * i <= n && t + i <= k; ++i)
          check(FamilySpec::frankl_uniform(n, k, t, i));
    }
    for (int d = 2; d <= n; ++d)
      for (int t = 1; t <= n; ++t)
        for (int i = 0; t + d * i <= n; ++i) check(FamilySpec::frankl_nonuniform(n, d, t, i));
  }
  double s = timer.seconds();
  report("3", ok && within(s, 120.0), s,
         "closed form = enumeration on " + std::to_string(specs) + " specs");
}

void criterion_4() {
  Timer timer;
  bool ok = true;
  long families = 0;
  auto check = [&](const FamilySpec& spec, int d) {
    SetFamily fam = build(spec);
    if (fam.empty()) return;
    ++families;
    bool dwise = is_d_wise_t_intersecting(fam, d, 1).ok;
    bool nontrivial = is_nontrivial(fam, 1);
    if (!dwise || !nontrivial) {
      ok = false;
      return;
    }
    if (!check_m_wise_lemma(fam, d, 1).ok) ok = false;
    if (!is_d_wise_t_intersecting(fam, 2, d - 1).ok) ok = false;  // pairwise d-1
  };
  for (int n = 4; n <= 11; ++n)
    for (int k = 3; k < n; ++k)
      for (int d = 2; d < k; ++d) {
        if (n >= k + 2) check(FamilySpec::a(n, k, d), d);
        check(FamilySpec::h(n, k, d), d);
        for (int r = 1; r <= (k - 1) / (d - 1); ++r)
          if (n >= 2 + (d - 1) * r) check(FamilySpec::m(n, k, d, r), d);
        for (int r = 0; r <= d - 1 && r <= k; ++r) check(FamilySpec::tt(n, k, d, r), d);
      }
  double s = timer.seconds();
  report("4", ok, s,
         "intersection, nontriviality, and lemma checks on " +
             std::to_string(families) + " families");
}

void criterion_5() {
  Timer timer;
  bool ok = true;
  long pairs = 0;
  auto check_iso = [&](const FamilySpec& a, const FamilySpec& b) {
    ++pairs;
    auto witness = are_isomorphic(build(a), build(b));
    if (!witness) {
      ok = false;
      return;
    }
    if (!(build(a).permuted(*witness) == build(b))) ok = false;
  };
  for (int n = 4; n <= 12; ++n)
    for (int d = 2; d <= 4; ++d)
      for (int k = d + 1; k < n; ++k) {
        check_iso(FamilySpec::tt(n, k, d, d - 1), FamilySpec::h(n, k, d));
        if ((k - 1) % (d - 1) == 0) {
          int r = (k - 1) / (d - 1);
          if (n >= 2 + (d - 1) * r)
            check_iso(FamilySpec::m(n, k, d, r), FamilySpec::tt(n, k, d, 1));
        }
      }
  double s = timer.seconds();
  report("5", ok && within(s, 60.0), s,
         "verified witness permutations on " + std::to_string(pairs) + " claimed pairs");
}

void criterion_6() {
  Timer timer;
  bool ok = true;
  long instances = 0;
  std::mt19937 rng(2024);
  for (int n = 4; n <= 8; ++n)
    for (int k = 2; k < n; ++k) {
      if (binomial(n, k) > 24) continue;
      for (int d = 2; d <= 4; ++d)
        for (int t = 1; t <= 2; ++t) {
          if (k < t + d - 1) continue;
          for (bool nontrivial : {true, false}) {
            SearchProblem p;
            p.n = n;
            p.k = k;
            p.d = d;
            p.t = t;
            p.require_nontrivial = nontrivial;
            ++instances;
            SearchResult oracle = brute_force_max(p);
            SearchResult bnb = branch_and_bound_max(p);
            if (bnb.best_size != oracle.best_size || bnb.status != SearchStatus::Optimal)
              ok = false;
            // Thread invariance.
            BnbOptions four;
            four.threads = 4;
            if (branch_and_bound_max(p, four).best_size != oracle.best_size) ok = false;
            // Relabeling invariance: a permuted optimum seeds an equal run.
            if (!bnb.witness.empty()) {
              std::vector<int> perm(static_cast<std::size_t>(n));
              std::iota(perm.begin(), perm.end(), 1);
              std::shuffle(perm.begin(), perm.end(), rng);
              BnbOptions seeded;
              seeded.seed_family = bnb.witness.permuted(perm);
              if (branch_and_bound_max(p, seeded).best_size != oracle.best_size) ok = false;
            }
          }
        }
    }
  double s = timer.seconds();
  report("6", ok, s,
         "branch and bound = brute force on " + std::to_string(instances) + " instances");
}

void criterion_7(bool slow) {
  Timer timer;
  SearchProblem p;
  p.n = 11;
  p.k = 7;
  p.d = 3;
  p.t = 1;
  p.require_nontrivial = true;
  BnbOptions options;
  options.seed_family = *mkd_argmax(11, 7, 3).family;  // the 176-member witness
  if (!slow) p.node_budget = 20000000;

  SearchResult r = branch_and_bound_max(p, options);
  bool seeded_at_target = !r.incumbent_history.empty() &&
                          r.incumbent_history.front().first >= 176 &&
                          r.incumbent_history.front().second == 0;
  if (slow) {
    bool ok = r.status == SearchStatus::Optimal && r.best_size == 176 && seeded_at_target;
    report("7", ok, timer.seconds(),
           "full certification: optimum 176 with an exhausted tree");
  } else {
    bool ok = seeded_at_target && r.best_size == 176;
    report("7", ok, timer.seconds(),
           "budgeted slice (" + std::to_string(r.nodes) +
               " nodes): incumbent 176 from the constructive seed; run with "
               "--slow-search for the full certificate");
  }
}

void criterion_8() {
  Timer timer;
  bool ok = true;
  // Analytic cross-check: the (2,3) threshold is a root of x^2-3x+1.
  BetaBracket b = beta(2, 3, parse_rational("1e-9"));
  auto quad = [](const Rational& x) -> Rational { return x * x - 3 * x + 1; };
  if (!(b.hi - b.lo <= parse_rational("1e-9"))) ok = false;
  if (!(quad(b.lo) > 0 && quad(b.hi) < 0)) ok = false;

  for (int t = 2; t <= 10; ++t)
    for (int d = 3; d <= 6; ++d) {
      BetaBracket bracket = beta(t, d, Rational(1, 1000000));
      if (!(Rational(1, t + 1) < bracket.lo && bracket.hi < Rational(1, 2))) ok = false;
    }

  std::mt19937 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    long t = 1 + static_cast<long>(rng() % 4);
    long d = 2 + static_cast<long>(rng() % 4);
    long k = t + d - 2 + static_cast<long>(rng() % 50);
    long n = k + 1 + static_cast<long>(rng() % 400);
    if (lemma33_holds(n, k, t, d) != lemma33_product_holds(n, k, t, d)) ok = false;
  }
  report("8", ok, timer.seconds(),
         "beta brackets and the two lemma formulations agree exactly");
}

void criterion_9() {
  Timer timer;
  bool ok = true;
  for (long k = 1; k <= 60; ++k)
    for (long l = 0; 2 * l < k && l <= 6; ++l) {
      bool divides = divides_factorial(k - l, l).divides;
      auto cert = kmw_certificate(k, l);
      if (cert.has_value() != !divides) ok = false;
      if (!cert) continue;
      for (long i = 0; i <= k; ++i) {
        BigInt v = kmw_poly_value(i, k, l);
        bool zero_required = i <= l - 1 || (i >= l + 1 && i <= k - 1);
        if (zero_required && v % cert->p != 0) ok = false;
      }
      if (cert->residues[static_cast<std::size_t>(k)] == 0) ok = false;
    }
  auto ten_three = kmw_certificate(10, 3);
  if (!ten_three || ten_three->p != 7) ok = false;
  if (kmw_poly_value(0, 10, 3) != 84 || kmw_poly_value(1, 10, 3) != 28 ||
      kmw_poly_value(2, 10, 3) != 7 || kmw_poly_value(10, 10, 3) != 1)
    ok = false;
  double s = timer.seconds();
  report("9", ok && within(s, 10.0), s,
         "certificates exist exactly off the divisibility case, residues replayed");
}

void criterion_10() {
  Timer timer;
  bool ok = true;
  GraphFamilyCount c = count_kst_family(5, 1, 2);
  if (!(c.count == 320 && c.ekr_count == 256 && c.exceeds)) ok = false;

  // Exhaustive oracle over all 2^10 graphs on 5 vertices.
  {
    GraphFamilyParams params{5, {1}, 2, -1};
    long members = 0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      LabeledGraph g(5);
      for (int b = 0; b < 10; ++b)
        if ((mask >> b) & 1) g.set_bit(b);
      if (is_member(params, g)) ++members;
    }
    if (members != 320) ok = false;
  }

  for (int s = 1; s <= 3; ++s) {
    const long threshold = (1L << (2 * s)) - 2 * s - 1;
    for (int t = 1; t <= (1 << (2 * s)) + 2; ++t) {
      GraphFamilyCount sc = count_kst_family(3 * s + t, s, t);
      if (sc.exceeds != (t > threshold)) ok = false;
    }
  }

  for (int t : {1, 2, 3}) {
    GraphFamilyParams params{5 + t, {1}, t, -1};
    if (!verify_intersecting(params, VerifyMode::ExhaustiveCore).ok) ok = false;
  }
  {
    GraphFamilyParams params{18, {2}, 12, -1};
    if (!verify_intersecting(params, VerifyMode::ExhaustiveCore).ok) ok = false;
  }
  {
    GraphFamilyParams mutated{5, {1}, 2, -1};
    mutated.min_degree = mutated.r_size() - 2;
    IntersectReport rep = verify_intersecting(mutated, VerifyMode::ExhaustiveCore);
    if (rep.ok || !rep.witness) ok = false;
  }
  double s = timer.seconds();
  report("10", ok && within(s, 60.0), s,
         "count 320 > 256 confirmed by the all-graphs oracle; mutation caught");
}

void criterion_11() {
  Timer timer;
  bool ok = true;
  // Nonuniform stars hit p^t exactly.
  for (int t = 1; t <= 3; ++t) {
    std::vector<ElementSet> members;
    for_each_subset(6, [&](const ElementSet& s) {
      if (ElementSet::prefix(6, t).subset_of(s)) members.push_back(s);
    });
    SetFamily star = SetFamily::from_sorted_unique(6, std::nullopt, std::move(members));
    for (const Rational& p : {Rational(1, 4), Rational(1, 3)}) {
      if (mu_p(star, p) != rational_pow(p, static_cast<unsigned long>(t))) ok = false;
    }
  }
  // Window families stay below p^t for p under the beta bracket.
  for (int d = 3; d <= 4; ++d)
    for (int t = 2; t <= 3; ++t) {
      BetaBracket bracket = beta(t, d, Rational(1, 100000));
      Rational p = bracket.lo - Rational(1, 1000);
      for (int i = 0; i <= 2; ++i)
        for (int n = t + d * i; n <= 14; ++n) {
          FamilySpec spec = FamilySpec::frankl_nonuniform(n, d, t, i);
          spec.validate();
          SetFamily fam = build(spec);
          if (!(mu_p(fam, p) <= rational_pow(p, static_cast<unsigned long>(t)))) ok = false;
        }
    }
  report("11", ok, timer.seconds(),
         "product measures: stars exactly p^t, window families below it");
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow-search") == 0) slow = true;

  if (slow) {
    // Only the long-running search certification.
    criterion_7(true);
  } else {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7(false);
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
