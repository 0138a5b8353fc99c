#include <doctest.h>

#include "gen.hpp"
#include "koszul/errors.hpp"
#include "koszul/stability.hpp"
#include "koszul/stirling.hpp"

using namespace koszul;

TEST_CASE("stable form of a padded sequence") {
  std::map<int, SymFunc> seq;
  for (int n = 2; n <= 7; ++n) seq[n] = SymFunc::h({n - 1, 1});
  auto r = stable_form(seq, 1);
  REQUIRE(r.stable);
  CHECK(r.stable->size() == 2);  // s_{(n)} + s_{(n-1,1)}
  REQUIRE(r.onset);
  CHECK(*r.onset == 2);
  CHECK(r.range_limited);
}

TEST_CASE("too short or gappy ranges are rejected") {
  std::map<int, SymFunc> seq{{3, SymFunc::h(3)}, {4, SymFunc::h(4)}};
  CHECK_THROWS_AS(stable_form(seq, 0), InsufficientRange);
  seq[6] = SymFunc::h(6);
  CHECK_THROWS_AS(stable_form(seq, 0), InvalidArgument);
}

TEST_CASE("induced onset") {
  CHECK(induced_onset({{}}) == 0);
  CHECK(induced_onset({{1}, {2}}) == 4);
  CHECK(induced_onset({{1, 1}, {3}}) == 6);
}

TEST_CASE("dual onsets match the shaded cells") {
  for (int i = 1; i <= 2; ++i) {
    auto os = verify_bounds(SeriesKind::OS_DUAL, i, 4 * i + 3);
    REQUIRE(os.stability.onset);
    CHECK(*os.stability.onset == 4 * i);
    CHECK(os.ok());
    auto vg = verify_bounds(SeriesKind::VG_DUAL, i, 3 * i + 3);
    REQUIRE(vg.stability.onset);
    CHECK(*vg.stability.onset == 3 * i);
    CHECK(vg.ok());
  }
}

TEST_CASE("primal bounds") {
  for (int i = 0; i <= 2; ++i) {
    auto os = verify_bounds(SeriesKind::OS, i, 3 * i + 4);
    CHECK(os.bound_checked);
    CHECK(os.bound_holds);
    auto vg = verify_bounds(SeriesKind::VG, i, 3 * i + 4);
    CHECK(vg.bound_holds);
  }
}

TEST_CASE("rank two duals start at 2i") {
  for (int i = 1; i <= 4; ++i) {
    auto r = verify_bounds(SeriesKind::RANKTWO_DUAL, i, 2 * i + 3);
    REQUIRE(r.stability.onset);
    CHECK(*r.stability.onset == 2 * i);
  }
}

TEST_CASE("series kinds parse") {
  for (auto k : {SeriesKind::OS, SeriesKind::VG, SeriesKind::OS_DUAL, SeriesKind::VG_DUAL, SeriesKind::PRIM_OS,
                 SeriesKind::PRIM_VG, SeriesKind::RANKTWO_DUAL, SeriesKind::RANKTWO_PRIM})
    CHECK(parse_series_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_series_kind("bogus"), InvalidArgument);
}

TEST_CASE("branching identities") {
  for (auto k : {SeriesKind::OS, SeriesKind::VG, SeriesKind::OS_DUAL, SeriesKind::VG_DUAL})
    for (int n = 3; n <= 6; ++n)
      for (int i = 0; i <= 3; ++i) {
        CHECK(branching_verify(n, i, k));
        CHECK(branching_dimension_shadow(n, i, k));
      }
  CHECK_THROWS_AS(branching_verify(2, 1, SeriesKind::OS), InvalidArgument);
}

TEST_CASE("branching equivalence on the Boolean example") {
  // A = exterior algebra on the permutation module of S_n, B the same for S_{n-1}, X trivial
  for (int n = 3; n <= 5; ++n) {
    GradedCharacterSeries a, b;
    a.n = n;
    b.n = n - 1;
    for (int d = 0; d <= n; ++d) {
      a.terms.push_back(d == 0 ? SymFunc::h(n) : ext_power(SymFunc::h({n - 1, 1}), d));
      b.terms.push_back(d == 0 ? SymFunc::h(n - 1) : ext_power(SymFunc::h({n - 2, 1}), d));
    }
    auto good = general_branching_equivalence(a, b, SymFunc::h(n - 1), 3);
    CHECK(good.primal);
    CHECK(good.dual);
    auto bad = general_branching_equivalence(a, b, SymFunc::h({n - 2, 1}), 3);
    CHECK_FALSE(bad.primal);
    CHECK(bad.equivalent());
  }
  GradedCharacterSeries a, b;
  a.n = 4;
  b.n = 2;
  a.terms = {SymFunc::h(4)};
  b.terms = {SymFunc::h(2)};
  CHECK_THROWS_AS(general_branching_equivalence(a, b, SymFunc::h(3), 1), DegreeMismatch);
}

TEST_CASE("property: onset is invariant under extending the range") {
  testgen::Gen g(61);
  for (int t = 0; t < 20; ++t) {
    int i = g.uniform(0, 2);
    auto k = g.coin() ? SeriesKind::OS_DUAL : SeriesKind::VG_DUAL;
    int base = (k == SeriesKind::OS_DUAL ? 4 : 3) * i + 4;
    auto r1 = verify_bounds(k, i, base);
    auto r2 = verify_bounds(k, i, base + g.uniform(1, 2));
    REQUIRE(r1.stability.onset);
    REQUIRE(r2.stability.onset);
    CHECK(*r2.stability.onset <= *r1.stability.onset);
    CHECK(*r2.stability.stable == *r1.stability.stable);
  }
}

TEST_CASE("property: a padded stable multiset is recovered") {
  testgen::Gen g(62);
  for (int t = 0; t < testgen::kCases; ++t) {
    // random sum of s_{lambda[n]} with |lambda| <= 3
    std::vector<Partition> lambdas;
    int terms = g.uniform(1, 3);
    for (int k = 0; k < terms; ++k) lambdas.push_back(g.partition(g.uniform(1, 3)));
    int start = 0;
    for (const auto& l : lambdas) start = std::max(start, static_cast<int>(l.size() ? l[0] : 0) + [&] {
      int s = 0;
      for (int x : l) s += x;
      return s;
    }());
    std::map<int, SymFunc> seq;
    for (int n = start; n <= start + 3; ++n) {
      SymFunc f = SymFunc::zero(n);
      for (const auto& l : lambdas) f += SymFunc::schur(pad(l, n));
      seq[n] = f;
    }
    auto r = stable_form(seq, 0);
    REQUIRE(r.stable);
    Multiset expect;
    for (const auto& l : lambdas) expect[l] += 1;
    CHECK(*r.stable == expect);
  }
}
