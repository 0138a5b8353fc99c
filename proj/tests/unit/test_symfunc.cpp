#include <doctest.h>

#include "gen.hpp"
#include "koszul/errors.hpp"
#include "koszul/symfunc.hpp"

using namespace koszul;

TEST_CASE("partitions are listed in reverse-lex order") {
  auto p = partitions(4);
  REQUIRE(p.size() == 5);
  CHECK(p.front() == Partition{4});
  CHECK(p.back() == Partition{1, 1, 1, 1});
  CHECK(partitions(10).size() == 42);
  CHECK(partitions_with_length(6, 3).size() == 3);
  CHECK(z_lambda({2, 1, 1}) == Q(4));
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("Murnaghan-Nakayama on small tables") {
  CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_character({2, 1}, {3}) == -1);
  CHECK(mn_character({2, 1}, {2, 1}) == 0);
  CHECK(mn_character({3, 2}, {1, 1, 1, 1, 1}) == 5);
  CHECK(mn_character({1, 1, 1, 1}, {4}) == -1);
  // column orthogonality for S_5
  for (const auto& mu : partitions(5))
    for (const auto& nu : partitions(5)) {
      Z s = 0;
      for (const auto& lam : partitions(5)) s += mn_character(lam, mu) * mn_character(lam, nu);
      CHECK(Q(s) == (mu == nu ? z_lambda(mu) : Q(0)));
    }
}

TEST_CASE("h values agree with brute-force fixed points") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions(n))
      for (const auto& mu : partitions(n))
        CHECK(SymFunc::h(lam).class_value(mu) == testgen::q(testgen::h_value_bruteforce(lam, mu)));
}

TEST_CASE("basis changes") {
  SymFunc f = SymFunc::schur({2, 1}) + 2 * SymFunc::schur({3});
  auto h = f.to_h();
  CHECK(SymFunc::from_h(3, h) == f);
  CHECK(SymFunc::h(2) * SymFunc::h(1) == SymFunc::schur({3}) + SymFunc::schur({2, 1}));
  CHECK(SymFunc::e(3) == SymFunc::schur({1, 1, 1}));
  CHECK(omega(SymFunc::h(4)) == SymFunc::e(4));
  CHECK(SymFunc::schur({2, 2}).dim() == 2);
}

TEST_CASE("plethysm and powers on known values") {
  CHECK(plethysm(SymFunc::h(2), SymFunc::h(2)) == SymFunc::schur({4}) + SymFunc::schur({2, 2}));
  CHECK(plethysm(SymFunc::e(2), SymFunc::h(2)) == SymFunc::schur({3, 1}));
  SymFunc v = SymFunc::h(Partition{3, 1});
  CHECK(ext_power(v, 2) == SymFunc::schur({2, 1, 1}) + SymFunc::schur({3, 1}));
  CHECK(sym_power(v, 2) == 2 * SymFunc::schur({4}) + 2 * SymFunc::schur({3, 1}) + SymFunc::schur({2, 2}));
  CHECK(ext_power(v, 0) == SymFunc::h(4));
  CHECK_THROWS_AS(sym_power(v, -1), NegativePower);
  CHECK(lie_char(3) == SymFunc::schur({2, 1}));
  CHECK_THROWS_AS(kronecker(SymFunc::h(2), SymFunc::h(3)), DegreeMismatch);
  CHECK_THROWS_AS(pad({3}, 5), PadTooSmall);
  CHECK(pad({2, 1}, 6) == Partition{3, 2, 1});
}

TEST_CASE("Stirling tables satisfy their recurrences and independent formulas") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(stirling_second(n, k) == Z(static_cast<long>(testgen::stirling2_formula(n, k))));
      CHECK(stirling_first(n, k) == Z(static_cast<long>(testgen::stirling1_poly(n, k))));
      CHECK(stirling_second(n, k) == k * stirling_second(n - 1, k) + stirling_second(n - 1, k - 1));
      CHECK(stirling_first(n, k) == (n - 1) * stirling_first(n - 1, k) + stirling_first(n - 1, k - 1));
    }
}

TEST_CASE("property: basis round trips") {
  testgen::Gen g(11);
  for (int t = 0; t < testgen::kCases; ++t) {
    int n = g.uniform(1, 7);
    SymFunc f = g.symfunc(n);
    CHECK(SymFunc::from_h(n, f.to_h()) == f);
    CHECK(SymFunc::from_schur(n, f.to_schur()) == f);
    CHECK(omega(omega(f)) == f);
    CHECK(schur_integral(f));
  }
}

TEST_CASE("property: Kronecker product is a commutative character product") {
  testgen::Gen g(12);
  for (int t = 0; t < testgen::kCases; ++t) {
    int n = g.uniform(1, 6);
    SymFunc a = g.symfunc(n), b = g.symfunc(n), c = g.symfunc(n);
    CHECK(kronecker(a, b) == kronecker(b, a));
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
    CHECK(kronecker(a, SymFunc::h(n)) == a);
    CHECK(kronecker(a, SymFunc::e(n)) == omega(a));
    CHECK(kronecker(a, b).dim() == a.dim() * b.dim());
    SymFunc ga = g.genuine(n), gb = g.genuine(n);
    CHECK(schur_positive(kronecker(ga, gb)));
  }
}

TEST_CASE("property: restriction is adjoint to induction by p1") {
  testgen::Gen g(13);
  for (int t = 0; t < testgen::kCases; ++t) {
    int n = g.uniform(2, 7);
    SymFunc f = g.symfunc(n - 1), h = g.symfunc(n);
    CHECK(hall(SymFunc::p({1}) * f, h) == hall(f, skew_by_p1(h)));
    CHECK(skew_by_p1(h).dim() == h.dim());
  }
}

TEST_CASE("property: exterior and symmetric powers") {
  testgen::Gen g(14);
  for (int t = 0; t < 30; ++t) {
    int n = g.uniform(2, 5);
    SymFunc f = g.genuine(n, 2);
    if (f.is_zero()) continue;
    Q d = f.dim();
    int m = g.uniform(0, 3);
    // dimension of Sym^m and wedge^m of a d-dimensional space
    Q sd = 1, ed = 1;
    for (int k = 0; k < m; ++k) {
      sd = sd * (d + k) / (k + 1);
      ed = ed * (d - k) / (k + 1);
    }
    CHECK(sym_power(f, m).dim() == sd);
    CHECK(ext_power(f, m).dim() == ed);
    CHECK(schur_positive(sym_power(f, m)));
    CHECK(schur_positive(ext_power(f, m)));
  }
}
