#include <doctest.h>

#include "gen.hpp"
#include "koszul/errors.hpp"
#include "koszul/io.hpp"
#include "koszul/presentation.hpp"

using namespace koszul;

namespace {

Poly word_poly(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(static_cast<char>(x - 1));
  return Poly{{w, Q(1)}};
}

Poly term(std::initializer_list<int> letters, Q c) {
  Word w;
  for (int x : letters) w.push_back(static_cast<char>(x - 1));
  return Poly{{w, c}};
}

Poly sum(std::initializer_list<Poly> ps) {
  Poly out;
  for (const auto& p : ps)
    for (const auto& [w, c] : p) add_term(out, w, c);
  return out;
}

}  // namespace

TEST_CASE("dual normal forms in the braid arrangement on three strands") {
  auto os = os_dual_presentation(braid(3));
  CHECK(os.normal_form(word_poly({2, 1})) == sum({term({1, 2}, 1), term({2, 3}, -1), term({3, 2}, 1)}));
  auto vg = vg_dual_presentation(braid(3));
  CHECK(vg.normal_form(word_poly({2, 1})) == sum({term({1, 2}, -1), term({2, 3}, 1), term({3, 2}, 1)}));
  CHECK(os.is_standard(make_word({0, 1})));
  CHECK_FALSE(os.is_standard(make_word({1, 0})));
}

TEST_CASE("primal normal forms") {
  auto os = os_presentation(braid(3));
  // x1 x2 - x1 x3 + x2 x3 = 0 with leading term x2 x3
  CHECK(os.normal_form(word_poly({2, 3})) == sum({term({1, 3}, 1), term({1, 2}, -1)}));
  auto vg = vg_presentation(braid(3));
  CHECK(vg.normal_form(word_poly({1, 1})).empty());
}

TEST_CASE("Hilbert series of braid presentations are Stirling numbers") {
  for (int n = 2; n <= 6; ++n) {
    auto g = braid(n);
    auto a = os_presentation(g).hilbert(6), b = os_dual_presentation(g).hilbert(6);
    auto va = vg_presentation(g).hilbert(6), vb = vg_dual_presentation(g).hilbert(6);
    for (int i = 0; i <= 6; ++i) {
      CHECK(a[i] == testgen::stirling1_poly(n, n - i));
      CHECK(va[i] == a[i]);
      CHECK(b[i] == testgen::stirling2_formula(n - 1 + i, n - 1));
      CHECK(vb[i] == b[i]);
    }
    CHECK(koszul_reciprocity_check(a, b, 6));
  }
}

TEST_CASE("Groebner certification and the mutation test") {
  auto g = braid(4);
  for (Kind k : {Kind::OS, Kind::VG, Kind::OS_DUAL, Kind::VG_DUAL}) CHECK(gb_certify(build_presentation(k, g), 4));
  auto dual = os_dual_presentation(g);
  for (std::size_t k = 0; k < dual.relations().size(); ++k) CHECK_FALSE(gb_certify(dual.without_relation(k), 4));
  auto rep = gb_certify_report(dual, 3);
  CHECK(rep.back().quotient == rep.back().standard);
}

TEST_CASE("Kohno relations are orthogonal to the primal relations") {
  Matroid m = braid(4).om.underlying();
  for (const auto& y : kohno_relations(m))
    for (const auto& x : quadratic_relations(m)) CHECK(pairing(y, x) == 0);
  OrientedMatroid om = braid(4).om;
  for (const auto& y : kohno_relations(om))
    for (const auto& x : quadratic_relations(om)) CHECK(pairing(y, x) == 0);
}

TEST_CASE("product forms of the Hilbert series") {
  auto p = os_presentation(braid(5));
  auto exps = p.decomposition()->exponents;
  CHECK(p.hilbert(6) == product_hilbert(exps, 6, false));
  CHECK(os_dual_presentation(braid(5)).hilbert(6) == product_hilbert(exps, 6, true));
  CHECK(product_hilbert({1, 2}, 3, true) == std::vector<long long>{1, 3, 7, 15});
}

TEST_CASE("Orlik-Solomon complex exactness and dual injectivity") {
  auto os = os_presentation(braid(4));
  auto rep = os_complex_exactness(os, std::vector<Q>(6, Q(1)));
  CHECK(rep.exact);
  CHECK(rep.squares_to_zero);
  CHECK(rep.h == std::vector<long long>{1, 5, 6, 0});
  std::vector<Q> bad(6, Q(1));
  bad[0] = 1;
  bad[1] = -1;
  bad[2] = 0;  // the triangle 12,13,23 sums to zero
  CHECK_THROWS_AS(os_complex_exactness(os, bad), NotGeneric);

  auto dual = os_dual_presentation(braid(4));
  auto inj = dual_right_mult_injective(dual, 1, std::vector<Q>(6, Q(1)), 5);
  CHECK(inj.injective);
  for (auto x : inj.cokernel) CHECK(x >= 0);
  std::vector<Q> zero_block(6, Q(1));
  zero_block[0] = 0;  // block E_1 = {12}
  CHECK_THROWS_AS(dual_right_mult_injective(dual, 1, zero_block, 4), NotEGeneric);
}

TEST_CASE("restricted growth functions index the dual standard words") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i <= 4; ++i) {
      auto pairs = rgf_bijection(n, i);
      CHECK(static_cast<long long>(pairs.size()) == testgen::stirling2_formula(n - 1 + i, n - 1));
      for (const auto& [rgf, w] : pairs) {
        CHECK(rgf_to_word(n, rgf) == w);
        CHECK(word_to_rgf(n, w) == rgf);
      }
    }
}

TEST_CASE("flat decomposition of NBC monomials") {
  auto os = os_presentation(braid(4));
  auto fd = flat_decomposition(os, 2);
  long long total = 0;
  for (const auto& [f, ws] : fd) total += static_cast<long long>(ws.size());
  CHECK(total == 11);
  CHECK(fd.size() == 7);
}

TEST_CASE("property: digraph monomial algebras satisfy walk duality and reciprocity") {
  testgen::Gen g(31);
  for (int t = 0; t < testgen::kCases; ++t) {
    int n = g.uniform(1, 4);
    auto arcs = g.digraph(n);
    auto a = digraph_monomial_algebra(n, arcs), b = digraph_dual(n, arcs);
    auto ha = a.hilbert(6), hb = b.hilbert(6);
    for (int d = 1; d <= 6; ++d) CHECK(ha[d] == walk_hilbert(n, arcs, d));
    CHECK(koszul_reciprocity_check(ha, hb, 6));
    CHECK(gb_certify(a, 3));
  }
}

TEST_CASE("property: normal forms are standard and multiplication is associative") {
  testgen::Gen g(32);
  auto p = os_dual_presentation(braid(4));
  auto q = vg_presentation(braid(4));
  for (int t = 0; t < testgen::kCases; ++t) {
    for (const Presentation* pr : {&p, &q}) {
      auto rand_word = [&](int len) {
        Word w;
        for (int k = 0; k < len; ++k) w.push_back(static_cast<char>(g.uniform(0, pr->num_vars() - 1)));
        return Poly{{w, Q(g.uniform(1, 3))}};
      };
      Poly a = rand_word(g.uniform(0, 2)), b = rand_word(1), c = rand_word(1);
      Poly nf = pr->normal_form(a);
      for (const auto& [w, coeff] : nf) CHECK(pr->is_standard(w));
      CHECK(pr->normal_form(nf) == nf);
      CHECK(pr->multiply(pr->multiply(a, b), c) == pr->multiply(a, pr->multiply(b, c)));
    }
  }
}
