#include <doctest.h>

#include "gen.hpp"
#include "koszul/errors.hpp"
#include "koszul/matroid.hpp"

using namespace koszul;

namespace {

// random chordal graph: each new vertex joins a clique of earlier vertices
std::vector<std::pair<int, int>> random_chordal(testgen::Gen& g, int v) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
  for (int x = 1; x < v; ++x) {
    int anchor = g.uniform(0, x - 1);
    std::vector<int> clique{anchor};
    for (int y = 0; y < x; ++y)
      if (y != anchor && adj[anchor][y] && g.coin()) {
        bool ok = true;
        for (int c : clique) ok = ok && adj[c][y];
        if (ok) clique.push_back(y);
      }
    for (int c : clique) {
      edges.emplace_back(c, x);
      adj[c][x] = adj[x][c] = true;
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("braid matroid basics") {
  auto b = braid(4);
  const Matroid& m = b.om.underlying();
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  CHECK(m.flats_of_rank(1).size() == 6);
  CHECK(m.flats_of_rank(2).size() == 7);  // 4 triangles and 3 perfect matchings
  CHECK(m.is_simple());
  CHECK(m.ground().label(0) == "12");
  CHECK(braid_edge_index(1, 3) == 4);
  auto d = supersolvable_decomposition(m);
  REQUIRE(d);
  CHECK(d->exponents == std::vector<int>{1, 2, 3});
  CHECK(d->bez_circuits.size() == 4);
}

TEST_CASE("uniform and Boolean matroids") {
  Matroid u = Matroid::uniform(2, 5);
  CHECK(u.rank() == 2);
  auto d = supersolvable_decomposition(u);
  REQUIRE(d);
  CHECK(d->exponents == std::vector<int>{1, 4});
  CHECK_FALSE(supersolvable_decomposition(Matroid::uniform(3, 4)));
  Matroid boolean = Matroid::uniform(4, 4);
  CHECK(boolean.circuits().empty());
  CHECK(supersolvable_decomposition(boolean)->exponents == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("input validation") {
  // {0,1} and {0,1,2} violate incomparability
  CHECK_THROWS_AS(Matroid::from_circuits(3, {bit(0) | bit(1), bit(0) | bit(1) | bit(2)}), CircuitAxiomViolation);
  // elimination: {0,1,2},{0,3,4} force a circuit inside {1,2,3,4}
  CHECK_THROWS_AS(Matroid::from_circuits(5, {bit(0) | bit(1) | bit(2), bit(0) | bit(3) | bit(4)}), CircuitAxiomViolation);
  CHECK_THROWS_AS(graphic(3, {{0, 0}}), InvalidGraph);
  CHECK_THROWS_AS(graphic(3, {{0, 1}, {1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(graphic(3, {{0, 5}}), InvalidGraph);
  Matroid parallel = Matroid::from_circuits(3, {bit(0) | bit(1)});
  CHECK_FALSE(parallel.is_simple());
  CHECK_THROWS_AS(supersolvable_decomposition(parallel), NotSimple);
}

TEST_CASE("modular flats") {
  Matroid m = braid(4).om.underlying();
  // the triangle 12,13,23 is modular, the matching {12,34} is not
  CHECK(is_modular_flat(m, bit(0) | bit(1) | bit(2)));
  CHECK_FALSE(is_modular_flat(m, bit(0) | bit(5)));
  CHECK(is_modular_flat(m, m.ground_set()));
}

TEST_CASE("NBC sets count Stirling numbers") {
  for (int n = 2; n <= 6; ++n) {
    auto d = supersolvable_decomposition(braid(n).om.underlying());
    for (int k = 0; k < n; ++k)
      CHECK(static_cast<long long>(nbc_sets(*d, k).size()) == testgen::stirling1_poly(n, n - k));
  }
}

TEST_CASE("oriented matroids") {
  auto b = braid(3);
  auto c = b.om.circuit_with_support(bit(0) | bit(1) | bit(2));
  REQUIRE(c);
  CHECK(c->sign(0) == 1);
  // e1-e2, e1-e3, e2-e3: (e1-e2) - (e1-e3) + (e2-e3) = 0
  CHECK(c->sign(1) == -1);
  CHECK(c->sign(2) == 1);
  OrientedMatroid v = OrientedMatroid::from_vectors({{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  CHECK(v.signed_circuits() == b.om.signed_circuits());
  CHECK(std::abs(b.om.chirotope2(0, 1)) == 1);
  CHECK(b.om.chirotope2(0, 1) == -b.om.chirotope2(1, 0));
  auto b4 = braid(4);
  CHECK(std::abs(b4.om.chirotope2(0, 5)) == 1);  // {12,34} is a rank-two flat too
  CHECK_THROWS_AS(b4.om.chirotope2(2, 2), NotRankTwoCoplanar);
  auto flipped = b.om.with_flipped_chirotope(bit(0) | bit(1) | bit(2));
  CHECK(flipped.chirotope2(0, 1) == -b.om.chirotope2(0, 1));
}

TEST_CASE("automorphisms from vertex permutations") {
  auto b = braid(4);
  std::vector<int> sigma{1, 0, 2, 3};
  auto signed_lift = lift_vertex_permutation(b, sigma, true);
  auto plain_lift = lift_vertex_permutation(b, sigma, false);
  CHECK(is_automorphism(b.om, signed_lift));
  CHECK(is_automorphism(b.om.underlying(), plain_lift));
  CHECK_FALSE(is_automorphism(b.om, plain_lift));
  CHECK_THROWS_AS(is_automorphism(b.om.underlying(), signed_lift), SignedOnPlainMatroid);
  auto path = graphic(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(lift_vertex_permutation(path, {1, 0, 2}, false), NotAutomorphism);
}

TEST_CASE("property: chordal graphs are supersolvable, long induced cycles are not") {
  testgen::Gen g(21);
  for (int t = 0; t < testgen::kCases; ++t) {
    int v = g.uniform(2, 7);
    auto gm = graphic(v, random_chordal(g, v));
    auto d = supersolvable_decomposition(gm.om.underlying());
    REQUIRE(d);
    int sum = 0;
    for (int e : d->exponents) sum += e;
    CHECK(sum == gm.om.size());
  }
  for (int v = 4; v <= 7; ++v) {
    std::vector<std::pair<int, int>> cyc;
    for (int x = 0; x < v; ++x) cyc.emplace_back(x, (x + 1) % v);
    CHECK_FALSE(supersolvable_decomposition(graphic(v, cyc).om.underlying()));
  }
}

TEST_CASE("property: closure and rank axioms") {
  testgen::Gen g(22);
  for (int t = 0; t < testgen::kCases; ++t) {
    int v = g.uniform(3, 6);
    auto gm = graphic(v, random_chordal(g, v));
    const Matroid& m = gm.om.underlying();
    int n = m.size();
    Subset a = g.rng() & m.ground_set(), b = g.rng() & m.ground_set();
    (void)n;
    CHECK(m.closure(m.closure(a)) == m.closure(a));
    CHECK(m.rank(m.closure(a)) == m.rank(a));
    CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
    CHECK(m.rank(a) <= popcount(a));
    CHECK(m.is_flat(m.closure(a)));
  }
}
