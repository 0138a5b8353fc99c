#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/linalg.hpp"
#include "koszul/matroid.hpp"
#include "koszul/rational.hpp"

namespace koszul {

enum class Kind { OS, VG, OS_DUAL, VG_DUAL, DIGRAPH };
enum class Ambient { Exterior, Commutative, Free };

std::string kind_name(Kind k);
bool is_dual(Kind k);

// A word is a sequence of variable indices 0..n-1, one char per letter.
using Word = std::string;
Word make_word(const std::vector<int>& letters);
std::vector<int> letters(const Word& w);

// Noncommutative polynomial: word -> coefficient, zero coefficients never stored
using Poly = std::map<Word, Q>;
void add_term(Poly& p, const Word& w, const Q& c);
Poly poly_add(const Poly& a, const Poly& b, const Q& scale_b = 1);
Poly poly_mul(const Poly& a, const Poly& b);  // concatenation product in the free algebra
// "y1y2 - y2y3 + y3y2" style, 1-based indices; labels used when given
std::string poly_to_string(const Poly& p, char var = 'x', const GroundOrder* labels = nullptr);

// Primal: graded, then left-to-right lex with x_1 < x_2 < ...
// Dual:   graded, then compare at the rightmost differing position, y_1 > y_2 > ...
struct TermOrder {
  bool dual = false;
  int n = 0;
  bool less(const Word& a, const Word& b) const;
  // Injective on words of a fixed degree and monotone for the order
  std::uint64_t key(const Word& w) const;
};

struct Relation {
  Poly poly;
  Word initial;
};

class Presentation {
 public:
  Kind kind() const { return kind_; }
  int num_vars() const { return n_; }
  Ambient ambient() const { return ambient_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const GroundOrder& variables() const { return labels_; }
  const std::optional<ModularDecomposition>& decomposition() const { return dec_; }
  // Matroid in variable order (null for digraph algebras)
  const Matroid* matroid() const { return matroid_ ? &*matroid_ : nullptr; }
  const OrientedMatroid* oriented() const { return oriented_ ? &*oriented_ : nullptr; }
  // variable -> element of the ground set the presentation was built from
  const std::vector<int>& original_element() const { return original_; }
  // Graph the matroid came from, in the original edge numbering
  const std::optional<GraphicMatroid>& graph() const { return graph_; }

  // Sort letters for the ambient algebra: (sign, word); sign 0 means the word is zero
  std::pair<int, Word> canonicalize(const Word& w) const;
  Poly canonicalize(const Poly& p) const;
  bool is_standard(const Word& w) const;
  Poly normal_form(const Poly& p) const;
  Poly multiply(const Poly& a, const Poly& b) const;

  // Standard words of degree d in lex order
  const std::vector<Word>& basis(int d) const;
  int basis_index(int d, const Word& w) const;  // -1 if absent
  // dim of degree d, counted without enumerating for dual and digraph kinds
  long long dim(int d) const;
  std::vector<long long> hilbert(int D) const;
  // number of words of degree d in the ambient algebra
  long long ambient_dim(int d) const;

  // Copy with relation k removed (for mutation tests)
  Presentation without_relation(std::size_t k) const;

  // builders
  friend Presentation make_presentation(Kind, int, Ambient, std::vector<Relation>, GroundOrder);
  void attach_matroid(const Matroid& m, std::optional<ModularDecomposition> d, std::vector<int> original);
  void attach_oriented(const OrientedMatroid& om) { oriented_ = om; }
  void attach_graph(const GraphicMatroid& g) { graph_ = g; }

 private:
  struct Cache;
  void build_rules();
  const Poly* rule(int a, int b) const;
  bool find_reducible(const Word& w, std::size_t& i, std::size_t& j) const;

  Kind kind_ = Kind::OS;
  int n_ = 0;
  Ambient ambient_ = Ambient::Exterior;
  TermOrder order_;
  std::vector<Relation> relations_;
  GroundOrder labels_;
  std::optional<ModularDecomposition> dec_;
  std::optional<Matroid> matroid_;
  std::optional<OrientedMatroid> oriented_;
  std::optional<GraphicMatroid> graph_;
  std::vector<int> original_;
  std::vector<int> rule_of_;  // n*n table into tails_, -1 if none
  // initial words claimed by the presentation; these define the standard words
  std::vector<bool> initial_;
  std::vector<Poly> tails_;
  std::shared_ptr<Cache> cache_;
};

Presentation make_presentation(Kind kind, int n, Ambient ambient, std::vector<Relation> rels, GroundOrder labels);

// Builders. A decomposition may be supplied; otherwise the canonical
// supersolvable decomposition is used (NotSupersolvable if none exists).
Presentation os_presentation(const Matroid& m, std::optional<ModularDecomposition> d = std::nullopt);
Presentation vg_presentation(const OrientedMatroid& om, std::optional<ModularDecomposition> d = std::nullopt);
Presentation os_dual_presentation(const Matroid& m, std::optional<ModularDecomposition> d = std::nullopt);
Presentation vg_dual_presentation(const OrientedMatroid& om, std::optional<ModularDecomposition> d = std::nullopt);
// Same, remembering the graph so vertex permutations can act
Presentation os_presentation(const GraphicMatroid& g);
Presentation vg_presentation(const GraphicMatroid& g);
Presentation os_dual_presentation(const GraphicMatroid& g);
Presentation vg_dual_presentation(const GraphicMatroid& g);
Presentation build_presentation(Kind kind, const GraphicMatroid& g);

// Kohno relations r(j,F) / r+-(j,F) over all rank-two flats, original indexing
std::vector<Poly> kohno_relations(const Matroid& m);
std::vector<Poly> kohno_relations(const OrientedMatroid& om);
// Spanning set of the degree-two relation space I_2 inside the free algebra
std::vector<Poly> quadratic_relations(const Matroid& m);
std::vector<Poly> quadratic_relations(const OrientedMatroid& om);
Q pairing(const Poly& y, const Poly& x);

// Quadratic monomial algebra of a digraph: y_i y_j = 0 unless (i,j) is an arc
Presentation digraph_monomial_algebra(int n, const std::vector<std::pair<int, int>>& arcs);
// Its Koszul dual, the algebra of the complementary digraph
Presentation digraph_dual(int n, const std::vector<std::pair<int, int>>& arcs);
// Number of walks with d vertices (d-1 arcs)
long long walk_hilbert(int n, const std::vector<std::pair<int, int>>& arcs, int d);

// sum_i (-1)^i a_i b_{d-i} == [d == 0] for all d <= D
bool koszul_reciprocity_check(const std::vector<long long>& primal, const std::vector<long long>& dual, int D);
// Coefficients of prod (1 + e_p t) and prod 1/(1 - e_p t) through t^D
std::vector<long long> product_hilbert(const std::vector<int>& exponents, int D, bool dual);

struct GbDegreeReport {
  int degree;
  long long ambient, rank, quotient, standard;
};
std::vector<GbDegreeReport> gb_certify_report(const Presentation& p, int D);
bool gb_certify(const Presentation& p, int D);

// Multiplication by g: basis(d) -> basis(d + deg g)
enum class Side { Left, Right };
Matrix mult_matrix(const Presentation& p, const Poly& g, int d, Side side);

struct ExactnessReport {
  std::vector<int> ranks;             // rank of d: A_i -> A_{i+1}
  std::vector<long long> dims;        // dim A_i
  std::vector<long long> h;           // coboundary dims, Hilb = (1+t) H(t)
  bool squares_to_zero = false;
  bool exact = false;
};
// c indexed by the original ground set; NotGeneric names a connected flat with zero sum
ExactnessReport os_complex_exactness(const Presentation& os, const std::vector<Q>& c);

struct InjectivityReport {
  int degree_of_element = 0;
  std::vector<long long> ranks;       // rank of right multiplication from degree i
  std::vector<long long> dims;
  std::vector<long long> cokernel;    // H^!
  bool injective = false;
};
// p_d = sum c_i y_i^d in a dual presentation; NotEGeneric names a block with all c_i = 0
InjectivityReport dual_right_mult_injective(const Presentation& dual, int d, const std::vector<Q>& c, int D);

// NBC monomials of degree d grouped by the flat they span (original indexing)
std::map<Subset, std::vector<Word>> flat_decomposition(const Presentation& os, int d);

// Restricted growth functions with n-1 blocks of length n-1+i paired with the
// standard words of degree i of the braid dual presentation
std::vector<std::pair<std::vector<int>, Word>> rgf_bijection(int n, int i);
Word rgf_to_word(int n, const std::vector<int>& rgf);
std::vector<int> word_to_rgf(int n, const Word& w);

}  // namespace koszul
